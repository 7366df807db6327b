#pragma once

#include <string>
#include <vector>

#include "twtl/formula.hpp"
#include "twtl/relaxation.hpp"
#include "twtl/system.hpp"

namespace twtl {

struct SynthesisOptions {
  // Accepted for interface compatibility; the search is always exact.
  bool exact = false;
  ProductConvention convention = ProductConvention::ConsumeInitial;
};

struct SynthesisStats {
  int ts_states = 0;
  std::size_t ts_transitions = 0;
  int dfa_states = 0;
  std::size_t dfa_transitions = 0;
  int product_states = 0;
  std::size_t product_transitions = 0;
  // Relaxation levels tried by the search.
  int levels = 0;
  double millis = 0;
};

struct SynthesisResult {
  std::vector<int> run;  // ts state ids
  Word word;
  Tau tau_star = kNegInf;
  // Monitor result on the output word.
  RelaxationResult relaxation;
  SynthesisStats stats;
};

// Finds a run of minimal temporal relaxation and, among those, the shortest
// with the lexicographically smallest state sequence.
SynthesisResult synthesize(const TransitionSystem& ts, const Formula& f, const SynthesisOptions& opt = {});

struct VerificationResult {
  bool holds = false;
  // A run that no relaxation of the formula accepts. It ends by repeating an
  // earlier state (a lasso) or at a state without successors.
  std::vector<int> counterexample;
  Word counterexample_word;
  int product_states = 0;
  std::size_t product_transitions = 0;
};

VerificationResult verify(const TransitionSystem& ts, const Formula& f,
                          ProductConvention convention = ProductConvention::ConsumeInitial);

struct LearnRow {
  int within = 0;  // post-order index
  int value = 0;
  std::vector<int> false_positives;  // indices into the negative set
  std::vector<int> false_negatives;  // indices into the positive set
  int count() const { return static_cast<int>(false_positives.size() + false_negatives.size()); }
};

struct LearnResult {
  std::vector<int> deadlines;
  std::vector<LearnRow> rows;
  // Tight deadlines per trace: kPosInf when the trace never satisfies the
  // template, kNegInf for withins it does not need.
  std::vector<std::vector<int>> positive_deadlines;
  std::vector<std::vector<int>> negative_deadlines;
  Formula formula;
};

LearnResult learn_deadlines(const std::vector<Word>& pos, const std::vector<Word>& neg, const Formula& tmpl,
                            const Alphabet& ap = Alphabet(), int jobs = 1);

int misclassification(const std::vector<Word>& pos, const std::vector<Word>& neg, const Formula& f,
                      const Alphabet& ap = Alphabet());

enum class ObjectiveKind { Verification, Synthesis, Learning };

// Cost F(x, y, tau) of the generic relaxation problem.
double objective(ObjectiveKind kind, long long x, long long y, const RelaxationVector& tau = {});
// max of the finite entries, kNegInf when there are none.
Tau temporal_relaxation_norm(const RelaxationVector& tau);

// Replaces every within deadline by the given values, in post-order.
Formula with_deadlines(const Formula& f, const std::vector<int>& deadlines);

}  // namespace twtl
