#pragma once

#include <memory>
#include <vector>

#include "twtl/automaton.hpp"
#include "twtl/formula.hpp"

namespace twtl {

struct RelaxationResult {
  Tau tau_star = kNegInf;
  // Per within, post-order; entries of unchosen disjuncts are kNegInf.
  RelaxationVector tau;
  // steps - b for every finished within, before disjunct selection.
  RelaxationVector tight;
  bool satisfied = false;
};

struct WithinStatus {
  bool ongoing = false;
  bool done = false;
  int steps = -1;
  bool operator==(const WithinStatus& o) const {
    return ongoing == o.ongoing && done == o.done && steps == o.steps;
  }
};

struct TraceRow {
  int state;
  std::vector<WithinStatus> withins;
};

class Monitor {
 public:
  enum class Status { Ongoing, Satisfied, Violated };

  // f must be in negation normal and disjunction-free-within form.
  explicit Monitor(const Formula& f, const Alphabet& ap = Alphabet());
  // Shares an annotated automaton built by translate(f, true).
  explicit Monitor(std::shared_ptr<const Dfa> a_inf);

  Status step(Symbol s);
  Status status() const { return status_; }
  int state() const { return state_; }
  int steps_taken() const { return consumed_; }
  const std::vector<WithinStatus>& withins() const { return withins_; }
  // One row for the initial state and one per consumed symbol.
  const std::vector<TraceRow>& trace() const { return trace_; }
  const Dfa& automaton() const { return *dfa_; }
  RelaxationResult result() const;
  void reset();

 private:
  void update(const AnnotationTree* t, int prev, Symbol sym, const std::optional<ChoiceSet>& c);

  std::shared_ptr<const Dfa> dfa_;
  std::vector<WithinStatus> withins_;
  std::vector<TraceRow> trace_;
  int state_ = 0;
  int consumed_ = 0;
  Status status_ = Status::Ongoing;
};

// Throws a blocked-run error when the annotated automaton has no transition
// for some symbol before acceptance.
RelaxationResult temporal_relaxation(const Word& o, const Formula& f, const Alphabet& ap = Alphabet());
RelaxationResult temporal_relaxation(const Word& o, const std::shared_ptr<const Dfa>& a_inf);

}  // namespace twtl
