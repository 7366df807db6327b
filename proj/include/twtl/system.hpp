#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twtl/automaton.hpp"
#include "twtl/formula.hpp"

namespace twtl {

struct WeightedGraph {
  struct Edge {
    int u;
    int v;
    int weight;
    bool directed = false;
  };
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> props;
  int initial = -1;
  std::vector<Edge> edges;
  // Adds a unit self-loop to every state of the expanded system,
  // intermediate states included.
  bool stay_everywhere = false;

  int index(std::string_view name) const;
};

// Line format: `state <name> [props...]`, `initial <name>`,
// `edge <u> <v> <weight> [directed]`, `stay all`; '#' starts a comment.
WeightedGraph parse_graph(std::string_view text);

struct TransitionSystem {
  Alphabet ap;
  std::vector<std::string> names;
  std::vector<Symbol> labels;
  int initial = 0;
  std::vector<std::vector<int>> succ;  // sorted, duplicate free

  int num_states() const { return static_cast<int>(names.size()); }
  std::size_t num_transitions() const;
  int add_state(std::string name, Symbol label);
  void add_transition(int u, int v);
  // Re-encodes labels over `ap`, which must contain every proposition in use.
  TransitionSystem with_alphabet(const Alphabet& ap) const;
  // Output word of a run.
  Word word(const std::vector<int>& run) const;
};

// Edges of weight w become chains with w-1 unlabeled intermediate states,
// one chain per direction of an undirected edge.
TransitionSystem expand_graph(const WeightedGraph& g, const Alphabet& ap = Alphabet());

enum class ProductConvention {
  // Initial state (x0, delta(s0, h(x0))); the run x0..xn outputs h(x0)..h(xn).
  ConsumeInitial,
  // Initial state (x0, s0); the run outputs h(x1)..h(xn).
  SkipInitial,
};

struct ProductAutomaton {
  std::vector<std::pair<int, int>> states;  // (ts state, dfa state)
  int initial = -1;                         // -1 when the first label blocks
  std::vector<std::vector<int>> succ;
  std::vector<bool> final;
  ProductConvention convention = ProductConvention::ConsumeInitial;

  int num_states() const { return static_cast<int>(states.size()); }
  std::size_t num_transitions() const;
  bool any_final() const;
  // TS component of a product path.
  std::vector<int> project(const std::vector<int>& path) const;
};

ProductAutomaton product(const TransitionSystem& ts, const Dfa& a,
                         ProductConvention convention = ProductConvention::ConsumeInitial);

// Shortest path from the initial state to a final state; ties go to the
// lexicographically smallest sequence of (ts state, dfa state) pairs.
std::vector<int> shortest_accepting_path(const ProductAutomaton& p);

bool exists_relaxed_policy(const TransitionSystem& ts, const Formula& f);

}  // namespace twtl
