#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "twtl/alphabet.hpp"

namespace twtl {

class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(int universe);
  static SymbolSet all(int universe);

  int universe() const { return n_; }
  bool contains(Symbol s) const { return (bits_[s >> 6] >> (s & 63)) & 1U; }
  void insert(Symbol s) { bits_[s >> 6] |= std::uint64_t{1} << (s & 63); }
  void erase(Symbol s) { bits_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }
  bool empty() const;
  int count() const;
  std::vector<Symbol> symbols() const;

  SymbolSet& operator|=(const SymbolSet& o);
  SymbolSet& operator&=(const SymbolSet& o);
  SymbolSet& operator-=(const SymbolSet& o);
  friend SymbolSet operator|(SymbolSet a, const SymbolSet& b) { return a |= b; }
  friend SymbolSet operator&(SymbolSet a, const SymbolSet& b) { return a &= b; }
  friend SymbolSet operator-(SymbolSet a, const SymbolSet& b) { return a -= b; }
  SymbolSet complement() const;
  bool intersects(const SymbolSet& o) const;

  bool operator==(const SymbolSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const SymbolSet& o) const { return !(*this == o); }
  bool operator<(const SymbolSet& o) const { return bits_ < o.bits_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Disjunction choice sets: state -> symbols read from that state.
using ChoiceSet = std::map<int, SymbolSet>;

enum class TreeOp { Hold, And, Or, Concat, Within };

struct AnnotationTree {
  TreeOp op = TreeOp::Hold;
  int d = 0;
  int a = 0;
  int b = 0;
  int index = -1;  // post-order position of a within node
  std::set<int> I;
  std::set<int> F;
  std::shared_ptr<const AnnotationTree> left;
  std::shared_ptr<const AnnotationTree> right;
  // Or nodes: transitions into the final state completing both, left only, right only.
  ChoiceSet B;
  ChoiceSet L;
  ChoiceSet R;
};
using TreePtr = std::shared_ptr<const AnnotationTree>;

std::string to_string(TreeOp op);
// Within nodes of the tree in post-order.
std::vector<const AnnotationTree*> tree_withins(const TreePtr& t);

struct Edge {
  int to;
  SymbolSet guard;
};

struct Dfa {
  Alphabet ap;
  int initial = 0;
  std::map<int, std::vector<Edge>> delta;  // keys are the states
  std::set<int> finals;
  TreePtr tree;

  int num_symbols() const { return ap.num_symbols(); }
  std::vector<int> states() const;
  int num_states() const { return static_cast<int>(delta.size()); }
  // Guarded edges.
  std::size_t num_edges() const;
  // Symbol level transitions.
  std::size_t num_transitions() const;
  bool has_state(int s) const { return delta.count(s) != 0; }
  void add_state(int s) { delta[s]; }
  // Merges with an existing edge to the same target.
  void add_edge(int from, int to, const SymbolSet& guard);
  std::optional<int> step(int s, Symbol sym) const;
  SymbolSet enabled(int s) const;
  bool is_final(int s) const { return finals.count(s) != 0; }
  bool empty_language() const;
  // The unique final state, if any.
  std::optional<int> final_state() const;
  bool deterministic() const;
};

Dfa empty_dfa(const Alphabet& ap);

// Exact acceptance: the run over the whole word ends in a final state.
bool accepts(const Dfa& a, const Word& w);
// Some non-empty prefix of the word reaches a final state.
bool accepts_prefix(const Dfa& a, const Word& w);

Dfa relabel(const Dfa& a, const std::map<int, int>& m, int i0);
// States in breadth-first order from the initial state, numbered from i0.
Dfa relabel_bfs(const Dfa& a, int i0 = 0);
TreePtr relabel_tree(const TreePtr& t, const std::map<int, int>& m);
TreePtr relabel_tree(const TreePtr& t, const std::map<int, std::set<int>>& m);
// Drops states of the tree that are not in `keep`.
TreePtr restrict_tree(const TreePtr& t, const std::set<int>& keep);

Dfa strictify(const Dfa& a);
Dfa truncate(const Dfa& a, int l);
bool is_finite_language(const Dfa& a);
bool check_unambiguous(const Dfa& a);
bool is_strict(const Dfa& a);
// Length of the shortest accepted word, nullopt if the language is empty.
std::optional<int> shortest_accepted(const Dfa& a);
// For every state, the length of the shortest path to a final state.
std::map<int, int> distance_to_final(const Dfa& a);

// Structural isomorphism of the reachable parts; returns the state map a -> b.
std::optional<std::map<int, int>> isomorphism(const Dfa& a, const Dfa& b);

// Guard as a proposition formula, e.g. "A & !B | C".
std::string format_guard(const SymbolSet& g, const Alphabet& ap);

std::string to_dot(const Dfa& a, std::string_view name = "twtl");

inline constexpr int kDumpVersion = 1;
std::string dump(const Dfa& a);
Dfa load_dump(std::string_view text);

}  // namespace twtl
