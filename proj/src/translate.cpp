#include "twtl/translate.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "twtl/error.hpp"

namespace twtl {

namespace {

constexpr int kTrap = -1;

SymbolSet hold_guard(const Alphabet& ap, const std::string& prop, bool negated) {
  SymbolSet g(ap.num_symbols());
  if (prop == kTrue) return SymbolSet::all(ap.num_symbols());
  int i = ap.index(prop);
  if (i < 0) throw Error(ErrorKind::UnknownProposition, "unknown proposition '" + prop + "'");
  for (int s = 0; s < ap.num_symbols(); ++s) {
    bool has = (static_cast<Symbol>(s) >> i) & 1U;
    if (has != negated) g.insert(static_cast<Symbol>(s));
  }
  return g;
}

void require_same_alphabet(const Dfa& a1, const Dfa& a2) {
  if (a1.ap != a2.ap) throw Error(ErrorKind::AlphabetMismatch, "operands are built over different alphabets");
}

int step_or_trap(const Dfa& a, int s, Symbol sym) {
  if (s == kTrap) return kTrap;
  auto n = a.step(s, sym);
  return n ? *n : kTrap;
}

// Interns composite states in discovery order.
template <class Key>
struct Interner {
  std::map<Key, int> ids;
  std::vector<Key> keys;
  std::pair<int, bool> get(const Key& k) {
    auto [it, fresh] = ids.emplace(k, static_cast<int>(keys.size()));
    if (fresh) keys.push_back(k);
    return {it->second, fresh};
  }
};

// Groups the symbols by successor; kTrap means no transition.
template <class F>
void for_each_target(int nsym, F&& next, std::map<int, SymbolSet>& out) {
  for (int s = 0; s < nsym; ++s) {
    int t = next(static_cast<Symbol>(s));
    if (t == kTrap) continue;
    auto it = out.find(t);
    if (it == out.end()) it = out.emplace(t, SymbolSet(nsym)).first;
    it->second.insert(static_cast<Symbol>(s));
  }
}

std::shared_ptr<AnnotationTree> node(TreeOp op) {
  auto n = std::make_shared<AnnotationTree>();
  n->op = op;
  return n;
}

// Strict copy with states numbered in breadth-first order.
Dfa finish(Dfa a) {
  auto s = strictify(a);
  return relabel_bfs(s);
}

Dfa product_and(const Dfa& a1, const Dfa& a2) {
  require_same_alphabet(a1, a2);
  auto f1 = a1.final_state();
  auto f2 = a2.final_state();
  int nsym = a1.num_symbols();
  using Key = std::pair<int, int>;
  Interner<Key> states;
  Dfa out;
  out.ap = a1.ap;
  out.initial = states.get({a1.initial, a2.initial}).first;
  out.add_state(out.initial);
  std::deque<int> queue{out.initial};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto [u, v] = states.keys[id];
    bool u_done = f1 && u == *f1;
    bool v_done = f2 && v == *f2;
    if (u_done && v_done) {
      out.finals.insert(id);
      continue;
    }
    std::map<int, SymbolSet> targets;
    for_each_target(
        nsym,
        [&](Symbol sym) {
          int u2 = u_done ? u : step_or_trap(a1, u, sym);
          int v2 = v_done ? v : step_or_trap(a2, v, sym);
          if (u2 == kTrap || v2 == kTrap) return kTrap;
          auto [t, fresh] = states.get({u2, v2});
          if (fresh) {
            out.add_state(t);
            queue.push_back(t);
          }
          return t;
        },
        targets);
    for (const auto& [t, g] : targets) out.add_edge(id, t, g);
  }
  if (a1.tree && a2.tree) {
    std::map<int, std::set<int>> ml, mr;
    for (int s : a1.states()) ml[s];
    for (int s : a2.states()) mr[s];
    for (std::size_t id = 0; id < states.keys.size(); ++id) {
      ml[states.keys[id].first].insert(static_cast<int>(id));
      mr[states.keys[id].second].insert(static_cast<int>(id));
    }
    auto t = node(TreeOp::And);
    t->I = {out.initial};
    t->F = out.finals;
    t->left = relabel_tree(a1.tree, ml);
    t->right = relabel_tree(a2.tree, mr);
    out.tree = t;
  }
  return out;
}

Dfa product_or(const Dfa& a1, const Dfa& a2) {
  require_same_alphabet(a1, a2);
  int nsym = a1.num_symbols();
  using Key = std::pair<int, int>;
  Interner<Key> states;
  Dfa out;
  out.ap = a1.ap;
  out.initial = states.get({a1.initial, a2.initial}).first;
  out.add_state(out.initial);
  const Key final_key{-2, -2};
  auto [final_id, fresh_final] = states.get(final_key);
  (void)fresh_final;
  out.add_state(final_id);
  out.finals.insert(final_id);
  ChoiceSet both, left, right;
  auto add_choice = [&](ChoiceSet& c, int s, Symbol sym) {
    auto it = c.find(s);
    if (it == c.end()) it = c.emplace(s, SymbolSet(nsym)).first;
    it->second.insert(sym);
  };
  std::deque<int> queue{out.initial};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto [u, v] = states.keys[id];
    std::map<int, SymbolSet> targets;
    for_each_target(
        nsym,
        [&](Symbol sym) {
          int u2 = step_or_trap(a1, u, sym);
          int v2 = step_or_trap(a2, v, sym);
          if (u2 == kTrap && v2 == kTrap) return kTrap;
          bool lf = u2 != kTrap && a1.is_final(u2);
          bool rf = v2 != kTrap && a2.is_final(v2);
          if (lf || rf) {
            add_choice(lf && rf ? both : lf ? left : right, id, sym);
            return final_id;
          }
          auto [t, fresh] = states.get({u2, v2});
          if (fresh) {
            out.add_state(t);
            queue.push_back(t);
          }
          return t;
        },
        targets);
    for (const auto& [t, g] : targets) out.add_edge(id, t, g);
  }
  if (a1.tree && a2.tree) {
    std::map<int, std::set<int>> ml, mr;
    for (int s : a1.states()) ml[s];
    for (int s : a2.states()) mr[s];
    for (std::size_t id = 0; id < states.keys.size(); ++id) {
      auto [u, v] = states.keys[id];
      if (states.keys[id] == final_key) continue;
      if (u != kTrap) ml[u].insert(static_cast<int>(id));
      if (v != kTrap) mr[v].insert(static_cast<int>(id));
    }
    for (int f : a1.finals) ml[f].insert(final_id);
    for (int f : a2.finals) mr[f].insert(final_id);
    auto t = node(TreeOp::Or);
    t->I = {out.initial};
    t->F = {final_id};
    t->B = both;
    t->L = left;
    t->R = right;
    t->left = relabel_tree(a1.tree, ml);
    t->right = relabel_tree(a2.tree, mr);
    out.tree = t;
  }
  return out;
}

}  // namespace

Dfa build_hold(const Alphabet& ap, const std::string& prop, bool negated, int d, bool inf) {
  if (d < 0) throw Error(ErrorKind::InvalidInput, "hold duration must be non-negative");
  if (negated && prop == kTrue) {
    throw Error(ErrorKind::InvalidInput, "negated 'true' under hold is never satisfiable");
  }
  auto g = hold_guard(ap, prop, negated);
  Dfa a;
  a.ap = ap;
  a.initial = 0;
  for (int i = 0; i <= d; ++i) a.add_edge(i, i + 1, g);
  a.add_state(0);
  a.finals.insert(d + 1);
  if (inf) {
    auto t = node(TreeOp::Hold);
    t->d = d;
    t->I = {0};
    t->F = {d + 1};
    a.tree = t;
  }
  return a;
}

Dfa build_and(const Dfa& a1, const Dfa& a2) { return finish(product_and(a1, a2)); }

Dfa build_or(const Dfa& a1, const Dfa& a2) { return finish(product_or(a1, a2)); }

Dfa build_concat(const Dfa& a1, const Dfa& a2) {
  require_same_alphabet(a1, a2);
  if (!check_unambiguous(a1)) {
    throw Error(ErrorKind::AssumptionViolation, "left operand of a concatenation has an ambiguous language");
  }
  auto left = relabel_bfs(a1, 0);
  int n1 = left.num_states();
  auto f1 = left.final_state();
  int glue = f1 ? *f1 : n1 + a2.num_states();
  auto right = relabel(a2, {{a2.initial, glue}}, n1);
  Dfa out;
  out.ap = a1.ap;
  out.initial = left.initial;
  for (const auto* part : {&left, &right}) {
    for (const auto& [s, edges] : part->delta) {
      out.add_state(s);
      for (const auto& e : edges) out.add_edge(s, e.to, e.guard);
    }
  }
  out.finals = right.finals;
  if (left.tree && right.tree) {
    auto t = node(TreeOp::Concat);
    t->I = {out.initial};
    t->F = out.finals;
    t->left = left.tree;
    t->right = right.tree;
    out.tree = t;
  }
  return finish(out);
}

Dfa build_within_inf(const Dfa& a, int lo, int hi) {
  if (lo < 0 || lo > hi) throw Error(ErrorKind::WithinBound, "within bounds need 0 <= lo <= hi");
  int nsym = a.num_symbols();
  // Keys: {-1, k} for delay state k, otherwise the sorted set of active child states.
  using Key = std::vector<int>;
  Interner<Key> states;
  Dfa out;
  out.ap = a.ap;
  const Key final_key{-2};
  const Key start_set{a.initial};
  int final_id = -1;
  std::deque<int> queue;
  auto intern = [&](const Key& k) {
    auto [id, fresh] = states.get(k);
    if (fresh) {
      out.add_state(id);
      if (k != final_key) queue.push_back(id);
    }
    return id;
  };
  out.initial = intern(lo > 0 ? Key{-1, 0} : start_set);
  final_id = intern(final_key);
  out.finals.insert(final_id);
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    Key key = states.keys[id];
    if (key[0] == -1) {
      int k = key[1];
      int next = intern(k + 1 < lo ? Key{-1, k + 1} : start_set);
      out.add_edge(id, next, SymbolSet::all(nsym));
      continue;
    }
    std::map<int, SymbolSet> targets;
    for_each_target(
        nsym,
        [&](Symbol sym) {
          std::set<int> next;
          for (int s : key) {
            auto n = a.step(s, sym);
            if (!n) continue;
            if (a.is_final(*n)) return final_id;
            next.insert(*n);
          }
          next.insert(a.initial);
          return intern(Key(next.begin(), next.end()));
        },
        targets);
    for (const auto& [t, g] : targets) out.add_edge(id, t, g);
  }
  if (a.tree) {
    std::map<int, std::set<int>> m;
    for (int s : a.states()) m[s];
    for (std::size_t id = 0; id < states.keys.size(); ++id) {
      const auto& key = states.keys[id];
      if (key[0] < 0) continue;
      for (int s : key) m[s].insert(static_cast<int>(id));
    }
    for (int f : a.finals) m[f].insert(final_id);
    auto t = node(TreeOp::Within);
    t->a = lo;
    t->b = hi;
    t->I = {out.initial};
    t->F = {final_id};
    t->left = relabel_tree(a.tree, m);
    out.tree = t;
  }
  return finish(out);
}

namespace {

// Returns nullopt when the window cannot hold a shortest word of the child.
std::optional<Dfa> within_window(const Dfa& a, int lo, int hi) {
  if (lo < 0 || hi < lo) return std::nullopt;
  auto shortest = shortest_accepted(a);
  if (!shortest) return empty_dfa(a.ap);
  if (*shortest > hi - lo + 1) return std::nullopt;
  auto dist = distance_to_final(a);
  int nsym = a.num_symbols();
  // Key: position k in the window followed by the active child states.
  using Key = std::vector<int>;
  Interner<Key> states;
  Dfa out;
  out.ap = a.ap;
  const Key final_key{-1};
  std::deque<int> queue;
  auto intern = [&](const Key& k) {
    auto [id, fresh] = states.get(k);
    if (fresh) {
      out.add_state(id);
      if (k != final_key) queue.push_back(id);
    }
    return id;
  };
  out.initial = intern(Key{0});
  int final_id = intern(final_key);
  out.finals.insert(final_id);
  auto fits = [&](int s, int remaining) {
    auto it = dist.find(s);
    return it != dist.end() && it->second <= remaining;
  };
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    Key key = states.keys[id];
    int k = key[0];
    if (k > hi) continue;
    std::set<int> active(key.begin() + 1, key.end());
    if (k >= lo && fits(a.initial, hi - k + 1)) active.insert(a.initial);
    std::map<int, SymbolSet> targets;
    for_each_target(
        nsym,
        [&](Symbol sym) {
          Key next{k + 1};
          std::set<int> succ;
          for (int s : active) {
            auto n = a.step(s, sym);
            if (!n) continue;
            if (a.is_final(*n)) return final_id;
            if (fits(*n, hi - k)) succ.insert(*n);
          }
          if (k + 1 > hi) return kTrap;
          next.insert(next.end(), succ.begin(), succ.end());
          return intern(next);
        },
        targets);
    for (const auto& [t, g] : targets) out.add_edge(id, t, g);
  }
  return finish(out);
}

}  // namespace

Dfa build_within(const Dfa& a, int lo, int hi) {
  if (lo < 0 || lo > hi) throw Error(ErrorKind::WithinBound, "within bounds need 0 <= lo <= hi");
  auto r = within_window(a, lo, hi);
  if (!r) {
    auto l = shortest_accepted(a);
    throw Error(ErrorKind::Infeasible, "window [" + std::to_string(lo) + "," + std::to_string(hi) +
                                           "] is shorter than the shortest accepted word (" +
                                           std::to_string(l.value_or(0)) + " symbols)");
  }
  return *r;
}

Dfa build_within_restart(const Dfa& a, int lo, int hi) {
  if (lo < 0 || lo > hi) throw Error(ErrorKind::WithinBound, "within bounds need 0 <= lo <= hi");
  int nsym = a.num_symbols();
  auto base = relabel_bfs(a, lo);
  Dfa out;
  out.ap = a.ap;
  out.initial = 0;
  for (int k = 0; k < lo; ++k) out.add_edge(k, k + 1, SymbolSet::all(nsym));
  out.add_state(0);
  for (const auto& [s, edges] : base.delta) {
    out.add_state(s);
    for (const auto& e : edges) out.add_edge(s, e.to, e.guard);
    if (!base.is_final(s)) {
      auto blocked = base.enabled(s).complement();
      out.add_edge(s, base.initial, blocked);
    }
  }
  out.finals = base.finals;
  return finish(out);
}

bool union_ambiguous(const Dfa& a1, const Dfa& a2) {
  require_same_alphabet(a1, a2);
  if (!check_unambiguous(a1) || !check_unambiguous(a2)) return true;
  auto d1 = distance_to_final(a1);
  auto d2 = distance_to_final(a2);
  std::set<std::pair<int, int>> seen{{a1.initial, a2.initial}};
  std::deque<std::pair<int, int>> queue{{a1.initial, a2.initial}};
  auto live = [](const std::map<int, int>& d, int s) { return s != kTrap && d.count(s) && d.at(s) > 0; };
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    bool uf = u != kTrap && a1.is_final(u);
    bool vf = v != kTrap && a2.is_final(v);
    if ((uf && live(d2, v)) || (vf && live(d1, u))) return true;
    for (int s = 0; s < a1.num_symbols(); ++s) {
      int u2 = step_or_trap(a1, u, static_cast<Symbol>(s));
      int v2 = step_or_trap(a2, v, static_cast<Symbol>(s));
      if (u2 == kTrap && v2 == kTrap) continue;
      if (seen.insert({u2, v2}).second) queue.push_back({u2, v2});
    }
  }
  return false;
}

// ---------------------------------------------------------------- translate

namespace {

TreePtr number_withins(const TreePtr& t, int& next) {
  if (!t) return nullptr;
  auto n = std::make_shared<AnnotationTree>(*t);
  n->left = number_withins(t->left, next);
  n->right = number_withins(t->right, next);
  if (n->op == TreeOp::Within) n->index = next++;
  return n;
}

struct Translator {
  const Alphabet& ap;
  bool inf;
  const RelaxationVector* tau = nullptr;
  std::vector<std::string>* warnings = nullptr;
  std::size_t next_within = 0;

  Dfa run(const Formula& f) {
    Dfa out = step(f);
    if (!check_unambiguous(out)) {
      throw Error(ErrorKind::AssumptionViolation, "subformula '" + format(f) + "' has an ambiguous language");
    }
    return out;
  }

  Dfa step(const Formula& f) {
    switch (f->op) {
      case Op::Hold: return build_hold(ap, f->prop, f->negated, f->d, inf);
      case Op::And: {
        auto l = run(f->left);
        return build_and(l, run(f->right));
      }
      case Op::Or: {
        auto l = run(f->left);
        auto r = run(f->right);
        if (warnings && union_ambiguous(l, r)) {
          warnings->push_back("disjunction '" + format(f) +
                              "': one operand accepts a proper prefix of a word of the other; the automaton keeps the "
                              "shorter word");
        }
        return build_or(l, r);
      }
      case Op::Concat: {
        auto l = run(f->left);
        return build_concat(l, run(f->right));
      }
      case Op::Within: {
        auto c = run(f->left);
        std::size_t idx = next_within++;
        if (inf) return build_within_inf(c, f->a, f->b);
        if (tau) {
          long long b = static_cast<long long>(f->b) + (*tau)[idx];
          if (b < f->a || b > (1LL << 30)) return empty_dfa(ap);
          auto r = within_window(c, f->a, static_cast<int>(b));
          return r ? *r : empty_dfa(ap);
        }
        return build_within(c, f->a, f->b);
      }
      case Op::Not:
        throw Error(ErrorKind::AssumptionViolation,
                    "negation of '" + format(f->left) + "' must be pushed to the propositions before translation");
    }
    return empty_dfa(ap);
  }
};

Alphabet resolve_alphabet(const Formula& f, const Alphabet& ap) {
  if (ap.size() == 0) return alphabet_of(f);
  for (const auto& p : propositions(f)) {
    if (!ap.contains(p)) throw Error(ErrorKind::UnknownProposition, "unknown proposition '" + p + "'");
  }
  return ap;
}

void check_preconditions(const Formula& f) {
  if (!is_negation_normal(f)) {
    throw Error(ErrorKind::AssumptionViolation, "formula must be in negation normal form: '" + format(f) + "'");
  }
  if (!is_dfw(f)) {
    throw Error(ErrorKind::AssumptionViolation, "formula has a disjunction inside a within: '" + format(f) + "'");
  }
}

}  // namespace

Dfa translate(const Formula& f, bool inf, const Alphabet& ap_in) {
  check_preconditions(f);
  auto ap = resolve_alphabet(f, ap_in);
  if (!inf && !is_feasible(f)) throw Error(ErrorKind::Infeasible, "formula is infeasible: '" + format(f) + "'");
  Translator t{ap, inf};
  auto out = t.run(f);
  if (out.tree) {
    int next = 0;
    out.tree = number_withins(out.tree, next);
  }
  return out;
}

Dfa translate_relaxed(const Formula& f, const RelaxationVector& tau, const Alphabet& ap_in) {
  check_preconditions(f);
  if (static_cast<int>(tau.size()) != within_count(f)) {
    throw Error(ErrorKind::InvalidInput, "relaxation vector length does not match the number of within operators");
  }
  auto ap = resolve_alphabet(f, ap_in);
  Translator t{ap, false, &tau};
  return t.run(f);
}

std::vector<std::string> translation_warnings(const Formula& f, const Alphabet& ap_in) {
  check_preconditions(f);
  auto ap = resolve_alphabet(f, ap_in);
  std::vector<std::string> out;
  Translator t{ap, true, nullptr, &out};
  t.run(f);
  return out;
}

}  // namespace twtl
