#include "twtl/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>

#include "twtl/error.hpp"

namespace twtl {

// ---------------------------------------------------------------- SymbolSet

SymbolSet::SymbolSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

SymbolSet SymbolSet::all(int universe) {
  SymbolSet s(universe);
  for (int i = 0; i < universe; ++i) s.insert(static_cast<Symbol>(i));
  return s;
}

bool SymbolSet::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

int SymbolSet::count() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<Symbol> SymbolSet::symbols() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    auto w = bits_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Symbol>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

SymbolSet& SymbolSet::operator|=(const SymbolSet& o) {
  if (bits_.size() < o.bits_.size()) {
    bits_.resize(o.bits_.size(), 0);
    n_ = o.n_;
  }
  for (std::size_t i = 0; i < o.bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

SymbolSet& SymbolSet::operator&=(const SymbolSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= i < o.bits_.size() ? o.bits_[i] : 0;
  return *this;
}

SymbolSet& SymbolSet::operator-=(const SymbolSet& o) {
  for (std::size_t i = 0; i < bits_.size() && i < o.bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  return *this;
}

SymbolSet SymbolSet::complement() const { return all(n_) - *this; }

bool SymbolSet::intersects(const SymbolSet& o) const {
  for (std::size_t i = 0; i < bits_.size() && i < o.bits_.size(); ++i) {
    if (bits_[i] & o.bits_[i]) return true;
  }
  return false;
}

// ---------------------------------------------------------------- tree

std::string to_string(TreeOp op) {
  switch (op) {
    case TreeOp::Hold: return "hold";
    case TreeOp::And: return "and";
    case TreeOp::Or: return "or";
    case TreeOp::Concat: return "concat";
    case TreeOp::Within: return "within";
  }
  return "?";
}

std::vector<const AnnotationTree*> tree_withins(const TreePtr& t) {
  std::vector<const AnnotationTree*> out;
  std::function<void(const AnnotationTree*)> walk = [&](const AnnotationTree* n) {
    if (!n) return;
    walk(n->left.get());
    walk(n->right.get());
    if (n->op == TreeOp::Within) out.push_back(n);
  };
  walk(t.get());
  return out;
}

namespace {

template <class Map>
std::set<int> map_set(const std::set<int>& in, const Map& m);

template <>
std::set<int> map_set(const std::set<int>& in, const std::map<int, int>& m) {
  std::set<int> out;
  for (int s : in) {
    auto it = m.find(s);
    if (it == m.end()) throw Error(ErrorKind::MissingMapping, "no mapping for state " + std::to_string(s));
    out.insert(it->second);
  }
  return out;
}

template <>
std::set<int> map_set(const std::set<int>& in, const std::map<int, std::set<int>>& m) {
  std::set<int> out;
  for (int s : in) {
    auto it = m.find(s);
    if (it == m.end()) throw Error(ErrorKind::MissingMapping, "no mapping for state " + std::to_string(s));
    out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

ChoiceSet map_choices(const ChoiceSet& c, const std::map<int, int>& m) {
  ChoiceSet out;
  for (const auto& [s, g] : c) {
    for (int t : map_set(std::set<int>{s}, m)) out[t] |= g;
  }
  return out;
}

ChoiceSet map_choices(const ChoiceSet& c, const std::map<int, std::set<int>>& m) {
  ChoiceSet out;
  for (const auto& [s, g] : c) {
    for (int t : map_set(std::set<int>{s}, m)) out[t] |= g;
  }
  return out;
}

template <class Map>
TreePtr relabel_tree_impl(const TreePtr& t, const Map& m) {
  if (!t) return nullptr;
  auto n = std::make_shared<AnnotationTree>(*t);
  n->I = map_set(t->I, m);
  n->F = map_set(t->F, m);
  n->B = map_choices(t->B, m);
  n->L = map_choices(t->L, m);
  n->R = map_choices(t->R, m);
  n->left = relabel_tree_impl(t->left, m);
  n->right = relabel_tree_impl(t->right, m);
  return n;
}

}  // namespace

TreePtr relabel_tree(const TreePtr& t, const std::map<int, int>& m) { return relabel_tree_impl(t, m); }

TreePtr relabel_tree(const TreePtr& t, const std::map<int, std::set<int>>& m) { return relabel_tree_impl(t, m); }

TreePtr restrict_tree(const TreePtr& t, const std::set<int>& keep) {
  if (!t) return nullptr;
  auto n = std::make_shared<AnnotationTree>(*t);
  auto filter = [&](const std::set<int>& s) {
    std::set<int> out;
    for (int x : s)
      if (keep.count(x)) out.insert(x);
    return out;
  };
  auto filter_c = [&](const ChoiceSet& c) {
    ChoiceSet out;
    for (const auto& [s, g] : c)
      if (keep.count(s)) out[s] = g;
    return out;
  };
  n->I = filter(t->I);
  n->F = filter(t->F);
  n->B = filter_c(t->B);
  n->L = filter_c(t->L);
  n->R = filter_c(t->R);
  n->left = restrict_tree(t->left, keep);
  n->right = restrict_tree(t->right, keep);
  return n;
}

// ---------------------------------------------------------------- Dfa

std::vector<int> Dfa::states() const {
  std::vector<int> out;
  out.reserve(delta.size());
  for (const auto& kv : delta) out.push_back(kv.first);
  return out;
}

std::size_t Dfa::num_edges() const {
  std::size_t n = 0;
  for (const auto& kv : delta) n += kv.second.size();
  return n;
}

std::size_t Dfa::num_transitions() const {
  std::size_t n = 0;
  for (const auto& kv : delta)
    for (const auto& e : kv.second) n += static_cast<std::size_t>(e.guard.count());
  return n;
}

void Dfa::add_edge(int from, int to, const SymbolSet& guard) {
  if (guard.empty()) return;
  add_state(to);
  auto& out = delta[from];
  for (auto& e : out) {
    if (e.to == to) {
      e.guard |= guard;
      return;
    }
  }
  out.push_back(Edge{to, guard});
}

std::optional<int> Dfa::step(int s, Symbol sym) const {
  auto it = delta.find(s);
  if (it == delta.end()) return std::nullopt;
  for (const auto& e : it->second) {
    if (e.guard.contains(sym)) return e.to;
  }
  return std::nullopt;
}

SymbolSet Dfa::enabled(int s) const {
  SymbolSet out(num_symbols());
  auto it = delta.find(s);
  if (it == delta.end()) return out;
  for (const auto& e : it->second) out |= e.guard;
  return out;
}

bool Dfa::empty_language() const { return !shortest_accepted(*this).has_value(); }

std::optional<int> Dfa::final_state() const {
  if (finals.size() != 1) return std::nullopt;
  return *finals.begin();
}

bool Dfa::deterministic() const {
  for (const auto& [s, edges] : delta) {
    SymbolSet seen(num_symbols());
    for (const auto& e : edges) {
      if (seen.intersects(e.guard)) return false;
      seen |= e.guard;
    }
  }
  return true;
}

Dfa empty_dfa(const Alphabet& ap) {
  Dfa a;
  a.ap = ap;
  a.initial = 0;
  a.add_state(0);
  return a;
}

bool accepts(const Dfa& a, const Word& w) {
  int s = a.initial;
  for (Symbol sym : w) {
    auto n = a.step(s, sym);
    if (!n) return false;
    s = *n;
  }
  return a.is_final(s);
}

bool accepts_prefix(const Dfa& a, const Word& w) {
  int s = a.initial;
  for (Symbol sym : w) {
    auto n = a.step(s, sym);
    if (!n) return false;
    s = *n;
    if (a.is_final(s)) return true;
  }
  return false;
}

// ---------------------------------------------------------------- relabel

Dfa relabel(const Dfa& a, const std::map<int, int>& m, int i0) {
  std::map<int, int> full;
  std::set<int> used;
  for (int s : a.states()) {
    auto it = m.find(s);
    int t = it != m.end() ? it->second : i0++;
    if (!used.insert(t).second) {
      throw Error(ErrorKind::Collision, "relabel maps two states to " + std::to_string(t));
    }
    full[s] = t;
  }
  Dfa out;
  out.ap = a.ap;
  out.initial = full.at(a.initial);
  for (const auto& [s, edges] : a.delta) {
    out.add_state(full[s]);
    for (const auto& e : edges) out.add_edge(full[s], full.at(e.to), e.guard);
  }
  for (int f : a.finals) out.finals.insert(full.at(f));
  out.tree = relabel_tree(a.tree, full);
  return out;
}

Dfa relabel_bfs(const Dfa& a, int i0) {
  std::map<int, int> m;
  std::deque<int> queue{a.initial};
  m[a.initial] = i0++;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    auto edges = a.delta.at(s);
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return x.guard.symbols().front() < y.guard.symbols().front();
    });
    for (const auto& e : edges) {
      if (m.emplace(e.to, i0).second) {
        ++i0;
        queue.push_back(e.to);
      }
    }
  }
  for (int s : a.states()) {
    if (m.emplace(s, i0).second) ++i0;
  }
  return relabel(a, m, 0);
}

// ---------------------------------------------------------------- structure

namespace {

std::set<int> forward(const Dfa& a) {
  std::set<int> seen{a.initial};
  std::vector<int> stack{a.initial};
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    auto it = a.delta.find(s);
    if (it == a.delta.end()) continue;
    for (const auto& e : it->second) {
      if (seen.insert(e.to).second) stack.push_back(e.to);
    }
  }
  return seen;
}

std::map<int, std::vector<int>> predecessors(const Dfa& a) {
  std::map<int, std::vector<int>> pred;
  for (const auto& [s, edges] : a.delta)
    for (const auto& e : edges) pred[e.to].push_back(s);
  return pred;
}

}  // namespace

std::map<int, int> distance_to_final(const Dfa& a) {
  auto pred = predecessors(a);
  std::map<int, int> dist;
  std::deque<int> queue;
  for (int f : a.finals) {
    if (!a.has_state(f)) continue;
    dist[f] = 0;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int p : pred[s]) {
      if (dist.emplace(p, dist[s] + 1).second) queue.push_back(p);
    }
  }
  return dist;
}

std::optional<int> shortest_accepted(const Dfa& a) {
  std::map<int, int> dist{{a.initial, 0}};
  std::deque<int> queue{a.initial};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    auto it = a.delta.find(s);
    if (it == a.delta.end()) continue;
    for (const auto& e : it->second) {
      if (dist.emplace(e.to, dist[s] + 1).second) {
        if (a.is_final(e.to)) return dist[e.to];
        queue.push_back(e.to);
      }
    }
  }
  return std::nullopt;
}

Dfa strictify(const Dfa& a) {
  auto fwd = forward(a);
  auto dist = distance_to_final(a);
  std::set<int> keep;
  for (int s : fwd)
    if (dist.count(s)) keep.insert(s);
  Dfa out;
  out.ap = a.ap;
  out.initial = a.initial;
  out.add_state(a.initial);
  for (int s : keep) {
    out.add_state(s);
    for (const auto& e : a.delta.at(s)) {
      if (keep.count(e.to)) out.add_edge(s, e.to, e.guard);
    }
    if (a.is_final(s)) out.finals.insert(s);
  }
  out.tree = restrict_tree(a.tree, keep);
  return out;
}

bool is_strict(const Dfa& a) {
  auto fwd = forward(a);
  auto dist = distance_to_final(a);
  if (a.finals.empty()) return a.num_states() == 1 && a.num_edges() == 0;
  for (int s : a.states()) {
    if (!fwd.count(s) || !dist.count(s)) return false;
  }
  return true;
}

Dfa truncate(const Dfa& a, int l) {
  // Unrolled states (s, k): s reached after exactly k symbols.
  bool final_sink = true;
  for (int f : a.finals) {
    if (a.delta.count(f) && !a.delta.at(f).empty()) final_sink = false;
  }
  if (a.is_final(a.initial)) final_sink = false;
  std::map<std::pair<int, int>, int> id;
  Dfa out;
  out.ap = a.ap;
  int sink = -1;
  auto get = [&](int s, int k) {
    if (final_sink && a.is_final(s)) {
      if (sink < 0) {
        sink = static_cast<int>(id.size());
        id[{s, -1}] = sink;
        out.add_state(sink);
        out.finals.insert(sink);
      }
      return std::make_pair(sink, false);
    }
    auto [it, fresh] = id.emplace(std::make_pair(s, k), static_cast<int>(id.size()));
    if (fresh) {
      out.add_state(it->second);
      if (a.is_final(s)) out.finals.insert(it->second);
    }
    return std::make_pair(it->second, fresh);
  };
  out.initial = get(a.initial, 0).first;
  std::deque<std::pair<int, int>> queue{{a.initial, 0}};
  while (!queue.empty()) {
    auto [s, k] = queue.front();
    queue.pop_front();
    if (k >= l) continue;
    int from = id.at({s, k});
    auto it = a.delta.find(s);
    if (it == a.delta.end()) continue;
    for (const auto& e : it->second) {
      auto [to, fresh] = get(e.to, k + 1);
      out.add_edge(from, to, e.guard);
      if (fresh) queue.push_back({e.to, k + 1});
    }
  }
  auto strict = strictify(out);
  strict.tree = nullptr;
  return relabel_bfs(strict);
}

bool is_finite_language(const Dfa& a) {
  auto s = strictify(a);
  std::map<int, int> color;
  std::function<bool(int)> dfs = [&](int u) {
    color[u] = 1;
    for (const auto& e : s.delta.at(u)) {
      int c = color[e.to];
      if (c == 1) return false;
      if (c == 0 && !dfs(e.to)) return false;
    }
    color[u] = 2;
    return true;
  };
  for (int u : s.states()) {
    if (color[u] == 0 && !dfs(u)) return false;
  }
  return true;
}

bool check_unambiguous(const Dfa& a) {
  auto s = strictify(a);
  for (int f : s.finals) {
    if (!s.delta.at(f).empty()) return false;
  }
  return true;
}

std::optional<std::map<int, int>> isomorphism(const Dfa& a, const Dfa& b) {
  if (a.num_symbols() != b.num_symbols()) return std::nullopt;
  std::map<int, int> m{{a.initial, b.initial}};
  std::map<int, int> inv{{b.initial, a.initial}};
  std::deque<int> queue{a.initial};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    int t = m[s];
    if (a.is_final(s) != b.is_final(t)) return std::nullopt;
    if (a.enabled(s) != b.enabled(t)) return std::nullopt;
    for (const auto& e : a.delta.at(s)) {
      for (Symbol sym : e.guard.symbols()) {
        int t2 = *b.step(t, sym);
        auto [it, fresh] = m.emplace(e.to, t2);
        if (it->second != t2) return std::nullopt;
        auto [jt, fresh2] = inv.emplace(t2, e.to);
        if (jt->second != e.to) return std::nullopt;
        if (fresh) queue.push_back(e.to);
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------- export

namespace {

struct Cube {
  Symbol mask;  // constrained propositions
  Symbol value;
};

bool cube_inside(const Cube& c, const SymbolSet& g, int nprops) {
  Symbol full = nprops >= 32 ? ~Symbol{0} : ((Symbol{1} << nprops) - 1);
  Symbol free = full & ~c.mask;
  Symbol sub = free;
  for (;;) {
    if (!g.contains(c.value | sub)) return false;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return true;
}

}  // namespace

std::string format_guard(const SymbolSet& g, const Alphabet& ap) {
  int n = ap.size();
  if (g.empty()) return "false";
  if (g.count() == ap.num_symbols()) return "true";
  Symbol full = (Symbol{1} << n) - 1;
  std::vector<Cube> cubes;
  SymbolSet covered(ap.num_symbols());
  for (Symbol s : g.symbols()) {
    if (covered.contains(s)) continue;
    Cube c{full, s};
    for (int i = 0; i < n; ++i) {
      Cube wider{c.mask & ~(Symbol{1} << i), c.value & ~(Symbol{1} << i)};
      if (cube_inside(wider, g, n)) c = wider;
    }
    cubes.push_back(c);
    Symbol free = full & ~c.mask;
    Symbol sub = free;
    for (;;) {
      covered.insert(c.value | sub);
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  std::string out;
  for (std::size_t k = 0; k < cubes.size(); ++k) {
    if (k) out += " | ";
    std::string term;
    for (int i = 0; i < n; ++i) {
      if (!(cubes[k].mask & (Symbol{1} << i))) continue;
      if (!term.empty()) term += " & ";
      if (!(cubes[k].value & (Symbol{1} << i))) term += '!';
      term += ap.name(i);
    }
    out += term;
  }
  return out;
}

std::string to_dot(const Dfa& a, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  if (!a.delta.empty()) {
    out << "  __start [shape=point];\n";
    for (int s : a.states()) {
      out << "  " << s << (a.is_final(s) ? " [shape=doublecircle];\n" : ";\n");
    }
    out << "  __start -> " << a.initial << ";\n";
    for (const auto& [s, edges] : a.delta) {
      auto sorted = edges;
      std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) { return x.to < y.to; });
      for (const auto& e : sorted) {
        out << "  " << s << " -> " << e.to << " [label=\"" << format_guard(e.guard, a.ap) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string join_states(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string guard_symbols(const SymbolSet& g, const Alphabet& ap) {
  std::string out;
  for (Symbol s : g.symbols()) {
    if (!out.empty()) out += ' ';
    out += ap.format(s);
  }
  return out;
}

void dump_choices(std::ostream& out, const std::string& indent, const char* tag, const ChoiceSet& c,
                  const Alphabet& ap) {
  for (const auto& [s, g] : c) out << indent << "  " << tag << ' ' << s << ' ' << guard_symbols(g, ap) << '\n';
}

void dump_tree(std::ostream& out, const AnnotationTree* t, int depth, const Alphabet& ap) {
  if (!t) return;
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out << indent << "node " << to_string(t->op);
  if (t->op == TreeOp::Hold) out << " d=" << t->d;
  if (t->op == TreeOp::Within) out << " a=" << t->a << " b=" << t->b << " index=" << t->index;
  out << " I=" << join_states(t->I) << " F=" << join_states(t->F) << '\n';
  dump_choices(out, indent, "B", t->B, ap);
  dump_choices(out, indent, "L", t->L, ap);
  dump_choices(out, indent, "R", t->R, ap);
  dump_tree(out, t->left.get(), depth + 1, ap);
  dump_tree(out, t->right.get(), depth + 1, ap);
}

}  // namespace

std::string dump(const Dfa& a) {
  std::ostringstream out;
  out << "twtl-dfa " << kDumpVersion << '\n';
  out << "ap";
  for (const auto& n : a.ap.names()) out << ' ' << n;
  out << '\n';
  out << "states " << a.num_states() << '\n';
  out << "initial " << a.initial << '\n';
  out << "finals";
  for (int f : a.finals) out << ' ' << f;
  out << '\n';
  for (const auto& [s, edges] : a.delta) {
    out << "state " << s << '\n';
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) { return x.to < y.to; });
    for (const auto& e : sorted) out << "edge " << s << ' ' << e.to << ' ' << guard_symbols(e.guard, a.ap) << '\n';
  }
  if (a.tree) {
    out << "tree\n";
    dump_tree(out, a.tree.get(), 1, a.ap);
  }
  out << "end\n";
  return out.str();
}

namespace {

[[noreturn]] void dump_error(int line, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, "dump line " + std::to_string(line) + ": " + msg, line, 1);
}

std::set<int> parse_state_set(const std::string& text, int line) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') dump_error(line, "bad state set '" + text + "'");
  std::set<int> out;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

Dfa load_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  Dfa a;
  bool header = false;
  bool in_tree = false;
  bool done = false;
  struct Pending {
    std::shared_ptr<AnnotationTree> node;
    int depth;
  };
  std::vector<Pending> stack;
  std::shared_ptr<AnnotationTree> root;
  auto read_guard = [&](std::istringstream& ls) {
    SymbolSet g(a.num_symbols());
    std::string tok;
    while (ls >> tok) g.insert(a.ap.parse_symbol(tok));
    return g;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::size_t indent = line.find_first_not_of(' ');
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!header) {
      int v = 0;
      if (key != "twtl-dfa" || !(ls >> v)) dump_error(lineno, "missing 'twtl-dfa' header");
      if (v != kDumpVersion) dump_error(lineno, "unsupported dump version " + std::to_string(v));
      header = true;
      continue;
    }
    if (key == "end") {
      done = true;
      break;
    }
    if (in_tree) {
      if (key == "node") {
        auto n = std::make_shared<AnnotationTree>();
        std::string op;
        ls >> op;
        if (op == "hold") n->op = TreeOp::Hold;
        else if (op == "and") n->op = TreeOp::And;
        else if (op == "or") n->op = TreeOp::Or;
        else if (op == "concat") n->op = TreeOp::Concat;
        else if (op == "within") n->op = TreeOp::Within;
        else dump_error(lineno, "unknown tree operator '" + op + "'");
        std::string kv;
        while (ls >> kv) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) dump_error(lineno, "bad attribute '" + kv + "'");
          std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
          if (k == "d") n->d = std::stoi(v);
          else if (k == "a") n->a = std::stoi(v);
          else if (k == "b") n->b = std::stoi(v);
          else if (k == "index") n->index = std::stoi(v);
          else if (k == "I") n->I = parse_state_set(v, lineno);
          else if (k == "F") n->F = parse_state_set(v, lineno);
          else dump_error(lineno, "unknown attribute '" + k + "'");
        }
        int depth = static_cast<int>(indent / 2);
        while (!stack.empty() && stack.back().depth >= depth) stack.pop_back();
        if (stack.empty()) {
          if (root) dump_error(lineno, "second tree root");
          root = n;
        } else {
          auto& parent = stack.back().node;
          if (!parent->left) parent->left = n;
          else if (!parent->right) parent->right = n;
          else dump_error(lineno, "tree node with more than two children");
        }
        stack.push_back({n, depth});
      } else if (key == "B" || key == "L" || key == "R") {
        if (stack.empty()) dump_error(lineno, "choice set outside a node");
        int s = 0;
        ls >> s;
        auto g = read_guard(ls);
        auto& node = stack.back().node;
        (key == "B" ? node->B : key == "L" ? node->L : node->R)[s] = g;
      } else {
        dump_error(lineno, "unexpected '" + key + "' in tree");
      }
      continue;
    }
    if (key == "ap") {
      std::vector<std::string> names;
      std::string n;
      while (ls >> n) names.push_back(n);
      a.ap = Alphabet(names);
    } else if (key == "states") {
    } else if (key == "initial") {
      ls >> a.initial;
      a.add_state(a.initial);
    } else if (key == "finals") {
      int f;
      while (ls >> f) a.finals.insert(f);
    } else if (key == "state") {
      int s;
      ls >> s;
      a.add_state(s);
    } else if (key == "edge") {
      int s, t;
      if (!(ls >> s >> t)) dump_error(lineno, "bad edge");
      a.add_state(s);
      a.add_edge(s, t, read_guard(ls));
    } else if (key == "tree") {
      in_tree = true;
    } else {
      dump_error(lineno, "unknown record '" + key + "'");
    }
  }
  if (!done) dump_error(lineno, "missing 'end'");
  a.tree = root;
  return a;
}

}  // namespace twtl
