#include "twtl/system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "twtl/error.hpp"
#include "twtl/translate.hpp"

namespace twtl {

int WeightedGraph::index(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

[[noreturn]] void ts_error(int line, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line) + ": " + msg, line, 1);
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  WeightedGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::string initial;
  int initial_line = 0;
  auto node = [&](const std::string& name, int l) {
    int i = g.index(name);
    if (i < 0) ts_error(l, "unknown state '" + name + "'");
    return i;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "state") {
      std::string name;
      if (!(ls >> name)) ts_error(lineno, "state needs a name");
      if (g.index(name) >= 0) ts_error(lineno, "duplicate state '" + name + "'");
      std::vector<std::string> props;
      std::string p;
      while (ls >> p) {
        if (!is_identifier(p)) ts_error(lineno, "invalid proposition '" + p + "'");
        props.push_back(p);
      }
      g.names.push_back(name);
      g.props.push_back(props);
    } else if (key == "initial") {
      if (!(ls >> initial)) ts_error(lineno, "initial needs a state name");
      initial_line = lineno;
    } else if (key == "edge") {
      std::string u, v, extra;
      long long w = 0;
      if (!(ls >> u >> v >> w)) ts_error(lineno, "edge needs two states and a weight");
      if (w < 1) ts_error(lineno, "edge weight must be positive");
      if (w > 1'000'000) ts_error(lineno, "edge weight too large");
      bool directed = false;
      if (ls >> extra) {
        if (extra != "directed") ts_error(lineno, "unexpected '" + extra + "' after edge weight");
        directed = true;
      }
      g.edges.push_back({node(u, lineno), node(v, lineno), static_cast<int>(w), directed});
    } else if (key == "stay") {
      std::string what;
      if (!(ls >> what) || what != "all") ts_error(lineno, "expected 'stay all'");
      g.stay_everywhere = true;
    } else {
      ts_error(lineno, "unknown record '" + key + "'");
    }
  }
  if (g.names.empty()) ts_error(lineno, "no states");
  if (initial.empty()) {
    g.initial = 0;
  } else {
    g.initial = node(initial, initial_line);
  }
  return g;
}

std::size_t TransitionSystem::num_transitions() const {
  std::size_t n = 0;
  for (const auto& s : succ) n += s.size();
  return n;
}

int TransitionSystem::add_state(std::string name, Symbol label) {
  names.push_back(std::move(name));
  labels.push_back(label);
  succ.emplace_back();
  return num_states() - 1;
}

void TransitionSystem::add_transition(int u, int v) {
  auto& out = succ[u];
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) out.insert(it, v);
}

TransitionSystem TransitionSystem::with_alphabet(const Alphabet& target) const {
  for (const auto& n : ap.names()) {
    if (!target.contains(n)) throw Error(ErrorKind::AlphabetMismatch, "proposition '" + n + "' missing from alphabet");
  }
  TransitionSystem out = *this;
  out.ap = target;
  for (auto& l : out.labels) l = target.translate(l, ap);
  return out;
}

Word TransitionSystem::word(const std::vector<int>& run) const {
  Word w;
  w.reserve(run.size());
  for (int x : run) w.push_back(labels[x]);
  return w;
}

TransitionSystem expand_graph(const WeightedGraph& g, const Alphabet& ap_in) {
  std::vector<std::string> all;
  for (const auto& p : g.props) all.insert(all.end(), p.begin(), p.end());
  Alphabet ap = ap_in.size() ? ap_in.merged(Alphabet(all)) : Alphabet(all);
  TransitionSystem ts;
  ts.ap = ap;
  for (std::size_t i = 0; i < g.names.size(); ++i) ts.add_state(g.names[i], ap.symbol(g.props[i]));
  ts.initial = g.initial;
  auto chain = [&](int u, int v, int w) {
    int prev = u;
    for (int k = 1; k < w; ++k) {
      int mid = ts.add_state(g.names[u] + "~" + g.names[v] + "/" + std::to_string(k), 0);
      ts.add_transition(prev, mid);
      prev = mid;
    }
    ts.add_transition(prev, v);
  };
  for (const auto& e : g.edges) {
    if (e.weight < 1) throw Error(ErrorKind::InvalidInput, "edge weight must be positive");
    chain(e.u, e.v, e.weight);
    if (!e.directed && e.u != e.v) chain(e.v, e.u, e.weight);
  }
  if (g.stay_everywhere) {
    for (int x = 0; x < ts.num_states(); ++x) ts.add_transition(x, x);
  }
  return ts;
}

// ---------------------------------------------------------------- product

std::size_t ProductAutomaton::num_transitions() const {
  std::size_t n = 0;
  for (const auto& s : succ) n += s.size();
  return n;
}

bool ProductAutomaton::any_final() const { return std::find(final.begin(), final.end(), true) != final.end(); }

std::vector<int> ProductAutomaton::project(const std::vector<int>& path) const {
  std::vector<int> out;
  out.reserve(path.size());
  for (int p : path) out.push_back(states[p].first);
  return out;
}

ProductAutomaton product(const TransitionSystem& ts, const Dfa& a, ProductConvention convention) {
  if (ts.ap != a.ap) {
    throw Error(ErrorKind::AlphabetMismatch, "transition system and automaton use different propositions");
  }
  ProductAutomaton p;
  p.convention = convention;
  std::map<std::pair<int, int>, int> ids;
  std::deque<int> queue;
  auto intern = [&](int x, int s) {
    auto [it, fresh] = ids.emplace(std::make_pair(x, s), p.num_states());
    if (fresh) {
      p.states.push_back({x, s});
      p.succ.emplace_back();
      p.final.push_back(a.is_final(s));
      queue.push_back(it->second);
    }
    return it->second;
  };
  if (convention == ProductConvention::ConsumeInitial) {
    auto s = a.step(a.initial, ts.labels[ts.initial]);
    if (!s) return p;
    p.initial = intern(ts.initial, *s);
  } else {
    p.initial = intern(ts.initial, a.initial);
  }
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto [x, s] = p.states[id];
    std::vector<int> out;
    for (int x2 : ts.succ[x]) {
      auto s2 = a.step(s, ts.labels[x2]);
      if (!s2) continue;
      out.push_back(intern(x2, *s2));
    }
    p.succ[id] = std::move(out);
  }
  return p;
}

std::vector<int> shortest_accepting_path(const ProductAutomaton& p) {
  if (p.initial < 0) return {};
  int n = p.num_states();
  std::vector<std::vector<int>> pred(n);
  for (int u = 0; u < n; ++u)
    for (int v : p.succ[u]) pred[v].push_back(u);
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int u = 0; u < n; ++u) {
    if (p.final[u]) {
      dist[u] = 0;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : pred[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  if (dist[p.initial] < 0) return {};
  std::vector<int> path{p.initial};
  int cur = p.initial;
  while (dist[cur] > 0) {
    int best = -1;
    for (int v : p.succ[cur]) {
      if (dist[v] != dist[cur] - 1) continue;
      if (best < 0 || p.states[v] < p.states[best]) best = v;
    }
    path.push_back(best);
    cur = best;
  }
  return path;
}

bool exists_relaxed_policy(const TransitionSystem& ts, const Formula& f) {
  auto ap = ts.ap.merged(alphabet_of(f));
  auto a = translate(f, true, ap);
  auto p = product(ts.with_alphabet(ap), a);
  return !shortest_accepting_path(p).empty();
}

}  // namespace twtl
