#include "twtl/solve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <limits>
#include <thread>

#include "twtl/error.hpp"
#include "twtl/translate.hpp"

namespace twtl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Word consumed_word(const TransitionSystem& ts, const std::vector<int>& run, ProductConvention c) {
  Word w = ts.word(run);
  if (c == ProductConvention::SkipInitial && !w.empty()) w.erase(w.begin());
  return w;
}

}  // namespace

SynthesisResult synthesize(const TransitionSystem& ts_in, const Formula& f, const SynthesisOptions& opt) {
  auto start = Clock::now();
  auto ap = ts_in.ap.merged(alphabet_of(f));
  auto ts = ts_in.with_alphabet(ap);
  auto a_inf = std::make_shared<const Dfa>(translate(f, true, ap));
  auto p_inf = product(ts, *a_inf, opt.convention);
  SynthesisResult r;
  r.stats.ts_states = ts.num_states();
  r.stats.ts_transitions = ts.num_transitions();
  r.stats.dfa_states = a_inf->num_states();
  r.stats.dfa_transitions = a_inf->num_transitions();
  r.stats.product_states = p_inf.num_states();
  r.stats.product_transitions = p_inf.num_transitions();
  auto witness = shortest_accepting_path(p_inf);
  if (witness.empty()) throw Error(ErrorKind::NoPolicy, "no run satisfies any relaxation of the formula");

  auto withins = within_index(f);
  if (withins.empty()) {
    r.run = p_inf.project(witness);
    r.tau_star = kNegInf;
  } else {
    int max_b = 0;
    for (const auto* w : withins) max_b = std::max(max_b, w->b);
    // A run accepted by the annotated automaton with n symbols satisfies the
    // relaxation whose windows all end n steps after they open.
    int lo = -max_b - 1;
    int hi = static_cast<int>(witness.size());
    for (int t = lo; t <= hi && r.run.empty(); ++t) {
      ++r.stats.levels;
      RelaxationVector tau(withins.size(), t);
      auto p = product(ts, translate_relaxed(f, tau, ap), opt.convention);
      auto path = shortest_accepting_path(p);
      if (!path.empty()) {
        r.run = p.project(path);
        r.tau_star = t == lo ? kNegInf : t;
      }
    }
    if (r.run.empty()) throw Error(ErrorKind::NoPolicy, "relaxation search exhausted without a policy");
  }
  r.word = consumed_word(ts, r.run, opt.convention);
  r.relaxation = temporal_relaxation(r.word, a_inf);
  r.stats.millis = elapsed_ms(start);
  return r;
}

VerificationResult verify(const TransitionSystem& ts_in, const Formula& f, ProductConvention convention) {
  auto ap = ts_in.ap.merged(alphabet_of(f));
  auto ts = ts_in.with_alphabet(ap);
  Dfa a = translate(f, true, ap);
  int trap = a.states().back() + 1;
  for (int s : a.states()) {
    if (a.is_final(s)) continue;
    a.add_edge(s, trap, a.enabled(s).complement());
  }
  a.add_edge(trap, trap, SymbolSet::all(a.num_symbols()));
  auto p = product(ts, a, convention);
  VerificationResult r;
  r.product_states = p.num_states();
  r.product_transitions = p.num_transitions();
  if (p.initial < 0) {
    r.counterexample = {ts.initial};
    r.counterexample_word = consumed_word(ts, r.counterexample, convention);
    return r;
  }
  // States from which some run avoids acceptance forever, or stops without it.
  int n = p.num_states();
  std::vector<bool> live(n);
  for (int u = 0; u < n; ++u) live[u] = !p.final[u];
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      if (!live[u] || p.succ[u].empty()) continue;
      if (std::none_of(p.succ[u].begin(), p.succ[u].end(), [&](int v) { return live[v]; })) {
        live[u] = false;
        changed = true;
      }
    }
  }
  r.holds = !live[p.initial];
  if (r.holds) return r;
  std::vector<int> path{p.initial};
  std::vector<int> seen(n, -1);
  int cur = p.initial;
  seen[cur] = 0;
  while (!p.succ[cur].empty()) {
    int best = -1;
    for (int v : p.succ[cur]) {
      if (live[v] && (best < 0 || p.states[v] < p.states[best])) best = v;
    }
    path.push_back(best);
    if (seen[best] >= 0) break;
    seen[best] = static_cast<int>(path.size()) - 1;
    cur = best;
  }
  r.counterexample = p.project(path);
  r.counterexample_word = consumed_word(ts, r.counterexample, convention);
  return r;
}

Formula with_deadlines(const Formula& f, const std::vector<int>& deadlines) {
  auto withins = within_index(f);
  if (withins.size() != deadlines.size()) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(withins.size()) + " deadlines");
  }
  RelaxationVector tau;
  for (std::size_t i = 0; i < withins.size(); ++i) tau.push_back(deadlines[i] - withins[i]->b);
  return relax(f, tau);
}

LearnResult learn_deadlines(const std::vector<Word>& pos, const std::vector<Word>& neg, const Formula& tmpl,
                            const Alphabet& ap_in, int jobs) {
  if (pos.empty()) throw Error(ErrorKind::EmptyPositiveSet, "learning needs at least one positive trace");
  auto ap = ap_in.size() ? ap_in : alphabet_of(tmpl);
  auto a_inf = std::make_shared<const Dfa>(translate(tmpl, true, ap));
  auto withins = within_index(tmpl);
  std::size_t m = withins.size();

  std::vector<const Word*> traces;
  for (const auto& w : pos) traces.push_back(&w);
  for (const auto& w : neg) traces.push_back(&w);
  std::vector<std::vector<int>> tight(traces.size());
  auto work = [&](std::size_t i) {
    std::vector<int> d(m, kPosInf);
    Monitor mon(a_inf);
    for (Symbol s : *traces[i]) {
      if (mon.step(s) != Monitor::Status::Ongoing) break;
    }
    if (mon.status() == Monitor::Status::Satisfied) {
      auto res = mon.result();
      for (std::size_t k = 0; k < m; ++k) {
        d[k] = res.tau[k] == kNegInf ? kNegInf : res.tau[k] + withins[k]->b;
      }
    }
    tight[i] = d;
  };
  jobs = std::max(1, jobs);
  if (jobs == 1 || traces.size() < 2) {
    for (std::size_t i = 0; i < traces.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < traces.size(); i = next++) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  LearnResult r;
  r.positive_deadlines.assign(tight.begin(), tight.begin() + static_cast<long>(pos.size()));
  r.negative_deadlines.assign(tight.begin() + static_cast<long>(pos.size()), tight.end());
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<int> candidates;
    for (const auto& d : tight) {
      if (d[k] != kNegInf && d[k] != kPosInf) candidates.push_back(d[k]);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) candidates.push_back(withins[k]->b);
    const LearnRow* best = nullptr;
    std::size_t first = r.rows.size();
    for (int v : candidates) {
      LearnRow row;
      row.within = static_cast<int>(k);
      row.value = v;
      for (std::size_t i = 0; i < neg.size(); ++i) {
        if (r.negative_deadlines[i][k] <= v) row.false_positives.push_back(static_cast<int>(i));
      }
      for (std::size_t i = 0; i < pos.size(); ++i) {
        if (r.positive_deadlines[i][k] > v) row.false_negatives.push_back(static_cast<int>(i));
      }
      r.rows.push_back(row);
    }
    for (std::size_t i = first; i < r.rows.size(); ++i) {
      const auto& row = r.rows[i];
      if (!best || row.count() < best->count() ||
          (row.count() == best->count() && row.false_negatives.size() < best->false_negatives.size())) {
        best = &row;
      }
    }
    r.deadlines.push_back(best->value);
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (r.deadlines[k] < withins[k]->a) r.deadlines[k] = withins[k]->a;
  }
  try {
    r.formula = with_deadlines(tmpl, r.deadlines);
  } catch (const Error&) {
    r.formula = nullptr;
  }
  return r;
}

int misclassification(const std::vector<Word>& pos, const std::vector<Word>& neg, const Formula& f,
                      const Alphabet& ap_in) {
  auto ap = ap_in.size() ? ap_in : alphabet_of(f);
  int n = 0;
  for (const auto& w : pos) n += evaluate(w, f, ap) ? 0 : 1;
  for (const auto& w : neg) n += evaluate(w, f, ap) ? 1 : 0;
  return n;
}

Tau temporal_relaxation_norm(const RelaxationVector& tau) {
  Tau best = kNegInf;
  for (Tau t : tau) {
    if (t != kNegInf) best = std::max(best, t);
  }
  return best;
}

double objective(ObjectiveKind kind, long long x, long long y, const RelaxationVector& tau) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case ObjectiveKind::Verification:
      return y == 0 ? 0.0 : 1.0;
    case ObjectiveKind::Synthesis: {
      if (x <= 0) return inf;
      Tau t = temporal_relaxation_norm(tau);
      if (t == kNegInf) return -inf;
      if (t == kPosInf) return inf;
      return static_cast<double>(t);
    }
    case ObjectiveKind::Learning:
      return static_cast<double>(x + y);
  }
  return inf;
}

}  // namespace twtl
