#include "twtl/relaxation.hpp"

#include <algorithm>

#include "twtl/error.hpp"
#include "twtl/translate.hpp"

namespace twtl {

Monitor::Monitor(const Formula& f, const Alphabet& ap)
    : Monitor(std::make_shared<const Dfa>(translate(f, true, ap))) {}

Monitor::Monitor(std::shared_ptr<const Dfa> a_inf) : dfa_(std::move(a_inf)) {
  if (!dfa_->tree) throw Error(ErrorKind::InvalidInput, "monitor needs an annotated automaton");
  reset();
}

void Monitor::reset() {
  withins_.assign(tree_withins(dfa_->tree).size(), WithinStatus{});
  trace_.clear();
  state_ = dfa_->initial;
  consumed_ = 0;
  status_ = dfa_->is_final(state_) ? Status::Satisfied : Status::Ongoing;
  update(dfa_->tree.get(), -1, 0, std::nullopt);
  trace_.push_back({state_, withins_});
}

Monitor::Status Monitor::step(Symbol s) {
  if (status_ != Status::Ongoing) return status_;
  auto next = dfa_->step(state_, s);
  if (!next) {
    status_ = Status::Violated;
    return status_;
  }
  int prev = state_;
  state_ = *next;
  ++consumed_;
  update(dfa_->tree.get(), prev, s, std::nullopt);
  trace_.push_back({state_, withins_});
  if (dfa_->is_final(state_)) status_ = Status::Satisfied;
  return status_;
}

void Monitor::update(const AnnotationTree* t, int prev, Symbol sym, const std::optional<ChoiceSet>& c) {
  if (!t) return;
  if (t->op == TreeOp::Within) {
    auto& w = withins_[t->index];
    if (t->I.count(state_)) w.ongoing = true;
    if (t->F.count(state_)) {
      bool allowed = !c.has_value();
      if (c) {
        auto it = c->find(prev);
        allowed = it != c->end() && it->second.contains(sym);
      }
      if (allowed) {
        w.ongoing = false;
        w.done = true;
      }
    }
    if (w.ongoing) ++w.steps;
    update(t->left.get(), prev, sym, c);
    return;
  }
  if (t->op == TreeOp::Concat) {
    update(t->left.get(), prev, sym, std::nullopt);
    update(t->right.get(), prev, sym, c);
    return;
  }
  if (t->op == TreeOp::Or) {
    auto side = [&](const ChoiceSet& own) {
      ChoiceSet out = own;
      for (const auto& [s, g] : t->B) {
        auto it = out.find(s);
        if (it == out.end()) out.emplace(s, g);
        else it->second |= g;
      }
      if (c) {
        ChoiceSet inter;
        for (const auto& [s, g] : out) {
          auto it = c->find(s);
          if (it == c->end()) continue;
          auto both = g & it->second;
          if (!both.empty()) inter.emplace(s, both);
        }
        out = std::move(inter);
      }
      return out;
    };
    update(t->left.get(), prev, sym, side(t->L));
    update(t->right.get(), prev, sym, side(t->R));
    return;
  }
  update(t->left.get(), prev, sym, c);
  update(t->right.get(), prev, sym, c);
}

namespace {

struct Eval {
  Tau star;
  RelaxationVector tau;
};

bool has_within(const AnnotationTree* t) {
  if (!t) return false;
  return t->op == TreeOp::Within || has_within(t->left.get()) || has_within(t->right.get());
}

void clear(RelaxationVector& v) { std::fill(v.begin(), v.end(), kNegInf); }

Eval eval(const AnnotationTree* t, const std::vector<WithinStatus>& st) {
  if (!t || !has_within(t)) return {kNegInf, {}};
  if (t->op == TreeOp::Within) {
    auto ch = eval(t->left.get(), st);
    const auto& w = st[t->index];
    if (w.done) {
      Tau own = w.steps - t->b;
      ch.tau.push_back(own);
      return {std::max(ch.star, own), ch.tau};
    }
    ch.tau.push_back(kNegInf);
    return {kNegInf, ch.tau};
  }
  auto l = eval(t->left.get(), st);
  auto r = eval(t->right.get(), st);
  Tau star;
  if (t->op == TreeOp::Or) {
    if (l.star != kNegInf && r.star != kNegInf) {
      if (r.star < l.star) {
        star = r.star;
        clear(l.tau);
      } else {
        star = l.star;
        clear(r.tau);
      }
    } else {
      star = std::max(l.star, r.star);
    }
  } else {
    star = std::max(l.star, r.star);
  }
  l.tau.insert(l.tau.end(), r.tau.begin(), r.tau.end());
  return {star, l.tau};
}

}  // namespace

RelaxationResult Monitor::result() const {
  RelaxationResult r;
  r.satisfied = status_ == Status::Satisfied;
  auto withins = tree_withins(dfa_->tree);
  if (withins.empty()) return r;
  auto e = eval(dfa_->tree.get(), withins_);
  r.tau_star = e.star;
  r.tau = e.tau;
  for (const auto* w : withins) {
    const auto& s = withins_[w->index];
    r.tight.push_back(s.done ? s.steps - w->b : kNegInf);
  }
  return r;
}

RelaxationResult temporal_relaxation(const Word& o, const std::shared_ptr<const Dfa>& a_inf) {
  Monitor m(a_inf);
  for (std::size_t i = 0; i < o.size(); ++i) {
    auto s = m.step(o[i]);
    if (s == Monitor::Status::Satisfied) break;
    if (s == Monitor::Status::Violated) {
      throw Error(ErrorKind::BlockedRun, "no relaxation accepts the word: blocked at symbol " + std::to_string(i) +
                                             " (" + a_inf->ap.format(o[i]) + ")");
    }
  }
  return m.result();
}

RelaxationResult temporal_relaxation(const Word& o, const Formula& f, const Alphabet& ap) {
  return temporal_relaxation(o, std::make_shared<const Dfa>(translate(f, true, ap)));
}

}  // namespace twtl
