#include "twtl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "twtl/error.hpp"

namespace twtl {

Formula make_hold(int d, std::string prop, bool negated) {
  auto n = std::make_shared<Node>();
  n->op = Op::Hold;
  n->d = d;
  n->prop = std::move(prop);
  n->negated = negated;
  return n;
}

namespace {

Formula make_binary(Op op, Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

}  // namespace

Formula make_and(Formula l, Formula r) { return make_binary(Op::And, std::move(l), std::move(r)); }
Formula make_or(Formula l, Formula r) { return make_binary(Op::Or, std::move(l), std::move(r)); }
Formula make_concat(Formula l, Formula r) { return make_binary(Op::Concat, std::move(l), std::move(r)); }

Formula make_not(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->left = std::move(f);
  return n;
}

Formula make_within(Formula f, int a, int b) {
  if (a < 0 || a > b) {
    throw Error(ErrorKind::WithinBound,
                "within bounds [" + std::to_string(a) + "," + std::to_string(b) + "] need 0 <= a <= b");
  }
  auto n = std::make_shared<Node>();
  n->op = Op::Within;
  n->left = std::move(f);
  n->a = a;
  n->b = b;
  return n;
}

bool equal(const Formula& x, const Formula& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->op != y->op) return false;
  switch (x->op) {
    case Op::Hold:
      return x->d == y->d && x->prop == y->prop && x->negated == y->negated;
    case Op::Within:
      return x->a == y->a && x->b == y->b && equal(x->left, y->left);
    case Op::Not:
      return equal(x->left, y->left);
    default:
      return equal(x->left, y->left) && equal(x->right, y->right);
  }
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Hold, Not, And, Or, Dot, Implies, LBracket, RBracket, Caret, Comma, LParen, RParen, Int, Ident, True, End };

struct Token {
  Tok kind;
  std::string text;
  int value = 0;
  int line = 1;
  int col = 1;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Hold: return "'H^'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Dot: return "'.'";
    case Tok::Implies: return "'=>'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Caret: return "'^'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Int: return "integer";
    case Tok::Ident: return "proposition";
    case Tok::True: return "'true'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += get();
        if (digits.size() > 9) fail(t, "integer too large");
        t.kind = Tok::Int;
        t.text = digits;
        t.value = std::stoi(digits);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          id += get();
        }
        if (id == "H" && pos_ < src_.size() && src_[pos_] == '^') {
          get();
          t.kind = Tok::Hold;
        } else if (id == kTrue) {
          t.kind = Tok::True;
        } else {
          t.kind = Tok::Ident;
        }
        t.text = id;
      } else if (c == '=' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        get();
        get();
        t.kind = Tok::Implies;
      } else {
        switch (c) {
          case '!': t.kind = Tok::Not; break;
          case '&': t.kind = Tok::And; break;
          case '|': t.kind = Tok::Or; break;
          case '.': t.kind = Tok::Dot; break;
          case '[': t.kind = Tok::LBracket; break;
          case ']': t.kind = Tok::RBracket; break;
          case '^': t.kind = Tok::Caret; break;
          case ',': t.kind = Tok::Comma; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          default: fail(t, std::string("unexpected character '") + c + "'");
        }
        get();
      }
      out.push_back(t);
    }
  }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw Error(ErrorKind::Syntax,
                "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg, t.line,
                t.col);
  }

 private:
  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) get();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const Alphabet& ap) : toks_(std::move(toks)), ap_(ap) {}

  Formula run() {
    auto f = implication();
    expect(Tok::End);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k) {
    if (peek().kind != k) {
      Lexer::fail(peek(), std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    }
    return next();
  }

  Formula implication() {
    auto f = disjunction();
    while (accept(Tok::Implies)) f = make_or(make_not(f), disjunction());
    return f;
  }
  Formula disjunction() {
    auto f = conjunction();
    while (accept(Tok::Or)) f = make_or(f, conjunction());
    return f;
  }
  Formula conjunction() {
    auto f = concatenation();
    while (accept(Tok::And)) f = make_and(f, concatenation());
    return f;
  }
  Formula concatenation() {
    auto f = unary();
    while (accept(Tok::Dot)) f = make_concat(f, unary());
    return f;
  }
  Formula unary() {
    if (accept(Tok::Not)) return make_not(unary());
    return primary();
  }

  std::string proposition(const Token& t) {
    if (t.kind == Tok::True) return kTrue;
    if (!ap_.names().empty() && !ap_.contains(t.text)) {
      throw Error(ErrorKind::UnknownProposition,
                  "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) +
                      ": unknown proposition '" + t.text + "'",
                  t.line, t.col);
    }
    return t.text;
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Hold: {
        next();
        int d = expect(Tok::Int).value;
        bool neg = accept(Tok::Not);
        const Token& p = peek();
        if (p.kind != Tok::Ident && p.kind != Tok::True) {
          Lexer::fail(p, std::string("expected proposition after hold, found ") + describe(p.kind));
        }
        next();
        if (neg && p.kind == Tok::True) Lexer::fail(p, "negated 'true' under hold is never satisfiable");
        return make_hold(d, proposition(p), neg);
      }
      case Tok::LBracket: {
        next();
        auto child = implication();
        expect(Tok::RBracket);
        expect(Tok::Caret);
        expect(Tok::LBracket);
        const Token& at = expect(Tok::Int);
        expect(Tok::Comma);
        const Token& bt = expect(Tok::Int);
        expect(Tok::RBracket);
        if (at.value > bt.value) {
          throw Error(ErrorKind::WithinBound,
                      "line " + std::to_string(at.line) + ", column " + std::to_string(at.col) +
                          ": within bounds [" + at.text + "," + bt.text + "] need a <= b",
                      at.line, at.col);
        }
        return make_within(child, at.value, bt.value);
      }
      case Tok::LParen: {
        next();
        auto f = implication();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Ident:
      case Tok::True:
        next();
        return make_hold(0, proposition(t), false);
      default:
        Lexer::fail(t, std::string("expected formula, found ") + describe(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Alphabet& ap_;
};

int precedence(const Formula& f) {
  switch (f->op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Concat: return 3;
    case Op::Not: return 4;
    default: return 5;
  }
}

void format_into(const Formula& f, std::string& out);

void format_operand(const Formula& f, int min_prec, std::string& out) {
  if (precedence(f) < min_prec) {
    out += '(';
    format_into(f, out);
    out += ')';
  } else {
    format_into(f, out);
  }
}

void format_into(const Formula& f, std::string& out) {
  switch (f->op) {
    case Op::Hold:
      if (f->negated) {
        out += "H^" + std::to_string(f->d) + " !" + f->prop;
      } else if (f->d == 0) {
        out += f->prop;
      } else {
        out += "H^" + std::to_string(f->d) + " " + f->prop;
      }
      return;
    case Op::Within:
      out += '[';
      format_into(f->left, out);
      out += "]^[" + std::to_string(f->a) + "," + std::to_string(f->b) + "]";
      return;
    case Op::Not:
      out += '!';
      format_operand(f->left, 4, out);
      return;
    default: {
      int p = precedence(f);
      const char* sym = f->op == Op::Or ? " | " : f->op == Op::And ? " & " : " . ";
      format_operand(f->left, p, out);
      out += sym;
      format_operand(f->right, p + 1, out);
    }
  }
}

void collect_props(const Formula& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->op == Op::Hold) {
    if (!f->is_true()) out.insert(f->prop);
    return;
  }
  collect_props(f->left, out);
  collect_props(f->right, out);
}

void collect_withins(const Formula& f, std::vector<const Node*>& out) {
  if (!f) return;
  collect_withins(f->left, out);
  collect_withins(f->right, out);
  if (f->op == Op::Within) out.push_back(f.get());
}

}  // namespace

Formula parse(std::string_view text, const Alphabet& ap) {
  Lexer lex(text);
  Parser p(lex.run(), ap);
  return p.run();
}

std::string format(const Formula& f) {
  std::string out;
  format_into(f, out);
  return out;
}

std::vector<std::string> propositions(const Formula& f) {
  std::set<std::string> s;
  collect_props(f, s);
  return {s.begin(), s.end()};
}

Alphabet alphabet_of(const Formula& f, int max_props) { return Alphabet(propositions(f), max_props); }

// ---------------------------------------------------------------- measures

int time_bound(const Formula& f) {
  switch (f->op) {
    case Op::Hold: return f->d;
    case Op::And:
    case Op::Or: return std::max(time_bound(f->left), time_bound(f->right));
    case Op::Not: return time_bound(f->left);
    case Op::Concat: return time_bound(f->left) + time_bound(f->right) + 1;
    case Op::Within: return f->b;
  }
  return 0;
}

int min_duration(const Formula& f) {
  switch (f->op) {
    case Op::Hold: return f->d;
    case Op::And: return std::max(min_duration(f->left), min_duration(f->right));
    case Op::Or: return std::min(min_duration(f->left), min_duration(f->right));
    case Op::Not: return 0;
    case Op::Concat: return min_duration(f->left) + min_duration(f->right) + 1;
    case Op::Within: return f->a + min_duration(f->left);
  }
  return 0;
}

bool is_feasible(const Formula& f) {
  if (!f) return true;
  if (f->op == Op::Within && f->b - f->a < min_duration(f->left)) return false;
  return is_feasible(f->left) && is_feasible(f->right);
}

bool is_primitive(const Formula& f) { return within_count(f) == 0; }

bool is_negation_normal(const Formula& f) {
  if (!f) return true;
  if (f->op == Op::Not) return false;
  return is_negation_normal(f->left) && is_negation_normal(f->right);
}

namespace {

bool has_or(const Formula& f) {
  if (!f) return false;
  if (f->op == Op::Or) return true;
  return has_or(f->left) || has_or(f->right);
}

}  // namespace

bool is_dfw(const Formula& f) {
  if (!f) return true;
  if (f->op == Op::Within) return !has_or(f->left);
  return is_dfw(f->left) && is_dfw(f->right);
}

int within_count(const Formula& f) { return static_cast<int>(within_index(f).size()); }

std::vector<const Node*> within_index(const Formula& f) {
  std::vector<const Node*> out;
  collect_withins(f, out);
  return out;
}

// ---------------------------------------------------------------- normalization

namespace {

Formula negate(const Formula& f);

Formula push(const Formula& f) {
  switch (f->op) {
    case Op::Hold: return f;
    case Op::Not: return negate(f->left);
    case Op::Within: return make_within(push(f->left), f->a, f->b);
    case Op::And: return make_and(push(f->left), push(f->right));
    case Op::Or: return make_or(push(f->left), push(f->right));
    case Op::Concat: return make_concat(push(f->left), push(f->right));
  }
  return f;
}

Formula negate(const Formula& f) {
  switch (f->op) {
    case Op::Not: return push(f->left);
    case Op::And: return make_or(negate(f->left), negate(f->right));
    case Op::Or: return make_and(negate(f->left), negate(f->right));
    case Op::Hold:
      if (f->is_true()) {
        throw Error(ErrorKind::Normalization, "cannot negate '" + format(f) + "': the result is never satisfiable");
      }
      if (f->d == 0) return make_hold(0, f->prop, !f->negated);
      return make_within(make_hold(0, f->prop, !f->negated), 0, f->d);
    case Op::Concat:
      throw Error(ErrorKind::Normalization, "no rewrite for negated concatenation '" + format(f) + "'");
    case Op::Within:
      throw Error(ErrorKind::Normalization, "no rewrite for negated within '" + format(f) + "'");
  }
  return f;
}

// A formula whose satisfying intervals all end exactly time_bound steps after they start.
bool rigid(const Formula& f) {
  switch (f->op) {
    case Op::Hold: return true;
    case Op::And:
    case Op::Concat: return rigid(f->left) && rigid(f->right);
    case Op::Or: return rigid(f->left) && rigid(f->right) && time_bound(f->left) == time_bound(f->right);
    default: return false;
  }
}

std::vector<Formula> disjuncts(const Formula& f) {
  switch (f->op) {
    case Op::Hold: return {f};
    case Op::Or: {
      auto l = disjuncts(f->left);
      auto r = disjuncts(f->right);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case Op::And: {
      auto l = disjuncts(f->left);
      auto r = disjuncts(f->right);
      std::vector<Formula> out;
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(make_and(x, y));
      return out;
    }
    case Op::Concat: {
      auto l = disjuncts(f->left);
      if (l.size() > 1) {
        if (!rigid(f->left)) {
          throw Error(ErrorKind::Normalization,
                      "cannot move the disjunction in '" + format(f->left) +
                          "' out of a within: its operands may finish at different times");
        }
      }
      auto r = disjuncts(f->right);
      std::vector<Formula> out;
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(make_concat(x, y));
      return out;
    }
    case Op::Within: {
      std::vector<Formula> out;
      for (const auto& c : disjuncts(f->left)) out.push_back(make_within(c, f->a, f->b));
      return out;
    }
    case Op::Not:
      throw Error(ErrorKind::Normalization, "formula is not in negation normal form: '" + format(f) + "'");
  }
  return {f};
}

Formula join_or(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = make_or(out, fs[i]);
  return out;
}

Formula dfw(const Formula& f) {
  switch (f->op) {
    case Op::Hold: return f;
    case Op::Within: return join_or(disjuncts(f));
    case Op::And: return make_and(dfw(f->left), dfw(f->right));
    case Op::Or: return make_or(dfw(f->left), dfw(f->right));
    case Op::Concat: return make_concat(dfw(f->left), dfw(f->right));
    case Op::Not:
      throw Error(ErrorKind::Normalization, "formula is not in negation normal form: '" + format(f) + "'");
  }
  return f;
}

}  // namespace

Formula push_negation(const Formula& f) { return push(f); }

Formula to_dfw(const Formula& f) {
  if (is_dfw(f)) return f;
  return dfw(f);
}

Formula normalize(const Formula& f) { return to_dfw(push_negation(f)); }

// ---------------------------------------------------------------- relaxation

std::string format_tau(Tau t) {
  if (t == kNegInf) return "-inf";
  if (t == kPosInf) return "inf";
  return std::to_string(t);
}

std::string format_tau(const RelaxationVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_tau(v[i]);
  }
  return out + ")";
}

namespace {

Formula relax_rec(const Formula& f, const RelaxationVector& tau, std::size_t& next) {
  switch (f->op) {
    case Op::Hold: return f;
    case Op::Not: return make_not(relax_rec(f->left, tau, next));
    case Op::Within: {
      auto child = relax_rec(f->left, tau, next);
      Tau t = tau[next++];
      long long b = static_cast<long long>(f->b) + t;
      if (b < f->a || b - f->a < min_duration(child)) {
        throw Error(ErrorKind::InfeasibleRelaxation,
                    "relaxation " + std::to_string(t) + " of within " + std::to_string(next - 1) + " leaves window [" +
                        std::to_string(f->a) + "," + std::to_string(b) + "] too short for '" + format(child) + "'");
      }
      return make_within(child, f->a, static_cast<int>(b));
    }
    default: {
      auto l = relax_rec(f->left, tau, next);
      auto r = relax_rec(f->right, tau, next);
      return make_binary(f->op, l, r);
    }
  }
}

}  // namespace

Formula relax(const Formula& f, const RelaxationVector& tau) {
  if (static_cast<int>(tau.size()) != within_count(f)) {
    throw Error(ErrorKind::InvalidInput, "relaxation vector has " + std::to_string(tau.size()) + " entries, formula has " +
                                             std::to_string(within_count(f)) + " within operators");
  }
  for (Tau t : tau) {
    if (t == kNegInf || t == kPosInf) throw Error(ErrorKind::InvalidInput, "relaxation entries must be finite");
  }
  std::size_t next = 0;
  return relax_rec(f, tau, next);
}

// ---------------------------------------------------------------- oracle

PrefixOracle::PrefixOracle(const Formula& f, const Alphabet& ap, int max_length)
    : formula_(f), cap_(std::max(max_length, 1)) {
  std::function<int(const Formula&)> add = [&](const Formula& n) -> int {
    Item it{n.get()};
    if (n->left) it.left = add(n->left);
    if (n->right) it.right = add(n->right);
    if (n->op == Op::Hold && !n->is_true()) {
      it.prop = ap.index(n->prop);
      if (it.prop < 0) throw Error(ErrorKind::UnknownProposition, "unknown proposition '" + n->prop + "'");
    }
    items_.push_back(it);
    return static_cast<int>(items_.size()) - 1;
  };
  add(f);
  table_.assign(items_.size() * cap_ * cap_, 0);
}

void PrefixOracle::push(Symbol s) {
  if (length() >= cap_) throw Error(ErrorKind::InvalidInput, "word longer than oracle capacity");
  word_.push_back(s);
  int t2 = length() - 1;
  compute_column(t2);
  bool prev = accepted_.empty() ? false : accepted_.back();
  accepted_.push_back(prev || cell(static_cast<int>(items_.size()) - 1, 0, t2));
}

void PrefixOracle::pop() {
  word_.pop_back();
  accepted_.pop_back();
}

bool PrefixOracle::holds(int t1, int t2) const {
  if (t1 < 0 || t1 > t2 || t2 >= length()) return false;
  return cell(static_cast<int>(items_.size()) - 1, t1, t2);
}

void PrefixOracle::compute_column(int t2) {
  for (std::size_t k = 0; k < items_.size(); ++k) {
    const Item& it = items_[k];
    const Node& n = *it.node;
    for (int t1 = 0; t1 <= t2; ++t1) {
      bool v = false;
      switch (n.op) {
        case Op::Hold:
          if (t2 - t1 >= n.d) {
            v = true;
            for (int t = t1; t <= t1 + n.d && v; ++t) {
              bool has = it.prop < 0 ? true : (word_[t] >> it.prop) & 1U;
              v = n.negated ? !has : has;
            }
          }
          break;
        case Op::Not: v = !cell(it.left, t1, t2); break;
        case Op::And: v = cell(it.left, t1, t2) && cell(it.right, t1, t2); break;
        case Op::Or: v = cell(it.left, t1, t2) || cell(it.right, t1, t2); break;
        case Op::Concat:
          for (int t = t1; t < t2; ++t) {
            if (cell(it.left, t1, t)) {
              v = cell(it.right, t + 1, t2);
              break;
            }
          }
          break;
        case Op::Within: {
          long long e = std::min<long long>(t2, static_cast<long long>(t1) + n.b);
          for (long long t = t1 + static_cast<long long>(n.a); t <= e && !v; ++t) {
            v = cell(it.left, static_cast<int>(t), static_cast<int>(e));
          }
          break;
        }
      }
      table_[(k * cap_ + t1) * cap_ + t2] = v ? 1 : 0;
    }
  }
}

bool evaluate(const Word& w, const Formula& f, const Alphabet& ap) {
  if (w.empty()) return false;
  PrefixOracle o(f, ap, static_cast<int>(w.size()));
  for (Symbol s : w) {
    o.push(s);
    if (o.satisfied()) return true;
  }
  return false;
}

bool evaluate_interval(const Word& w, const Formula& f, const Alphabet& ap, int t1, int t2) {
  if (w.empty()) return false;
  PrefixOracle o(f, ap, static_cast<int>(w.size()));
  for (Symbol s : w) o.push(s);
  return o.holds(t1, t2);
}

}  // namespace twtl
