#pragma once

#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twtl/alphabet.hpp"

namespace twtl {

enum class Op { Hold, And, Or, Not, Concat, Within };

struct Node;
using Formula = std::shared_ptr<const Node>;

inline constexpr const char* kTrue = "true";

struct Node {
  Op op = Op::Hold;
  // Hold
  int d = 0;
  std::string prop;  // kTrue for the constant
  bool negated = false;
  // Within
  int a = 0;
  int b = 0;
  // Not and Within use `left` only
  Formula left;
  Formula right;

  bool is_true() const { return op == Op::Hold && prop == kTrue; }
};

Formula make_hold(int d, std::string prop, bool negated = false);
Formula make_and(Formula l, Formula r);
Formula make_or(Formula l, Formula r);
Formula make_not(Formula f);
Formula make_concat(Formula l, Formula r);
Formula make_within(Formula f, int a, int b);

bool equal(const Formula& x, const Formula& y);

// Propositions are checked against `ap` when it is non-empty.
Formula parse(std::string_view text, const Alphabet& ap = Alphabet());
std::string format(const Formula& f);

// Sorted distinct propositions mentioned by f (excluding the constant).
std::vector<std::string> propositions(const Formula& f);
Alphabet alphabet_of(const Formula& f, int max_props = kDefaultMaxProps);

int time_bound(const Formula& f);
int min_duration(const Formula& f);
bool is_feasible(const Formula& f);
bool is_primitive(const Formula& f);
bool is_negation_normal(const Formula& f);
bool is_dfw(const Formula& f);

int within_count(const Formula& f);
// Within nodes in post-order.
std::vector<const Node*> within_index(const Formula& f);

Formula push_negation(const Formula& f);
Formula to_dfw(const Formula& f);
// Prepares arbitrary parsed input for translation.
Formula normalize(const Formula& f);

// Relaxation entries; kNegInf marks a within that is not exercised.
using Tau = int;
inline constexpr Tau kNegInf = std::numeric_limits<int>::min();
inline constexpr Tau kPosInf = std::numeric_limits<int>::max();
using RelaxationVector = std::vector<Tau>;
std::string format_tau(Tau t);
std::string format_tau(const RelaxationVector& v);

Formula relax(const Formula& f, const RelaxationVector& tau);

// Incremental evaluation of all prefixes of a word.
class PrefixOracle {
 public:
  PrefixOracle(const Formula& f, const Alphabet& ap, int max_length);

  void push(Symbol s);
  void pop();
  int length() const { return static_cast<int>(word_.size()); }
  // Some prefix of the current word satisfies the formula.
  bool satisfied() const { return accepted_.empty() ? false : accepted_.back(); }
  // The current word satisfies the root on [t1, t2].
  bool holds(int t1, int t2) const;
  // Largest prefix length supported.
  int capacity() const { return cap_; }

 private:
  struct Item {
    const Node* node;
    int left = -1;
    int right = -1;
    int prop = -1;  // bit index, -1 for the constant
  };
  bool cell(int item, int t1, int t2) const {
    return table_[(static_cast<std::size_t>(item) * cap_ + t1) * cap_ + t2] != 0;
  }
  void compute_column(int t2);

  Formula formula_;
  std::vector<Item> items_;
  int cap_;
  std::vector<unsigned char> table_;
  Word word_;
  std::vector<bool> accepted_;
};

// Word satisfaction: some prefix o_0..o_T satisfies f on [0, T].
bool evaluate(const Word& w, const Formula& f, const Alphabet& ap);
// Satisfaction of f by w on the interval [t1, t2].
bool evaluate_interval(const Word& w, const Formula& f, const Alphabet& ap, int t1, int t2);

}  // namespace twtl
