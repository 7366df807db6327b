#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twtl {

// A symbol is a subset of the propositions, bit i set iff proposition i holds.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr int kDefaultMaxProps = 16;

class Alphabet {
 public:
  Alphabet() = default;
  // Names are sorted and deduplicated.
  explicit Alphabet(std::vector<std::string> names, int max_props = kDefaultMaxProps);

  int size() const { return static_cast<int>(names_.size()); }
  int num_symbols() const { return 1 << size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  // -1 if absent
  int index(std::string_view name) const;
  bool contains(std::string_view name) const { return index(name) >= 0; }

  Symbol symbol(const std::vector<std::string>& props) const;
  // "-" for the empty symbol, otherwise comma separated names
  std::string format(Symbol s) const;
  Symbol parse_symbol(std::string_view text) const;

  Alphabet merged(const Alphabet& other) const;
  // Re-encode a symbol of `from` in this alphabet; propositions missing here are dropped.
  Symbol translate(Symbol s, const Alphabet& from) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
};

bool is_identifier(std::string_view s);

// One symbol per line, '-' is the empty symbol, '#' starts a comment.
Word parse_word(std::string_view text, const Alphabet& ap);
std::string format_word(const Word& w, const Alphabet& ap);
// Inline form: symbols separated by ';' or whitespace.
Word parse_word_inline(std::string_view text, const Alphabet& ap);
// Propositions used by a word file.
std::vector<std::string> word_propositions(std::string_view text);

}  // namespace twtl
