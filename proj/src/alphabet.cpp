#include "twtl/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "twtl/error.hpp"

namespace twtl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::UnknownProposition: return "unknown proposition";
    case ErrorKind::WithinBound: return "within bound error";
    case ErrorKind::Normalization: return "normalization failure";
    case ErrorKind::InfeasibleRelaxation: return "infeasible relaxation";
    case ErrorKind::Infeasible: return "infeasible formula";
    case ErrorKind::AssumptionViolation: return "assumption violation";
    case ErrorKind::Collision: return "relabel collision";
    case ErrorKind::MissingMapping: return "missing mapping";
    case ErrorKind::AlphabetMismatch: return "alphabet mismatch";
    case ErrorKind::BlockedRun: return "blocked run";
    case ErrorKind::NoPolicy: return "no policy";
    case ErrorKind::EmptyPositiveSet: return "empty positive set";
    case ErrorKind::InvalidInput: return "invalid input";
  }
  return "error";
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || c0 == '_')) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> names, int max_props) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw Error(ErrorKind::InvalidInput, "invalid proposition name '" + n + "'");
  }
  if (max_props > 30) max_props = 30;
  if (size() > max_props) {
    throw Error(ErrorKind::InvalidInput, "too many propositions: " + std::to_string(size()) +
                                             " (limit " + std::to_string(max_props) + ")");
  }
}

int Alphabet::index(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

Symbol Alphabet::symbol(const std::vector<std::string>& props) const {
  Symbol s = 0;
  for (const auto& p : props) {
    int i = index(p);
    if (i < 0) throw Error(ErrorKind::UnknownProposition, "unknown proposition '" + p + "'");
    s |= Symbol{1} << i;
  }
  return s;
}

std::string Alphabet::format(Symbol s) const {
  if (s == 0) return "-";
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (s & (Symbol{1} << i)) {
      if (!out.empty()) out += ',';
      out += names_[i];
    }
  }
  return out;
}

Symbol Alphabet::parse_symbol(std::string_view text) const {
  text = trim(text);
  if (text == "-" || text.empty()) return 0;
  std::vector<std::string> props;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = trim(text.substr(pos, comma - pos));
    if (item.empty()) throw Error(ErrorKind::InvalidInput, "empty proposition in symbol '" + std::string(text) + "'");
    props.emplace_back(item);
    pos = comma + 1;
  }
  return symbol(props);
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  auto all = names_;
  all.insert(all.end(), other.names_.begin(), other.names_.end());
  return Alphabet(std::move(all));
}

Symbol Alphabet::translate(Symbol s, const Alphabet& from) const {
  Symbol out = 0;
  for (int i = 0; i < from.size(); ++i) {
    if (!(s & (Symbol{1} << i))) continue;
    int j = index(from.name(i));
    if (j >= 0) out |= Symbol{1} << j;
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& ap) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      w.push_back(ap.parse_symbol(t));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what(), lineno, 1);
    }
  }
  return w;
}

Word parse_word_inline(std::string_view text, const Alphabet& ap) {
  Word w;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) w.push_back(ap.parse_symbol(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return w;
}

std::vector<std::string> word_propositions(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#' || t == "-") continue;
    std::size_t pos = 0;
    while (pos <= t.size()) {
      auto comma = t.find(',', pos);
      if (comma == std::string_view::npos) comma = t.size();
      auto item = trim(t.substr(pos, comma - pos));
      if (!item.empty()) out.emplace_back(item);
      pos = comma + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_word(const Word& w, const Alphabet& ap) {
  std::string out;
  for (Symbol s : w) {
    out += ap.format(s);
    out += '\n';
  }
  return out;
}

}  // namespace twtl
