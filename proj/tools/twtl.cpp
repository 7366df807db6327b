#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twtl/twtl.hpp"

#ifndef TWTL_CASESTUDY_DIR
#define TWTL_CASESTUDY_DIR "casestudy"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace twtl;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

const char* kCaseFormula = "[H^2 A]^[0,6] . ([H^1 B]^[0,3] | [H^1 C]^[1,4]) . [H^1 D]^[0,6]";
const char* kVerifyTrue = "[H^1 A]^[1,2]";
const char* kVerifyFalse = "[H^1 !B]^[1,2]";
const char* kLearnTemplate = "[H^1 A]^[0,1] . [H^2 B]^[0,2]";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> files_in(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::InvalidInput, "'" + dir + "' is not a directory");
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Formula load_formula(const std::string& text) { return normalize(parse(text)); }

Alphabet split_props(const std::string& text) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return Alphabet(names);
}

json tau_json(Tau t) {
  if (t == kNegInf) return "-inf";
  if (t == kPosInf) return "inf";
  return t;
}

json tau_json(const RelaxationVector& v) {
  json out = json::array();
  for (Tau t : v) out.push_back(tau_json(t));
  return out;
}

std::string join_names(const TransitionSystem& ts, const std::vector<int>& run) {
  std::string out;
  for (std::size_t i = 0; i < run.size(); ++i) out += (i ? ", " : "") + ts.names[run[i]];
  return out;
}

std::string join_word(const Word& w, const Alphabet& ap) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + ap.format(w[i]);
  return out;
}

TransitionSystem load_ts(const std::string& path, const Alphabet& ap) {
  return expand_graph(parse_graph(read_file(path)), ap);
}

// Reports one reference comparison and returns whether it matched.
bool compare(const std::string& what, const std::string& got, const std::string& reference) {
  bool ok = got == reference;
  std::cout << "  " << what << ": " << got;
  if (ok) {
    std::cout << " (matches reference)\n";
  } else {
    std::cout << " (reference: " << reference << ")\n";
  }
  return ok;
}

std::string status_cell(const WithinStatus& s) {
  return std::string("(") + (s.ongoing ? "T" : "F") + "," + (s.done ? "T" : "F") + "," + std::to_string(s.steps) + ")";
}

void print_trace(const Monitor& m, const Word& w) {
  const auto& ap = m.automaton().ap;
  const auto& rows = m.trace();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::cout << (i == 0 ? "init" : std::to_string(i - 1)) << "\t" << (i == 0 ? "" : ap.format(w[i - 1])) << "\ts"
              << rows[i].state;
    for (const auto& s : rows[i].withins) std::cout << "\t" << status_cell(s);
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------- commands

struct TranslateArgs {
  std::string formula;
  bool inf = false;
  std::string dot;
  std::string dump;
  std::string props;
  bool json = false;
};

int run_translate(const TranslateArgs& a) {
  auto f = load_formula(a.formula);
  Alphabet ap = alphabet_of(f);
  if (!a.props.empty()) ap = ap.merged(split_props(a.props));
  Dfa dfa = translate(f, a.inf, ap);
  if (!a.dot.empty()) write_file(a.dot, to_dot(dfa));
  if (!a.dump.empty()) write_file(a.dump, dump(dfa));
  if (a.dot == "-" || a.dump == "-") return kOk;
  if (a.json) {
    json out = {{"formula", format(f)},
                {"annotated", a.inf},
                {"states", dfa.num_states()},
                {"edges", dfa.num_edges()},
                {"transitions", dfa.num_transitions()},
                {"warnings", translation_warnings(f, ap)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "formula " << format(f) << "\n";
    std::cout << "states " << dfa.num_states() << "\n";
    std::cout << "edges " << dfa.num_edges() << "\n";
    std::cout << "transitions " << dfa.num_transitions() << "\n";
    for (const auto& w : translation_warnings(f, ap)) std::cerr << "warning: " << w << "\n";
  }
  return kOk;
}

struct MonitorArgs {
  std::string formula;
  std::string word_file;
  std::string symbols;
  bool trace = false;
  bool json = false;
};

int run_monitor(const MonitorArgs& a) {
  if (a.word_file.empty() == a.symbols.empty()) {
    throw Error(ErrorKind::InvalidInput, "give exactly one of --word and --symbols");
  }
  auto f = load_formula(a.formula);
  std::string text = a.word_file.empty() ? std::string() : read_file(a.word_file);
  std::vector<std::string> names = propositions(f);
  if (a.word_file.empty()) {
    std::string flat = a.symbols;
    std::replace(flat.begin(), flat.end(), ';', '\n');
    std::replace(flat.begin(), flat.end(), ' ', '\n');
    for (const auto& n : word_propositions(flat)) names.push_back(n);
  } else {
    for (const auto& n : word_propositions(text)) names.push_back(n);
  }
  Alphabet ap(names);
  Word w = a.word_file.empty() ? parse_word_inline(a.symbols, ap) : parse_word(text, ap);
  Monitor m(f, ap);
  std::size_t blocked_at = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto st = m.step(w[i]);
    if (st == Monitor::Status::Violated) {
      blocked_at = i;
      break;
    }
    if (st == Monitor::Status::Satisfied) break;
  }
  auto res = m.result();
  bool primitive = is_primitive(f);
  const char* status = m.status() == Monitor::Status::Satisfied  ? "satisfied"
                       : m.status() == Monitor::Status::Violated ? "blocked"
                                                                 : "unsatisfied";
  if (a.json) {
    json out = {{"formula", format(f)}, {"status", status}, {"primitive", primitive}, {"steps", m.steps_taken()}};
    if (m.status() == Monitor::Status::Violated) out["blocked_at"] = blocked_at;
    if (m.status() == Monitor::Status::Satisfied) {
      out["tau_star"] = tau_json(res.tau_star);
      out["tau"] = tau_json(res.tau);
      out["tight"] = tau_json(res.tight);
    }
    if (a.trace) {
      json rows = json::array();
      for (const auto& r : m.trace()) {
        json cells = json::array();
        for (const auto& s : r.withins) cells.push_back({s.ongoing, s.done, s.steps});
        rows.push_back({{"state", r.state}, {"withins", cells}});
      }
      out["trace"] = rows;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (a.trace) print_trace(m, w);
    if (m.status() == Monitor::Status::Violated) {
      std::cout << "blocked at symbol " << blocked_at << " (" << ap.format(w[blocked_at]) << ")\n";
    } else if (m.status() == Monitor::Status::Ongoing) {
      std::cout << "not satisfied after " << w.size() << " symbols\n";
    } else if (primitive) {
      std::cout << "primitive, tau* = -inf\n";
    } else {
      std::cout << "tau* = " << format_tau(res.tau_star) << "\n";
      std::cout << "tau = " << format_tau(res.tau) << "\n";
      std::cout << "tight = " << format_tau(res.tight) << "\n";
    }
  }
  return m.status() == Monitor::Status::Satisfied ? kOk : kFailed;
}

struct SynthesizeArgs {
  std::string ts;
  std::string formula;
  bool exact = false;
  bool skip_initial = false;
  bool json = false;
};

int run_synthesize(const SynthesizeArgs& a) {
  auto f = load_formula(a.formula);
  auto ap = alphabet_of(f);
  auto ts = load_ts(a.ts, ap);
  SynthesisOptions opt;
  opt.exact = a.exact;
  opt.convention = a.skip_initial ? ProductConvention::SkipInitial : ProductConvention::ConsumeInitial;
  SynthesisResult r;
  try {
    r = synthesize(ts, f, opt);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoPolicy) throw;
    if (a.json) {
      std::cout << json{{"formula", format(f)}, {"policy", nullptr}, {"reason", e.what()}}.dump(2) << "\n";
    } else {
      std::cout << "no policy: " << e.what() << "\n";
    }
    return kFailed;
  }
  if (a.json) {
    json run = json::array();
    for (int x : r.run) run.push_back(ts.names[x]);
    json word = json::array();
    for (Symbol s : r.word) word.push_back(ts.ap.format(s));
    json out = {{"formula", format(f)},
                {"trajectory", run},
                {"word", word},
                {"tau_star", tau_json(r.tau_star)},
                {"tau", tau_json(r.relaxation.tau)},
                {"statistics",
                 {{"ts_states", r.stats.ts_states},
                  {"ts_transitions", r.stats.ts_transitions},
                  {"dfa_states", r.stats.dfa_states},
                  {"product_states", r.stats.product_states},
                  {"product_transitions", r.stats.product_transitions},
                  {"levels", r.stats.levels},
                  {"runtime_ms", r.stats.millis}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "trajectory " << join_names(ts, r.run) << "\n";
    std::cout << "word " << join_word(r.word, ts.ap) << "\n";
    std::cout << "tau* = " << format_tau(r.tau_star) << "\n";
    std::cout << "tau = " << format_tau(r.relaxation.tau) << "\n";
    std::cout << "ts " << r.stats.ts_states << " states " << r.stats.ts_transitions << " transitions\n";
    std::cout << "product " << r.stats.product_states << " states " << r.stats.product_transitions
              << " transitions\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string ts;
  std::string formula;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  auto f = load_formula(a.formula);
  auto ts = load_ts(a.ts, alphabet_of(f));
  auto r = verify(ts, f);
  if (a.json) {
    json out = {{"formula", format(f)},
                {"holds", r.holds},
                {"statistics", {{"product_states", r.product_states}, {"product_transitions", r.product_transitions}}}};
    if (!r.holds) {
      json run = json::array();
      for (int x : r.counterexample) run.push_back(ts.names[x]);
      out["counterexample"] = run;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (r.holds ? "true" : "false") << "\n";
    if (!r.holds) std::cout << "counterexample " << join_names(ts, r.counterexample) << "\n";
  }
  return r.holds ? kOk : kFailed;
}

struct LearnArgs {
  std::string pos;
  std::string neg;
  std::string tmpl;
  int jobs = 1;
  bool json = false;
};

struct LoadedTraces {
  Alphabet ap;
  std::vector<std::string> pos_names;
  std::vector<std::string> neg_names;
  std::vector<Word> pos;
  std::vector<Word> neg;
};

LoadedTraces load_traces(const std::string& pos_dir, const std::string& neg_dir, const Formula& tmpl) {
  LoadedTraces t;
  t.pos_names = files_in(pos_dir);
  if (!neg_dir.empty()) t.neg_names = files_in(neg_dir);
  std::vector<std::string> texts;
  std::vector<std::string> names = propositions(tmpl);
  for (const auto* group : {&t.pos_names, &t.neg_names}) {
    for (const auto& p : *group) {
      texts.push_back(read_file(p));
      for (const auto& n : word_propositions(texts.back())) names.push_back(n);
    }
  }
  t.ap = Alphabet(names);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    auto w = parse_word(texts[i], t.ap);
    (i < t.pos_names.size() ? t.pos : t.neg).push_back(std::move(w));
  }
  return t;
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

void print_learn(const LearnResult& r, const LoadedTraces& t, int misclassified) {
  std::cout << "deadline\tvalue\tFP\tFN\tcount\n";
  for (const auto& row : r.rows) {
    std::string fp, fn;
    for (int i : row.false_positives) fp += (fp.empty() ? "" : ",") + stem(t.neg_names[i]);
    for (int i : row.false_negatives) fn += (fn.empty() ? "" : ",") + stem(t.pos_names[i]);
    std::cout << "d" << row.within + 1 << "\t" << row.value << "\t{" << fp << "}\t{" << fn << "}\t" << row.count()
              << "\n";
  }
  std::cout << "deadlines " << format_tau(r.deadlines) << "\n";
  if (r.formula) std::cout << "formula " << format(r.formula) << "\n";
  std::cout << "misclassified " << misclassified << "\n";
}

int run_learn(const LearnArgs& a) {
  auto tmpl = load_formula(a.tmpl);
  auto t = load_traces(a.pos, a.neg, tmpl);
  auto r = learn_deadlines(t.pos, t.neg, tmpl, t.ap, a.jobs);
  int mis = r.formula ? misclassification(t.pos, t.neg, r.formula, t.ap) : -1;
  if (a.json) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      json fp = json::array(), fn = json::array();
      for (int i : row.false_positives) fp.push_back(stem(t.neg_names[i]));
      for (int i : row.false_negatives) fn.push_back(stem(t.pos_names[i]));
      rows.push_back({{"deadline", row.within}, {"value", row.value}, {"false_positives", fp},
                      {"false_negatives", fn}, {"count", row.count()}});
    }
    json out = {{"template", format(tmpl)},
                {"deadlines", r.deadlines},
                {"formula", r.formula ? json(format(r.formula)) : json(nullptr)},
                {"misclassified", mis},
                {"rows", rows}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_learn(r, t, mis);
  }
  return kOk;
}

// ---------------------------------------------------------------- case studies

int casestudy_relaxation(const std::string& dir) {
  auto f = load_formula(kCaseFormula);
  Alphabet ap({"A", "B", "C", "D"});
  auto a_inf = std::make_shared<const Dfa>(translate(f, true, ap));
  Word w = parse_word(read_file(dir + "/relaxation.word"), ap);
  Monitor m(a_inf);
  for (Symbol s : w) m.step(s);
  std::cout << "formula " << format(f) << "\n";
  std::cout << "annotated automaton: " << a_inf->num_states() << " states\n";
  for (const auto* t : tree_withins(a_inf->tree)) {
    std::cout << "  within " << t->index << " [" << t->a << "," << t->b << "] I={";
    bool first = true;
    for (int s : t->I) std::cout << (std::exchange(first, false) ? "" : ",") << "s" << s;
    std::cout << "} F={";
    first = true;
    for (int s : t->F) std::cout << (std::exchange(first, false) ? "" : ",") << "s" << s;
    std::cout << "}\n";
  }
  print_trace(m, w);
  auto r = m.result();
  bool ok = compare("tight", format_tau(r.tight), "(-3, -1, -2, -3)");
  ok &= compare("tau", format_tau(r.tau), "(-3, -inf, -2, -3)");
  ok &= compare("tau*", format_tau(r.tau_star), "-2");
  return ok ? kOk : kFailed;
}

int casestudy_synthesis(const std::string& dir) {
  auto f = load_formula(kCaseFormula);
  Alphabet ap({"A", "B", "C", "D"});
  auto ts = load_ts(dir + "/office.ts", ap);
  auto r = synthesize(ts, f);
  auto norm = product(ts, translate(f, false, ap), ProductConvention::SkipInitial);
  std::cout << "formula " << format(f) << "\n";
  bool ok = compare("ts size", std::to_string(ts.num_states()) + "/" + std::to_string(ts.num_transitions()), "27/67");
  ok &= compare("product with annotated automaton",
                std::to_string(r.stats.product_states) + "/" + std::to_string(r.stats.product_transitions), "204/378");
  std::cout << "  product with normal automaton from (x0, s0): " << norm.num_states() << "/" << norm.num_transitions()
            << "\n";
  std::cout << "  trajectory " << join_names(ts, r.run) << "\n";
  ok &= compare("word", join_word(r.word, ap), "- - A A A - C C - - D D");
  ok &= compare("tau*", format_tau(r.tau_star), "-2");
  ok &= compare("tau", format_tau(r.relaxation.tau), "(-2, -inf, -2, -3)");
  return ok ? kOk : kFailed;
}

int casestudy_verification(const std::string& dir) {
  bool ok = true;
  for (auto [text, reference] : {std::pair{kVerifyTrue, "true"}, std::pair{kVerifyFalse, "false"}}) {
    auto f = load_formula(text);
    auto ts = load_ts(dir + "/simple.ts", alphabet_of(f));
    auto r = verify(ts, f);
    ok &= compare(format(f), r.holds ? "true" : "false", reference);
    if (!r.holds) std::cout << "  counterexample " << join_names(ts, r.counterexample) << "\n";
  }
  return ok ? kOk : kFailed;
}

int casestudy_learning(const std::string& dir) {
  auto tmpl = load_formula(kLearnTemplate);
  auto t = load_traces(dir + "/learning/pos", dir + "/learning/neg", tmpl);
  auto r = learn_deadlines(t.pos, t.neg, tmpl, t.ap);
  int mis = misclassification(t.pos, t.neg, r.formula, t.ap);
  print_learn(r, t, mis);
  bool ok = compare("deadlines", format_tau(r.deadlines), "(2, 3)");
  ok &= compare("misclassified", std::to_string(mis), "0");
  return ok ? kOk : kFailed;
}

int run_casestudy(const std::string& name, const std::string& dir) {
  if (name == "relaxation") return casestudy_relaxation(dir);
  if (name == "synthesis") return casestudy_synthesis(dir);
  if (name == "verification") return casestudy_verification(dir);
  return casestudy_learning(dir);
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BlockedRun:
    case ErrorKind::NoPolicy:
      return kFailed;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time window temporal logic toolkit"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print version information");

  TranslateArgs ta;
  auto* tr = app.add_subcommand("translate", "Translate a formula to a DFA");
  tr->add_option("formula", ta.formula, "Formula text")->required();
  tr->add_flag("--inf", ta.inf, "Build the annotated automaton of all relaxations");
  tr->add_option("--dot", ta.dot, "Write Graphviz output ('-' for stdout)");
  tr->add_option("--dump", ta.dump, "Write the text dump ('-' for stdout)");
  tr->add_option("--ap", ta.props, "Extra propositions, comma separated");
  tr->add_flag("--json", ta.json, "JSON output");

  MonitorArgs ma;
  auto* mo = app.add_subcommand("monitor", "Compute the temporal relaxation of a word");
  mo->alias("tr");
  mo->add_option("--formula,-f", ma.formula, "Formula text")->required();
  mo->add_option("--word,-w", ma.word_file, "Word file, one symbol per line");
  mo->add_option("--symbols,-s", ma.symbols, "Inline word, symbols separated by ';'");
  mo->add_flag("--trace", ma.trace, "Print the per-symbol annotation table");
  mo->add_flag("--json", ma.json, "JSON output");

  SynthesizeArgs sa;
  auto* sy = app.add_subcommand("synthesize", "Find a run with minimal temporal relaxation");
  sy->add_option("--ts", sa.ts, "Transition system file")->required();
  sy->add_option("--formula,-f", sa.formula, "Formula text")->required();
  sy->add_flag("--exact", sa.exact, "Exhaustive search (always on)");
  sy->add_flag("--skip-initial", sa.skip_initial, "Do not feed the initial state's label to the automaton");
  sy->add_flag("--json", sa.json, "JSON output");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Check that every run satisfies some relaxation");
  ve->add_option("--ts", va.ts, "Transition system file")->required();
  ve->add_option("--formula,-f", va.formula, "Formula text")->required();
  ve->add_flag("--json", va.json, "JSON output");

  LearnArgs la;
  auto* le = app.add_subcommand("learn", "Learn within deadlines from labeled traces");
  le->add_option("--pos", la.pos, "Directory of positive traces")->required();
  le->add_option("--neg", la.neg, "Directory of negative traces");
  le->add_option("--template,-t", la.tmpl, "Template formula; its deadlines are ignored")->required();
  le->add_option("--jobs,-j", la.jobs, "Worker threads")->check(CLI::Range(1, 256));
  le->add_flag("--json", la.json, "JSON output");

  std::string cs_name;
  std::string cs_dir = TWTL_CASESTUDY_DIR;
  auto* cs = app.add_subcommand("casestudy", "Reproduce a case study");
  cs->add_option("name", cs_name, "relaxation, synthesis, verification or learning")
      ->required()
      ->check(CLI::IsMember({"relaxation", "synthesis", "verification", "learning"}));
  cs->add_option("--data", cs_dir, "Case study data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (version) {
      std::cout << "twtl " << kVersion << " (grammar " << kGrammarVersion << ", dump " << kDumpVersion << ")\n";
      return kOk;
    }
    if (*tr) return run_translate(ta);
    if (*mo) return run_monitor(ma);
    if (*sy) return run_synthesize(sa);
    if (*ve) return run_verify(va);
    if (*le) return run_learn(la);
    if (*cs) return run_casestudy(cs_name, cs_dir);
    std::cout << app.help();
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
