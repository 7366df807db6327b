#include "doctest.h"
#include "oracle.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

using namespace twtl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kPhi = "[H^2 A]^[0,6] . ([H^1 B]^[0,3] | [H^1 C]^[1,4]) . [H^1 D]^[0,6]";

struct Traces {
  Alphabet ap{std::vector<std::string>{"A", "B"}};
  std::vector<Word> pos;
  std::vector<Word> neg;
  Traces() {
    std::string dir = TWTL_CASESTUDY_DIR "/learning/";
    for (const char* p : {"pos/sigma1.word", "pos/sigma2.word"}) pos.push_back(parse_word(slurp(dir + p), ap));
    for (const char* p : {"neg/sigma3.word", "neg/sigma4.word"}) neg.push_back(parse_word(slurp(dir + p), ap));
  }
};

}  // namespace

TEST_SUITE("solve") {
  TEST_CASE("case study synthesis") {
    Alphabet ap({"A", "B", "C", "D"});
    auto ts = expand_graph(parse_graph(slurp(TWTL_CASESTUDY_DIR "/office.ts")), ap);
    auto r = synthesize(ts, parse(kPhi));
    CHECK(r.tau_star == -2);
    CHECK(r.relaxation.tau == RelaxationVector{-2, kNegInf, -2, -3});
    CHECK(format_word(r.word, ap) == "-\n-\nA\nA\nA\n-\nC\nC\n-\n-\nD\nD\n");
    std::vector<std::string> names;
    for (int x : r.run) names.push_back(ts.names[x]);
    CHECK(names == std::vector<std::string>{"Base", "Base~A/1", "A", "A", "A", "A~C/1", "C", "C", "Base",
                                            "Base~D/1", "D", "D"});
    CHECK(r.stats.ts_states == 27);
    CHECK(r.stats.dfa_states == 11);
    CHECK(r.stats.levels > 0);
  }

  TEST_CASE("synthesis edge cases") {
    Alphabet ap({"A", "B"});
    auto ts = expand_graph(parse_graph("state x A\nstate y B\nedge x y 1\nedge y y 1 directed\n"), ap);
    auto prim = synthesize(ts, parse("A . H^1 B"));
    CHECK(prim.tau_star == kNegInf);
    CHECK(prim.run == std::vector<int>{0, 1, 1});
    auto late = synthesize(ts, parse("[H^2 B]^[0,1]"));
    CHECK(late.tau_star == 2);
    try {
      synthesize(ts, parse("[H^1 A]^[0,3]"));
      FAIL("expected no policy");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoPolicy);
    }
    SynthesisOptions exact;
    exact.exact = true;
    CHECK(synthesize(ts, parse("[H^2 B]^[0,1]"), exact).run == late.run);
  }

  TEST_CASE("single state") {
    auto ts = expand_graph(parse_graph("state x A\ninitial x\nedge x x 1 directed\n"));
    auto r = synthesize(ts, parse("[H^2 A]^[0,6]"));
    CHECK(r.run == std::vector<int>{0, 0, 0});
    CHECK(r.tau_star == -4);
  }

  TEST_CASE("verification") {
    auto ts = expand_graph(parse_graph(slurp(TWTL_CASESTUDY_DIR "/simple.ts")));
    CHECK(verify(ts, parse("[H^1 A]^[1,2]")).holds);
    auto bad = verify(ts, parse("[H^2 B]^[0,2]"));
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.counterexample.empty());
    CHECK(bad.product_states > 0);
  }

  TEST_CASE("learning the case study deadlines") {
    Traces t;
    auto tmpl = parse("[H^1 A]^[0,1] . [H^2 B]^[0,2]");
    auto r = learn_deadlines(t.pos, t.neg, tmpl, t.ap);
    CHECK(r.deadlines == std::vector<int>{2, 3});
    CHECK(r.positive_deadlines == std::vector<std::vector<int>>{{1, 3}, {2, 3}});
    CHECK(r.negative_deadlines == std::vector<std::vector<int>>{{3, 2}, {2, 4}});
    std::map<std::pair<int, int>, int> counts;
    for (const auto& row : r.rows) counts[{row.within, row.value}] = row.count();
    CHECK(counts.at({0, 2}) == 1);
    CHECK(counts.at({0, 3}) == 2);
    CHECK(counts.at({1, 2}) == 3);
    CHECK(counts.at({1, 3}) == 1);
    CHECK(counts.at({1, 4}) == 2);
    REQUIRE(r.formula);
    CHECK(format(r.formula) == "[H^1 A]^[0,2] . [H^2 B]^[0,3]");
    CHECK(misclassification(t.pos, t.neg, r.formula, t.ap) == 0);
    auto par = learn_deadlines(t.pos, t.neg, tmpl, t.ap, 4);
    CHECK(par.deadlines == r.deadlines);
    CHECK(par.positive_deadlines == r.positive_deadlines);
  }

  TEST_CASE("learning needs positives") {
    try {
      learn_deadlines({}, {}, parse("[A]^[0,1]"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyPositiveSet);
    }
  }

  TEST_CASE("deadline substitution") {
    auto f = with_deadlines(parse("[A]^[0,1] . [B]^[1,2]"), {4, 3});
    CHECK(format(f) == "[A]^[0,4] . [B]^[1,3]");
    CHECK_THROWS_AS(with_deadlines(parse("[A]^[0,1]"), {1, 2}), Error);
  }

  TEST_CASE("objectives") {
    CHECK(objective(ObjectiveKind::Verification, 3, 0) == 0.0);
    CHECK(objective(ObjectiveKind::Verification, 3, 2) == 1.0);
    CHECK(std::isinf(objective(ObjectiveKind::Synthesis, 0, 0, {1})));
    CHECK(objective(ObjectiveKind::Synthesis, 1, 0, {kNegInf, -2, 1}) == 1.0);
    CHECK(objective(ObjectiveKind::Synthesis, 1, 0, {kNegInf}) < 0);
    CHECK(objective(ObjectiveKind::Learning, 2, 3) == 5.0);
    CHECK(temporal_relaxation_norm({kNegInf, -3, -1}) == -1);
    CHECK(temporal_relaxation_norm({}) == kNegInf);
  }
}
