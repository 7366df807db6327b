#include "doctest.h"
#include "oracle.hpp"

using namespace twtl;

namespace {

SymbolSet set_of(int universe, std::initializer_list<Symbol> syms) {
  SymbolSet s(universe);
  for (Symbol x : syms) s.insert(x);
  return s;
}

// 0 -A-> 1 -A-> 2 (final), 1 -!A-> 0
Dfa small(const Alphabet& ap) {
  Dfa d;
  d.ap = ap;
  int n = ap.num_symbols();
  SymbolSet a(n);
  for (int s = 0; s < n; ++s)
    if (s & 1) a.insert(s);
  d.initial = 0;
  d.add_edge(0, 1, a);
  d.add_edge(1, 2, a);
  d.add_edge(1, 0, a.complement());
  d.add_state(2);
  d.finals.insert(2);
  return d;
}

}  // namespace

TEST_SUITE("automaton") {
  TEST_CASE("symbol sets") {
    auto a = set_of(8, {1, 3, 5});
    auto b = set_of(8, {3, 4});
    CHECK((a | b).count() == 4);
    CHECK((a & b).symbols() == std::vector<Symbol>{3});
    CHECK((a - b).symbols() == std::vector<Symbol>{1, 5});
    CHECK(a.complement().count() == 5);
    CHECK(a.intersects(b));
    CHECK_FALSE(set_of(8, {0}).intersects(a));
    CHECK(SymbolSet::all(128).count() == 128);
    CHECK(SymbolSet(4).empty());
  }

  TEST_CASE("edges to the same target merge") {
    Dfa d;
    d.ap = Alphabet({"A"});
    d.add_edge(0, 1, set_of(2, {0}));
    d.add_edge(0, 1, set_of(2, {1}));
    CHECK(d.num_edges() == 1);
    CHECK(d.num_transitions() == 2);
    CHECK(d.num_states() == 2);
    CHECK(d.deterministic());
    d.add_edge(0, 2, set_of(2, {1}));
    CHECK_FALSE(d.deterministic());
  }

  TEST_CASE("acceptance") {
    Alphabet ap({"A"});
    auto d = small(ap);
    CHECK(accepts(d, {1, 1}));
    CHECK_FALSE(accepts(d, {1, 1, 1}));
    CHECK(accepts_prefix(d, {1, 1, 0}));
    CHECK(accepts(d, {1, 0, 1, 1}));
    CHECK_FALSE(accepts(d, {0}));
    CHECK(shortest_accepted(d) == 2);
    CHECK(distance_to_final(d).at(0) == 2);
    CHECK(d.final_state() == 2);
    CHECK_FALSE(is_finite_language(d));
    CHECK(check_unambiguous(d));
  }

  TEST_CASE("relabelling") {
    Alphabet ap({"A"});
    auto d = small(ap);
    auto r = relabel(d, {{0, 10}, {1, 11}, {2, 12}}, 0);
    CHECK(r.initial == 10);
    CHECK(r.is_final(12));
    CHECK(isomorphism(d, r).has_value());
    try {
      relabel(d, {{0, 5}, {1, 5}, {2, 6}}, 0);
      FAIL("expected a collision");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Collision);
    }
    auto b = relabel_bfs(r);
    CHECK(b.initial == 0);
    CHECK(b.is_final(2));
  }

  TEST_CASE("tree relabelling needs every state") {
    auto t = std::make_shared<AnnotationTree>();
    t->I = {0};
    t->F = {2};
    auto r = relabel_tree(t, std::map<int, int>{{0, 7}, {2, 9}});
    CHECK(r->I == std::set<int>{7});
    CHECK(r->F == std::set<int>{9});
    try {
      relabel_tree(t, std::map<int, int>{{0, 7}});
      FAIL("expected a missing mapping");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MissingMapping);
    }
    auto split = relabel_tree(t, std::map<int, std::set<int>>{{0, {1, 2}}, {2, {3}}});
    CHECK(split->I == std::set<int>{1, 2});
  }

  TEST_CASE("strictify drops dead and unreachable states") {
    Alphabet ap({"A"});
    auto d = small(ap);
    d.add_edge(2, 3, SymbolSet::all(2));
    d.add_edge(5, 1, SymbolSet::all(2));
    CHECK_FALSE(is_strict(d));
    auto s = strictify(d);
    CHECK(is_strict(s));
    CHECK(s.num_states() == 3);
  }

  TEST_CASE("truncate keeps words up to the length bound") {
    Alphabet ap({"A"});
    auto d = small(ap);
    auto t = truncate(d, 4);
    CHECK(is_finite_language(t));
    CHECK(accepts(t, {1, 1}));
    CHECK(accepts(t, {1, 0, 1, 1}));
    CHECK_FALSE(accepts(t, {1, 0, 1, 0, 1, 1}));
    oracle::for_each_word(2, 7, [&](const Word& w) {
      CHECK(accepts(t, w) == (accepts(d, w) && w.size() <= 4));
      return true;
    });
  }

  TEST_CASE("guards print as propositional formulas") {
    Alphabet ap({"A", "B"});
    CHECK(format_guard(SymbolSet::all(4), ap) == "true");
    CHECK(format_guard(set_of(4, {1, 3}), ap) == "A");
    CHECK(format_guard(set_of(4, {0}), ap) == "!A & !B");
    CHECK(format_guard(set_of(4, {1, 2, 3}), ap) == "A | B");
  }

  TEST_CASE("dot export") {
    auto d = small(Alphabet({"A"}));
    auto dot = to_dot(d, "g");
    CHECK(dot.find("digraph g") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
  }

  TEST_CASE("dump round trip") {
    auto f = parse("[H^2 A]^[0,6] . ([H^1 B]^[0,3] | [H^1 C]^[1,4]) . [H^1 D]^[0,6]");
    auto a = translate(f, true);
    auto text = dump(a);
    CHECK(text.rfind("twtl-dfa 1\n", 0) == 0);
    auto b = load_dump(text);
    CHECK(dump(b) == text);
    auto iso = isomorphism(a, b);
    REQUIRE(iso.has_value());
    CHECK(tree_withins(b.tree).size() == 4);
    CHECK_THROWS_AS(load_dump("twtl-dfa 9\n"), Error);
    CHECK_THROWS_AS(load_dump("twtl-dfa 1\nap A\nstates 1\ninitial 0\nfinals\nstate 0\nedge 0 4 x\nend\n"), Error);
  }

  TEST_CASE("isomorphism detects different structure") {
    auto a = translate(parse("H^2 A"), false);
    auto b = translate(parse("H^1 A"), false, a.ap);
    CHECK_FALSE(isomorphism(a, b).has_value());
    CHECK(isomorphism(a, relabel(a, {{0, 3}, {1, 2}, {2, 1}, {3, 0}}, 0)).has_value());
  }
}
