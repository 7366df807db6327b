#pragma once

#include <string>
#include <vector>

#include "twtl/automaton.hpp"
#include "twtl/formula.hpp"

namespace twtl {

// Annotation trees are built when `inf` is set; the within constructors and
// the binary constructors annotate whenever their operands carry trees.
Dfa build_hold(const Alphabet& ap, const std::string& prop, bool negated, int d, bool inf = false);
Dfa build_and(const Dfa& a1, const Dfa& a2);
Dfa build_or(const Dfa& a1, const Dfa& a2);
Dfa build_concat(const Dfa& a1, const Dfa& a2);
Dfa build_within_inf(const Dfa& a, int lo, int hi);
Dfa build_within(const Dfa& a, int lo, int hi);

// Restart construction that resets to the initial state on blocking symbols.
// Not used by translate; kept to compare against the subset construction.
Dfa build_within_restart(const Dfa& a, int lo, int hi);

// True when some accepted word of one operand is a proper prefix of an
// accepted word of the other, or of itself.
bool union_ambiguous(const Dfa& a1, const Dfa& a2);

// An empty alphabet means the propositions of the formula.
Dfa translate(const Formula& f, bool inf, const Alphabet& ap = Alphabet());

// Normal DFA of relax(f, tau) with every within whose relaxed window cannot
// hold its child mapped to the empty language.
Dfa translate_relaxed(const Formula& f, const RelaxationVector& tau, const Alphabet& ap = Alphabet());

// Diagnostics collected while translating, e.g. overlapping disjuncts.
std::vector<std::string> translation_warnings(const Formula& f, const Alphabet& ap = Alphabet());

}  // namespace twtl
