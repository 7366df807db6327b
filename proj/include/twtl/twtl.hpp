#pragma once

#include "twtl/alphabet.hpp"
#include "twtl/automaton.hpp"
#include "twtl/error.hpp"
#include "twtl/formula.hpp"
#include "twtl/relaxation.hpp"
#include "twtl/solve.hpp"
#include "twtl/system.hpp"
#include "twtl/translate.hpp"

namespace twtl {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kGrammarVersion = 1;

}  // namespace twtl
