#pragma once

#include <string_view>

#include "conatus/formula.hpp"

namespace conatus {

/// Parse the text form of a formula.
///
/// Grammar, by decreasing precedence:
///   "!" (prefix), "&", "|", "->" (right-associative); parentheses allowed.
/// Atoms match [A-Za-z][A-Za-z0-9_]* except the constants "true"/"false".
/// Whitespace is insignificant. Throws ParseError with a 1-based character
/// position and the set of tokens that would have been accepted there.
Formula parse_formula(std::string_view text);

}  // namespace conatus
