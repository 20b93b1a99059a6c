#pragma once

#include <string_view>
#include <vector>

#include "bcheck/token.hpp"

namespace bcheck {

// Tokenizes B source text. Skips whitespace and both comment forms
// (/* ... */ and // ...). Throws LexError on illegal characters and
// unterminated strings or block comments. The returned sequence always
// ends with an EndOfInput token.
std::vector<Token> tokenize(std::string_view source);

} // namespace bcheck
