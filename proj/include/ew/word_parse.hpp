#pragma once

#include "ew/group.hpp"

#include <string_view>

namespace ew {

// Parses a generator word. Tokens are separated by whitespace or commas and
// must be one of "0", "0'", "1", "1'" (ASCII apostrophe); the Unicode prime
// U+2032 is accepted as an alias. Unknown tokens and generators outside the
// kind throw std::invalid_argument naming the token and its 1-based position.
Word parse_word(GroupKind kind, std::string_view text);

}  // namespace ew
