#include "ew/word_parse.hpp"

#include <stdexcept>
#include <string>

namespace ew {

namespace {

constexpr std::string_view kPrimeUtf8 = "\xe2\x80\xb2";  // U+2032

bool is_separator(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',';
}

// Rewrites every Unicode prime in the token to an ASCII apostrophe.
std::string canonicalize(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (std::size_t k = 0; k < token.size();) {
        if (token.substr(k, kPrimeUtf8.size()) == kPrimeUtf8) {
            out += '\'';
            k += kPrimeUtf8.size();
        } else {
            out += token[k];
            ++k;
        }
    }
    return out;
}

}  // namespace

Word parse_word(GroupKind kind, std::string_view text) {
    Word out;
    std::size_t pos = 0;
    int tokenIndex = 0;
    while (pos < text.size()) {
        while (pos < text.size() && is_separator(text[pos])) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_separator(text[end])) ++end;
        const std::string token = canonicalize(text.substr(pos, end - pos));
        ++tokenIndex;

        Gen g;
        if (token == "0")
            g = Gen::R0;
        else if (token == "0'")
            g = Gen::R0p;
        else if (token == "1")
            g = Gen::R1;
        else if (token == "1'")
            g = Gen::R1p;
        else
            throw std::invalid_argument("parse_word: unknown token \"" + token +
                                        "\" at position " + std::to_string(tokenIndex));
        if (!has_generator(kind, g))
            throw std::invalid_argument("parse_word: \"" + token + "\" at position " +
                                        std::to_string(tokenIndex) + " is not a generator of " +
                                        std::string(kind_name(kind)));
        out.push_back(g);
        pos = end;
    }
    return out;
}

}  // namespace ew
