#pragma once

// Text form of Laurent polynomials, used by every CLI command.
//
// Grammar: terms `<rational>*t^<int>` joined by `+`/`-`; rationals are `a`
// or `a/b`; `t` and `t^k` may appear without a coefficient.  Examples:
// `7*t^2 - 15*t + 7`, `1/2*t^-1 + 3`.  The ASCII hyphen and U+2212 minus
// are interchangeable.  Parse errors carry the byte position.

#include <concord/laurent.hpp>

#include <string>

namespace concord {

struct ParseError : Error {
    ParseError(const std::string& what, size_t position)
        : Error(what + " at position " + std::to_string(position)), position(position) {}
    size_t position;
};

LaurentPoly parse_poly(const std::string& text);
std::string to_string(const LaurentPoly& p);

}  // namespace concord
