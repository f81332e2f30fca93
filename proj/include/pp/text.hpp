#pragma once

#include <string>
#include <string_view>

#include "pp/poly.hpp"

namespace pp {

enum class TextStyle { algebraic, hex, product };

/// Parses any of the accepted text forms:
///   algebraic  "x^4+x^3+1"
///   hex        "0x19"           (bit i = coefficient of x^i)
///   product    "x^2*(x+1)^1*M(1,1)^1"
/// The grammar is a single expression language with +, *, ^ and the
/// atoms 0, 1, x, 0x<hex>, M(a,b) and parenthesized subexpressions.
/// Malformed input raises errc::parse with the offending position.
Poly parse_poly(std::string_view text);

std::string to_algebraic(const Poly& p);
std::string to_hex(const Poly& p);

/// format_poly(parse_poly(s), style) round-trips for every style; the
/// product style factors p and renders Mersenne primes as M(a,b).
std::string format_poly(const Poly& p, TextStyle style);

}  // namespace pp
