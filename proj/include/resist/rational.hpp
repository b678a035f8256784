#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace resist {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational carrier for all matrix entries. cpp_rational keeps the
// canonical form we rely on everywhere: denominator > 0, gcd(|num|,den) = 1,
// zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Serialized form is always "p/q", including q = 1, so readers never have to
// guess whether a bare integer was meant.
std::string to_fraction_string(const Rational& r);

// Accepts "p/q" or a bare integer "p". Throws ParseError otherwise.
Rational rational_from_string(std::string_view text);

// Nearest-double conversion of p/q (round half to even). This is the single
// quantization point between the exact and the floating-point halves of the
// library.
double to_double(const Rational& r);

}  // namespace resist
