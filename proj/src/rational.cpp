#include "resist/rational.hpp"

#include <cmath>
#include <limits>

#include "resist/errors.hpp"

namespace resist {

std::string to_fraction_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

Rational rational_from_string(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw ParseError("empty integer in rational");
    size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw ParseError("sign without digits in rational");
    for (size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw ParseError("bad digit in rational: '" + std::string(s) + "'");
    // cpp_int's string constructor rejects a leading '+', so feed it digits only.
    BigInt v{std::string(s.substr(i))};
    return negative ? BigInt(-v) : v;
  };
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt p = parse_int(text.substr(0, slash));
  BigInt q = parse_int(text.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (q < 0) {  // normalize: the rational carrier requires a positive denominator
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

// Round p/q to the nearest double, half to even. We extract a 54-bit
// quotient plus remainder flag, then round the extra bit away by hand:
// boost's convert_to does not document its rounding and mpq_get_d
// truncates, so neither is acceptable as the exact->float bridge.
double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  const bool negative = r < 0;
  BigInt p = num(r);
  if (negative) p = -p;
  BigInt q = den(r);

  // e2 = floor(log2(p/q)): shift so that 2^e2 <= p/q < 2^(e2+1).
  long e2 = static_cast<long>(boost::multiprecision::msb(p)) - static_cast<long>(boost::multiprecision::msb(q));
  {
    BigInt lhs = p, rhs = q;
    if (e2 >= 0)
      rhs <<= e2;
    else
      lhs <<= -e2;
    if (lhs < rhs) --e2;  // p/q < 2^e2, drop one
  }

  // Want the 53-bit significand of p/q * 2^(52 - e2).
  long shift = 52 - e2;
  BigInt pp = p, qq = q;
  if (shift >= 0)
    pp <<= shift;
  else
    qq <<= -shift;
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(pp, qq, quotient, remainder);
  // quotient has exactly 53 bits: 2^52 <= quotient < 2^53.
  bool round_up = false;
  BigInt twice = remainder << 1;
  if (twice > qq)
    round_up = true;
  else if (twice == qq)
    round_up = boost::multiprecision::bit_test(quotient, 0);  // ties to even
  if (round_up) ++quotient;

  double mantissa = quotient.convert_to<double>();  // integer < 2^53 + 1, exact
  double value = std::ldexp(mantissa, static_cast<int>(e2 - 52));
  return negative ? -value : value;
}

}  // namespace resist
