#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gm {

// All allocation logic runs on exact rationals. cpp_rational keeps the
// representation canonical (reduced, denominator positive), which makes
// comparisons and tie-breaking deterministic.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

// floor(p/q) with exact integer arithmetic; cpp_int division truncates
// toward zero, so negative numerators need the correction.
inline BigInt floor_rat(const Rational& x) {
  const BigInt p = numerator(x);
  const BigInt q = denominator(x);
  if (p >= 0) return p / q;
  return -((-p + q - 1) / q);
}

inline BigInt ceil_rat(const Rational& x) { return -floor_rat(-x); }

// 2^k for any integer k (negative exponents give 1/2^|k|).
inline Rational pow2(long k) {
  if (k >= 0) return Rational(BigInt(1) << k, 1);
  return Rational(1, BigInt(1) << (-k));
}

namespace detail {
// q * 2^k <= p for positive p, q and any integer k.
inline bool shifted_le(const BigInt& q, long k, const BigInt& p) {
  if (k >= 0) return (q << k) <= p;
  return q <= (p << (-k));
}
}  // namespace detail

// Largest k with 2^k <= x, for x > 0. Exact, no floating point: the bit
// lengths of numerator and denominator give a candidate that is then
// adjusted by shifted comparisons.
inline long floor_log2(const Rational& x) {
  if (x <= 0) throw std::domain_error("floor_log2: argument must be positive");
  const BigInt p = numerator(x);
  const BigInt q = denominator(x);
  long k = static_cast<long>(msb(p)) - static_cast<long>(msb(q));
  while (!detail::shifted_le(q, k, p)) --k;
  while (detail::shifted_le(q, k + 1, p)) ++k;
  return k;
}

// Smallest k with 2^k >= x, for x > 0.
inline long ceil_log2(const Rational& x) {
  const long k = floor_log2(x);
  return (x == pow2(k)) ? k : k + 1;
}

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Anything else,
// including decimal notation, is rejected.
inline Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) bad();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) bad();
    for (std::size_t j = i; j < part.size(); ++j)
      if (part[j] < '0' || part[j] > '9') bad();
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

// Canonical text form: integer when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (!is_integer(x)) {
    s += '/';
    s += denominator(x).str();
  }
  return s;
}

// Fixed-point decimal annotation (rounded to nearest, half away from zero).
// Display only; never feeds back into allocation logic.
inline std::string to_decimal(const Rational& x, unsigned digits = 6) {
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const bool neg = x < 0;
  const Rational mag = neg ? Rational(-x) : x;
  const BigInt scaled = floor_rat(mag * scale + Rational(1, 2));
  const BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string fs = frac.str();
  fs.insert(0, digits - fs.size(), '0');
  std::string out = neg ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    out += '.';
    out += fs;
  }
  return out;
}

}  // namespace gm
