#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smalldoubling {

/// Arbitrary precision signed integer used for every weight, exponent and count.
using BigInt = boost::multiprecision::cpp_int;
/// Exact rational (doubling constants).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Parses a decimal integer. Accepts `a^b` as a power (e.g. `10^12`).
inline BigInt parse_bigint(std::string_view text) {
  auto parse_plain = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
      v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  auto caret = text.find('^');
  if (caret == std::string_view::npos) return parse_plain(text);
  BigInt base = parse_plain(text.substr(0, caret));
  BigInt exp = parse_plain(text.substr(caret + 1));
  if (exp < 0 || exp > 4096) throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
  return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
}

/// Checked narrowing; throws std::overflow_error instead of truncating.
template <class T>
T narrow(const BigInt& v) {
  if (v < BigInt(std::numeric_limits<T>::min()) || v > BigInt(std::numeric_limits<T>::max()))
    throw std::overflow_error("integer " + v.str() + " does not fit the target type");
  return v.template convert_to<T>();
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit multiplication overflow");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit addition overflow");
  return r;
}

}  // namespace smalldoubling
