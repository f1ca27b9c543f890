#pragma once

// Sparse generating functions sum_s m(s) x^s over non-negative exponents.

#include "bigint.hpp"
#include "encoding.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace smalldoubling {

/// Exact counts, or counts reduced modulo a prime.
struct CoefficientMode {
  std::optional<BigInt> modulus;

  static CoefficientMode exact() { return {}; }
  static CoefficientMode modular(BigInt p) { return {std::move(p)}; }
  bool is_exact() const noexcept { return !modulus; }
  bool operator==(const CoefficientMode&) const = default;
};

enum class Sense { minimize, maximize };

inline const char* to_string(Sense s) { return s == Sense::minimize ? "min" : "max"; }

class SolutionPolynomial {
 public:
  using Term = std::pair<BigInt, BigInt>;  // exponent, coefficient

  SolutionPolynomial() = default;
  explicit SolutionPolynomial(CoefficientMode mode) : mode_(std::move(mode)) {}

  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
  static SolutionPolynomial from_terms(std::vector<Term> terms, CoefficientMode mode = {}) {
    SolutionPolynomial p(std::move(mode));
    for (const auto& [e, c] : terms)
      if (e < 0) throw std::invalid_argument("negative exponent " + e.str());
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
    }
    p.normalize();
    return p;
  }

  static SolutionPolynomial monomial(BigInt exponent, BigInt coefficient = 1, CoefficientMode mode = {}) {
    std::vector<Term> t;
    t.emplace_back(std::move(exponent), std::move(coefficient));
    return from_terms(std::move(t), std::move(mode));
  }

  const CoefficientMode& mode() const noexcept { return mode_; }
  /// Terms with non-zero coefficients, ascending by exponent.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest exponent; requires a non-zero polynomial.
  const BigInt& degree() const {
    if (terms_.empty()) throw EmptyPolynomial("degree of the zero polynomial");
    return terms_.back().first;
  }
  const BigInt& low_degree() const {
    if (terms_.empty()) throw EmptyPolynomial("low degree of the zero polynomial");
    return terms_.front().first;
  }

  BigInt coefficient(const BigInt& exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, const BigInt& e) { return t.first < e; });
    return it != terms_.end() && it->first == exponent ? it->second : BigInt(0);
  }

  /// p * x^e.
  SolutionPolynomial shifted(const BigInt& e) const {
    SolutionPolynomial out(mode_);
    out.terms_.reserve(terms_.size());
    for (const auto& [x, c] : terms_) out.terms_.emplace_back(x + e, c);
    return out;
  }

  /// Adds p * x^e into this polynomial with one merge pass.
  void add_shifted(const SolutionPolynomial& p, const BigInt& e) {
    check_mode(p);
    if (&p == this) {
      const SolutionPolynomial copy = p;
      add_shifted(copy, e);
      return;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + p.terms_.size());
    auto a = terms_.begin();
    auto b = p.terms_.begin();
    while (a != terms_.end() || b != p.terms_.end()) {
      if (b == p.terms_.end()) {
        merged.push_back(std::move(*a++));
        continue;
      }
      BigInt eb = b->first + e;
      if (a == terms_.end() || eb < a->first) {
        merged.emplace_back(std::move(eb), b->second);
        ++b;
      } else if (a->first < eb) {
        merged.push_back(std::move(*a++));
      } else {
        BigInt c = a->second + b->second;
        reduce(c);
        if (c != 0) merged.emplace_back(std::move(eb), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
  }

  SolutionPolynomial& operator+=(const SolutionPolynomial& q) {
    add_shifted(q, 0);
    return *this;
  }

  friend SolutionPolynomial operator+(SolutionPolynomial p, const SolutionPolynomial& q) {
    p += q;
    return p;
  }

  friend SolutionPolynomial operator*(const SolutionPolynomial& p, const SolutionPolynomial& q) {
    p.check_mode(q);
    std::vector<Term> prod;
    prod.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& [e1, c1] : p.terms_)
      for (const auto& [e2, c2] : q.terms_) prod.emplace_back(e1 + e2, c1 * c2);
    return from_terms(std::move(prod), p.mode_);
  }

  /// Multiplies every coefficient by `c` (modular inverse supported by caller).
  SolutionPolynomial scaled(const BigInt& c) const {
    SolutionPolynomial out(mode_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second *= c;
    out.normalize();
    return out;
  }

  /// Exact division of every coefficient by `d`; in modular mode multiplies
  /// by the inverse of d.
  SolutionPolynomial divided_by(const BigInt& d) const {
    if (d <= 0) throw std::invalid_argument("divisor must be positive");
    if (mode_.modulus) return scaled(mod_inverse(d, *mode_.modulus));
    SolutionPolynomial out(mode_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) {
      if (t.second % d != 0)
        throw std::logic_error("coefficient " + t.second.str() + " not divisible by " + d.str());
      t.second /= d;
    }
    return out;
  }

  bool operator==(const SolutionPolynomial&) const = default;

  /// One "exponent:coefficient" line per term, ascending exponent.
  std::string to_debug_string() const {
    std::string s;
    for (const auto& [e, c] : terms_) s += e.str() + ":" + c.str() + "\n";
    return s;
  }

  static SolutionPolynomial from_debug_string(const std::string& text, CoefficientMode mode = {}) {
    std::vector<Term> terms;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (line.empty()) continue;
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError(no, "expected exponent:coefficient");
      try {
        terms.emplace_back(parse_bigint(line.substr(0, colon)), parse_bigint(line.substr(colon + 1)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(no, e.what());
      }
    }
    return from_terms(std::move(terms), std::move(mode));
  }

  static BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
      BigInt q = r0 / r1;
      BigInt r2 = r0 - q * r1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      BigInt s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0 != 1) throw std::invalid_argument(a.str() + " is not invertible modulo " + m.str());
    return s0 < 0 ? BigInt(s0 + m) : s0;
  }

 private:
  void check_mode(const SolutionPolynomial& q) const {
    if (!(mode_ == q.mode_)) throw ModeMismatch("polynomials use different coefficient modes");
  }
  void reduce(BigInt& c) const {
    if (mode_.modulus) c %= *mode_.modulus;
  }
  void normalize() {
    for (auto& t : terms_) reduce(t.second);
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
  }

  CoefficientMode mode_;
  std::vector<Term> terms_;
};

/// Exponent whose true value is smallest (minimize) or largest (maximize);
/// ties go to the smaller encoding.
inline EncodedWeight select_optimum(const SolutionPolynomial& p, const ValueOrder& order, Sense sense) {
  if (p.is_zero()) throw EmptyPolynomial("no feasible solution: solution polynomial is zero");
  std::optional<EncodedWeight> best;
  std::optional<BigInt> best_value;
  for (const auto& [e, c] : p.terms()) {
    EncodedWeight enc(e);
    BigInt v = order.value_of(enc);
    const bool better = !best || (sense == Sense::minimize ? v < *best_value : v > *best_value);
    if (better) {
      best = std::move(enc);
      best_value = std::move(v);
    }
  }
  return *best;
}

inline EncodedWeight select_optimum(const SolutionPolynomial& p, const EnlargedGap& g, Sense sense) {
  return select_optimum(p, ValueOrder(g), sense);
}

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (a %= m; e; e >>= 1, a = mulmod64(a, a, m))
    if (e & 1) r = mulmod64(r, a, m);
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Uniform random prime in [2^61, 2^62).
template <class Rng>
std::uint64_t random_prime_62(Rng& rng) {
  for (;;) {
    std::uint64_t c = (static_cast<std::uint64_t>(rng()) & ((1ull << 61) - 1)) | (1ull << 61) | 1ull;
    if (is_prime_u64(c)) return c;
  }
}

}  // namespace smalldoubling
