#pragma once

// Seeded instance generation from a hidden GAP (or an explicit weight set).
//
// Gap specs look like "d=2 x=1000000,17 L=50,50 offset=10^12" or
// "set=3,5,9,17". With an offset every weight is shifted by it, and the
// recorded cover gains a leading dimension with generator `offset` and bound 1.

#include "additive.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "instance.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace smalldoubling {

struct GapSpec {
  std::optional<Gap> gap;
  BigInt offset = 0;
  std::optional<std::vector<BigInt>> set;

  /// A GAP containing every weight this GapSpec can produce, if it has one.
  std::optional<Gap> cover() const {
    if (!gap) return std::nullopt;
    if (offset == 0) return gap;
    Gap g = *gap;
    g.generators.insert(g.generators.begin(), offset);
    g.bounds.insert(g.bounds.begin(), 1);
    return g;
  }
};

namespace gen_detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      if (i > start) out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace gen_detail

inline GapSpec parse_gap_spec(std::string_view text) {
  GapSpec spec;
  std::optional<std::size_t> d;
  std::vector<BigInt> gens;
  std::vector<std::uint64_t> bounds;
  bool have_x = false, have_l = false;
  for (const auto& item : gen_detail::split(text, ' ')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("gap spec item '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const auto values = gen_detail::split(std::string_view(item).substr(eq + 1), ',');
    if (values.empty()) throw std::invalid_argument("gap spec item '" + item + "' has no value");
    if (key == "d") {
      d = narrow<std::size_t>(parse_bigint(values.at(0)));
    } else if (key == "x") {
      for (const auto& v : values) gens.push_back(parse_bigint(v));
      have_x = true;
    } else if (key == "L") {
      for (const auto& v : values) bounds.push_back(narrow<std::uint64_t>(parse_bigint(v)));
      have_l = true;
    } else if (key == "offset") {
      spec.offset = parse_bigint(values.at(0));
      if (spec.offset < 0) throw std::invalid_argument("offset must be non-negative");
    } else if (key == "set") {
      std::vector<BigInt> s;
      for (const auto& v : values) s.push_back(parse_bigint(v));
      spec.set = std::move(s);
    } else {
      throw std::invalid_argument("unknown gap spec key '" + key + "'");
    }
  }
  if (spec.set) {
    if (have_x || have_l || d) throw std::invalid_argument("set= cannot be combined with a GAP");
    (void)WeightSet(*spec.set);  // validates
    return spec;
  }
  if (!have_x || !have_l) throw std::invalid_argument("gap spec needs x= and L= (or set=)");
  if (d && *d != gens.size()) throw std::invalid_argument("gap spec d does not match the number of generators");
  spec.gap = Gap(std::move(gens), std::move(bounds));
  return spec;
}

/// Distinct weights a GapSpec can produce, ascending.
inline std::vector<BigInt> gap_spec_pool(const GapSpec& spec, std::uint64_t budget = kDefaultEnumerationBudget) {
  if (spec.set) return WeightSet(*spec.set).elements();
  std::vector<BigInt> pool = gap_enumerate(*spec.gap, budget).elements();
  for (auto& v : pool) v += spec.offset;
  return pool;
}

/// Deterministic draws: raw mt19937_64 output with rejection sampling, so the
/// same seed gives the same instance on every standard library.
class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r;
    do r = eng_();
    while (r >= limit);
    return r % n;
  }

  bool chance(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

struct GenOptions {
  ProblemKind kind = ProblemKind::tsp;
  std::size_t n = 6;  // vertices, or sequence length for min-plus
  GapSpec gap;
  double density = 1.0;
  std::uint64_t seed = 1;
  std::size_t k = 3;
  std::size_t terminals = 3;
  bool record_gap = true;
};

inline ProblemInstance generate_instance(const GenOptions& opt) {
  const std::vector<BigInt> pool = gap_spec_pool(opt.gap);
  GenRng rng(opt.seed);
  ProblemInstance inst;
  inst.kind = opt.kind;
  inst.seed = opt.seed;
  if (opt.record_gap) inst.gap = opt.gap.cover();
  auto draw = [&] { return pool[rng.below(pool.size())]; };

  if (opt.kind == ProblemKind::minplus) {
    inst.sequence.reserve(opt.n);
    for (std::size_t i = 0; i < opt.n; ++i) inst.sequence.push_back(draw());
    inst.validate();
    return inst;
  }

  inst.n = opt.n;
  for (std::size_t u = 0; u < opt.n; ++u)
    for (std::size_t v = u + 1; v < opt.n; ++v)
      if (rng.chance(opt.density)) inst.edges.push_back({u, v, draw()});
  if (opt.kind == ProblemKind::ewclique) inst.k = opt.k;
  if (opt.kind == ProblemKind::steiner) {
    if (opt.terminals > opt.n) throw std::invalid_argument("more terminals than vertices");
    std::vector<std::size_t> verts(opt.n);
    for (std::size_t i = 0; i < opt.n; ++i) verts[i] = i;
    for (std::size_t i = 0; i < opt.terminals; ++i) {
      std::swap(verts[i], verts[i + rng.below(opt.n - i)]);
      inst.terminals.push_back(verts[i]);
    }
  }
  inst.validate();
  return inst;
}

/// Random GAP spec: d in [1, max_dim], generators in [1, max_generator],
/// bounds in [1, max_bound].
inline GapSpec random_gap_spec(GenRng& rng, std::size_t max_dim, const BigInt& max_generator,
                               std::uint64_t max_bound) {
  const std::size_t d = 1 + rng.below(max_dim);
  const auto top = narrow<std::uint64_t>(max_generator);
  std::vector<BigInt> gens;
  std::vector<std::uint64_t> bounds;
  for (std::size_t i = 0; i < d; ++i) {
    gens.push_back(BigInt(1 + rng.below(top)));
    bounds.push_back(1 + rng.below(max_bound));
  }
  GapSpec spec;
  spec.gap = Gap(std::move(gens), std::move(bounds));
  return spec;
}

/// Small random instance of the given kind, sized for the brute-force
/// oracles. Weights come from a random GAP of dimension at most 3 with
/// generators up to 10^12, recorded in the instance.
inline ProblemInstance random_desk_instance(ProblemKind kind, std::uint64_t seed) {
  GenRng rng(seed ^ 0x9e3779b97f4a7c15ull);
  GenOptions opt;
  opt.kind = kind;
  opt.seed = seed;
  opt.gap = random_gap_spec(rng, 3, BigInt(1'000'000'000'000ull), 3);
  switch (kind) {
    case ProblemKind::tsp:
      opt.n = 4 + rng.below(6);  // 4..9
      opt.density = rng.chance(0.5) ? 1.0 : 0.8;
      break;
    case ProblemKind::maxcut:
      opt.n = 2 + rng.below(11);  // 2..12
      opt.density = 0.4 + 0.6 * static_cast<double>(rng.below(1001)) / 1000.0;
      break;
    case ProblemKind::ewclique:
      opt.k = rng.chance(0.5) ? 3 : 6;
      opt.n = opt.k + rng.below(16 - opt.k);  // k..15
      opt.density = 0.6 + 0.4 * static_cast<double>(rng.below(1001)) / 1000.0;
      break;
    case ProblemKind::steiner:
      opt.n = 3 + rng.below(8);  // 3..10
      opt.terminals = 2 + rng.below(std::min<std::size_t>(3, opt.n - 1));  // 2..4
      opt.density = 0.3 + 0.7 * static_cast<double>(rng.below(1001)) / 1000.0;
      break;
    case ProblemKind::minplus:
      opt.n = 1 + rng.below(64);
      break;
  }
  return generate_instance(opt);
}

}  // namespace smalldoubling
