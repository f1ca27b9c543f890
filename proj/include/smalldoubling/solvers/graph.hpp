#pragma once

#include "../encoding.hpp"
#include "../instance.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace smalldoubling::detail {

// Dense symmetric adjacency with one encoded weight per edge.
class EncodedGraph {
 public:
  EncodedGraph(const ProblemInstance& inst, std::span<const EncodedWeight> enc) : n_(inst.n), w_(n_ * n_) {
    if (enc.size() != inst.edges.size()) throw std::invalid_argument("one encoded weight per edge expected");
    for (std::size_t i = 0; i < enc.size(); ++i) {
      const auto& e = inst.edges[i];
      w_[e.u * n_ + e.v] = enc[i].value;
      w_[e.v * n_ + e.u] = enc[i].value;
    }
  }
  std::size_t size() const noexcept { return n_; }
  bool has(std::size_t u, std::size_t v) const { return w_[u * n_ + v].has_value(); }
  const BigInt& weight(std::size_t u, std::size_t v) const { return *w_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<std::optional<BigInt>> w_;
};

}  // namespace smalldoubling::detail
