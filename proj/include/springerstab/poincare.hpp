#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "springerstab/numbers.hpp"
#include "springerstab/partition.hpp"

namespace springerstab {

// Even-degree Betti numbers of a Springer fiber: coeffs[k] = dim H^{2k}.
// Odd cohomology vanishes and is not stored. For every partition the
// constant term is 1 and the top index is n_stat(λ) with a positive
// coefficient, so the stored length is always n_stat(λ)+1.
struct PoincarePoly {
  std::vector<Int> coeffs;

  Int betti(int k) const {
    if (k < 0) throw std::invalid_argument("PoincarePoly::betti: negative degree");
    return static_cast<std::size_t>(k) < coeffs.size()
               ? coeffs[static_cast<std::size_t>(k)]
               : Int(0);
  }

  std::size_t top_index() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  Int total() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), Int(0));
  }

  bool operator==(const PoincarePoly&) const = default;
};

// Structural invariants of a Betti vector for the partition p; throws
// std::invalid_argument naming the violated one. Used when deserializing
// cache entries.
inline void validate_poincare(const Partition& p, const PoincarePoly& poly) {
  const std::size_t expected = static_cast<std::size_t>(n_stat(p)) + 1;
  if (poly.coeffs.size() != expected)
    throw std::invalid_argument("poincare entry for \"" + p.to_string() +
                                "\": length must be n_stat+1");
  if (poly.coeffs.front() != 1)
    throw std::invalid_argument("poincare entry for \"" + p.to_string() +
                                "\": constant term must be 1");
  for (const Int& c : poly.coeffs)
    if (c < 0)
      throw std::invalid_argument("poincare entry for \"" + p.to_string() +
                                  "\": negative coefficient");
  if (poly.coeffs.back() <= 0)
    throw std::invalid_argument("poincare entry for \"" + p.to_string() +
                                "\": zero top coefficient");
}

}  // namespace springerstab
