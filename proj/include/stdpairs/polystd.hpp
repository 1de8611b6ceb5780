#pragma once

#include "stdpairs/integer.hpp"

#include <cstddef>
#include <vector>

namespace stdpairs {

// (root, sigma) with root zero on sigma; sigma holds 0-based variables.
struct PolyPair {
  IntVec root;
  std::vector<std::size_t> sigma;
  friend auto operator<=>(const PolyPair &, const PolyPair &) = default;
};

// Standard pairs of the monomial ideal generated by exponent vectors in N^k,
// sorted by (sigma, root).
std::vector<PolyPair> poly_standard_pairs(std::vector<IntVec> generators,
                                          std::size_t k);

} // namespace stdpairs
