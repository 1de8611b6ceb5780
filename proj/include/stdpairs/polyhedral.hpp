#pragma once

#include "stdpairs/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stdpairs {

// Coordinates on the lattice ZA: p in ZA maps to c(p) in Z^r with
// c_i(p) = (U p)_i / d_i, where U A V = D is a Smith decomposition.
struct LatticeChart {
  BigMatrix U;
  std::vector<BigInt> invariants; // d_1, ..., d_r
  std::size_t rank = 0;
  BigInt scale = 1;               // lcm of the invariants
  IntMatrix column_coordinates;   // r x n
  // U and the invariants as machine integers when every entry is small.
  bool small = false;
  IntMatrix U_small;
  std::vector<Int> invariants_small;

  // c(p) if p lies in ZA.
  [[nodiscard]] std::optional<IntVec> coordinates(const IntVec &p) const;
  // scale * c(p) if p lies in the real span of A (rational coordinates).
  [[nodiscard]] std::optional<BigVec> scaled_coordinates(const IntVec &p) const;
};

LatticeChart lattice_chart(const IntMatrix &a);

// phi(p) = coefficients . p / denominator on the linear span of A, extended
// by zero on a complement. denominator is 1 whenever ZA is saturated in Z^d.
struct SupportFunction {
  IntVec coefficients;
  Int denominator = 1;
  std::vector<std::size_t> facet; // columns where phi vanishes, 0-based
  IntVec column_values;           // phi(a_j)
  IntVec lattice_form;            // phi in lattice coordinates
};

struct Face {
  std::vector<std::size_t> indices;           // 0-based columns
  std::vector<std::size_t> containing_facets; // positions in the facet list
  std::size_t dimension = 0;
};

// Facets of the cone over the columns of a (strongly convex, columns
// nonzero), sorted by (facet size, facet indices).
std::vector<SupportFunction> compute_facets(const IntMatrix &a);
std::vector<SupportFunction> compute_facets(const IntMatrix &a,
                                            const LatticeChart &chart);

// All faces from the origin to the full cone, sorted by (size, indices).
std::vector<Face> face_lattice(const IntMatrix &a,
                               const std::vector<SupportFunction> &facets);

// Throws OutsideCone when the point is not in the cone.
Face smallest_face_containing(const LatticeChart &chart,
                              const std::vector<SupportFunction> &facets,
                              const IntVec &point);

} // namespace stdpairs
