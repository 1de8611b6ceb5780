#pragma once

#include "stdpairs/matrix.hpp"

#include <optional>
#include <vector>

namespace stdpairs {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... > 0.
struct SmithDecomposition {
  BigMatrix U;
  BigMatrix D;
  BigMatrix V;
  std::size_t rank = 0;
};

SmithDecomposition smith_decomposition(const BigMatrix &m);
SmithDecomposition smith_decomposition(const IntMatrix &m);

std::size_t rank(const BigMatrix &m);
std::size_t rank(const IntMatrix &m);

// Z-basis of {x in Z^n : M x = 0}.
std::vector<BigVec> kernel_basis(const BigMatrix &m);
std::vector<BigVec> kernel_basis(const IntMatrix &m);

// Some integer z with M z = b, if one exists.
std::optional<BigVec> integer_solve(const SmithDecomposition &snf,
                                    const BigVec &b);
std::optional<BigVec> integer_solve(const BigMatrix &m, const BigVec &b);

// Is point in the Z-span of the given vectors?
bool lattice_membership(const std::vector<IntVec> &vectors, const IntVec &point);

BigVec primitive(const BigVec &v);

} // namespace stdpairs
