#pragma once

#include "stdpairs/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stdpairs {

enum class Sign { nonnegative, free };

struct DiophantineSystem {
  IntMatrix coefficients;
  IntVec rhs;
  std::vector<Sign> signs;
  // Optional row functional h with h . column_j >= 1 for every column. When
  // present and all variables are nonnegative, feasible() runs a bounded
  // search instead of the completion loop.
  std::optional<IntVec> grading;

  // Throws InvalidArgument if the shapes disagree.
  void check() const;

  static DiophantineSystem nonnegative(IntMatrix coefficients, IntVec rhs);
};

struct MinimalSolutionSet {
  std::vector<IntVec> solutions;
};

struct SolverOptions {
  // Upper bound on the number of frontier vectors examined per call.
  std::size_t step_budget = 4'000'000;
};

// Coordinatewise-minimal solutions (order on the nonnegative coordinates),
// sorted graded-lex. Free variables must be determined by the nonnegative
// ones; otherwise UnboundedFreePart is thrown.
MinimalSolutionSet minimal_solutions(const DiophantineSystem &system,
                                     const SolverOptions &options = {});

std::optional<IntVec> feasible(const DiophantineSystem &system,
                               const SolverOptions &options = {});

// Some nonzero u >= 0 with M u = 0, if one exists.
std::optional<IntVec>
nonnegative_kernel_vector(const IntMatrix &m, const SolverOptions &options = {});

// Minimal elements of the projections onto coordinates [begin, end).
std::vector<IntVec> minimal_projections(const std::vector<IntVec> &vectors,
                                        std::size_t begin, std::size_t end);

} // namespace stdpairs
