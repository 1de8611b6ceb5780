#pragma once

#include "stdpairs/polystd.hpp"
#include "stdpairs/semigroup.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace stdpairs {

struct EngineOptions {
  SolverOptions solver;
  // Rounds of cover refinement and of generator ascent.
  std::size_t iteration_budget = 10'000;
  // When positive, refine_cover compares its result with the oracle on all
  // points of witness degree <= verify_bound.
  Int verify_bound = 0;
};

struct Cover {
  std::vector<Pair> pairs;
};

struct StandardPairSet {
  std::vector<Pair> pairs; // sorted by (face, root)
  // Overlap classes as lists of pair positions, ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<FaceId> class_faces;
  // (i, j): class i divides class j, i != j.
  std::vector<std::pair<std::size_t, std::size_t>> class_order;
  // Per face, the classes on that face not dividing another class on it.
  std::map<FaceId, std::vector<std::size_t>> maximal_classes;

  friend bool operator==(const StandardPairSet &a, const StandardPairSet &b) {
    return a.pairs == b.pairs;
  }
};

using StdOracle = std::function<bool(const IntVec &)>;

// Intermediate data of a pair difference.
struct PairDifferenceTrace {
  std::vector<IntVec> minimal_u;   // generators of J in N^G
  std::vector<PolyPair> poly_pairs; // standard pairs of J
};

// (b + NG) \ (b2 + NG2) for G inside G2.
Cover pair_difference(const Configuration &config, const IntVec &b, FaceId g,
                      const IntVec &b2, FaceId g2,
                      const EngineOptions &options = {},
                      PairDifferenceTrace *trace = nullptr);

// Divisibility-minimal elements of (a + RF) intersected with NA.
std::vector<IntVec> minimal_elements_in_translate(const Configuration &config,
                                                  const IntVec &a, FaceId f,
                                                  const EngineOptions &options = {});

StandardPairSet refine_cover(const Configuration &config, const Cover &cover,
                             const StdOracle &is_standard,
                             const EngineOptions &options = {});

StandardPairSet standard_pairs(const MonomialIdeal &ideal,
                               const EngineOptions &options = {});

MonomialIdeal pairs_to_generators(ConfigPtr config, const StandardPairSet &std_pairs,
                                  const EngineOptions &options = {});

MonomialIdeal intersect(const MonomialIdeal &i, const MonomialIdeal &j,
                        const EngineOptions &options = {});

// Sorts, removes duplicates and computes classes, order and maxima.
StandardPairSet overlap_classes(const Configuration &config,
                                std::vector<Pair> pairs);

// Is point in the union of the pairs?
bool covered(const Configuration &config, const std::vector<Pair> &pairs,
             const IntVec &point);

// A point of a + NG outside the union of the pairs, if there is one.
std::optional<IntVec> uncovered_point(const Configuration &config,
                                      const Pair &candidate,
                                      const std::vector<Pair> &pairs,
                                      const EngineOptions &options = {});

// Compares covered(.) with the oracle on all points of witness degree
// <= bound; returns the first disagreement.
std::optional<IntVec> first_mismatch(const Configuration &config,
                                     const std::vector<Pair> &pairs,
                                     const StdOracle &is_standard, Int bound);

// Equality of ideals through their canonical standard pairs.
bool same_ideal(const MonomialIdeal &i, const MonomialIdeal &j,
                const EngineOptions &options = {});

} // namespace stdpairs
