#pragma once

#include "stdpairs/pairs_engine.hpp"

#include <map>
#include <optional>
#include <vector>

namespace stdpairs {

enum class DecompositionKind { primary, irreducible };

struct DecompositionReport {
  DecompositionKind kind = DecompositionKind::primary;
  std::vector<MonomialIdeal> components;
  std::vector<FaceId> component_faces;
  // Set by check_decomposition; empty until then.
  std::optional<bool> irredundant;
};

using MultiplicityTable = std::map<FaceId, std::size_t>;

// Faces carrying a standard pair, in face order.
std::vector<FaceId> associated_primes(const StandardPairSet &std_pairs);
std::optional<FaceId> is_primary(const StandardPairSet &std_pairs);
bool is_irreducible(const StandardPairSet &std_pairs);

// The ideal whose standard monomials are the divisors of the union of
// a + NF over the given pairs (all on face F).
MonomialIdeal divisor_closure_ideal(ConfigPtr config,
                                    const std::vector<Pair> &pairs,
                                    const EngineOptions &options = {});

MonomialIdeal primary_component(const MonomialIdeal &ideal, FaceId f,
                                const EngineOptions &options = {});
DecompositionReport primary_decomposition(const MonomialIdeal &ideal,
                                          const EngineOptions &options = {});
DecompositionReport irreducible_decomposition(const MonomialIdeal &ideal,
                                              const EngineOptions &options = {});
MultiplicityTable multiplicity(const MonomialIdeal &ideal,
                               const EngineOptions &options = {});

// Intersection of all components (unit ideal for none).
MonomialIdeal intersect_all(ConfigPtr config,
                            const std::vector<MonomialIdeal> &ideals,
                            const EngineOptions &options = {});

// True when the components intersect to the ideal; also fills in the
// irredundant flag.
bool check_decomposition(const MonomialIdeal &ideal, DecompositionReport &report,
                         const EngineOptions &options = {});

} // namespace stdpairs
