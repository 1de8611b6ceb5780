#include "stdpairs/decomp.hpp"
#include "stdpairs/errors.hpp"

#include <algorithm>
#include <set>

namespace stdpairs {

std::vector<FaceId> associated_primes(const StandardPairSet &std_pairs) {
  std::set<FaceId> faces;
  for (const auto &p : std_pairs.pairs)
    faces.insert(p.face);
  return {faces.begin(), faces.end()};
}

std::optional<FaceId> is_primary(const StandardPairSet &std_pairs) {
  auto faces = associated_primes(std_pairs);
  if (faces.size() != 1)
    return std::nullopt;
  return faces.front();
}

bool is_irreducible(const StandardPairSet &std_pairs) {
  auto f = is_primary(std_pairs);
  if (!f)
    return false;
  auto it = std_pairs.maximal_classes.find(*f);
  return it != std_pairs.maximal_classes.end() && it->second.size() == 1;
}

namespace {

// Levels (phi_H(p))_H over facets H through F of points p = A u, u supported
// outside F, bounded by some root's level; one point per level.
class LevelEnumerator {
public:
  LevelEnumerator(const Configuration &config, FaceId f,
                  std::vector<IntVec> bounds)
      : config_(config), hs_(config.face(f).containing_facets),
        bounds_(std::move(bounds)) {
    for (std::size_t j = 0; j < config.size(); ++j)
      if (!config.in_face(f, j))
        outside_.push_back(j);
  }

  std::map<IntVec, IntVec> run() {
    visit(0, IntVec(hs_.size(), 0), IntVec(config_.dim(), 0));
    return levels_;
  }

private:
  bool within(const IntVec &level) const {
    return std::any_of(bounds_.begin(), bounds_.end(),
                       [&](const IntVec &b) { return leq(level, b); });
  }

  void visit(std::size_t k, const IntVec &level, const IntVec &point) {
    if (!seen_.insert({k, level}).second)
      return;
    if (k == outside_.size()) {
      levels_.emplace(level, point);
      return;
    }
    const std::size_t j = outside_[k];
    IntVec step(hs_.size());
    for (std::size_t r = 0; r < hs_.size(); ++r)
      step[r] = config_.facets()[hs_[r]].column_values[j];
    IntVec l = level;
    IntVec p = point;
    while (within(l)) {
      visit(k + 1, l, p);
      l = add(l, step);
      p = add(p, config_.column(j));
    }
  }

  const Configuration &config_;
  const std::vector<std::size_t> &hs_;
  std::vector<IntVec> bounds_;
  std::vector<std::size_t> outside_;
  std::set<std::pair<std::size_t, IntVec>> seen_;
  std::map<IntVec, IntVec> levels_;
};

} // namespace

MonomialIdeal divisor_closure_ideal(ConfigPtr config_ptr,
                                    const std::vector<Pair> &pairs,
                                    const EngineOptions &options) {
  const Configuration &config = *config_ptr;
  if (pairs.empty())
    return MonomialIdeal::unit(config_ptr);
  const FaceId f = pairs.front().face;
  for (const auto &p : pairs)
    if (p.face != f)
      throw Error(ErrorKind::FaceMismatch,
                  "divisor closure needs pairs on a single face");
  const auto &hs = config.face(f).containing_facets;
  if (hs.empty())
    return MonomialIdeal::zero(config_ptr);

  // p divides a point of a + NF iff a - p lies in NA + ZF, which is pair
  // divisibility of (p, origin) into (a, F).
  StdOracle in_closure = [&](const IntVec &p) {
    return std::any_of(pairs.begin(), pairs.end(), [&](const Pair &q) {
      return pair_divides(config, {p, config.origin()}, q);
    });
  };

  // Every point of the closure shares its level with a minimal element of
  // the matching translate that is itself in the closure.
  std::vector<IntVec> bounds;
  for (const auto &p : pairs) {
    IntVec b;
    for (auto h : hs)
      b.push_back(config.support_value(h, p.root));
    bounds.push_back(std::move(b));
  }
  Cover cover;
  for (const auto &[level, point] : LevelEnumerator(config, f, bounds).run())
    for (const auto &root :
         minimal_elements_in_translate(config, point, f, options))
      if (in_closure(root))
        cover.pairs.push_back({root, f});

  auto std_pairs = refine_cover(config, cover, in_closure, options);
  return pairs_to_generators(std::move(config_ptr), std_pairs, options);
}

namespace {

std::vector<Pair> class_members(const StandardPairSet &s, std::size_t c) {
  std::vector<Pair> out;
  for (auto i : s.classes[c])
    out.push_back(s.pairs[i]);
  return out;
}

MonomialIdeal component_from(const MonomialIdeal &ideal,
                             const StandardPairSet &s, FaceId f,
                             const EngineOptions &options) {
  auto it = s.maximal_classes.find(f);
  if (it == s.maximal_classes.end())
    throw Error(ErrorKind::FaceNotAssociated,
                "no standard pair of the ideal lies on this face");
  std::vector<Pair> pairs;
  for (auto c : it->second) {
    auto members = class_members(s, c);
    pairs.insert(pairs.end(), members.begin(), members.end());
  }
  return divisor_closure_ideal(ideal.config_ptr(), pairs, options);
}

} // namespace

MonomialIdeal primary_component(const MonomialIdeal &ideal, FaceId f,
                                const EngineOptions &options) {
  return component_from(ideal, standard_pairs(ideal, options), f, options);
}

DecompositionReport primary_decomposition(const MonomialIdeal &ideal,
                                          const EngineOptions &options) {
  auto s = standard_pairs(ideal, options);
  DecompositionReport report;
  report.kind = DecompositionKind::primary;
  for (auto f : associated_primes(s)) {
    report.components.push_back(component_from(ideal, s, f, options));
    report.component_faces.push_back(f);
  }
  return report;
}

DecompositionReport irreducible_decomposition(const MonomialIdeal &ideal,
                                              const EngineOptions &options) {
  auto s = standard_pairs(ideal, options);
  DecompositionReport report;
  report.kind = DecompositionKind::irreducible;
  for (const auto &[f, classes] : s.maximal_classes)
    for (auto c : classes) {
      report.components.push_back(
          divisor_closure_ideal(ideal.config_ptr(), class_members(s, c), options));
      report.component_faces.push_back(f);
    }
  return report;
}

MultiplicityTable multiplicity(const MonomialIdeal &ideal,
                               const EngineOptions &options) {
  auto s = standard_pairs(ideal, options);
  MultiplicityTable out;
  for (auto f : s.class_faces)
    ++out[f];
  return out;
}

MonomialIdeal intersect_all(ConfigPtr config,
                            const std::vector<MonomialIdeal> &ideals,
                            const EngineOptions &options) {
  if (ideals.empty())
    return MonomialIdeal::unit(std::move(config));
  if (ideals.size() == 1)
    return ideals.front();
  // The union of the standard pairs covers the standard monomials of the
  // intersection.
  Cover cover;
  for (const auto &i : ideals) {
    auto sp = standard_pairs(i, options);
    cover.pairs.insert(cover.pairs.end(), sp.pairs.begin(), sp.pairs.end());
  }
  if (cover.pairs.empty())
    return MonomialIdeal::unit(std::move(config));
  StdOracle oracle = [&](const IntVec &p) {
    return std::any_of(ideals.begin(), ideals.end(),
                       [&](const MonomialIdeal &i) { return !ideal_member(i, p); });
  };
  auto s = refine_cover(*config, cover, oracle, options);
  return pairs_to_generators(config, s, options);
}

bool check_decomposition(const MonomialIdeal &ideal, DecompositionReport &report,
                         const EngineOptions &options) {
  const Configuration &config = ideal.config();
  const auto target = standard_pairs(ideal, options).pairs;
  const bool equal =
      standard_pairs(intersect_all(ideal.config_ptr(), report.components, options),
                     options)
          .pairs == target;
  // With the intersection equal to I, dropping component k keeps it equal
  // exactly when the other components' standard pairs still cover those of I.
  bool irredundant = equal;
  std::vector<std::vector<Pair>> parts;
  for (const auto &c : report.components)
    parts.push_back(standard_pairs(c, options).pairs);
  for (std::size_t k = 0; k < parts.size() && irredundant; ++k) {
    std::vector<Pair> rest;
    for (std::size_t m = 0; m < parts.size(); ++m)
      if (m != k)
        rest.insert(rest.end(), parts[m].begin(), parts[m].end());
    bool still_covered = std::all_of(target.begin(), target.end(), [&](const Pair &p) {
      return !uncovered_point(config, p, rest, options);
    });
    if (still_covered)
      irredundant = false;
  }
  report.irredundant = irredundant;
  return equal;
}

} // namespace stdpairs
