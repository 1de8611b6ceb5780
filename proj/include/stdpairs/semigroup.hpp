#pragma once

#include "stdpairs/diophantine.hpp"
#include "stdpairs/polyhedral.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace stdpairs {

struct FaceId {
  std::size_t value = 0;
  friend auto operator<=>(const FaceId &, const FaceId &) = default;
};

class Configuration {
public:
  // Rejects zero columns and cones containing a line.
  static std::shared_ptr<const Configuration> validate(const IntMatrix &a);

  [[nodiscard]] const IntMatrix &matrix() const { return a_; }
  [[nodiscard]] std::size_t dim() const { return a_.rows(); }
  [[nodiscard]] std::size_t size() const { return a_.cols(); }
  [[nodiscard]] const IntVec &column(std::size_t j) const { return cols_[j]; }

  [[nodiscard]] const LatticeChart &chart() const { return chart_; }
  [[nodiscard]] const std::vector<SupportFunction> &facets() const {
    return facets_;
  }
  [[nodiscard]] const std::vector<Face> &faces() const { return faces_; }
  [[nodiscard]] const Face &face(FaceId f) const { return faces_[f.value]; }
  [[nodiscard]] FaceId origin() const { return FaceId{0}; }
  [[nodiscard]] FaceId full_face() const { return FaceId{faces_.size() - 1}; }
  [[nodiscard]] std::optional<FaceId>
  find_face(const std::vector<std::size_t> &indices) const;
  [[nodiscard]] FaceId smallest_face_containing(const IntVec &point) const;
  // F is a subset of G.
  [[nodiscard]] bool face_subset(FaceId f, FaceId g) const {
    return subset_[f.value * faces_.size() + g.value] != 0;
  }
  [[nodiscard]] const IntMatrix &face_matrix(FaceId f) const {
    return face_matrices_[f.value];
  }
  [[nodiscard]] std::vector<IntVec> face_columns(FaceId f) const;
  [[nodiscard]] bool in_face(FaceId f, std::size_t column) const;
  // v in ZF.
  [[nodiscard]] bool in_face_lattice(FaceId f, const IntVec &v) const;

  // phi_H(p) for p in ZA.
  [[nodiscard]] Int support_value(std::size_t facet, const IntVec &p) const;
  // Cache for derived point lists, keyed by caller-chosen vectors.
  [[nodiscard]] std::optional<std::vector<IntVec>>
  cached_list(const IntVec &key) const;
  void cache_list(IntVec key, std::vector<IntVec> value) const;

  // Positive on every column; used to bound searches.
  [[nodiscard]] const IntVec &grading() const { return grading_; }

private:
  Configuration() = default;

  IntMatrix a_;
  std::vector<IntVec> cols_;
  LatticeChart chart_;
  std::vector<SupportFunction> facets_;
  std::vector<Face> faces_;
  std::map<std::vector<std::size_t>, std::size_t> face_index_;
  std::vector<char> subset_;
  std::vector<IntMatrix> face_matrices_;
  IntVec grading_;
  std::vector<LatticeChart> face_charts_; // empty chart for the origin

  // Memo of semigroup and face memberships, keyed by the point followed by
  // the face index (or -1 for NA).
  friend std::optional<IntVec> is_member(const Configuration &, const IntVec &);
  friend std::optional<IntVec> face_member(const Configuration &, FaceId,
                                           const IntVec &);
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<IntVec, std::optional<IntVec>, IntVecHash> memo_;
  mutable std::unordered_map<IntVec, std::vector<IntVec>, IntVecHash> lists_;
};

using ConfigPtr = std::shared_ptr<const Configuration>;

struct Monomial {
  IntVec degree;
  IntVec witness;
  friend bool operator==(const Monomial &a, const Monomial &b) {
    return a.degree == b.degree;
  }
};

std::optional<IntVec> is_member(const Configuration &config,
                                const IntVec &point);
// v in NF; the witness is indexed by the columns of F.
std::optional<IntVec> face_member(const Configuration &config, FaceId f,
                                  const IntVec &v);
bool divides(const Configuration &config, const IntVec &a_prime,
             const IntVec &a);

class MonomialIdeal {
public:
  // Checks membership in NA, then minimalizes keeping first occurrences.
  static MonomialIdeal from_degrees(ConfigPtr config,
                                    const std::vector<IntVec> &degrees);
  static MonomialIdeal zero(ConfigPtr config);
  static MonomialIdeal unit(ConfigPtr config);

  [[nodiscard]] const Configuration &config() const { return *config_; }
  [[nodiscard]] const ConfigPtr &config_ptr() const { return config_; }
  [[nodiscard]] const std::vector<Monomial> &generators() const {
    return generators_;
  }
  [[nodiscard]] std::vector<IntVec> degrees() const;
  // Degrees sorted lexicographically.
  [[nodiscard]] std::vector<IntVec> sorted_degrees() const;
  [[nodiscard]] bool is_zero() const { return generators_.empty(); }
  [[nodiscard]] bool is_unit() const;

private:
  ConfigPtr config_;
  std::vector<Monomial> generators_;
};

// Throws PointNotInSemigroup if point is not in NA.
bool ideal_member(const MonomialIdeal &ideal, const IntVec &point);

struct Pair {
  IntVec root;
  FaceId face;
  friend auto operator<=>(const Pair &a, const Pair &b) {
    if (auto c = a.face <=> b.face; c != 0)
      return c;
    return a.root <=> b.root;
  }
  friend bool operator==(const Pair &, const Pair &) = default;
};

// a + NF contained in b + NG.
bool pair_prec(const Configuration &config, const Pair &p, const Pair &q);
// a - b in ZF; FaceMismatch unless both pairs share the face.
bool pair_overlaps(const Configuration &config, const Pair &p, const Pair &q);
// a + c + NF contained in b + NG for some c in NA.
bool pair_divides(const Configuration &config, const Pair &p, const Pair &q);

// Is point in a + NF?
bool pair_contains(const Configuration &config, const Pair &p,
                   const IntVec &point);

// Distinct points A u with sum(u) <= bound, sorted.
std::vector<IntVec> points_up_to(const Configuration &config, Int bound);

} // namespace stdpairs
