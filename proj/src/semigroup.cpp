#include "stdpairs/semigroup.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace stdpairs {

std::shared_ptr<const Configuration> Configuration::validate(const IntMatrix &a) {
  if (a.rows() == 0 || a.cols() == 0)
    throw Error(ErrorKind::InvalidArgument, "empty configuration matrix");
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (is_zero(a.column(j)))
      throw Error(ErrorKind::ZeroColumn,
                  "column " + std::to_string(j + 1) + " is zero",
                  {static_cast<Int>(j + 1)});
  if (auto u = nonnegative_kernel_vector(a))
    throw Error(ErrorKind::NotStronglyConvex,
                "the cone contains a line; nonnegative kernel vector " +
                    format_vector(*u),
                *u);

  std::shared_ptr<Configuration> c(new Configuration());
  c->a_ = a;
  for (std::size_t j = 0; j < a.cols(); ++j)
    c->cols_.push_back(a.column(j));
  c->chart_ = lattice_chart(a);
  c->facets_ = compute_facets(a, c->chart_);
  c->faces_ = face_lattice(a, c->facets_);
  const std::size_t nf = c->faces_.size();
  for (std::size_t k = 0; k < nf; ++k)
    c->face_index_[c->faces_[k].indices] = k;
  c->subset_.assign(nf * nf, 0);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t g = 0; g < nf; ++g)
      c->subset_[f * nf + g] =
          std::includes(c->faces_[g].indices.begin(), c->faces_[g].indices.end(),
                        c->faces_[f].indices.begin(), c->faces_[f].indices.end());
  for (const auto &face : c->faces_) {
    c->face_matrices_.push_back(select_columns(a, face.indices));
    c->face_charts_.push_back(face.indices.empty()
                                  ? LatticeChart{}
                                  : lattice_chart(c->face_matrices_.back()));
  }

  Int l = 1;
  for (const auto &f : c->facets_)
    l = std::lcm(l, f.denominator);
  c->grading_.assign(a.rows(), 0);
  for (const auto &f : c->facets_)
    c->grading_ = add(c->grading_, scale(l / f.denominator, f.coefficients));
  return c;
}

std::optional<FaceId>
Configuration::find_face(const std::vector<std::size_t> &indices) const {
  auto it = face_index_.find(indices);
  if (it == face_index_.end())
    return std::nullopt;
  return FaceId{it->second};
}

FaceId Configuration::smallest_face_containing(const IntVec &point) const {
  Face f = stdpairs::smallest_face_containing(chart_, facets_, point);
  return *find_face(f.indices);
}

std::optional<std::vector<IntVec>>
Configuration::cached_list(const IntVec &key) const {
  std::lock_guard lock(memo_mutex_);
  auto it = lists_.find(key);
  if (it == lists_.end())
    return std::nullopt;
  return it->second;
}

void Configuration::cache_list(IntVec key, std::vector<IntVec> value) const {
  std::lock_guard lock(memo_mutex_);
  if (lists_.size() >= (1u << 16))
    lists_.clear();
  lists_.emplace(std::move(key), std::move(value));
}

bool Configuration::in_face_lattice(FaceId f, const IntVec &v) const {
  if (face(f).indices.empty())
    return is_zero(v);
  return face_charts_[f.value].coordinates(v).has_value();
}

std::vector<IntVec> Configuration::face_columns(FaceId f) const {
  std::vector<IntVec> out;
  for (auto j : face(f).indices)
    out.push_back(cols_[j]);
  return out;
}

bool Configuration::in_face(FaceId f, std::size_t column) const {
  const auto &idx = face(f).indices;
  return std::binary_search(idx.begin(), idx.end(), column);
}

Int Configuration::support_value(std::size_t facet, const IntVec &p) const {
  auto c = chart_.coordinates(p);
  if (!c)
    throw Error(ErrorKind::InvalidArgument,
                "point " + format_vector(p) + " is not in the lattice ZA");
  return dot(facets_[facet].lattice_form, *c);
}

namespace {

void check_length(const Configuration &config, const IntVec &p) {
  if (p.size() != config.dim())
    throw Error(ErrorKind::InvalidArgument,
                "vector " + format_vector(p) + " has length " +
                    std::to_string(p.size()) + ", expected " +
                    std::to_string(config.dim()));
}

bool in_cone_lattice(const Configuration &config, const IntVec &p) {
  auto c = config.chart().coordinates(p);
  if (!c)
    return false;
  for (const auto &f : config.facets())
    if (dot(f.lattice_form, *c) < 0)
      return false;
  return true;
}

} // namespace

namespace {

constexpr std::size_t kMemoLimit = 1 << 20;

IntVec memo_key(const IntVec &v, Int tag) {
  IntVec k = v;
  k.push_back(tag);
  return k;
}

} // namespace

std::optional<IntVec> is_member(const Configuration &config,
                                const IntVec &point) {
  check_length(config, point);
  if (is_zero(point))
    return IntVec(config.size(), 0);
  const IntVec key = memo_key(point, -1);
  {
    std::lock_guard lock(config.memo_mutex_);
    if (auto it = config.memo_.find(key); it != config.memo_.end())
      return it->second;
  }
  std::optional<IntVec> result;
  if (in_cone_lattice(config, point)) {
    DiophantineSystem s = DiophantineSystem::nonnegative(config.matrix(), point);
    s.grading = config.grading();
    result = feasible(s);
  }
  std::lock_guard lock(config.memo_mutex_);
  if (config.memo_.size() >= kMemoLimit)
    config.memo_.clear();
  config.memo_.emplace(key, result);
  return result;
}

std::optional<IntVec> face_member(const Configuration &config, FaceId f,
                                  const IntVec &v) {
  check_length(config, v);
  if (is_zero(v))
    return IntVec(config.face(f).indices.size(), 0);
  if (f == config.origin())
    return std::nullopt;
  const IntVec key = memo_key(v, static_cast<Int>(f.value));
  {
    std::lock_guard lock(config.memo_mutex_);
    if (auto it = config.memo_.find(key); it != config.memo_.end())
      return it->second;
  }
  std::optional<IntVec> result;
  if (in_cone_lattice(config, v) && config.in_face_lattice(f, v)) {
    bool on_face = true;
    for (auto h : config.face(f).containing_facets)
      on_face = on_face && config.support_value(h, v) == 0;
    if (on_face) {
      DiophantineSystem s =
          DiophantineSystem::nonnegative(config.face_matrix(f), v);
      s.grading = config.grading();
      result = feasible(s);
    }
  }
  std::lock_guard lock(config.memo_mutex_);
  if (config.memo_.size() >= kMemoLimit)
    config.memo_.clear();
  config.memo_.emplace(key, result);
  return result;
}

bool divides(const Configuration &config, const IntVec &a_prime,
             const IntVec &a) {
  return is_member(config, sub(a, a_prime)).has_value();
}

MonomialIdeal MonomialIdeal::from_degrees(ConfigPtr config,
                                          const std::vector<IntVec> &degrees) {
  std::vector<Monomial> gens;
  for (const auto &d : degrees) {
    check_length(*config, d);
    auto w = is_member(*config, d);
    if (!w)
      throw Error(ErrorKind::GeneratorOutsideSemigroup,
                  "generator degree " + format_vector(d) +
                      " is not in the semigroup");
    gens.push_back({d, *w});
  }
  MonomialIdeal ideal;
  ideal.config_ = std::move(config);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j)
        continue;
      if (gens[i].degree == gens[j].degree)
        redundant = j < i;
      else
        redundant = divides(*ideal.config_, gens[j].degree, gens[i].degree);
    }
    if (!redundant)
      ideal.generators_.push_back(gens[i]);
  }
  return ideal;
}

MonomialIdeal MonomialIdeal::zero(ConfigPtr config) {
  return from_degrees(std::move(config), {});
}

MonomialIdeal MonomialIdeal::unit(ConfigPtr config) {
  IntVec z(config->dim(), 0);
  return from_degrees(std::move(config), {z});
}

std::vector<IntVec> MonomialIdeal::degrees() const {
  std::vector<IntVec> d;
  for (const auto &g : generators_)
    d.push_back(g.degree);
  return d;
}

std::vector<IntVec> MonomialIdeal::sorted_degrees() const {
  auto d = degrees();
  std::sort(d.begin(), d.end());
  return d;
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && stdpairs::is_zero(generators_[0].degree);
}

bool ideal_member(const MonomialIdeal &ideal, const IntVec &point) {
  const Configuration &config = ideal.config();
  if (!is_member(config, point))
    throw Error(ErrorKind::PointNotInSemigroup,
                "point " + format_vector(point) + " is not in the semigroup");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial &g) {
                       return divides(config, g.degree, point);
                     });
}

bool pair_contains(const Configuration &config, const Pair &p,
                   const IntVec &point) {
  return face_member(config, p.face, sub(point, p.root)).has_value();
}

bool pair_prec(const Configuration &config, const Pair &p, const Pair &q) {
  return config.face_subset(p.face, q.face) && pair_contains(config, q, p.root);
}

bool pair_overlaps(const Configuration &config, const Pair &p, const Pair &q) {
  if (p.face != q.face)
    throw Error(ErrorKind::FaceMismatch,
                "overlap is only defined for pairs on the same face");
  return config.in_face_lattice(p.face, sub(p.root, q.root));
}

namespace {

// Is d = A' v + z for some v >= 0 on the columns off G and z in ZG? The
// facets containing G are positive on those columns, which bounds v.
class OffFaceSearch {
public:
  OffFaceSearch(const Configuration &config, FaceId g) : config_(config), g_(g) {
    hs_ = config.face(g).containing_facets;
    for (std::size_t j = 0; j < config.size(); ++j)
      if (!config.in_face(g, j))
        off_.push_back(j);
  }

  bool run(const IntVec &d) {
    IntVec values;
    for (auto h : hs_) {
      values.push_back(config_.support_value(h, d));
      if (values.back() < 0)
        return false;
    }
    return go(0, d, values);
  }

private:
  bool go(std::size_t k, const IntVec &rest, const IntVec &values) {
    if (is_zero(values))
      return config_.in_face_lattice(g_, rest);
    if (k == off_.size())
      return false;
    IntVec key = rest;
    key.push_back(static_cast<Int>(k));
    if (failed_.count(key))
      return false;
    const std::size_t j = off_[k];
    IntVec r = rest, v = values;
    for (;;) {
      if (go(k + 1, r, v))
        return true;
      r = sub(r, config_.column(j));
      bool fits = true;
      for (std::size_t i = 0; i < hs_.size(); ++i) {
        v[i] -= config_.facets()[hs_[i]].column_values[j];
        fits = fits && v[i] >= 0;
      }
      if (!fits)
        break;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Configuration &config_;
  FaceId g_;
  std::vector<std::size_t> hs_;
  std::vector<std::size_t> off_;
  std::unordered_set<IntVec, IntVecHash> failed_;
};

} // namespace

bool pair_divides(const Configuration &config, const Pair &p, const Pair &q) {
  if (!config.face_subset(p.face, q.face))
    return false;
  // Some c in NA with a + c in b + NG, i.e. b - a in NA - NG = NA + ZG.
  return OffFaceSearch(config, q.face).run(sub(q.root, p.root));
}

std::vector<IntVec> points_up_to(const Configuration &config, Int bound) {
  std::set<IntVec> seen{IntVec(config.dim(), 0)};
  std::vector<IntVec> frontier{IntVec(config.dim(), 0)};
  for (Int k = 0; k < bound; ++k) {
    std::vector<IntVec> next;
    for (const auto &p : frontier)
      for (std::size_t j = 0; j < config.size(); ++j) {
        IntVec q = add(p, config.column(j));
        if (seen.insert(q).second)
          next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

} // namespace stdpairs
