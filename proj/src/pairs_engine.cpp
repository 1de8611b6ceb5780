#include "stdpairs/pairs_engine.hpp"
#include "stdpairs/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stdpairs {

namespace {

// [L | -R] as one matrix.
IntMatrix side_by_side(const IntMatrix &l, const IntMatrix &r) {
  IntMatrix m(l.rows(), l.cols() + r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j)
      m(i, j) = l(i, j);
    for (std::size_t j = 0; j < r.cols(); ++j)
      m(i, l.cols() + j) = -r(i, j);
  }
  return m;
}

// (a + NG) meets (b + NG2).
bool translates_meet(const Configuration &config, const IntVec &a, FaceId g,
                     const IntVec &b, FaceId g2, const EngineOptions &options) {
  auto s = DiophantineSystem::nonnegative(
      side_by_side(config.face_matrix(g), config.face_matrix(g2)), sub(b, a));
  return feasible(s, options.solver).has_value();
}

void sort_unique(std::vector<Pair> &pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

// The pairs not strictly below another one under the containment order.
std::vector<Pair> prec_maximal(const Configuration &config,
                               std::vector<Pair> pairs) {
  sort_unique(pairs);
  std::vector<Pair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool below = false;
    for (std::size_t j = 0; j < pairs.size() && !below; ++j)
      below = i != j && pair_prec(config, pairs[i], pairs[j]);
    if (!below)
      out.push_back(pairs[i]);
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

class Refiner {
public:
  Refiner(const Configuration &config, const StdOracle &is_standard,
          const EngineOptions &options)
      : config_(config), is_standard_(is_standard), options_(options) {}

  std::vector<Pair> run(std::vector<Pair> cover) {
    sort_unique(cover);
    for (std::size_t round = 0;; ++round) {
      if (round >= options_.iteration_budget)
        throw Error(ErrorKind::IterationBudgetExceeded,
                    "cover refinement did not stabilize within " +
                        std::to_string(options_.iteration_budget) + " rounds");
      auto next = maximalize_faces(minimalize_roots(cover));
      if (next == cover)
        break;
      cover = std::move(next);
    }
    return prec_maximal(config_, std::move(cover));
  }

private:
  // Each (a, F) becomes the pairs (b, F) with b a divisibility-minimal
  // element of the translate a + RF that divides a.
  std::vector<Pair> minimalize_roots(const std::vector<Pair> &cover) {
    std::vector<Pair> out;
    for (const auto &p : cover) {
      for (const auto &m :
           minimal_elements_in_translate(config_, p.root, p.face, options_))
        if (divides(config_, m, p.root))
          out.push_back({m, p.face});
    }
    sort_unique(out);
    cover_ = out;
    proper_.clear();
    return out;
  }

  // Each (a, F) becomes the pairs (a, G), G not strictly inside F, with
  // (a, G) proper and G maximal with that property.
  std::vector<Pair> maximalize_faces(const std::vector<Pair> &cover) {
    const auto &faces = config_.faces();
    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return faces[x].dimension > faces[y].dimension;
    });

    std::vector<Pair> out;
    for (const auto &p : cover) {
      std::vector<FaceId> found;
      for (auto k : order) {
        FaceId g{k};
        if (g != p.face && config_.face_subset(g, p.face))
          continue;
        if (std::any_of(found.begin(), found.end(),
                        [&](FaceId h) { return config_.face_subset(g, h); }))
          continue;
        if (g == p.face || proper({p.root, g}))
          found.push_back(g);
      }
      for (auto g : found)
        out.push_back({p.root, g});
    }
    sort_unique(out);
    return out;
  }

  bool proper(const Pair &p) {
    auto it = proper_.find(p);
    if (it != proper_.end())
      return it->second;
    bool result = quick_check(p) &&
                  !uncovered_point(config_, p, cover_, options_).has_value();
    proper_.emplace(p, result);
    return result;
  }

  // Necessary condition: the root and its neighbours along G are standard.
  bool quick_check(const Pair &p) {
    if (!is_standard_(p.root))
      return false;
    IntVec sum = p.root;
    for (auto j : config_.face(p.face).indices) {
      if (!is_standard_(add(p.root, config_.column(j))))
        return false;
      sum = add(sum, config_.column(j));
    }
    return is_standard_(sum);
  }

  const Configuration &config_;
  const StdOracle &is_standard_;
  const EngineOptions &options_;
  std::vector<Pair> cover_;
  std::map<Pair, bool> proper_;
};

} // namespace

Cover pair_difference(const Configuration &config, const IntVec &b, FaceId g,
                      const IntVec &b2, FaceId g2, const EngineOptions &options,
                      PairDifferenceTrace *trace) {
  if (!config.face_subset(g, g2))
    throw Error(ErrorKind::FaceNotContained,
                "the face of the first pair must lie in the face of the second");
  const auto &gi = config.face(g).indices;
  // The projections depend only on b2 - b and the two faces.
  IntVec key = sub(b2, b);
  key.push_back(static_cast<Int>(g.value));
  key.push_back(static_cast<Int>(g2.value));
  key.push_back(1);
  std::vector<IntVec> j;
  if (auto hit = config.cached_list(key)) {
    j = *hit;
  } else {
    // b + G u = b2 + G2 w.
    auto s = DiophantineSystem::nonnegative(
        side_by_side(config.face_matrix(g), config.face_matrix(g2)), sub(b2, b));
    j = minimal_projections(minimal_solutions(s, options.solver).solutions, 0,
                            gi.size());
    config.cache_list(std::move(key), j);
  }

  Cover out;
  if (trace)
    *trace = {j, {}};
  if (j.empty()) {
    out.pairs.push_back({b, g});
    return out;
  }
  auto poly = poly_standard_pairs(j, gi.size());
  if (trace)
    trace->poly_pairs = poly;
  const IntMatrix &gm = config.face_matrix(g);
  for (const auto &pp : poly) {
    std::vector<std::size_t> idx;
    for (auto v : pp.sigma)
      idx.push_back(gi[v]);
    auto f = config.find_face(idx);
    if (!f)
      throw std::logic_error("pair difference produced a non-face column set");
    out.pairs.push_back({add(b, multiply(gm, pp.root)), *f});
  }
  return out;
}

std::vector<IntVec> minimal_elements_in_translate(const Configuration &config,
                                                  const IntVec &a, FaceId f,
                                                  const EngineOptions &options) {
  const auto &hs = config.face(f).containing_facets;
  if (hs.empty())
    return {IntVec(config.dim(), 0)};
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < config.size(); ++j)
    if (!config.in_face(f, j))
      outside.push_back(j);

  // sum_j u_j phi_H(a_j) = phi_H(a) over the columns outside F.
  IntMatrix m(hs.size(), outside.size());
  IntVec rhs(hs.size());
  for (std::size_t r = 0; r < hs.size(); ++r) {
    const auto &values = config.facets()[hs[r]].column_values;
    for (std::size_t c = 0; c < outside.size(); ++c)
      m(r, c) = values[outside[c]];
    rhs[r] = config.support_value(hs[r], a);
  }
  // The answer depends only on F and these levels.
  IntVec key = rhs;
  key.push_back(static_cast<Int>(f.value));
  key.push_back(0);
  if (auto hit = config.cached_list(key))
    return *hit;
  auto sols =
      minimal_solutions(DiophantineSystem::nonnegative(m, rhs), options.solver)
          .solutions;

  std::vector<IntVec> points;
  for (const auto &u : sols) {
    IntVec p(config.dim(), 0);
    for (std::size_t c = 0; c < outside.size(); ++c)
      if (u[c] != 0)
        p = add(p, scale(u[c], config.column(outside[c])));
    points.push_back(std::move(p));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<IntVec> out;
  for (const auto &p : points) {
    bool minimal = true;
    for (const auto &q : points)
      if (q != p && divides(config, q, p)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(p);
  }
  config.cache_list(std::move(key), out);
  return out;
}

bool covered(const Configuration &config, const std::vector<Pair> &pairs,
             const IntVec &point) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const Pair &p) {
    return pair_contains(config, p, point);
  });
}

std::optional<IntVec> uncovered_point(const Configuration &config,
                                      const Pair &candidate,
                                      const std::vector<Pair> &pairs,
                                      const EngineOptions &options) {
  for (const auto &q : pairs)
    if (pair_prec(config, candidate, q))
      return std::nullopt;
  // Carve out a pair over a face containing G that meets a + NG, then
  // examine the pieces left over.
  for (const auto &q : pairs) {
    if (!config.face_subset(candidate.face, q.face))
      continue;
    if (!translates_meet(config, candidate.root, candidate.face, q.root, q.face,
                         options))
      continue;
    auto pieces = pair_difference(config, candidate.root, candidate.face,
                                  q.root, q.face, options);
    std::vector<Pair> rest;
    for (const auto &r : pairs)
      if (!(r == q))
        rest.push_back(r);
    for (const auto &piece : pieces.pairs)
      if (auto x = uncovered_point(config, piece, rest, options))
        return x;
    return std::nullopt;
  }
  // Only pairs over faces not containing G remain. Each misses a column of
  // G, and some facet through its face grows along that column, so going
  // deep enough into the interior of a + NG escapes all of them.
  IntVec step(config.dim(), 0);
  for (auto j : config.face(candidate.face).indices)
    step = add(step, config.column(j));
  Int k = 0;
  for (const auto &q : pairs) {
    if (config.face_subset(candidate.face, q.face))
      continue;
    Int best = -1;
    for (auto h : config.face(q.face).containing_facets) {
      Int rate = config.support_value(h, step);
      if (rate <= 0)
        continue;
      Int gap = config.support_value(h, q.root) -
                config.support_value(h, candidate.root);
      Int need = gap < 0 ? 0 : gap / rate + 1;
      if (best < 0 || need < best)
        best = need;
    }
    k = std::max(k, best);
  }
  return add(candidate.root, scale(k, step));
}

std::optional<IntVec> first_mismatch(const Configuration &config,
                                     const std::vector<Pair> &pairs,
                                     const StdOracle &is_standard, Int bound) {
  for (const auto &p : points_up_to(config, bound))
    if (covered(config, pairs, p) != is_standard(p))
      return p;
  return std::nullopt;
}

StandardPairSet overlap_classes(const Configuration &config,
                                std::vector<Pair> pairs) {
  sort_unique(pairs);
  StandardPairSet out;
  out.pairs = pairs;
  const std::size_t n = pairs.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pairs[i].face == pairs[j].face &&
          pair_overlaps(config, pairs[i], pairs[j]))
        uf.unite(i, j);
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = uf.find(i);
    auto [it, inserted] = class_of_root.emplace(r, out.classes.size());
    if (inserted) {
      out.classes.emplace_back();
      out.class_faces.push_back(pairs[i].face);
    }
    out.classes[it->second].push_back(i);
  }
  const std::size_t c = out.classes.size();
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (i != j && pair_divides(config, pairs[out.classes[i][0]],
                                 pairs[out.classes[j][0]]))
        out.class_order.emplace_back(i, j);
  for (std::size_t i = 0; i < c; ++i) {
    bool maximal = std::none_of(
        out.class_order.begin(), out.class_order.end(), [&](const auto &e) {
          return e.first == i && out.class_faces[e.second] == out.class_faces[i];
        });
    if (maximal)
      out.maximal_classes[out.class_faces[i]].push_back(i);
  }
  return out;
}

StandardPairSet refine_cover(const Configuration &config, const Cover &cover,
                             const StdOracle &is_standard,
                             const EngineOptions &options) {
  if (options.verify_bound > 0)
    if (auto x = first_mismatch(config, cover.pairs, is_standard,
                                options.verify_bound))
      throw Error(ErrorKind::NotACover,
                  "the cover disagrees with the oracle at " + format_vector(*x),
                  *x);
  Refiner refiner(config, is_standard, options);
  auto pairs = refiner.run(cover.pairs);
  if (options.verify_bound > 0)
    if (auto x =
            first_mismatch(config, pairs, is_standard, options.verify_bound))
      throw Error(ErrorKind::NotACover,
                  "refined pairs disagree with the oracle at " +
                      format_vector(*x),
                  *x);
  return overlap_classes(config, std::move(pairs));
}

namespace {

bool in_any_ideal(const Configuration &config, const std::vector<IntVec> &gens,
                  const IntVec &p) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const IntVec &g) { return divides(config, g, p); });
}

// Standard pairs of <gens, b> from those of <gens>.
std::vector<Pair> subtract_generator(const Configuration &config,
                                     const std::vector<Pair> &pairs,
                                     std::vector<IntVec> &gens, const IntVec &b,
                                     const EngineOptions &options) {
  Cover cover;
  for (const auto &p : pairs) {
    auto pieces = pair_difference(config, p.root, p.face, b,
                                  config.full_face(), options);
    cover.pairs.insert(cover.pairs.end(), pieces.pairs.begin(),
                       pieces.pairs.end());
  }
  gens.push_back(b);
  if (cover.pairs.empty())
    return {};
  StdOracle oracle = [&](const IntVec &p) {
    return !in_any_ideal(config, gens, p);
  };
  return refine_cover(config, cover, oracle, options).pairs;
}

} // namespace

StandardPairSet standard_pairs(const MonomialIdeal &ideal,
                               const EngineOptions &options) {
  const Configuration &config = ideal.config();
  std::vector<Pair> pairs{{IntVec(config.dim(), 0), config.full_face()}};
  std::vector<IntVec> gens;
  for (const auto &g : ideal.generators())
    pairs = subtract_generator(config, pairs, gens, g.degree, options);
  return overlap_classes(config, std::move(pairs));
}

namespace {

// Walks down from a point of the ideal to a minimal generator.
IntVec descend(const Configuration &config, const std::vector<Pair> &std_pairs,
               IntVec x) {
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t j = 0; j < config.size(); ++j) {
      IntVec y = sub(x, config.column(j));
      if (is_member(config, y) && !covered(config, std_pairs, y)) {
        x = std::move(y);
        moved = true;
        break;
      }
    }
  }
  return x;
}

} // namespace

MonomialIdeal pairs_to_generators(ConfigPtr config_ptr,
                                  const StandardPairSet &std_pairs,
                                  const EngineOptions &options) {
  const Configuration &config = *config_ptr;
  const auto &target = std_pairs.pairs;
  std::set<IntVec> found;
  auto add_generator = [&](const IntVec &x) {
    found.insert(descend(config, target, x));
  };

  // Monomials forced into the ideal by leaving a maximal class through a
  // column outside its face.
  for (const auto &[face, classes] : std_pairs.maximal_classes)
    for (auto c : classes)
      for (auto i : std_pairs.classes[c]) {
        const Pair &p = std_pairs.pairs[i];
        for (std::size_t j = 0; j < config.size(); ++j) {
          if (config.in_face(p.face, j))
            continue;
          IntVec x = add(p.root, config.column(j));
          if (!covered(config, target, x))
            add_generator(x);
        }
      }

  std::vector<IntVec> gens;
  std::vector<Pair> pairs{{IntVec(config.dim(), 0), config.full_face()}};
  std::vector<IntVec> pending(found.begin(), found.end());
  std::vector<Pair> sorted_target = target;
  sort_unique(sorted_target);
  for (std::size_t round = 0;; ++round) {
    if (round >= options.iteration_budget)
      throw Error(ErrorKind::IterationBudgetExceeded,
                  "generator recovery did not finish within " +
                      std::to_string(options.iteration_budget) + " rounds");
    for (const auto &x : pending)
      if (!in_any_ideal(config, gens, x))
        pairs = subtract_generator(config, pairs, gens, x, options);
    sort_unique(pairs);
    if (pairs == sorted_target)
      break;
    // Points standard for the current ideal but not for the target lie in
    // the target ideal and outside the current one.
    std::set<IntVec> next;
    for (const auto &p : pairs) {
      if (std::binary_search(sorted_target.begin(), sorted_target.end(), p))
        continue;
      if (auto x = uncovered_point(config, p, target, options))
        next.insert(descend(config, target, *x));
    }
    if (next.empty())
      throw std::logic_error("generator recovery stalled");
    pending.assign(next.begin(), next.end());
  }
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal::from_degrees(std::move(config_ptr), gens);
}

MonomialIdeal intersect(const MonomialIdeal &i, const MonomialIdeal &j,
                        const EngineOptions &options) {
  if (i.config_ptr() != j.config_ptr() &&
      !(i.config().matrix() == j.config().matrix()))
    throw Error(ErrorKind::InvalidArgument,
                "ideals live over different configurations");
  const Configuration &config = i.config();
  auto si = standard_pairs(i, options);
  auto sj = standard_pairs(j, options);
  Cover cover;
  cover.pairs = si.pairs;
  cover.pairs.insert(cover.pairs.end(), sj.pairs.begin(), sj.pairs.end());
  if (cover.pairs.empty())
    return MonomialIdeal::unit(i.config_ptr());
  StdOracle oracle = [&](const IntVec &p) {
    return !ideal_member(i, p) || !ideal_member(j, p);
  };
  auto s = refine_cover(config, cover, oracle, options);
  return pairs_to_generators(i.config_ptr(), s, options);
}

bool same_ideal(const MonomialIdeal &i, const MonomialIdeal &j,
                const EngineOptions &options) {
  return standard_pairs(i, options).pairs == standard_pairs(j, options).pairs;
}

} // namespace stdpairs
