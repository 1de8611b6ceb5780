#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/pairs_engine.hpp"

#include <random>

using namespace stdpairs;

namespace {

std::vector<Pair> sorted(std::vector<Pair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

template <class F> ErrorKind error_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

std::vector<std::vector<IntVec>> class_roots(const StandardPairSet &s) {
  std::vector<std::vector<IntVec>> out;
  for (const auto &c : s.classes) {
    std::vector<IntVec> roots;
    for (auto i : c)
      roots.push_back(s.pairs[i].root);
    std::sort(roots.begin(), roots.end());
    out.push_back(roots);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> maximal_roots(const StandardPairSet &s, FaceId f) {
  std::vector<IntVec> out;
  auto it = s.maximal_classes.find(f);
  if (it == s.maximal_classes.end())
    return out;
  for (auto c : it->second)
    for (auto i : s.classes[c])
      out.push_back(s.pairs[i].root);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> columns_of(const Configuration &c, FaceId f) {
  return c.face(f).indices;
}

} // namespace

TEST_CASE("pair difference over the wedge, with intermediates") {
  auto w = fixture::config(fixture::wedge());
  auto full = w->full_face();
  auto f = fixture::face(*w, {0});
  auto g = fixture::face(*w, {2});
  PairDifferenceTrace trace;
  auto cover = pair_difference(*w, {0, 0}, full, {2, 2}, full, {}, &trace);
  auto u = trace.minimal_u;
  std::sort(u.begin(), u.end());
  CHECK(u == std::vector<IntVec>{{0, 2, 0}, {1, 0, 1}});
  CHECK(trace.poly_pairs == std::vector<PolyPair>{{{0, 0, 0}, {0}},
                                                  {{0, 1, 0}, {0}},
                                                  {{0, 0, 0}, {2}},
                                                  {{0, 1, 0}, {2}}});
  CHECK(sorted(cover.pairs) ==
        sorted({{{0, 0}, g}, {{1, 1}, g}, {{0, 0}, f}, {{1, 1}, f}}));

  CHECK(pair_difference(*w, {1, 1}, g, {1, 1}, g).pairs.empty());

  auto pts = pair_difference(*w, {1, 1}, f, {3, 1}, full);
  CHECK(sorted(pts.pairs) == sorted({{{1, 1}, w->origin()}, {{2, 1}, w->origin()}}));

  CHECK(error_of([&] { pair_difference(*w, {0, 0}, full, {0, 0}, f); }) ==
        ErrorKind::FaceNotContained);
}

TEST_CASE("pair difference is exact on random inputs") {
  std::mt19937 rng(5);
  for (const auto &s : fixture::all()) {
    CAPTURE(s.name);
    auto c = fixture::config(s);
    auto bf = fixture::semigroup(s);
    auto roots = points_up_to(*c, 2);
    auto pts = points_up_to(*c, 5);
    std::uniform_int_distribution<std::size_t> pr(0, roots.size() - 1),
        pf(0, c->faces().size() - 1);
    for (int t = 0; t < 12; ++t) {
      FaceId g{pf(rng)}, g2{pf(rng)};
      if (!c->face_subset(g, g2))
        std::swap(g, g2);
      if (!c->face_subset(g, g2))
        continue;
      IntVec b = roots[pr(rng)], b2 = roots[pr(rng)];
      auto cover = pair_difference(*c, b, g, b2, g2);
      for (const auto &p : cover.pairs)
        CHECK(c->face_subset(p.face, g));
      for (const auto &p : pts) {
        bool expect = oracle::in_translate(bf, b, columns_of(*c, g), p) &&
                      !oracle::in_translate(bf, b2, columns_of(*c, g2), p);
        bool got = std::any_of(cover.pairs.begin(), cover.pairs.end(),
                               [&](const Pair &q) {
                                 return oracle::in_translate(
                                     bf, q.root, columns_of(*c, q.face), p);
                               });
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("minimal elements of a translate") {
  auto plane = fixture::config(fixture::plane());
  CHECK(minimal_elements_in_translate(*plane, {2, 1}, fixture::face(*plane, {0})) ==
        std::vector<IntVec>{{0, 1}});
  auto w = fixture::config(fixture::wedge());
  CHECK(minimal_elements_in_translate(*w, {1, 1}, fixture::face(*w, {0})) ==
        std::vector<IntVec>{{1, 1}});
  CHECK(minimal_elements_in_translate(*w, {5, 3}, w->full_face()) ==
        std::vector<IntVec>{{0, 0}});
}

TEST_CASE("minimal elements of translates agree with enumeration") {
  std::mt19937 rng(17);
  for (const auto &s : fixture::all()) {
    CAPTURE(s.name);
    auto c = fixture::config(s);
    auto bf = fixture::semigroup(s);
    auto pts = points_up_to(*c, 6);
    std::uniform_int_distribution<std::size_t> pp(0, points_up_to(*c, 3).size() - 1),
        pf(0, c->faces().size() - 1);
    auto small = points_up_to(*c, 3);
    for (int t = 0; t < 10; ++t) {
      IntVec a = small[pp(rng)];
      FaceId f{pf(rng)};
      const auto &hs = c->face(f).containing_facets;
      auto same_translate = [&](const IntVec &p) {
        return std::all_of(hs.begin(), hs.end(), [&](std::size_t h) {
          return c->support_value(h, p) == c->support_value(h, a);
        });
      };
      auto mins = minimal_elements_in_translate(*c, a, f);
      for (const auto &m : mins) {
        CHECK(bf.member(m));
        CHECK(same_translate(m));
        for (const auto &m2 : mins)
          if (m != m2)
            CHECK_FALSE(bf.divides(m, m2));
      }
      for (const auto &p : pts)
        if (same_translate(p))
          CHECK(std::any_of(mins.begin(), mins.end(),
                            [&](const IntVec &m) { return bf.divides(m, p); }));
    }
  }
}

TEST_CASE("refining covers") {
  auto w = fixture::config(fixture::wedge());
  auto f = fixture::face(*w, {0});
  auto g = fixture::face(*w, {2});
  auto o = w->origin();
  auto ideal = MonomialIdeal::from_degrees(w, {{2, 2}, {3, 1}});
  StdOracle std_oracle = [&](const IntVec &p) { return !ideal_member(ideal, p); };
  const std::vector<Pair> expected{{{2, 1}, o}, {{0, 0}, f}, {{0, 0}, g}, {{1, 1}, g}};

  // The intermediate cover after subtracting both generators.
  Cover valid{{{{0, 0}, g}, {{1, 1}, g}, {{0, 0}, f}, {{1, 1}, o}, {{2, 1}, o}}};
  EngineOptions checked;
  checked.verify_bound = 10;
  CHECK(refine_cover(*w, valid, std_oracle, checked).pairs == expected);

  // Redundant small pairs are dropped.
  Cover with_origin = valid;
  with_origin.pairs.push_back({{0, 0}, o});
  CHECK(refine_cover(*w, with_origin, std_oracle, checked).pairs == expected);

  // Missing (2,1): not a cover of the standard monomials.
  Cover missing{{{{0, 0}, g}, {{1, 1}, g}, {{0, 0}, f}, {{0, 0}, o}, {{1, 1}, o}}};
  CHECK(error_of([&] { refine_cover(*w, missing, std_oracle, checked); }) ==
        ErrorKind::NotACover);

  // Already standard: unchanged.
  CHECK(refine_cover(*w, Cover{expected}, std_oracle, checked).pairs == expected);

  // Zero ideal over [1]: the origin alone is no cover; with the ray it is,
  // and face maximalization keeps only the full face.
  auto line = Configuration::validate(IntMatrix::from_rows({{1}}));
  StdOracle all = [](const IntVec &) { return true; };
  CHECK(error_of([&] {
          refine_cover(*line, Cover{{{{0}, line->origin()}}}, all, checked);
        }) == ErrorKind::NotACover);
  auto promoted = refine_cover(
      *line, Cover{{{{0}, line->origin()}, {{1}, line->full_face()}}}, all, checked);
  CHECK(promoted.pairs == std::vector<Pair>{{{0}, line->full_face()}});
}

TEST_CASE("standard pairs of the reference examples") {
  auto plane = fixture::config(fixture::plane());
  auto s1 = standard_pairs(MonomialIdeal::from_degrees(plane, {{3, 1}, {1, 2}}));
  CHECK(s1.pairs == sorted({{{1, 1}, plane->origin()},
                            {{2, 1}, plane->origin()},
                            {{0, 0}, fixture::face(*plane, {0})},
                            {{0, 0}, fixture::face(*plane, {1})}}));

  auto w = fixture::config(fixture::wedge());
  auto s2 = standard_pairs(MonomialIdeal::from_degrees(w, {{2, 2}, {3, 1}}));
  auto f = fixture::face(*w, {0});
  auto g = fixture::face(*w, {2});
  CHECK(s2.pairs ==
        sorted({{{0, 0}, g}, {{1, 1}, g}, {{0, 0}, f}, {{2, 1}, w->origin()}}));

  auto h = fixture::config(fixture::holey_cube());
  auto s3 = standard_pairs(
      MonomialIdeal::from_degrees(h, {{1, 0, 0}, {1, 1, 1}, {1, 1, 2}}));
  auto hf = fixture::face(*h, {0, 1});
  auto hg = fixture::face(*h, {0});
  CHECK(s3.pairs == sorted({{{0, 0, 0}, hf}, {{1, 0, 1}, hf}, {{1, 1, 0}, hg}}));
}

TEST_CASE("zero and unit ideals") {
  for (const auto &s : fixture::all()) {
    auto c = fixture::config(s);
    auto z = standard_pairs(MonomialIdeal::zero(c));
    CHECK(z.pairs == std::vector<Pair>{{IntVec(c->dim(), 0), c->full_face()}});
    CHECK(standard_pairs(MonomialIdeal::unit(c)).pairs.empty());
    CHECK(pairs_to_generators(c, z).is_zero());
    CHECK(pairs_to_generators(c, overlap_classes(*c, {})).is_unit());
  }
}

TEST_CASE("overlap classes") {
  auto sq = fixture::config(fixture::square_cone());
  auto normal = standard_pairs(
      MonomialIdeal::from_degrees(sq, {{2, 0, 2}, {2, 1, 2}, {2, 2, 2}}));
  auto f = fixture::face(*sq, {0, 2});
  CHECK(normal.pairs.size() == 3);
  CHECK(class_roots(normal) ==
        std::vector<std::vector<IntVec>>{{{0, 0, 0}}, {{1, 0, 1}, {1, 1, 1}}});
  CHECK(maximal_roots(normal, f) == std::vector<IntVec>{{1, 0, 1}, {1, 1, 1}});
  CHECK(normal.class_order.size() == 1);

  auto plane = fixture::config(fixture::plane());
  auto distinct = overlap_classes(
      *plane, {{{0, 0}, plane->origin()}, {{0, 0}, fixture::face(*plane, {0})},
               {{0, 0}, fixture::face(*plane, {1})}});
  CHECK(distinct.classes.size() == 3);
  CHECK(distinct.maximal_classes.size() == 3);

  auto even = fixture::config(fixture::even_plane());
  auto ef = fixture::face(*even, {0});
  auto ex = overlap_classes(*even, {{{0, 0}, ef}, {{0, 1}, ef}, {{1, 1}, ef}});
  CHECK(ex.classes.size() == 3);
  CHECK(maximal_roots(ex, ef) == std::vector<IntVec>{{0, 1}, {1, 1}});
}

TEST_CASE("class divisibility is a partial order") {
  for (const auto &s : fixture::all()) {
    CAPTURE(s.name);
    auto c = fixture::config(s);
    auto pts = points_up_to(*c, 2);
    std::vector<IntVec> gens(pts.end() - std::min<std::size_t>(3, pts.size() - 1),
                             pts.end());
    auto sp = standard_pairs(MonomialIdeal::from_degrees(c, gens));
    std::set<std::pair<std::size_t, std::size_t>> rel(sp.class_order.begin(),
                                                      sp.class_order.end());
    for (auto [a, b] : rel) {
      CHECK(a != b);
      CHECK_FALSE(rel.count({b, a}));
      for (auto [b2, e] : rel)
        if (b2 == b && a != e)
          CHECK(rel.count({a, e}));
    }
    for (std::size_t i = 0; i < sp.classes.size(); ++i)
      for (std::size_t j = 0; j < sp.classes.size(); ++j)
        if (i != j && sp.class_faces[i] == sp.class_faces[j])
          CHECK_FALSE(pair_overlaps(*c, sp.pairs[sp.classes[i][0]],
                                    sp.pairs[sp.classes[j][0]]));
  }
}

TEST_CASE("generators from standard pairs") {
  auto even = fixture::config(fixture::even_plane());
  auto ef = fixture::face(*even, {0});
  auto sp = overlap_classes(*even, {{{0, 0}, ef}, {{0, 1}, ef}, {{1, 1}, ef}});
  CHECK(pairs_to_generators(even, sp).sorted_degrees() ==
        std::vector<IntVec>{{0, 2}, {1, 2}});

  auto plane = fixture::config(fixture::plane());
  auto i = MonomialIdeal::from_degrees(plane, {{3, 1}, {1, 2}});
  CHECK(pairs_to_generators(plane, standard_pairs(i)).sorted_degrees() ==
        i.sorted_degrees());

  EngineOptions tight;
  tight.iteration_budget = 0;
  CHECK(error_of([&] { pairs_to_generators(even, sp, tight); }) ==
        ErrorKind::IterationBudgetExceeded);
}

TEST_CASE("intersections") {
  auto even = fixture::config(fixture::even_plane());
  auto a = MonomialIdeal::from_degrees(even, {{0, 1}});
  auto b = MonomialIdeal::from_degrees(even, {{1, 1}, {0, 2}});
  CHECK(intersect(a, b).sorted_degrees() == std::vector<IntVec>{{0, 2}, {1, 2}});

  auto w = fixture::config(fixture::wedge());
  auto i = MonomialIdeal::from_degrees(w, {{2, 2}, {3, 1}});
  CHECK(intersect(i, MonomialIdeal::unit(w)).sorted_degrees() == i.sorted_degrees());
  CHECK(intersect(i, i).sorted_degrees() == i.sorted_degrees());
  CHECK(intersect(i, MonomialIdeal::zero(w)).is_zero());
  CHECK(same_ideal(intersect(a, b), intersect(b, a)));
}

TEST_CASE("coverage helpers") {
  auto plane = fixture::config(fixture::plane());
  auto x = fixture::face(*plane, {0});
  std::vector<Pair> ps{{{0, 0}, x}, {{0, 1}, plane->origin()}};
  CHECK(covered(*plane, ps, {4, 0}));
  CHECK(covered(*plane, ps, {0, 1}));
  CHECK_FALSE(covered(*plane, ps, {1, 1}));

  auto hole = uncovered_point(*plane, {{0, 1}, x}, ps);
  REQUIRE(hole);
  CHECK_FALSE(covered(*plane, ps, *hole));
  CHECK(pair_contains(*plane, {{0, 1}, x}, *hole));
  CHECK_FALSE(uncovered_point(*plane, {{2, 0}, x}, ps));

  StdOracle low = [](const IntVec &p) { return p[1] <= 1 && p[0] == 0; };
  auto m = first_mismatch(*plane, ps, low, 4);
  REQUIRE(m);
  CHECK(covered(*plane, ps, *m) != low(*m));
}

TEST_CASE("results are deterministic") {
  auto h = fixture::config(fixture::holey_cube());
  auto i = MonomialIdeal::from_degrees(h, {{1, 1, 1}, {2, 0, 0}, {0, 2, 2}});
  auto a = standard_pairs(i);
  auto b = standard_pairs(i);
  CHECK(a.pairs == b.pairs);
  CHECK(a.classes == b.classes);
  CHECK(a.class_order == b.class_order);
  CHECK(a.maximal_classes == b.maximal_classes);
}
