#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/polyhedral.hpp"

#include <numeric>

using namespace stdpairs;

namespace {

using Indices = std::vector<std::size_t>;

std::vector<Indices> face_sets(const std::vector<Face> &faces) {
  std::vector<Indices> out;
  for (const auto &f : faces)
    out.push_back(f.indices);
  return out;
}

} // namespace

TEST_CASE("orthant facets") {
  auto f = compute_facets(IntMatrix::identity(2));
  REQUIRE(f.size() == 2);
  CHECK(f[0].coefficients == IntVec{0, 1});
  CHECK(f[0].facet == Indices{0});
  CHECK(f[1].coefficients == IntVec{1, 0});
  CHECK(f[1].facet == Indices{1});
}

TEST_CASE("wedge facets") {
  auto f = compute_facets(fixture::wedge().matrix);
  REQUIRE(f.size() == 2);
  CHECK(f[0].coefficients == IntVec{0, 1});
  CHECK(f[0].facet == Indices{0});
  CHECK(f[0].column_values == IntVec{0, 1, 2});
  CHECK(f[1].coefficients == IntVec{2, -1});
  CHECK(f[1].facet == Indices{2});
  CHECK(f[1].column_values == IntVec{2, 1, 0});
}

TEST_CASE("facets agree with brute-force enumeration of primitive forms") {
  for (const auto &s : fixture::all()) {
    CAPTURE(s.name);
    auto facets = compute_facets(s.matrix);
    auto brute = oracle::brute_facets(s.matrix, 4);
    REQUIRE(facets.size() == brute.size());
    std::sort(brute.begin(), brute.end(), [](const auto &a, const auto &b) {
      if (a.facet.size() != b.facet.size())
        return a.facet.size() < b.facet.size();
      return a.facet < b.facet;
    });
    for (std::size_t k = 0; k < facets.size(); ++k) {
      CHECK(facets[k].facet == brute[k].facet);
      CHECK(facets[k].coefficients == brute[k].form);
      CHECK(facets[k].denominator == 1);
    }
  }
  CHECK(compute_facets(fixture::square_cone().matrix).size() == 4);
}

TEST_CASE("support functions satisfy their defining conditions") {
  for (const auto &s : fixture::all()) {
    CAPTURE(s.name);
    auto cols = oracle::columns(s.matrix);
    for (const auto &f : compute_facets(s.matrix)) {
      Int g = 0;
      for (Int c : f.coefficients)
        g = std::gcd(g, c);
      CHECK(g == 1);
      Indices zero;
      std::vector<IntVec> zc;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        Int v = oracle::dotv(f.coefficients, cols[j]);
        CHECK(v >= 0);
        CHECK(v == f.column_values[j]);
        if (v == 0) {
          zero.push_back(j);
          zc.push_back(cols[j]);
        }
      }
      CHECK(zero == f.facet);
      CHECK(oracle::rank_of_columns(zc) ==
            static_cast<Int>(s.matrix.rows()) - 1);
    }
  }
}

TEST_CASE("face lattices") {
  auto plane = compute_facets(IntMatrix::identity(2));
  CHECK(face_sets(face_lattice(IntMatrix::identity(2), plane)) ==
        std::vector<Indices>{{}, {0}, {1}, {0, 1}});

  auto w = fixture::wedge().matrix;
  CHECK(face_sets(face_lattice(w, compute_facets(w))) ==
        std::vector<Indices>{{}, {0}, {2}, {0, 1, 2}});

  auto h = fixture::holey_cube().matrix;
  auto hf = face_sets(face_lattice(h, compute_facets(h)));
  CHECK(std::find(hf.begin(), hf.end(), Indices{0, 1}) != hf.end());
  CHECK(std::find(hf.begin(), hf.end(), Indices{0}) != hf.end());
}

TEST_CASE("face lattice invariants") {
  for (const auto &s : fixture::all()) {
    CAPTURE(s.name);
    auto facets = compute_facets(s.matrix);
    auto faces = face_lattice(s.matrix, facets);
    auto sets = face_sets(faces);
    REQUIRE(!faces.empty());
    CHECK(faces.front().indices.empty());
    Indices all(s.matrix.cols());
    std::iota(all.begin(), all.end(), 0);
    CHECK(faces.back().indices == all);
    for (const auto &f : faces) {
      // Exactly the columns on which every containing facet vanishes.
      Indices expect;
      for (std::size_t j = 0; j < s.matrix.cols(); ++j)
        if (std::all_of(f.containing_facets.begin(), f.containing_facets.end(),
                        [&](std::size_t h) {
                          return facets[h].column_values[j] == 0;
                        }))
          expect.push_back(j);
      CHECK(expect == f.indices);
      // Containing facets are exactly those vanishing on the face.
      for (std::size_t h = 0; h < facets.size(); ++h) {
        bool vanishes = std::all_of(f.indices.begin(), f.indices.end(),
                                    [&](std::size_t j) {
                                      return facets[h].column_values[j] == 0;
                                    });
        bool listed = std::find(f.containing_facets.begin(),
                                f.containing_facets.end(),
                                h) != f.containing_facets.end();
        CHECK(vanishes == listed);
      }
    }
    for (const auto &a : sets)
      for (const auto &b : sets) {
        Indices c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(c));
        CHECK(std::find(sets.begin(), sets.end(), c) != sets.end());
      }
    // Columns missing from every facet are interior.
    for (std::size_t j = 0; j < s.matrix.cols(); ++j) {
      bool on_facet = std::any_of(facets.begin(), facets.end(), [&](const auto &f) {
        return f.column_values[j] == 0;
      });
      bool interior = std::all_of(facets.begin(), facets.end(), [&](const auto &f) {
        return f.column_values[j] > 0;
      });
      CHECK(on_facet != interior);
    }
  }
}

TEST_CASE("smallest face containing a point") {
  auto id = IntMatrix::identity(2);
  auto chart = lattice_chart(id);
  auto facets = compute_facets(id, chart);
  CHECK(smallest_face_containing(chart, facets, {3, 0}).indices == Indices{0});

  auto w = fixture::wedge().matrix;
  auto wc = lattice_chart(w);
  auto wf = compute_facets(w, wc);
  CHECK(smallest_face_containing(wc, wf, {2, 1}).indices == Indices{0, 1, 2});
  CHECK(smallest_face_containing(wc, wf, {0, 0}).indices.empty());
  try {
    smallest_face_containing(wc, wf, {1, 3});
    FAIL("expected OutsideCone");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::OutsideCone);
  }
}

TEST_CASE("cones that are not full-dimensional") {
  // A two-dimensional cone in three-space.
  auto a = IntMatrix::from_rows({{1, 1}, {0, 1}, {0, 1}});
  auto facets = compute_facets(a);
  REQUIRE(facets.size() == 2);
  for (const auto &f : facets) {
    CHECK(f.facet.size() == 1);
    CHECK(f.column_values[f.facet[0]] == 0);
    CHECK(f.column_values[1 - f.facet[0]] == 1);
  }
  CHECK(face_lattice(a, facets).size() == 4);

  // ZA of index four in Z^2: values on the lattice are still primitive.
  auto b = IntMatrix::from_rows({{2, 0}, {0, 2}});
  for (const auto &f : compute_facets(b))
    CHECK(f.column_values[1 - f.facet[0]] == 1);
}
