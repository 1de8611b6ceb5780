#pragma once

#include "oracles.hpp"
#include "stdpairs/semigroup.hpp"

#include <string>
#include <vector>

namespace fixture {

using stdpairs::ConfigPtr;
using stdpairs::Configuration;
using stdpairs::FaceId;
using stdpairs::IntMatrix;
using stdpairs::IntVec;

struct Setup {
  std::string name;
  IntMatrix matrix;
  IntVec grading; // positive on every column, for the brute-force oracle
};

inline Setup plane() { return {"plane", IntMatrix::from_rows({{1, 0}, {0, 1}}), {1, 1}}; }

// Columns (1,0), (1,1), (1,2).
inline Setup wedge() {
  return {"wedge", IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}), {1, 0}};
}

// Cone over the unit square at height one.
inline Setup square_cone() {
  return {"square_cone",
          IntMatrix::from_rows({{0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}}),
          {0, 0, 1}};
}

// Columns (0,2,0), (0,0,2), (1,0,0), (1,1,0), (1,0,1), (1,1,1).
inline Setup holey_cube() {
  return {"holey_cube",
          IntMatrix::from_rows(
              {{0, 0, 1, 1, 1, 1}, {2, 0, 0, 1, 0, 1}, {0, 2, 0, 0, 1, 1}}),
          {1, 1, 1}};
}

// k[xy, xy^2, x^2, x^3].
inline Setup gapped_plane() {
  return {"gapped_plane", IntMatrix::from_rows({{1, 1, 2, 3}, {1, 2, 0, 0}}),
          {1, 0}};
}

// k[x^2, y, xy].
inline Setup even_plane() {
  return {"even_plane", IntMatrix::from_rows({{2, 0, 1}, {0, 1, 1}}), {1, 1}};
}

inline std::vector<Setup> all() {
  return {plane(), wedge(), square_cone(), holey_cube(), gapped_plane(),
          even_plane()};
}

inline ConfigPtr config(const Setup &s) {
  return Configuration::validate(s.matrix);
}

inline oracle::Semigroup semigroup(const Setup &s) {
  return oracle::Semigroup(s.matrix, s.grading);
}

// Face by 0-based column indices; fails the calling test if absent.
inline FaceId face(const Configuration &c, std::vector<std::size_t> idx) {
  auto f = c.find_face(idx);
  if (!f)
    throw std::runtime_error("fixture face missing");
  return *f;
}

} // namespace fixture
