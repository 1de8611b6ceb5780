#include "stdpairs/polyhedral.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>

namespace stdpairs {

std::optional<IntVec> LatticeChart::coordinates(const IntVec &p) const {
  if (small) {
    IntVec c(rank);
    for (std::size_t i = 0; i < U_small.rows(); ++i) {
      __int128 y = 0;
      for (std::size_t j = 0; j < p.size(); ++j)
        y += static_cast<__int128>(U_small(i, j)) * p[j];
      if (i < rank) {
        if (y % invariants_small[i] != 0)
          return std::nullopt;
        y /= invariants_small[i];
        if (y > std::numeric_limits<Int>::max() || y < std::numeric_limits<Int>::min())
          throw Error(ErrorKind::Overflow, "lattice coordinate out of range");
        c[i] = static_cast<Int>(y);
      } else if (y != 0) {
        return std::nullopt;
      }
    }
    return c;
  }
  BigVec y = multiply(U, to_big(p));
  IntVec c(rank);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < rank) {
      if (y[i] % invariants[i] != 0)
        return std::nullopt;
      c[i] = to_int(y[i] / invariants[i]);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return c;
}

std::optional<BigVec> LatticeChart::scaled_coordinates(const IntVec &p) const {
  BigVec y = multiply(U, to_big(p));
  BigVec c(rank);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < rank)
      c[i] = y[i] * (scale / invariants[i]);
    else if (y[i] != 0)
      return std::nullopt;
  }
  return c;
}

LatticeChart lattice_chart(const IntMatrix &a) {
  SmithDecomposition s = smith_decomposition(a);
  LatticeChart chart;
  chart.U = s.U;
  chart.rank = s.rank;
  chart.scale = 1;
  for (std::size_t i = 0; i < s.rank; ++i) {
    chart.invariants.push_back(s.D(i, i));
    chart.scale = lcm(chart.scale, s.D(i, i));
  }
  // Entries below 2^31 keep every product with an Int inside 128 bits.
  const BigInt limit = BigInt(1) << 31;
  chart.small = std::all_of(chart.invariants.begin(), chart.invariants.end(),
                            [&](const BigInt &d) { return abs(d) < limit; });
  for (std::size_t i = 0; chart.small && i < s.U.rows(); ++i)
    for (std::size_t j = 0; chart.small && j < s.U.cols(); ++j)
      chart.small = abs(s.U(i, j)) < limit;
  if (chart.small) {
    chart.U_small = IntMatrix(s.U.rows(), s.U.cols());
    for (std::size_t i = 0; i < s.U.rows(); ++i)
      for (std::size_t j = 0; j < s.U.cols(); ++j)
        chart.U_small(i, j) = to_int(s.U(i, j));
    for (const auto &d : chart.invariants)
      chart.invariants_small.push_back(to_int(d));
  }
  chart.column_coordinates = IntMatrix(s.rank, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto c = chart.coordinates(a.column(j));
    for (std::size_t i = 0; i < s.rank; ++i)
      chart.column_coordinates(i, j) = (*c)[i];
  }
  return chart;
}

namespace {

using Mask = std::uint64_t;

struct Ray {
  BigVec v;
  Mask zeros = 0;
};

BigInt dot_big(const BigVec &a, const IntVec &b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * BigInt(static_cast<long>(b[i]));
  return s;
}

// Columns of the inverse of the square matrix whose rows are the given
// vectors, scaled to primitive integer vectors.
std::vector<BigVec> inverse_columns(const std::vector<IntVec> &rows) {
  const std::size_t r = rows.size();
  std::vector<std::vector<mpq_class>> m(r, std::vector<mpq_class>(2 * r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      m[i][j] = mpq_class(static_cast<long>(rows[i][j]));
    m[i][r + i] = 1;
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0)
      ++p;
    std::swap(m[p], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto &x : m[c])
      x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || m[i][c] == 0)
        continue;
      mpq_class f = m[i][c];
      for (std::size_t j = 0; j < 2 * r; ++j)
        m[i][j] -= f * m[c][j];
    }
  }
  std::vector<BigVec> cols;
  for (std::size_t k = 0; k < r; ++k) {
    BigInt den = 1;
    for (std::size_t i = 0; i < r; ++i)
      den = lcm(den, m[i][r + k].get_den());
    BigVec v(r);
    for (std::size_t i = 0; i < r; ++i) {
      mpq_class x = m[i][r + k] * den;
      v[i] = x.get_num();
    }
    cols.push_back(primitive(v));
  }
  return cols;
}

// Extreme rays of {psi : psi . b_j >= 0 for all columns b_j} by the double
// description method. The input cone is full-dimensional and pointed in the
// lattice coordinates, so the dual is as well.
std::vector<Ray> dual_extreme_rays(const IntMatrix &b) {
  const std::size_t r = b.rows(), n = b.cols();
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back(b.column(j));

  std::vector<std::size_t> basis;
  for (std::size_t j = 0; j < n && basis.size() < r; ++j) {
    auto trial = basis;
    trial.push_back(j);
    if (rank(select_columns(b, trial)) == trial.size())
      basis = std::move(trial);
  }

  std::vector<IntVec> rows;
  for (auto j : basis)
    rows.push_back(cols[j]);
  std::vector<Ray> rays;
  Mask basis_mask = 0;
  for (auto j : basis)
    basis_mask |= Mask{1} << j;
  auto inv = inverse_columns(rows);
  for (std::size_t k = 0; k < r; ++k)
    rays.push_back({inv[k], basis_mask & ~(Mask{1} << basis[k])});

  const long need = static_cast<long>(r) - 2;
  for (std::size_t j = 0; j < n; ++j) {
    if (basis_mask & (Mask{1} << j))
      continue;
    std::vector<BigInt> val(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k)
      val[k] = dot_big(rays[k].v, cols[j]);
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] > 0)
        next.push_back(rays[k]);
      else if (val[k] == 0)
        next.push_back({rays[k].v, rays[k].zeros | (Mask{1} << j)});
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (!(val[p] > 0))
        continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (!(val[q] < 0))
          continue;
        Mask common = rays[p].zeros & rays[q].zeros;
        if (static_cast<long>(std::popcount(common)) < need)
          continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != q && (rays[o].zeros & common) == common)
            adjacent = false;
        if (!adjacent)
          continue;
        BigVec w(r);
        for (std::size_t i = 0; i < r; ++i)
          w[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
        next.push_back({primitive(w), common | (Mask{1} << j)});
      }
    }
    rays = std::move(next);
  }
  return rays;
}

} // namespace

std::vector<SupportFunction> compute_facets(const IntMatrix &a) {
  return compute_facets(a, lattice_chart(a));
}

std::vector<SupportFunction> compute_facets(const IntMatrix &a,
                                            const LatticeChart &chart) {
  if (a.cols() > 64)
    throw Error(ErrorKind::InvalidArgument,
                "configurations with more than 64 columns are not supported");
  const IntMatrix &b = chart.column_coordinates;
  std::vector<SupportFunction> out;
  for (const Ray &ray : dual_extreme_rays(b)) {
    SupportFunction f;
    for (const auto &x : ray.v)
      f.lattice_form.push_back(to_int(x));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int v = dot(f.lattice_form, b.column(j));
      f.column_values.push_back(v);
      if (v == 0)
        f.facet.push_back(j);
    }
    // Express phi on ambient coordinates: sum_i psi_i (L / d_i) U_i, over L.
    BigVec coef(a.rows(), BigInt(0));
    for (std::size_t i = 0; i < chart.rank; ++i) {
      BigInt w = ray.v[i] * (chart.scale / chart.invariants[i]);
      for (std::size_t k = 0; k < a.rows(); ++k)
        coef[k] += w * chart.U(i, k);
    }
    BigInt g = chart.scale;
    for (const auto &c : coef)
      g = gcd(g, c);
    for (const auto &c : coef)
      f.coefficients.push_back(to_int(c / g));
    f.denominator = to_int(chart.scale / g);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const SupportFunction &x, const SupportFunction &y) {
              if (x.facet.size() != y.facet.size())
                return x.facet.size() < y.facet.size();
              return x.facet < y.facet;
            });
  return out;
}

std::vector<Face> face_lattice(const IntMatrix &a,
                               const std::vector<SupportFunction> &facets) {
  const std::size_t n = a.cols();
  std::vector<Mask> fm;
  for (const auto &f : facets) {
    Mask m = 0;
    for (auto j : f.facet)
      m |= Mask{1} << j;
    fm.push_back(m);
  }
  const Mask full = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::set<Mask> seen{full};
  std::vector<Mask> queue{full};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Mask f = queue[k];
    for (Mask h : fm) {
      if ((f & ~h) == 0)
        continue;
      Mask g = f & h;
      if (seen.insert(g).second)
        queue.push_back(g);
    }
  }
  std::vector<Face> faces;
  for (Mask m : seen) {
    Face face;
    for (std::size_t j = 0; j < n; ++j)
      if (m & (Mask{1} << j))
        face.indices.push_back(j);
    for (std::size_t h = 0; h < fm.size(); ++h)
      if ((m & ~fm[h]) == 0)
        face.containing_facets.push_back(h);
    face.dimension = face.indices.empty() ? 0 : rank(select_columns(a, face.indices));
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face &x, const Face &y) {
    if (x.indices.size() != y.indices.size())
      return x.indices.size() < y.indices.size();
    return x.indices < y.indices;
  });
  return faces;
}

Face smallest_face_containing(const LatticeChart &chart,
                              const std::vector<SupportFunction> &facets,
                              const IntVec &point) {
  auto s = chart.scaled_coordinates(point);
  if (!s)
    throw Error(ErrorKind::OutsideCone, "point is outside the linear span");
  const std::size_t n = chart.column_coordinates.cols();
  Face face;
  std::vector<char> in(n, 1);
  for (std::size_t h = 0; h < facets.size(); ++h) {
    BigInt v = 0;
    for (std::size_t i = 0; i < s->size(); ++i)
      v += (*s)[i] * BigInt(static_cast<long>(facets[h].lattice_form[i]));
    if (v < 0)
      throw Error(ErrorKind::OutsideCone, "point is outside the cone");
    if (v == 0) {
      face.containing_facets.push_back(h);
      for (std::size_t j = 0; j < n; ++j)
        if (facets[h].column_values[j] != 0)
          in[j] = 0;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (in[j])
      face.indices.push_back(j);
  face.dimension = face.indices.empty()
                       ? 0
                       : rank(select_columns(chart.column_coordinates, face.indices));
  return face;
}

} // namespace stdpairs
