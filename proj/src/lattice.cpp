#include "stdpairs/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace stdpairs {

namespace {

// Position of the nonzero entry of smallest magnitude in D[t.., t..].
bool smallest_entry(const BigMatrix &d, std::size_t t, std::size_t &pi,
                    std::size_t &pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0)
        continue;
      BigInt a = abs(d(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

} // namespace

SmithDecomposition smith_decomposition(const BigMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  BigMatrix d = m;
  BigMatrix u = BigMatrix::identity(rows);
  BigMatrix v = BigMatrix::identity(cols);
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!smallest_entry(d, t, pi, pj))
      break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0)
          continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) {
          clean = false;
          d.swap_rows(t, i);
          u.swap_rows(t, i);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0)
          continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) {
          clean = false;
          d.swap_cols(t, j);
          v.swap_cols(t, j);
        }
      }
      if (!clean)
        continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, BigInt(1));
            u.add_row(t, i, BigInt(1));
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j)
        d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j)
        u(t, j) = -u(t, j);
    }
  }
  return {std::move(u), std::move(d), std::move(v), t};
}

SmithDecomposition smith_decomposition(const IntMatrix &m) {
  return smith_decomposition(to_big(m));
}

std::size_t rank(const BigMatrix &m) {
  BigMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0)
      ++p;
    if (p == a.rows())
      continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0)
        continue;
      BigInt f = a(i, c), g = a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a(i, j) = g * a(i, j) - f * a(r, j);
      BigInt h = 0;
      for (std::size_t j = 0; j < a.cols(); ++j)
        h = gcd(h, a(i, j));
      if (h > 1)
        for (std::size_t j = 0; j < a.cols(); ++j)
          a(i, j) /= h;
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix &m) { return rank(to_big(m)); }

std::vector<BigVec> kernel_basis(const BigMatrix &m) {
  SmithDecomposition s = smith_decomposition(m);
  std::vector<BigVec> basis;
  for (std::size_t j = s.rank; j < m.cols(); ++j)
    basis.push_back(s.V.column(j));
  return basis;
}

std::vector<BigVec> kernel_basis(const IntMatrix &m) {
  return kernel_basis(to_big(m));
}

std::optional<BigVec> integer_solve(const SmithDecomposition &snf,
                                    const BigVec &b) {
  BigVec y = multiply(snf.U, b);
  BigVec z(snf.V.rows(), BigInt(0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.rank) {
      if (y[i] % snf.D(i, i) != 0)
        return std::nullopt;
      z[i] = y[i] / snf.D(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return multiply(snf.V, z);
}

std::optional<BigVec> integer_solve(const BigMatrix &m, const BigVec &b) {
  return integer_solve(smith_decomposition(m), b);
}

bool lattice_membership(const std::vector<IntVec> &vectors,
                        const IntVec &point) {
  if (vectors.empty())
    return is_zero(point);
  IntMatrix b = IntMatrix::from_columns(vectors, point.size());
  return integer_solve(to_big(b), to_big(point)).has_value();
}

BigVec primitive(const BigVec &v) {
  BigInt g = 0;
  for (const auto &x : v)
    g = gcd(g, x);
  if (g == 0 || g == 1)
    return v;
  BigVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = v[i] / g;
  return r;
}

} // namespace stdpairs
