#include "stdpairs/diophantine.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace stdpairs {

void DiophantineSystem::check() const {
  if (coefficients.cols() != signs.size())
    throw Error(ErrorKind::InvalidArgument,
                "sign pattern length differs from column count");
  if (coefficients.rows() != rhs.size())
    throw Error(ErrorKind::InvalidArgument,
                "right-hand side length differs from row count");
  if (grading && grading->size() != coefficients.rows())
    throw Error(ErrorKind::InvalidArgument,
                "grading length differs from row count");
}

DiophantineSystem DiophantineSystem::nonnegative(IntMatrix coefficients,
                                                 IntVec rhs) {
  std::vector<Sign> signs(coefficients.cols(), Sign::nonnegative);
  return {std::move(coefficients), std::move(rhs), std::move(signs),
          std::nullopt};
}

namespace {

struct CheckedOps {
  using T = Int;
  static T from(Int x) { return x; }
  static T add(T a, T b) { return checked_add(a, b); }
  static T mul(T a, T b) { return checked_mul(a, b); }
};

struct BigOps {
  using T = BigInt;
  static T from(Int x) { return BigInt(static_cast<long>(x)); }
  static T add(const T &a, const T &b) { return a + b; }
  static T mul(const T &a, const T &b) { return a * b; }
};

enum class Stop { never, first_inhomogeneous, first_homogeneous };

struct CompletionResult {
  std::vector<IntVec> homogeneous;   // auxiliary coordinate 0
  std::vector<IntVec> inhomogeneous; // auxiliary coordinate 1
};

// Completion loop over the homogenized system sum_j x_j col_j = 0. Vectors
// grow one unit at a time along columns whose product with the current
// defect is negative; vectors dominating a known solution are pruned. The
// auxiliary coordinate (if any) is capped at 1, which keeps every minimal
// solution reachable because the path to it stays below it.
template <class Ops>
CompletionResult complete(const std::vector<IntVec> &int_cols,
                          std::size_t aux, Stop stop, std::size_t budget) {
  using T = typename Ops::T;
  const std::size_t m = int_cols.size();
  const std::size_t rows = m ? int_cols[0].size() : 0;
  std::vector<std::vector<T>> cols(m, std::vector<T>(rows));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      cols[j][i] = Ops::from(int_cols[j][i]);

  struct Node {
    IntVec x;
    std::vector<T> defect;
  };
  auto is_zero_defect = [](const std::vector<T> &d) {
    return std::all_of(d.begin(), d.end(), [](const T &v) { return v == 0; });
  };

  CompletionResult result;
  auto dominated = [&](const IntVec &x) {
    for (const auto &s : result.homogeneous)
      if (leq(s, x))
        return true;
    for (const auto &s : result.inhomogeneous)
      if (leq(s, x))
        return true;
    return false;
  };

  std::vector<Node> level;
  for (std::size_t j = 0; j < m; ++j) {
    IntVec x(m, 0);
    x[j] = 1;
    level.push_back({std::move(x), cols[j]});
  }

  std::size_t steps = 0;
  while (!level.empty()) {
    steps += level.size();
    if (steps > budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "diophantine completion exceeded its step budget");

    std::vector<char> solved(level.size(), 0);
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (!is_zero_defect(level[k].defect))
        continue;
      solved[k] = 1;
      bool inhom = aux < m && level[k].x[aux] == 1;
      (inhom ? result.inhomogeneous : result.homogeneous).push_back(level[k].x);
      if ((inhom && stop == Stop::first_inhomogeneous) ||
          (!inhom && stop == Stop::first_homogeneous))
        return result;
    }

    std::vector<Node> next;
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (solved[k])
        continue;
      const Node &node = level[k];
      for (std::size_t j = 0; j < m; ++j) {
        if (j == aux && node.x[aux] >= 1)
          continue;
        T d = 0;
        for (std::size_t i = 0; i < rows; ++i)
          d = Ops::add(d, Ops::mul(node.defect[i], cols[j][i]));
        if (!(d < 0))
          continue;
        IntVec y = node.x;
        ++y[j];
        if (dominated(y))
          continue;
        std::vector<T> defect(rows);
        for (std::size_t i = 0; i < rows; ++i)
          defect[i] = Ops::add(node.defect[i], cols[j][i]);
        next.push_back({std::move(y), std::move(defect)});
      }
    }
    std::sort(next.begin(), next.end(),
              [](const Node &a, const Node &b) { return a.x < b.x; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Node &a, const Node &b) {
                             return a.x == b.x;
                           }),
               next.end());
    level = std::move(next);
  }
  return result;
}

CompletionResult run_completion(const std::vector<IntVec> &cols,
                                std::size_t aux, Stop stop,
                                std::size_t budget) {
  try {
    return complete<CheckedOps>(cols, aux, stop, budget);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::Overflow)
      throw;
  }
  return complete<BigOps>(cols, aux, stop, budget);
}

// Columns of the homogenized lifted system: free variables are split into a
// positive and a negative part, the last column is -rhs.
std::vector<IntVec> lifted_columns(const DiophantineSystem &s) {
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < s.signs.size(); ++j) {
    IntVec c = s.coefficients.column(j);
    cols.push_back(c);
    if (s.signs[j] == Sign::free) {
      for (auto &v : c)
        v = checked_sub(0, v);
      cols.push_back(std::move(c));
    }
  }
  IntVec b(s.rhs.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    b[i] = checked_sub(0, s.rhs[i]);
  cols.push_back(std::move(b));
  return cols;
}

IntVec unlift(const DiophantineSystem &s, const IntVec &lifted) {
  IntVec x;
  std::size_t k = 0;
  for (Sign sign : s.signs) {
    if (sign == Sign::nonnegative) {
      x.push_back(lifted[k++]);
    } else {
      x.push_back(checked_sub(lifted[k], lifted[k + 1]));
      k += 2;
    }
  }
  return x;
}

std::vector<std::size_t> indices_with(const DiophantineSystem &s, Sign sign) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < s.signs.size(); ++j)
    if (s.signs[j] == sign)
      idx.push_back(j);
  return idx;
}

// Bounded depth-first search for M x = b, x >= 0, given h with h.col >= 1.
class GradedSearch {
public:
  GradedSearch(const IntMatrix &m, const IntVec &h, std::size_t budget)
      : m_(m), h_(h), budget_(budget), x_(m.cols(), 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int v = dot(h, m.column(j));
      if (v < 1)
        throw Error(ErrorKind::InvalidArgument,
                    "grading is not positive on every column");
      hcol_.push_back(v);
      cols_.push_back(m.column(j));
    }
  }

  std::optional<IntVec> run(const IntVec &b) {
    IntVec r = b;
    if (go(0, r, dot(h_, b)))
      return x_;
    return std::nullopt;
  }

private:
  bool go(std::size_t j, IntVec &r, Int hr) {
    if (++steps_ > budget_)
      throw Error(ErrorKind::BudgetExceeded,
                  "bounded feasibility search exceeded its step budget");
    if (hr < 0)
      return false;
    if (hr == 0 || j == cols_.size())
      return is_zero(r);
    IntVec key = r;
    key.push_back(static_cast<Int>(j));
    if (failed_.count(key))
      return false;
    Int kmax = hr / hcol_[j];
    IntVec rest = r;
    for (Int k = 0; k < kmax; ++k)
      rest = sub(rest, cols_[j]);
    for (Int k = kmax; k >= 0; --k) {
      x_[j] = k;
      if (go(j + 1, rest, hr - k * hcol_[j]))
        return true;
      if (k > 0)
        rest = add(rest, cols_[j]);
    }
    x_[j] = 0;
    failed_.insert(std::move(key));
    return false;
  }

  const IntMatrix &m_;
  IntVec h_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  IntVec x_;
  std::vector<Int> hcol_;
  std::vector<IntVec> cols_;
  std::unordered_set<IntVec, IntVecHash> failed_;
};

} // namespace

MinimalSolutionSet minimal_solutions(const DiophantineSystem &system,
                                     const SolverOptions &options) {
  system.check();
  const auto free_idx = indices_with(system, Sign::free);
  const auto nonneg_idx = indices_with(system, Sign::nonnegative);
  std::optional<SmithDecomposition> free_snf;
  if (!free_idx.empty()) {
    BigMatrix mf = to_big(select_columns(system.coefficients, free_idx));
    free_snf = smith_decomposition(mf);
    if (free_snf->rank != free_idx.size())
      throw Error(ErrorKind::UnboundedFreePart,
                  "free variables are not determined by the nonnegative ones");
  }
  if (is_zero(system.rhs))
    return {{IntVec(system.signs.size(), 0)}};

  auto cols = lifted_columns(system);
  const std::size_t aux = cols.size() - 1;
  auto result = run_completion(cols, aux, Stop::never, options.step_budget);

  std::vector<IntVec> out;
  if (free_idx.empty()) {
    for (auto &v : result.inhomogeneous) {
      v.pop_back();
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), graded_less);
    return {std::move(out)};
  }

  // Minimal elements on the nonnegative coordinates, then recover the
  // (unique) free part.
  std::vector<IntVec> projected;
  for (const auto &v : result.inhomogeneous) {
    IntVec x = unlift(system, v);
    IntVec p;
    for (auto j : nonneg_idx)
      p.push_back(x[j]);
    projected.push_back(std::move(p));
  }
  projected = minimal_elements(std::move(projected));
  IntMatrix mn = select_columns(system.coefficients, nonneg_idx);
  for (const auto &p : projected) {
    IntVec rest = sub(system.rhs, multiply(mn, p));
    auto y = integer_solve(*free_snf, to_big(rest));
    if (!y)
      throw Error(ErrorKind::InvalidArgument,
                  "inconsistent free part in a minimal solution");
    IntVec x(system.signs.size(), 0);
    for (std::size_t k = 0; k < nonneg_idx.size(); ++k)
      x[nonneg_idx[k]] = p[k];
    for (std::size_t k = 0; k < free_idx.size(); ++k)
      x[free_idx[k]] = to_int((*y)[k]);
    out.push_back(std::move(x));
  }
  return {std::move(out)};
}

std::optional<IntVec> feasible(const DiophantineSystem &system,
                               const SolverOptions &options) {
  system.check();
  const std::size_t n = system.signs.size();
  if (is_zero(system.rhs))
    return IntVec(n, 0);
  const auto free_idx = indices_with(system, Sign::free);
  if (free_idx.size() == n) {
    auto z = integer_solve(to_big(system.coefficients), to_big(system.rhs));
    if (!z)
      return std::nullopt;
    IntVec x;
    for (const auto &v : *z)
      x.push_back(to_int(v));
    return x;
  }
  if (free_idx.empty() && system.grading) {
    GradedSearch search(system.coefficients, *system.grading,
                        options.step_budget);
    return search.run(system.rhs);
  }
  auto cols = lifted_columns(system);
  const std::size_t aux = cols.size() - 1;
  auto result = run_completion(cols, aux, Stop::first_inhomogeneous,
                               options.step_budget);
  if (result.inhomogeneous.empty())
    return std::nullopt;
  IntVec v = result.inhomogeneous.front();
  v.pop_back();
  return unlift(system, v);
}

std::optional<IntVec> nonnegative_kernel_vector(const IntMatrix &m,
                                                const SolverOptions &options) {
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    cols.push_back(m.column(j));
  auto result = run_completion(cols, cols.size(), Stop::first_homogeneous,
                               options.step_budget);
  if (result.homogeneous.empty())
    return std::nullopt;
  return result.homogeneous.front();
}

std::vector<IntVec> minimal_projections(const std::vector<IntVec> &vectors,
                                        std::size_t begin, std::size_t end) {
  std::vector<IntVec> p;
  p.reserve(vectors.size());
  for (const auto &v : vectors)
    p.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(begin),
                   v.begin() + static_cast<std::ptrdiff_t>(end));
  return minimal_elements(std::move(p));
}

} // namespace stdpairs
