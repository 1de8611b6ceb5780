#include "stdpairs/integer.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace stdpairs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::ZeroColumn: return "ZeroColumn";
  case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
  case ErrorKind::OutsideCone: return "OutsideCone";
  case ErrorKind::UnboundedFreePart: return "UnboundedFreePart";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::IterationBudgetExceeded: return "IterationBudgetExceeded";
  case ErrorKind::PointNotInSemigroup: return "PointNotInSemigroup";
  case ErrorKind::FaceMismatch: return "FaceMismatch";
  case ErrorKind::FaceNotContained: return "FaceNotContained";
  case ErrorKind::NotACover: return "NotACover";
  case ErrorKind::FaceNotAssociated: return "FaceNotAssociated";
  case ErrorKind::GeneratorOutsideSemigroup: return "GeneratorOutsideSemigroup";
  case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::ValidationError: return "ValidationError";
  case ErrorKind::Overflow: return "Overflow";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
[[noreturn]] void overflow() {
  throw Error(ErrorKind::Overflow, "64-bit integer overflow");
}
} // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    overflow();
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    overflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    overflow();
  return r;
}

Int to_int(const BigInt &x) {
  if (!x.fits_slong_p())
    overflow();
  return static_cast<Int>(x.get_si());
}

IntVec add(const IntVec &a, const IntVec &b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec sub(const IntVec &a, const IntVec &b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVec scale(Int c, const IntVec &a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_mul(c, a[i]);
  return r;
}

Int dot(const IntVec &a, const IntVec &b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

bool is_zero(const IntVec &a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

bool leq(const IntVec &a, const IntVec &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Int total(const IntVec &a) {
  Int s = 0;
  for (Int x : a)
    s = checked_add(s, x);
  return s;
}

bool graded_less(const IntVec &a, const IntVec &b) {
  Int ta = total(a), tb = total(b);
  if (ta != tb)
    return ta < tb;
  return a < b;
}

std::vector<IntVec> minimal_elements(std::vector<IntVec> vectors) {
  std::sort(vectors.begin(), vectors.end(), graded_less);
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  std::vector<IntVec> out;
  for (auto &v : vectors) {
    bool dominated = std::any_of(out.begin(), out.end(),
                                 [&](const IntVec &m) { return leq(m, v); });
    if (!dominated)
      out.push_back(std::move(v));
  }
  return out;
}

std::string format_vector(const IntVec &a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i)
    os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

BigMatrix to_big(const IntMatrix &m) {
  BigMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = BigInt(static_cast<long>(m(i, j)));
  return r;
}

BigVec to_big(const IntVec &v) {
  BigVec r;
  r.reserve(v.size());
  for (Int x : v)
    r.emplace_back(static_cast<long>(x));
  return r;
}

BigMatrix multiply(const BigMatrix &a, const BigMatrix &b) {
  BigMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

BigVec multiply(const BigMatrix &a, const BigVec &x) {
  BigVec r(a.rows(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r[i] += a(i, j) * x[j];
  return r;
}

IntVec multiply(const IntMatrix &a, const IntVec &x) {
  IntVec r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0)
        r[i] = checked_add(r[i], checked_mul(a(i, j), x[j]));
  return r;
}

IntMatrix select_columns(const IntMatrix &m,
                         const std::vector<std::size_t> &idx) {
  IntMatrix r(m.rows(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      r(i, j) = m(i, idx[j]);
  return r;
}

} // namespace stdpairs
