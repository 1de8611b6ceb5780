#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stdpairs {

enum class ErrorKind {
  ZeroColumn,
  NotStronglyConvex,
  OutsideCone,
  UnboundedFreePart,
  BudgetExceeded,
  IterationBudgetExceeded,
  PointNotInSemigroup,
  FaceMismatch,
  FaceNotContained,
  NotACover,
  FaceNotAssociated,
  GeneratorOutsideSemigroup,
  UnsupportedDimension,
  ParseError,
  ValidationError,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message,
        std::vector<std::int64_t> certificate = {})
      : std::runtime_error(message), kind_(kind),
        certificate_(std::move(certificate)) {}

  [[nodiscard]] ErrorKind kind() const { return kind_; }
  // Witness attached to some errors, e.g. the kernel vector for
  // NotStronglyConvex or the column index for ZeroColumn.
  [[nodiscard]] const std::vector<std::int64_t> &certificate() const {
    return certificate_;
  }

private:
  ErrorKind kind_;
  std::vector<std::int64_t> certificate_;
};

} // namespace stdpairs
