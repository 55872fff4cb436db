#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace thinpl {

/// Every way a request can fail on well-typed but invalid input.
enum class ErrorKind {
  DuplicateVertexId,
  UnknownVertexInSimplex,
  AffinelyDependentSimplex,
  DisconnectedComplex,
  MissingBasepoint,
  DimensionMismatch,
  EmptyWord,
  NotBased,
  NotClosed,
  NoCommonSimplex,
  PointNotInComplex,
  ComplexMismatch,
  TooLong,
  OutOfRange,
  PointNotInStar,
  RefEndpointMismatch,
  PointNotInSimplex,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Validation failure naming the violated invariant and, where one exists,
/// the offending index (word position, simplex number, byte offset).
class DomainError : public std::runtime_error {
public:
  DomainError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  DomainError(ErrorKind kind, const std::string& message, std::size_t index)
      : std::runtime_error(message), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::size_t>& index() const noexcept { return index_; }

private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace thinpl
