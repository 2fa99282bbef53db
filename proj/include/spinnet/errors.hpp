#pragma once

#include <stdexcept>
#include <string>

namespace spinnet {

// Broad failure categories; the CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidInput,
  Disconnected,
  NotIsg,
  NotScheme,
  Infeasible,
  Numeric,
  Limit,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct VertexOutOfRange : Error {
  explicit VertexOutOfRange(const std::string& msg) : Error(ErrorKind::InvalidInput, msg) {}
};

struct SelfLoop : Error {
  explicit SelfLoop(const std::string& msg) : Error(ErrorKind::InvalidInput, msg) {}
};

struct Disconnected : Error {
  explicit Disconnected(const std::string& msg) : Error(ErrorKind::Disconnected, msg) {}
};

struct NotIsg : Error {
  explicit NotIsg(const std::string& msg) : Error(ErrorKind::NotIsg, msg) {}
};

struct NonPositiveOmega : Error {
  explicit NonPositiveOmega(const std::string& msg) : Error(ErrorKind::InvalidInput, msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(ErrorKind::InvalidInput, msg) {}
};

struct ConvergenceFailure : Error {
  explicit ConvergenceFailure(const std::string& msg) : Error(ErrorKind::Numeric, msg) {}
};

struct WeightMismatch : Error {
  explicit WeightMismatch(const std::string& msg) : Error(ErrorKind::Numeric, msg) {}
};

struct InfeasibleRow : Error {
  explicit InfeasibleRow(const std::string& msg) : Error(ErrorKind::Infeasible, msg) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& msg) : Error(ErrorKind::InvalidInput, msg) {}
};

struct RestrictionNotAffine : Error {
  explicit RestrictionNotAffine(const std::string& msg) : Error(ErrorKind::Numeric, msg) {}
};

struct TooSmall : Error {
  explicit TooSmall(const std::string& msg) : Error(ErrorKind::Limit, msg) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error(ErrorKind::Limit, msg) {}
};

struct TooManyQubits : Error {
  explicit TooManyQubits(const std::string& msg) : Error(ErrorKind::Limit, msg) {}
};

struct UnknownPreset : Error {
  explicit UnknownPreset(const std::string& msg) : Error(ErrorKind::InvalidInput, msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ErrorKind::InvalidInput, msg) {}
};

}  // namespace spinnet
