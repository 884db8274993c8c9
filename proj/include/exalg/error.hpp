#pragma once

#include <stdexcept>
#include <string>

namespace exalg {

/// Error categories raised by the library. Kept as a flat enum so callers
/// (CLI, tests) can dispatch without string matching.
enum class Err {
    DivisionByZero,
    FieldMismatch,
    NegativeInput,
    NotReal,
    DimensionMismatch,
    NotSquare,
    NotSymmetric,
    NotRealSymmetric,
    Singular,
    WrongDimension,
    WrongQubitCount,
    NotNormalized,
    PhaseOutOfRange,
    EmptySubset,
    NegativeEigenvalue,
    NotEigenvector,
    UnknownConstant,
    LimitExceeded,
    OrbitCapExceeded,
    NotFinite,
    MaxDimExceeded,
    NotClosed,
    NotCommuting,
    NotDiagonalizable,
    ParseError,
    Cancelled,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

    Err kind() const noexcept { return kind_; }

    // Optional numeric payload (row index, partial count, ...).
    long long detail_a = 0;
    long long detail_b = 0;

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace exalg
