// Exact scalars over the rationals and prime fields.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dgl {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  WindowTooSmall,
  ZeroModule,
  NotAChainMap,
  AlgebraMismatch,
  SourceNotFree,
  EndTooLarge,
  NotSimplyConnected,
  OddGenerator,
  StrategyInapplicable,
  InvalidFiltration,
  NoValidMatching,
  VerificationFailed,
  NotCompactlyDecomposable,
  FormalizabilityNotDeclared,
  NotFree,
  MissingData,
  OddDimensionNonzeroHopf,
  CannotCertifyCollapse,
  MTooSmall,
  NotExact,
  WrongTargetCohomology,
  OddDimension,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// The ground field: the rationals or a prime field F_p with p < 2^31.
class FieldTag {
 public:
  enum class Kind { Rationals, Prime };

  constexpr FieldTag() = default;
  static FieldTag rationals() { return FieldTag{}; }
  static FieldTag prime(std::uint32_t p);
  /// Accepts "q", "Q", "f2", "f3", "F5", ...
  static FieldTag parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  std::uint32_t characteristic() const noexcept { return kind_ == Kind::Rationals ? 0 : p_; }
  std::string name() const;

  friend bool operator==(const FieldTag&, const FieldTag&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a FieldTag. Rationals are kept reduced with positive
/// denominator; residues are integers in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldTag field, long value);
  Scalar(FieldTag field, const mpq_class& value);

  static Scalar zero(FieldTag f) { return Scalar(f, 0L); }
  static Scalar one(FieldTag f) { return Scalar(f, 1L); }
  /// Parses "n", "n/d" (rationals) or an integer residue.
  static Scalar parse(FieldTag field, std::string_view text);

  FieldTag field() const noexcept { return field_; }
  const mpq_class& value() const noexcept { return value_; }
  std::uint32_t residue() const;  // prime fields only

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;

  bool operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "num/den" over the rationals, the residue over F_p.
  std::string to_string() const;

 private:
  void normalize();
  void check_same(const Scalar& o) const;

  FieldTag field_;
  mpq_class value_;
};

enum class ArithOp { Add, Mul, Inv, Neg };

/// Dispatch form of the field operations; `b` is ignored for unary ops.
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace dgl
