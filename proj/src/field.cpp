#include "dglevel/field.hpp"

#include <cctype>

namespace dgl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::SourceNotFree: return "SourceNotFree";
    case ErrorCode::EndTooLarge: return "EndTooLarge";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::OddGenerator: return "OddGenerator";
    case ErrorCode::StrategyInapplicable: return "StrategyInapplicable";
    case ErrorCode::InvalidFiltration: return "InvalidFiltration";
    case ErrorCode::NoValidMatching: return "NoValidMatching";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotCompactlyDecomposable: return "NotCompactlyDecomposable";
    case ErrorCode::FormalizabilityNotDeclared: return "FormalizabilityNotDeclared";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::MissingData: return "MissingData";
    case ErrorCode::OddDimensionNonzeroHopf: return "OddDimensionNonzeroHopf";
    case ErrorCode::CannotCertifyCollapse: return "CannotCertifyCollapse";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::WrongTargetCohomology: return "WrongTargetCohomology";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FieldTag FieldTag::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidInput, "field characteristic must be a prime below 2^31: " + std::to_string(p));
  FieldTag f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

FieldTag FieldTag::parse(std::string_view name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
    std::uint64_t p = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorCode::InvalidInput, "bad field name: " + std::string(name));
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= (1ull << 31)) break;
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorCode::InvalidInput, "bad field name: " + std::string(name));
}

std::string FieldTag::name() const { return is_rational() ? "q" : "f" + std::to_string(p_); }

Scalar::Scalar(FieldTag field, long value) : field_(field), value_(value) { normalize(); }

Scalar::Scalar(FieldTag field, const mpq_class& value) : field_(field), value_(value) { normalize(); }

void Scalar::normalize() {
  value_.canonicalize();
  if (field_.is_rational()) return;
  const mpz_class p = field_.characteristic();
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field_.name());
  if (num < 0) num += p;
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  value_ = mpq_class(num);
}

Scalar Scalar::parse(FieldTag field, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidInput, "bad scalar: " + s);
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator: " + s);
  return Scalar(field, q);
}

std::uint32_t Scalar::residue() const { return static_cast<std::uint32_t>(value_.get_num().get_ui()); }

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, mpq_class(value_ + o.value_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, mpq_class(value_ - o.value_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, mpq_class(value_ * o.value_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-value_)); }

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Scalar(field_, mpq_class(1 / value_));
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  return value_.get_num().get_str();
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Inv: return a.inv();
    case ArithOp::Neg: return -a;
  }
  return a;
}

}  // namespace dgl
