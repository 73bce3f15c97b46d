// Presented DG algebras: free graded-commutative algebras on exterior,
// (possibly truncated) polynomial and divided-power generators.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dglevel/graded.hpp"

namespace dgl {

enum class GenKind { Exterior, Polynomial, DividedPower };

std::string_view to_string(GenKind k);
GenKind parse_gen_kind(std::string_view s);

struct Generator {
  std::string label;
  int degree = 1;
  GenKind kind = GenKind::Exterior;
  int max_power = 0;  // polynomial only; 0 means untruncated
};

/// Exponent vector in generator order. For divided-power generators the
/// entry i stands for gamma_i.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Scalar>;

void add_term(Poly& p, const Monomial& m, const Scalar& c);
Poly scale(const Poly& p, const Scalar& c);
void add_into(Poly& acc, const Poly& p, const Scalar& c);

class DGAlgebra {
 public:
  DGAlgebra() = default;
  /// `differential[i]` is the image of generator i (missing entries are 0).
  DGAlgebra(FieldTag field, std::vector<Generator> gens, std::vector<Poly> differential);

  FieldTag field() const noexcept { return field_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const Poly& generator_differential(std::size_t i) const { return diff_[i]; }
  bool has_zero_differential() const;

  Monomial unit() const { return Monomial(gens_.size(), 0); }
  Monomial generator_monomial(std::size_t i, int power = 1) const;
  int degree(const Monomial& m) const;
  /// Nonzero monomials of degree n (respecting exterior and truncation).
  const std::vector<Monomial>& basis(int n) const;
  /// Monomials in the generators [first, last) of degree <= max_degree.
  std::vector<Monomial> monomials_upto(std::size_t first, std::size_t last, int max_degree) const;
  bool is_valid(const Monomial& m) const;

  /// a * b with Koszul sign, divided-power binomials and truncation.
  std::optional<std::pair<Scalar, Monomial>> multiply(const Monomial& a, const Monomial& b) const;
  Poly multiply(const Poly& a, const Poly& b) const;
  Poly d(const Monomial& m) const;
  Poly d(const Poly& p) const;

  std::string label(const Monomial& m) const;
  std::string label(const Poly& p) const;

  CochainComplex to_complex(DegreeWindow w) const;
  /// H^0 = K and H^1 = 0.
  bool simply_connected() const;

  /// The algebra on generators [first, size()); their differentials must
  /// not involve earlier generators.
  DGAlgebra tail(std::size_t first) const;

  friend bool operator==(const DGAlgebra& a, const DGAlgebra& b) {
    return a.field_ == b.field_ && a.gens_.size() == b.gens_.size() && a.same_presentation(b);
  }

 private:
  bool same_presentation(const DGAlgebra& o) const;
  void enumerate(std::size_t i, std::size_t last, int remaining, bool exact, Monomial& cur,
                 std::vector<Monomial>& out) const;

  FieldTag field_;
  std::vector<Generator> gens_;
  std::vector<Poly> diff_;
  struct Cache {
    std::mutex mu;
    std::map<int, std::vector<Monomial>> basis;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// binom(n, k) reduced into the field.
Scalar binomial(FieldTag f, int n, int k);

}  // namespace dgl
