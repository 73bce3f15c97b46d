// DG modules: free right modules over a presented DG algebra, and finite
// cochain complexes with an algebra action.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dglevel/algebra.hpp"

namespace dgl {

/// An element of a free module: (generator index, algebra monomial) -> coefficient,
/// standing for sum c * e_g * a.
using ModElem = std::map<std::pair<std::size_t, Monomial>, Scalar>;

void add_term(ModElem& v, std::size_t g, const Monomial& m, const Scalar& c);
void add_into(ModElem& acc, const ModElem& v, const Scalar& c);

struct ModGenerator {
  std::string label;
  int degree = 0;
};

/// A free right DG module over `algebra` on finitely many generators:
/// D(e*a) = D(e)*a + (-1)^|e| e*da. Generators of degree <= complete_upto
/// are all present; beyond that the presentation may be truncated.
class FreeModule {
 public:
  static constexpr int kComplete = 1 << 20;

  FreeModule() = default;
  FreeModule(DGAlgebra algebra, std::vector<ModGenerator> gens, std::vector<ModElem> differential,
             int complete_upto = kComplete);

  /// The algebra as a module over itself.
  static FreeModule algebra_module(const DGAlgebra& a);
  /// The zero module.
  static FreeModule zero(const DGAlgebra& a);
  /// For a total algebra whose generators [0, split) form the fibre and
  /// [split, n) the base: the total algebra as a free right module over the
  /// base, on fibre monomials of degree <= max_degree.
  static FreeModule from_extension(const DGAlgebra& total, std::size_t split, int max_degree);

  const DGAlgebra& algebra() const noexcept { return algebra_; }
  FieldTag field() const noexcept { return algebra_.field(); }
  const std::vector<ModGenerator>& generators() const noexcept { return gens_; }
  std::size_t rank() const noexcept { return gens_.size(); }
  const ModElem& generator_differential(std::size_t g) const { return diff_[g]; }
  int complete_upto() const noexcept { return complete_upto_; }
  bool is_finite() const noexcept { return complete_upto_ >= kComplete; }

  ModElem D(const ModElem& v) const;
  /// v * a for an algebra element a.
  ModElem act(const ModElem& v, const Poly& a) const;
  int degree(std::size_t g, const Monomial& m) const { return gens_[g].degree + algebra_.degree(m); }
  std::vector<std::pair<std::size_t, Monomial>> basis(int n) const;
  std::string label(std::size_t g, const Monomial& m) const;

  /// Cochains in [w.lo - 1, min(w.hi + 1, complete_upto)].
  CochainComplex to_complex(DegreeWindow w) const;
  Vector coordinates(const ModElem& v, int n) const;
  ModElem element(const Vector& coords, int n) const;

 private:
  DGAlgebra algebra_;
  std::vector<ModGenerator> gens_;
  std::vector<ModElem> diff_;
  int complete_upto_ = kComplete;
};

/// Sigma^k M: degrees drop by k and the differential picks up (-1)^k.
FreeModule shift(const FreeModule& m, int k);
FreeModule direct_sum(const std::vector<FreeModule>& ms);
FreeModule direct_sum(const DGAlgebra& a, const std::vector<FreeModule>& ms);

/// An A-linear map between free modules of degree `degree`, given on generators.
struct ModuleMap {
  int degree = 0;
  std::vector<ModElem> images;
};

ModElem apply(const FreeModule& src, const ModuleMap& f, const ModElem& v);
bool is_chain_map(const FreeModule& src, const FreeModule& dst, const ModuleMap& f);
ModuleMap identity_map(const FreeModule& m);
ModuleMap zero_map(const FreeModule& m);

/// N ⊕ ΣM with D(s e) = f(e) - s D(e). Generators: N's first, then ΣM's.
FreeModule cone(const FreeModule& src, const FreeModule& dst, const ModuleMap& f);

/// The complex of A-linear maps M -> N, degrees n in the window.
struct MorphismComplex {
  CochainComplex complex;
  /// Basis of Hom^n: (source generator, target generator, target monomial).
  std::map<int, std::vector<std::tuple<std::size_t, std::size_t, Monomial>>> basis;
};

MorphismComplex hom_complex(const FreeModule& src, const FreeModule& dst, DegreeWindow w);
ModuleMap map_from_vector(const FreeModule& src, const FreeModule& dst, const MorphismComplex& h, int n,
                          const Vector& v);

struct IdempotentReport {
  std::size_t end_dimension = 0;
  std::vector<ModuleMap> idempotents;  // nontrivial, i.e. not 0 or 1
  bool exhaustive = false;             // the search covered every element or locality was proven
};

/// Nontrivial idempotents of H^0(End(M)). Throws EndTooLarge when
/// dim H^0(End) exceeds `max_dimension`.
IdempotentReport find_idempotents(const FreeModule& m, std::size_t max_dimension = 8);

/// A finite cochain complex with a left action of the algebra generators.
/// action[i] is the matrix of generator i on the total space (degree |x_i|).
class RawModule {
 public:
  RawModule() = default;
  RawModule(DGAlgebra algebra, CochainComplex complex, std::vector<Matrix> action);

  /// K concentrated in degree 0 with the augmentation action.
  static RawModule trivial(const DGAlgebra& a);
  /// A graded space with zero differential and zero action.
  static RawModule trivial_action(const DGAlgebra& a, const GradedDims& dims, const std::string& prefix = "v");

  const DGAlgebra& algebra() const noexcept { return algebra_; }
  const CochainComplex& complex() const noexcept { return complex_; }
  /// Offsets of each degree in the total space.
  const std::map<int, std::size_t>& offsets() const noexcept { return offsets_; }
  std::size_t total_dim() const noexcept { return total_; }
  /// Left action of a monomial on the total space.
  Matrix act(const Monomial& m) const;
  Matrix total_differential() const;
  bool action_is_trivial() const;

 private:
  DGAlgebra algebra_;
  CochainComplex complex_;
  std::vector<Matrix> action_;
  std::map<int, std::size_t> offsets_;
  std::size_t total_ = 0;
};

}  // namespace dgl
