// Semifree resolutions, derived tensor products, the invariant phi and
// semifree filtrations.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dglevel/module.hpp"

namespace dgl {

/// H^*(S^d): one generator x of degree d with x^2 = 0.
DGAlgebra sphere_cohomology(int d, FieldTag field, const std::string& label = "x");
/// K[y_1, ..., y_l], untruncated.
DGAlgebra polynomial_algebra(const std::vector<int>& degrees, FieldTag field, const std::string& prefix = "y");
/// A finite-dimensional algebra acting on itself.
RawModule regular_module(const DGAlgebra& a);

struct Resolution {
  FreeModule module;
  std::vector<int> periods;  // degrees of divided-power generators
  std::string strategy;
  /// Augmentation checked to be a quasi-isomorphism below this degree.
  int certified_upto = 0;
};

/// B(M;A;A) on bar words of length <= cutoff. Requires A^1 = 0 and H^0(A) = K.
Resolution bar_resolution(const RawModule& m, int cutoff);

/// Koszul resolution of K over a free graded-commutative algebra with zero
/// differential whose generators are polynomial, exterior of odd degree, or
/// truncated by x^2 = 0 in even degree. `max_degree` bounds divided powers.
Resolution koszul_resolution(const DGAlgebra& a, int max_degree);
Resolution koszul_resolution_sphere(int d, FieldTag field, int max_degree);
Resolution koszul_resolution_poly(const std::vector<int>& degrees, FieldTag field);

/// V ⊗ F for a complex of vector spaces V and a free module F.
FreeModule tensor_with_complex(const CochainComplex& v, const FreeModule& f);

enum class Strategy { Bar, Koszul };

std::string_view to_string(Strategy s);

/// Resolve a right module. A trivial-action module V is resolved as V ⊗ Kos.
Resolution resolve(const RawModule& m, Strategy s, int max_degree);

/// F ⊗_A N for a semifree right module F and a left module N.
CochainComplex tensor(const FreeModule& f, const RawModule& n, DegreeWindow w);

struct TorResult {
  CochainComplex complex;
  Cohomology cohomology;
  std::vector<int> periods;
  bool resolution_finite = false;
};

TorResult derived_tensor(const RawModule& m, const RawModule& n, Strategy s, DegreeWindow w);
TorResult derived_tensor(const Resolution& r, const RawModule& n, DegreeWindow w);

struct Finite {
  std::size_t total = 0;
  GradedDims dims;
};
struct InfiniteCertified {
  int period = 0;
  std::vector<int> witnesses;
};
struct UnknownBeyondCap {
  int cap = 0;
};
using FinitenessVerdict = std::variant<Finite, InfiniteCertified, UnknownBeyondCap>;

std::string verdict_name(const FinitenessVerdict& v);

/// Nonvanishing at >= 3 equally spaced certified degrees with spacing one of `periods`.
std::optional<InfiniteCertified> periodic_witness(const Cohomology& h, const std::vector<int>& periods);

/// Verdict on total cohomology of a Tor computation.
FinitenessVerdict finiteness(const TorResult& t, DegreeWindow w);

/// phi(M) = dim H(M ⊗^L_A K).
FinitenessVerdict phi(const FreeModule& m, DegreeWindow w = {});
FinitenessVerdict phi(const RawModule& m, DegreeWindow w = {});

enum class Compactness { Compact, NotCompact, Unknown };
std::string_view to_string(Compactness c);
Compactness is_compact(const FinitenessVerdict& v);

/// Present when H(M) is certified infinite; then level_A(M) = ∞ whenever dim H(A) < ∞.
std::optional<InfiniteCertified> infinite_level_certificate(const TorResult& t);

struct SemifreeFiltration {
  FreeModule module;
  /// stages[n] = generator indices of F^n (cumulative).
  std::vector<std::vector<std::size_t>> stages;
};

/// Validates the filtration and returns its class. Throws InvalidFiltration.
int filtration_class(const SemifreeFiltration& f);
int level_upper_bound(const SemifreeFiltration& f);
/// The shortest filtration by generator subsets.
SemifreeFiltration minimal_filtration(const FreeModule& m);

}  // namespace dgl
