// The Eilenberg-Moore spectral sequence of a pullback over S^d, with d_2
// fixed by the Hopf invariant and propagated along divided powers.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dglevel/resolve.hpp"

namespace dgl {

/// Y -> S^d pulled back along the path-loop fibration (or along another map).
/// The cohomology of Y is the tensor product of H^*(S^k) for k in `top`.
struct FibreSquareSpec {
  int d = 2;
  std::vector<int> top;
  FieldTag field;
  /// Index into `top` of the factor S^{2d-1} carrying x_{2d-1}; defaults to the first one.
  std::optional<std::size_t> hopf_factor;
};

/// E_2 basis element: top classes (bit mask), ε copies of s^{-1}x_d (d even),
/// and γ_i of τ (d even) or of s^{-1}x_d (d odd).
struct EmssClass {
  unsigned mask = 0;
  int eps = 0;
  int i = 0;
  auto operator<=>(const EmssClass&) const = default;
};

using Bidegree = std::pair<int, int>;  // (s, t), s <= 0

struct BigradedPage {
  FibreSquareSpec spec;
  int r = 2;
  int max_total = 0;   // requested window of total degrees
  int built_total = 0; // entries are present up to this total degree
  std::map<Bidegree, std::vector<EmssClass>> entries;
  /// d_r out of each bidegree, on the E_2 basis (page 2 only).
  std::map<Bidegree, Matrix> differential;
  /// Page dimensions; equal to the entry counts on page 2.
  std::map<Bidegree, std::size_t> dims;
};

Bidegree bidegree(const FibreSquareSpec& spec, const EmssClass& c);
std::string label(const FibreSquareSpec& spec, const EmssClass& c);

/// Tor_{H^*(S^d)}(H^*(Y), K) with zero differential. Throws WindowTooSmall.
BigradedPage e2_page(const FibreSquareSpec& spec, int max_total);

/// d_2(γ_i) = h x_{2d-1} γ_{i-1}. Throws OddDimensionNonzeroHopf.
BigradedPage install_d2(const BigradedPage& page, const Scalar& hopf);

/// Δ d_2 = (d_2 ⊗ 1) Δ on γ_n for n = 1..up_to, with Δ γ_n = Σ γ_{n-l} ⊗ γ_l.
bool comodule_square_commutes(const BigradedPage& page, int up_to);

struct StableResult {
  BigradedPage e3;
  std::map<Bidegree, std::size_t> einf;
  GradedDims total;  // associated graded dims by total degree, up to max_total
  FinitenessVerdict verdict;
  bool no_extension_problem = false;
};

/// E_3 by linear algebra; E_3 = E_∞ certified when no d_r (r >= 3) can connect
/// nonzero entries in the window. Throws CannotCertifyCollapse.
StableResult run_to_stable(const BigradedPage& page);

/// Compactness of the fibre of S^{2d-1} -> S^d with Hopf invariant `hopf`.
bool compactness_from_hopf(int d, const Scalar& hopf);

std::string format_table(const StableResult& r);

}  // namespace dgl
