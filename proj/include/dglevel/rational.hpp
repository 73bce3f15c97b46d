// Rational models: spheres, towers of odd-sphere fibrations over S^d, pile
// filtrations and the cochain-level Hopf invariant.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dglevel/spheres.hpp"

namespace dgl {

/// (∧(x, ξ), δξ = x^2) for even d, (∧(x), 0) for odd d.
DGAlgebra sphere_model(int d);

/// A Koszul-Sullivan extension base -> total. The total algebra lists the
/// extension generators first, in order, then the base generators.
struct TowerSpec {
  DGAlgebra base;
  DGAlgebra total;
  std::size_t extension_size = 0;
  int l = 0;
  int d = 0;
  int m = 0;
};

/// Checks that each extension differential lies in the subalgebra generated
/// by the base and the earlier extension generators. Throws InvalidInput.
void validate_tower(const TowerSpec& t);

/// The model of P_l -> S^d. Even d: ρ, w_0..w_{l-2} with Dρ = x,
/// D(w_i) = (ρx - ξ)w_{i-1}. Odd d: w_0..w_{l-1} with D(w_i) = x w_{i-1}.
/// Throws MTooSmall unless m >= ld + 1.
TowerSpec build_P_tower(int l, int d, std::optional<int> m = std::nullopt);

/// H(total ⊗_base Q).
GradedDims fibre_cohomology(const TowerSpec& t);

/// The total algebra as a free module over H^*(S^d) (through x -> x, ξ -> 0).
FreeModule tower_module(const TowerSpec& t);

struct TowerLevel {
  SphereLevel::Kind kind = SphereLevel::Kind::Exact;
  int lower = 0;
  int upper = 0;
  GradedDims cohomology;
  std::optional<Decomposition> decomposition;
  int filtration_class = 0;
};

/// Upper bound from a validated semifree filtration, lower bound from the
/// decomposition of the cohomology. `window`, when given, must contain it.
TowerLevel tower_level_bounds(const TowerSpec& t, std::optional<DegreeWindow> window = std::nullopt);

/// The explicit filtration of a pile of c odd-sphere fibrations over K[b]
/// times s odd spheres, validated; returns c + 1.
int pile_upper_bound(int c, int extra_odd_spheres = 0);
/// Level bound for a spherically complete intersection of codimension c.
int sci_level_bound(int codim);

/// φ: sphere_model(d) -> C given by the images of x and ξ.
struct HopfMap {
  int d = 2;
  DGAlgebra target;
  Poly image_x;
  Poly image_xi;
  /// A cocycle of degree 2d-1 spanning H^{2d-1}(C); chosen automatically if absent.
  std::optional<Poly> generator;
};

/// The coefficient of [ρ φ(x) - φ(ξ)] on the generator, with Dρ = φ(x).
/// Throws NotExact or WrongTargetCohomology.
Scalar hopf_invariant(const HopfMap& h);

/// H([ι_d, ι_d]) up to sign, for even d. Throws OddDimension.
int whitehead_square_invariant(int d);

}  // namespace dgl
