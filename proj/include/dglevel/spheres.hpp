// Compact DG modules over cochains on a sphere: the molecules Σ^{-l}Z_m,
// their Auslander-Reiten quiver, decompositions and levels.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dglevel/resolve.hpp"

namespace dgl {

/// Σ^{-l} Z_m over C^*(S^d).
struct MoleculeId {
  int d = 2;
  int l = 0;
  int m = 0;
  auto operator<=>(const MoleculeId&) const = default;
};

std::string to_string(const MoleculeId& id);
void validate(const MoleculeId& id);

/// K in degrees -m(d-1)+l and d+l.
GradedDims molecule_cohomology(const MoleculeId& id);
int molecule_level(const MoleculeId& id);
/// l mod (d-1), in [0, d-2].
int component_index(const MoleculeId& id);

struct QuiverComponent {
  int d = 2;
  int component = 0;
  std::vector<MoleculeId> vertices;
  std::vector<std::pair<MoleculeId, MoleculeId>> arrows;
};

/// Rows m = 0..rows-1, columns l = c + k(d-1) for k = 0..cols-1. Arrows:
/// Σ^{-l}Z_m -> Σ^{-l-(d-1)}Z_{m+1} (inclusion) and Σ^{-l}Z_m -> Σ^{-l}Z_{m-1} (projection).
QuiverComponent quiver_component(int d, int c, int rows, int cols);
std::string to_dot(const QuiverComponent& q, FieldTag field);

struct Realizability {
  enum class Kind { Yes, No, CharacteristicTwoUnsupported } kind = Kind::No;
  std::string detail;  // realizing space, or the obstruction
};

std::string_view to_string(Realizability::Kind k);
Realizability realizable(const MoleculeId& id, FieldTag field);

struct Decomposition {
  std::vector<MoleculeId> molecules;               // default choice
  std::vector<std::pair<int, int>> matching;       // paired cohomology degrees of the default
  bool ambiguous = false;
  std::vector<std::vector<MoleculeId>> alternatives;  // every other valid multiset
};

/// Splits a sum of molecule cohomologies. Throws NoValidMatching.
Decomposition decompose(const GradedDims& dims, int d);

/// Free model e_0..e_m with D(e_j) = e_{j-1} x, checked against the catalog.
FreeModule molecule_model(const MoleculeId& id, FieldTag field);

struct SphereLevel {
  enum class Kind { Exact, Interval, Infinite } kind = Kind::Exact;
  int lo = 0;
  int hi = 0;
  std::optional<InfiniteCertified> certificate;
  std::optional<Decomposition> decomposition;
  std::optional<int> filtration_bound;
};

std::string_view to_string(SphereLevel::Kind k);
std::string format_level(const SphereLevel& s);

SphereLevel sphere_level(const GradedDims& dims, int d);
/// Uses the cohomology and, as an upper bound, the shortest semifree filtration.
SphereLevel sphere_level(const FreeModule& m);
/// Infinite when the derived tensor carries a periodic certificate.
SphereLevel sphere_level(const TorResult& t, int d);

/// F ⊗_A B along an algebra map given by the images of A's generators.
FreeModule base_change(const FreeModule& f, const DGAlgebra& target, const std::vector<Poly>& images);

enum class Formalizability { CondI, CondII, Neither };
std::string_view to_string(Formalizability f);

struct FormalizabilityData {
  FieldTag field;
  std::optional<GradedDims> reduced_source;   // H̃^*(S)
  std::optional<GradedDims> loop_target;      // H̃^*(ΩT)
  std::optional<GradedDims> indecomposables;  // (QH^*(T))
  std::optional<bool> polynomial;             // source and target cohomology polynomial
  std::optional<bool> sq1_vanishes;           // needed in characteristic 2
};

Formalizability formalizability_check(const FormalizabilityData& data);

struct BundleLevel {
  GradedDims cohomology;
  SphereLevel level;
  FreeModule model;
};

/// Level over S^4 of K ⊗^L_{K[y_i]} H^*(S^4) for f: S^4 -> BG, y_1 -> z_4 when f4nonzero.
BundleLevel bundle_level(const std::vector<int>& degrees, bool f4nonzero, FieldTag field, Formalizability declared);

/// For a free module over K[y_i] (degrees of the basis as a presentation):
/// pulls back along y_1 -> z_4 and checks every summand is a shift of H^*(S^4).
int free_pullback_level(const FreeModule& presentation, bool f4nonzero = true);

}  // namespace dgl
