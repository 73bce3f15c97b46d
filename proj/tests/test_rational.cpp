#include "doctest.h"
#include "dglevel/rational.hpp"

using namespace dgl;

namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

const FieldTag q = FieldTag::rationals();

Poly gen(const DGAlgebra& a, const std::string& label, long c = 1) {
  Poly p;
  add_term(p, a.generator_monomial(*a.index_of(label)), Scalar(q, c));
  return p;
}

/// ∧(ρ, x, ξ) with Dρ = x, Dξ = x^2, optionally with an acyclic pair De = c.
DGAlgebra hopf_one_model(int d, bool acyclic_pair) {
  std::vector<Generator> gens{{"ρ", d - 1, GenKind::Exterior, 0}, {"x", d, GenKind::Polynomial, 0},
                              {"ξ", 2 * d - 1, GenKind::Exterior, 0}};
  if (acyclic_pair) {
    gens.push_back({"c", d - 1, GenKind::Exterior, 0});
    gens.push_back({"e", d - 2, GenKind::Polynomial, 0});
  }
  DGAlgebra bare(q, gens, std::vector<Poly>(gens.size()));
  std::vector<Poly> diff(gens.size());
  diff[0] = gen(bare, "x");
  diff[2] = bare.multiply(gen(bare, "x"), gen(bare, "x"));
  if (acyclic_pair) diff[4] = gen(bare, "c");
  return DGAlgebra(q, gens, diff);
}

}  // namespace

TEST_CASE("sphere models") {
  for (int d = 2; d <= 7; ++d) {
    DGAlgebra s = sphere_model(d);
    const DegreeWindow w{0, 3 * d};
    CHECK(cohomology(s.to_complex(w), w).dims == GradedDims{{0, 1}, {d, 1}});
    CHECK(s.size() == (d % 2 ? 1u : 2u));
  }
}

TEST_CASE("P_l towers") {
  TowerSpec even = build_P_tower(3, 4, 9 + 4);
  CHECK(even.extension_size == 3);
  CHECK(even.total.generators()[0].degree == 3);
  CHECK(even.total.generators()[1].degree == 25);
  CHECK(even.total.generators()[2].degree == 31);

  TowerSpec t = build_P_tower(2, 4, 9);
  CHECK(t.total.generators()[1].label == "w0");
  CHECK(t.total.generators()[1].degree == 17);

  TowerSpec odd = build_P_tower(2, 3, 7);
  CHECK(odd.total.generators()[1].degree == 15);
  Poly expected = odd.total.multiply(gen(odd.total, "x"), gen(odd.total, "w0"));
  CHECK(odd.total.generator_differential(1) == expected);

  CHECK(error_of([] { build_P_tower(2, 4, 8); }) == ErrorCode::MTooSmall);
  CHECK(build_P_tower(2, 4).m == 9);

  for (int d : {3, 4})
    for (int l = 1; l <= 3; ++l) {
      TowerSpec p = build_P_tower(l, d);
      for (std::size_t i = 0; i < p.extension_size; ++i) CHECK(p.total.generators()[i].degree % 2 == 1);
      const GradedDims f = fibre_cohomology(p);
      CHECK(total(f) == (std::size_t{1} << p.extension_size));
    }
}

TEST_CASE("tower level bounds") {
  for (int d : {3, 4}) {
    TowerLevel one = tower_level_bounds(build_P_tower(1, d));
    CHECK(one.kind == SphereLevel::Kind::Exact);
    CHECK(one.lower == 1);
    TowerLevel two = tower_level_bounds(build_P_tower(2, d));
    CHECK(two.kind == SphereLevel::Kind::Exact);
    CHECK(two.lower == 2);
    CHECK(two.upper >= two.lower);
  }
  TowerLevel odd3 = tower_level_bounds(build_P_tower(3, 3));
  CHECK(odd3.kind == SphereLevel::Kind::Exact);
  CHECK(odd3.lower == 3);

  // The molecule through w_0 and (ρx - ξ)w_1 is Σ^{-34}Z_3, so the level is 4.
  TowerLevel even3 = tower_level_bounds(build_P_tower(3, 4));
  CHECK(even3.kind == SphereLevel::Kind::Exact);
  CHECK(even3.lower == 4);
  CHECK(std::count(even3.decomposition->molecules.begin(), even3.decomposition->molecules.end(), MoleculeId{4, 34, 3}) == 1);

  CHECK(error_of([] { tower_level_bounds(build_P_tower(2, 4), DegreeWindow{0, 20}); }) == ErrorCode::WindowTooSmall);
}

TEST_CASE("pile bounds") {
  CHECK(pile_upper_bound(0) == 1);
  CHECK(pile_upper_bound(0, 2) == 1);
  CHECK(pile_upper_bound(2) == 3);
  CHECK(pile_upper_bound(2, 1) == 3);
  CHECK(sci_level_bound(3) == 4);
}

TEST_CASE("Hopf invariant on cochains") {
  for (int d : {2, 4, 6}) {
    DGAlgebra c = hopf_one_model(d, false);
    Poly generator = c.multiply(gen(c, "ρ"), gen(c, "x"));
    add_into(generator, gen(c, "ξ"), Scalar(q, -1L));
    CHECK(hopf_invariant({d, c, gen(c, "x"), gen(c, "ξ"), generator}) == Scalar::one(q));
    CHECK(hopf_invariant({d, c, gen(c, "x"), gen(c, "ξ"), {}}).is_zero() == false);
    // Precomposing with a degree-k self map scales H by k^2.
    for (long k : {2L, 3L, -1L})
      CHECK(hopf_invariant({d, c, gen(c, "x", k), gen(c, "ξ", k * k), generator}) == Scalar(q, k * k));
  }
  DGAlgebra pair = hopf_one_model(4, true);
  Poly g = pair.multiply(gen(pair, "ρ"), gen(pair, "x"));
  add_into(g, gen(pair, "ξ"), Scalar(q, -1L));
  CHECK(hopf_invariant({4, pair, gen(pair, "x"), gen(pair, "ξ"), g}) == Scalar::one(q));

  DGAlgebra s7(q, {{"y", 7, GenKind::Exterior, 0}}, {Poly{}});
  CHECK(hopf_invariant({4, s7, Poly{}, Poly{}, gen(s7, "y")}).is_zero());
  CHECK(hopf_invariant({5, s7, Poly{}, Poly{}, {}}).is_zero());

  DGAlgebra s4(q, {{"x", 4, GenKind::Polynomial, 1}}, {Poly{}});
  CHECK(error_of([&] { hopf_invariant({4, s4, gen(s4, "x"), Poly{}, {}}); }) == ErrorCode::WrongTargetCohomology);
  DGAlgebra s4s7(q, {{"x", 4, GenKind::Polynomial, 1}, {"y", 7, GenKind::Exterior, 0}}, std::vector<Poly>(2));
  CHECK(error_of([&] { hopf_invariant({4, s4s7, Poly{}, Poly{}, {}}); }) == ErrorCode::WrongTargetCohomology);
}

TEST_CASE("Whitehead square") {
  CHECK(whitehead_square_invariant(4) == 2);
  CHECK(whitehead_square_invariant(8) == 2);
  CHECK(Scalar(FieldTag::prime(2), static_cast<long>(whitehead_square_invariant(4))).is_zero());
  CHECK(error_of([] { whitehead_square_invariant(3); }) == ErrorCode::OddDimension);
}
