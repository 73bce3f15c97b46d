#include <algorithm>

#include "doctest.h"
#include "dglevel/rational.hpp"
#include "oracle.hpp"

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

std::vector<MoleculeId> sorted(std::vector<MoleculeId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::pair<int, int>> as_pairs(const std::vector<MoleculeId>& ms) {
  std::vector<std::pair<int, int>> out;
  for (const auto& id : ms) out.emplace_back(id.l, id.m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("molecule catalog") {
  CHECK(molecule_cohomology({4, 3, 1}) == GradedDims{{0, 1}, {7, 1}});
  CHECK(molecule_cohomology({5, 0, 0}) == GradedDims{{0, 1}, {5, 1}});
  CHECK(molecule_cohomology({4, 8, 1}) == GradedDims{{5, 1}, {12, 1}});
  CHECK(molecule_level({4, 0, 0}) == 1);
  CHECK(molecule_level({4, 3, 1}) == 2);
  CHECK(molecule_level({4, 0, 4}) == 5);
  CHECK(component_index({4, 8, 1}) == 2);
  CHECK(component_index({4, 10, 1}) == 1);
  CHECK(component_index({6, 0, 3}) == 0);
  CHECK(component_index({4, -1, 0}) == 2);
  CHECK(to_string(MoleculeId{4, 3, 1}) == "Σ^{-3}Z_1");
}

TEST_CASE("quiver components") {
  QuiverComponent q = quiver_component(4, 0, 2, 3);
  auto has = [&](MoleculeId a, MoleculeId b) {
    return std::find(q.arrows.begin(), q.arrows.end(), std::pair(a, b)) != q.arrows.end();
  };
  CHECK(has({4, 0, 0}, {4, 3, 1}));
  CHECK(has({4, 3, 1}, {4, 3, 0}));
  for (int d = 2; d <= 7; ++d) {
    std::set<int> comps;
    for (int c = 0; c <= d - 2; ++c) {
      QuiverComponent qc = quiver_component(d, c, 4, 5);
      for (const auto& v : qc.vertices) comps.insert(component_index(v));
      for (const auto& [a, b] : qc.arrows) {
        CHECK(component_index(a) == c);
        CHECK(component_index(b) == c);
        // Inclusions keep the bottom class, projections keep the top class.
        const GradedDims ha = molecule_cohomology(a), hb = molecule_cohomology(b);
        if (b.m == a.m + 1) CHECK(ha.begin()->first == hb.begin()->first);
        else CHECK(ha.rbegin()->first == hb.rbegin()->first);
      }
    }
    CHECK(comps.size() == static_cast<std::size_t>(d - 1));
  }
  CHECK(to_dot(q, FieldTag::rationals()).find("Σ^{-3}Z_1 [H: 0,7] [level 2] [yes]") != std::string::npos);
}

TEST_CASE("realizability criterion") {
  FieldTag q = FieldTag::rationals();
  using K = Realizability::Kind;
  CHECK(realizable({4, 3, 1}, q).kind == K::Yes);
  CHECK(realizable({3, 2, 1}, q).kind == K::No);
  CHECK(realizable({4, 6, 2}, q).kind == K::No);
  for (int d = 2; d <= 8; ++d)
    for (int m = 0; m <= 4; ++m)
      for (int l = -2; l <= 5 * (d - 1); ++l) {
        const bool expected = (l == 0 && m == 0) || (l == d - 1 && m == 1 && d % 2 == 0);
        const Realizability r = realizable({d, l, m}, q);
        CHECK((r.kind == K::Yes) == expected);
        if (r.kind == K::Yes) CHECK(l == m * (d - 1));
        CHECK(realizable({d, l, m}, FieldTag::prime(2)).kind == K::CharacteristicTwoUnsupported);
      }
  CHECK(realizable({4, 2, 1}, q).detail.find("NegativeDegree") == 0);
  CHECK(realizable({4, 6, 2}, q).detail.find("FibreCohomologyInfinite") == 0);
  CHECK(error_of([] { whitehead_square_invariant(5); }) == ErrorCode::OddDimension);
}

TEST_CASE("decompositions") {
  Decomposition x1 = decompose({{0, 1}, {5, 1}, {6, 1}, {7, 1}, {12, 1}, {13, 1}}, 4);
  CHECK(!x1.ambiguous);
  CHECK(sorted(x1.molecules) == sorted({{4, 3, 1}, {4, 8, 1}, {4, 9, 1}}));

  Decomposition enu = decompose({{0, 1}, {3, 1}, {7, 1}, {10, 1}}, 7);
  CHECK(!enu.ambiguous);
  CHECK(sorted(enu.molecules) == sorted({{7, 0, 0}, {7, 3, 0}}));

  Decomposition amb = decompose({{0, 1}, {3, 1}, {7, 1}, {10, 1}}, 4);
  CHECK(amb.ambiguous);
  CHECK(sorted(amb.molecules) == sorted({{4, 3, 1}, {4, 6, 1}}));
  REQUIRE(amb.alternatives.size() == 1);
  CHECK(sorted(amb.alternatives[0]) == sorted({{4, 3, 0}, {4, 6, 2}}));

  CHECK(error_of([] { decompose({{0, 1}, {2, 1}}, 4); }) == ErrorCode::NoValidMatching);
  CHECK(error_of([] { decompose({{0, 1}}, 4); }) == ErrorCode::NoValidMatching);
  CHECK(decompose({}, 4).molecules.empty());
}

TEST_CASE("decompose agrees with brute-force matching") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = static_cast<int>(rng.uniform(2, 6));
    const int k = static_cast<int>(rng.uniform(1, 4));
    std::vector<MoleculeId> input;
    GradedDims dims;
    std::vector<int> degrees;
    for (int i = 0; i < k; ++i) {
      MoleculeId id{d, static_cast<int>(rng.uniform(-4, 12)), static_cast<int>(rng.uniform(0, 3))};
      input.push_back(id);
      for (const auto& [n, c] : molecule_cohomology(id)) {
        dims[n] += c;
        degrees.push_back(n);
      }
    }
    const auto expected = oracle::molecule_multisets(degrees, d);
    Decomposition dec = decompose(dims, d);
    std::set<std::vector<std::pair<int, int>>> got{as_pairs(dec.molecules)};
    for (const auto& alt : dec.alternatives) got.insert(as_pairs(alt));
    CHECK(got == expected);
    CHECK(got.count(as_pairs(input)));
    CHECK(dec.ambiguous == (expected.size() > 1));
    GradedDims rebuilt;
    for (const auto& id : dec.molecules) rebuilt = add_dims(rebuilt, molecule_cohomology(id));
    CHECK(rebuilt == dims);
    for (const auto& [a, b] : dec.matching) {
      CHECK(b - a >= d);
      CHECK((b - a - d) % (d - 1) == 0);
    }
  }
}

TEST_CASE("molecule models over a grid") {
  for (FieldTag f : {FieldTag::rationals(), FieldTag::prime(3)})
    for (int d = 2; d <= 6; ++d)
      for (int l = 0; l <= 10; ++l)
        for (int m = 0; m <= 5; ++m) {
          const MoleculeId id{d, l, m};
          FreeModule model = molecule_model(id, f);
          CHECK(model.rank() == static_cast<std::size_t>(m + 1));
          SemifreeFiltration filt = minimal_filtration(model);
          CHECK(filtration_class(filt) == m);
          CHECK(level_upper_bound(filt) == molecule_level(id));
        }
  FreeModule z = molecule_model({4, 3, 1}, FieldTag::rationals());
  CHECK(z.generators()[0].degree == 0);
  CHECK(z.generators()[1].degree == 3);
}

TEST_CASE("sphere levels") {
  FieldTag q = FieldTag::rationals();
  SphereLevel enu = sphere_level(GradedDims{{0, 1}, {3, 1}, {7, 1}, {10, 1}}, 7);
  CHECK(enu.kind == SphereLevel::Kind::Exact);
  CHECK(enu.lo == 1);

  SphereLevel amb = sphere_level(GradedDims{{0, 1}, {3, 1}, {7, 1}, {10, 1}}, 4);
  CHECK(amb.kind == SphereLevel::Kind::Interval);
  CHECK(amb.lo == 2);
  CHECK(amb.hi == 3);

  // Module data settles the ambiguous case: Σ^{-3}Z_0 ⊕ Σ^{-6}Z_2 has level 3.
  FreeModule sum = direct_sum({molecule_model({4, 3, 0}, q), molecule_model({4, 6, 2}, q)});
  SphereLevel s = sphere_level(sum);
  CHECK(s.kind == SphereLevel::Kind::Exact);
  CHECK(s.lo == 3);
  CHECK(sorted(s.decomposition->molecules) == sorted({{4, 3, 0}, {4, 6, 2}}));

  DGAlgebra s4 = sphere_cohomology(4, q);
  RawModule s7 = RawModule::trivial_action(s4, {{0, 1}, {7, 1}});
  TorResult t = derived_tensor(s7, s7, Strategy::Koszul, {0, 40});
  SphereLevel inf = sphere_level(t, 7);
  CHECK(inf.kind == SphereLevel::Kind::Infinite);
  CHECK(inf.certificate->period == 6);

  CHECK(sphere_level(GradedDims{}, 4).lo == 0);
  CHECK(error_of([] { sphere_level(GradedDims{{0, 1}, {1, 1}}, 4); }) == ErrorCode::NotCompactlyDecomposable);
}

TEST_CASE("sphere level is a maximum over summands and shift invariant") {
  FieldTag f = FieldTag::prime(5);
  oracle::Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = static_cast<int>(rng.uniform(3, 5));
    std::vector<FreeModule> parts;
    int expected = 0;
    const int k = static_cast<int>(rng.uniform(1, 3));
    for (int i = 0; i < k; ++i) {
      MoleculeId id{d, static_cast<int>(rng.uniform(0, 12)), static_cast<int>(rng.uniform(0, 3))};
      parts.push_back(molecule_model(id, f));
      expected = std::max(expected, molecule_level(id));
    }
    FreeModule sum = direct_sum(parts);
    SphereLevel s = sphere_level(sum);
    CHECK(s.kind == SphereLevel::Kind::Exact);
    CHECK(s.lo == expected);
    const int shift_by = static_cast<int>(rng.uniform(-5, 5));
    SphereLevel t = sphere_level(shift(sum, shift_by));
    CHECK(t.kind == s.kind);
    CHECK(t.lo == s.lo);
  }
}

TEST_CASE("bundle levels") {
  FieldTag f2 = FieldTag::prime(2);
  BundleLevel g2 = bundle_level({4, 6, 7}, true, f2, Formalizability::CondII);
  CHECK(g2.level.lo == 2);
  CHECK(g2.cohomology == GradedDims{{0, 1}, {5, 1}, {6, 1}, {7, 1}, {11, 1}, {12, 1}, {13, 1}, {18, 1}});
  CHECK(sorted(g2.level.decomposition->molecules) == sorted({{4, 3, 1}, {4, 8, 1}, {4, 9, 1}, {4, 14, 1}}));

  BundleLevel su4 = bundle_level({4, 6, 8}, true, f2, Formalizability::CondII);
  CHECK(su4.level.lo == 2);
  CHECK(sorted(su4.level.decomposition->molecules) == sorted({{4, 3, 1}, {4, 8, 1}, {4, 10, 1}, {4, 15, 1}}));

  for (FieldTag f : {FieldTag::rationals(), f2}) {
    CHECK(bundle_level({4, 6, 8}, false, f, Formalizability::CondII).level.lo == 1);
    CHECK(bundle_level({4}, true, f, Formalizability::CondI).level.lo == 2);
  }
  CHECK(error_of([&] { bundle_level({4, 6, 7}, true, f2, Formalizability::Neither); }) ==
        ErrorCode::FormalizabilityNotDeclared);
  CHECK(error_of([&] { bundle_level({6, 4}, true, f2, Formalizability::CondII); }) == ErrorCode::InvalidInput);
}

TEST_CASE("free pullbacks") {
  FieldTag q = FieldTag::rationals();
  DGAlgebra bg = polynomial_algebra({4, 8}, q);
  CHECK(free_pullback_level(FreeModule::algebra_module(bg)) == 1);
  FreeModule free3(bg, {{"b0", 0}, {"b4", 4}, {"b8", 8}}, std::vector<ModElem>(3));
  CHECK(free_pullback_level(free3) == 1);

  std::vector<ModElem> diff(2);
  add_term(diff[1], 0, bg.generator_monomial(0), Scalar::one(q));
  FreeModule twisted(bg, {{"b0", 0}, {"b3", 3}}, diff);
  CHECK(error_of([&] { free_pullback_level(twisted); }) == ErrorCode::NotFree);
}

TEST_CASE("formalizability conditions") {
  FieldTag q = FieldTag::rationals();
  FormalizabilityData bundle{q, GradedDims{{4, 1}}, GradedDims{{3, 1}, {10, 1}}, GradedDims{{4, 1}, {8, 1}}, {}, {}};
  CHECK(formalizability_check(bundle) == Formalizability::CondII);

  FormalizabilityData poly{FieldTag::prime(2), {}, {}, {}, true, true};
  CHECK(formalizability_check(poly) == Formalizability::CondI);
  poly.sq1_vanishes = false;
  CHECK(formalizability_check(poly) == Formalizability::Neither);

  GradedDims loop_s4;
  for (int k = 1; k <= 10; ++k) loop_s4[3 * k] = 1;
  FormalizabilityData hopf{q, GradedDims{{7, 1}}, loop_s4, GradedDims{{4, 1}}, false, {}};
  CHECK(formalizability_check(hopf) == Formalizability::Neither);

  CHECK(error_of([&] { formalizability_check(FormalizabilityData{q, {}, {}, {}, {}, {}}); }) == ErrorCode::MissingData);
}
