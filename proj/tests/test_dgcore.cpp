#include "doctest.h"
#include "dglevel/module.hpp"
#include "dglevel/resolve.hpp"
#include "oracle.hpp"

using namespace dgl;

namespace {

std::size_t dim_at(const GradedDims& d, int n) { return d.count(n) ? d.at(n) : 0; }

GradedDims dims_of(const FreeModule& m, DegreeWindow w) { return cohomology(m.to_complex(w), w).dims; }

/// Free module e_0, ..., e_m with D(e_j) = e_{j-1} x over H^*(S^d); e_j in degree base + j(d-1).
FreeModule chain_module(const DGAlgebra& a, int m, int base) {
  const int d = a.generators()[0].degree;
  std::vector<ModGenerator> gens;
  std::vector<ModElem> diff(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j) {
    gens.push_back({"e" + std::to_string(j), base + j * (d - 1)});
    if (j > 0) add_term(diff[static_cast<std::size_t>(j)], static_cast<std::size_t>(j - 1), a.generator_monomial(0), Scalar::one(a.field()));
  }
  return FreeModule(a, gens, diff);
}

}  // namespace

TEST_CASE("shift") {
  FieldTag q = FieldTag::rationals();
  DGAlgebra s4 = sphere_cohomology(4, q);
  FreeModule a = FreeModule::algebra_module(s4);
  DegreeWindow w{-10, 12};
  CHECK(dims_of(shift(a, 0), w) == dims_of(a, w));
  FreeModule m = chain_module(s4, 1, 0);
  CHECK(dims_of(shift(shift(m, 3), -3), w) == dims_of(m, w));
  GradedDims base = dims_of(m, {-10, 14});
  GradedDims shifted = dims_of(shift(m, 2), {-10, 12});
  for (int n = -10; n <= 12; ++n) CHECK(dim_at(shifted, n) == dim_at(base, n + 2));
}

TEST_CASE("cone") {
  FieldTag q = FieldTag::rationals();
  DGAlgebra s4 = sphere_cohomology(4, q);
  FreeModule a = FreeModule::algebra_module(s4);
  DegreeWindow w{-6, 12};
  CHECK(dims_of(cone(a, a, identity_map(a)), w).empty());
  CHECK(dims_of(cone(a, a, zero_map(a)), w) == add_dims(dims_of(a, w), dims_of(shift(a, 1), w)));

  FreeModule src = shift(a, -4);
  ModuleMap times_x{0, {ModElem{{{0, s4.generator_monomial(0)}, Scalar::one(q)}}}};
  CHECK(dims_of(cone(src, a, times_x), w) == GradedDims{{0, 1}, {7, 1}});

  FreeModule m = chain_module(s4, 1, 0);
  try {
    cone(m, a, ModuleMap{0, {ModElem{{{0, s4.unit()}, Scalar::one(q)}}, ModElem{}}});
    FAIL("expected NotAChainMap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAChainMap);
  }
}

TEST_CASE("direct sums") {
  FieldTag q = FieldTag::rationals();
  DGAlgebra s4 = sphere_cohomology(4, q);
  FreeModule a = FreeModule::algebra_module(s4);
  DegreeWindow w{-6, 12};
  CHECK(dims_of(direct_sum({a}), w) == dims_of(a, w));
  CHECK(dims_of(direct_sum({a, shift(a, 1)}), w) == GradedDims{{-1, 1}, {0, 1}, {3, 1}, {4, 1}});
  CHECK(direct_sum(s4, {}).rank() == 0);
  FreeModule other = FreeModule::algebra_module(sphere_cohomology(3, q));
  CHECK_THROWS_AS(direct_sum({a, other}), Error);
}

TEST_CASE("constructors enforce D² = 0") {
  FieldTag q = FieldTag::rationals();
  DGAlgebra a = polynomial_algebra({2}, q);
  // D(e1) = e0 y, D(e2) = e1 y: D²(e2) = e0 y² ≠ 0.
  std::vector<ModElem> diff(3);
  add_term(diff[1], 0, a.generator_monomial(0), Scalar::one(q));
  add_term(diff[2], 1, a.generator_monomial(0), Scalar::one(q));
  CHECK_THROWS_AS(FreeModule(a, {{"e0", 0}, {"e1", 1}, {"e2", 2}}, diff), Error);
}

TEST_CASE("hom_complex") {
  FieldTag q = FieldTag::rationals();
  DGAlgebra s4 = sphere_cohomology(4, q);
  FreeModule a = FreeModule::algebra_module(s4);
  FreeModule z1 = chain_module(s4, 1, 0);
  MorphismComplex h = hom_complex(a, z1, {0, 0});
  CHECK(cohomology_in_degree(h.complex, 0) == 1);
  MorphismComplex end_a = hom_complex(a, a, {-2, 6});
  CHECK(cohomology(end_a.complex, {-2, 6}).dims == GradedDims{{0, 1}, {4, 1}});

  DGAlgebra s7 = sphere_cohomology(7, q);
  FreeModule a7 = FreeModule::algebra_module(s7);
  FreeModule sum = direct_sum({a7, shift(a7, -3)});
  CHECK(cohomology_in_degree(hom_complex(sum, sum, {0, 0}).complex, 0) == 2);

  FreeModule truncated(s4, {{"e", 0}}, {ModElem{}}, 5);
  CHECK_THROWS_AS(hom_complex(truncated, a, {0, 0}), Error);
}

TEST_CASE("idempotents") {
  for (FieldTag f : {FieldTag::rationals(), FieldTag::prime(2), FieldTag::prime(3)}) {
    DGAlgebra s4 = sphere_cohomology(4, f);
    FreeModule a = FreeModule::algebra_module(s4);
    for (int m = 0; m <= 3; ++m) {
      IdempotentReport r = find_idempotents(chain_module(s4, m, 0));
      CHECK(r.idempotents.empty());
      CHECK(r.exhaustive);
    }
    IdempotentReport split = find_idempotents(direct_sum({a, shift(a, 1)}));
    CHECK(split.idempotents.size() == 2);
    CHECK(find_idempotents(FreeModule::zero(s4)).idempotents.empty());
  }
}

TEST_CASE("cone dimensions fit the long exact sequence") {
  oracle::Rng rng(17);
  for (FieldTag f : {FieldTag::rationals(), FieldTag::prime(2)}) {
    DGAlgebra s4 = sphere_cohomology(4, f);
    FreeModule a = FreeModule::algebra_module(s4);
    for (int trial = 0; trial < 10; ++trial) {
      auto random_sum = [&] {
        std::vector<FreeModule> parts;
        const long k = rng.uniform(1, 3);
        for (long i = 0; i < k; ++i) parts.push_back(shift(a, static_cast<int>(rng.uniform(-4, 0))));
        return direct_sum(s4, parts);
      };
      FreeModule m = random_sum(), n = random_sum();
      ModuleMap fmap;
      for (std::size_t g = 0; g < m.rank(); ++g) {
        ModElem img;
        for (const auto& [h, mono] : n.basis(m.generators()[g].degree)) add_term(img, h, mono, Scalar(f, rng.uniform(-1, 1)));
        fmap.images.push_back(img);
      }
      DegreeWindow w{-2, 10};
      GradedDims hc = dims_of(cone(m, n, fmap), w);
      auto induced = [&](int deg) {
        auto src = m.basis(deg);
        std::vector<Vector> cols;
        for (const auto& [g, mono] : src)
          cols.push_back(n.coordinates(apply(m, fmap, ModElem{{{g, mono}, Scalar::one(f)}}), deg));
        return std::make_pair(src.size(), n.basis(deg).size() == 0 || cols.empty()
                                              ? std::size_t{0}
                                              : rank(Matrix::from_columns(f, n.basis(deg).size(), cols)));
      };
      for (int deg = w.lo; deg <= w.hi; ++deg) {
        auto [mdim, r0] = induced(deg);
        auto [mdim1, r1] = induced(deg + 1);
        (void)mdim;
        const std::size_t coker = n.basis(deg).size() - r0;
        const std::size_t ker = mdim1 - r1;
        CHECK(dim_at(hc, deg) == coker + ker);
      }
    }
  }
}
