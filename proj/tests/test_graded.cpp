#include <algorithm>

#include "doctest.h"
#include "dglevel/algebra.hpp"
#include "dglevel/graded.hpp"
#include "oracle.hpp"

using namespace dgl;

namespace {

DGAlgebra even_sphere_model(int d) {
  FieldTag q = FieldTag::rationals();
  std::vector<Generator> gens{{"x", d, GenKind::Polynomial, 0}, {"ξ", 2 * d - 1, GenKind::Exterior, 0}};
  return DGAlgebra(q, gens, {Poly{}, Poly{{Monomial{2, 0}, Scalar::one(q)}}});
}

}  // namespace

TEST_CASE("even sphere model cohomology") {
  DGAlgebra a = even_sphere_model(4);
  CochainComplex c = a.to_complex({0, 12});
  std::size_t monomials = 0;
  for (int n = 0; n <= 12; ++n) monomials += c.dim(n);
  std::size_t expected = 0;
  for (int i = 0; 4 * i <= 12; ++i)
    for (int e = 0; e <= 1; ++e) expected += 4 * i + 7 * e <= 12;
  CHECK(monomials == expected);
  Cohomology h = cohomology(c, {0, 12});
  CHECK(h.dims == GradedDims{{0, 1}, {4, 1}});
  CHECK(cohomology_in_degree(c, 0) == 1);
  CHECK(cohomology_in_degree(c, 4) == 1);
  CHECK(cohomology_in_degree(c, 3) == 0);
  CHECK_THROWS_AS(cohomology_in_degree(c, 13), Error);
}

TEST_CASE("zero differential and acyclic complexes") {
  FieldTag q = FieldTag::rationals();
  CochainComplex z(q, {-1, 4}, Basis{{0, {"a"}}, {3, {"b"}}}, {});
  CHECK(cohomology(z).dims == GradedDims{{0, 1}, {3, 1}});
  Matrix one = Matrix::identity(q, 1);
  CochainComplex idc(q, {-1, 2}, Basis{{0, {"a"}}, {1, {"b"}}}, {{0, one}});
  CHECK(cohomology(idc).dims.empty());
}

TEST_CASE("d∘d ≠ 0 is rejected at construction") {
  FieldTag q = FieldTag::rationals();
  Matrix one = Matrix::identity(q, 1);
  CHECK_THROWS_AS(CochainComplex(q, {-1, 3}, Basis{{0, {"a"}}, {1, {"b"}}, {2, {"c"}}}, {{0, one}, {1, one}}), Error);
}

TEST_CASE("amplitude") {
  CHECK(amplitude({{0, 1}, {4, 1}}) == 4);
  CHECK(amplitude({{5, 2}}) == 0);
  CHECK_THROWS_AS(amplitude({}), Error);
  for (int d = 2; d <= 6; ++d)
    for (int l = 0; l <= 5; ++l)
      for (int m = 0; m <= 4; ++m)
        CHECK(amplitude({{-m * (d - 1) + l, 1}, {d + l, 1}}) == (m + 1) * d - m);
}

TEST_CASE("cohomology is independent of basis order") {
  oracle::Rng rng(5);
  FieldTag f = FieldTag::prime(3);
  for (int trial = 0; trial < 20; ++trial) {
    // A random complex C^0 -> C^1 -> C^2 with d1 d0 = 0, built as d1 = random, d0 = kernel basis of d1.
    const std::size_t n0 = 2, n1 = static_cast<std::size_t>(rng.uniform(2, 5)), n2 = 2;
    Matrix d1(f, n2, n1);
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < n1; ++c) d1(r, c) = Scalar(f, rng.uniform(0, 2));
    auto ker = rank_and_kernel(d1).kernel;
    Matrix d0(f, n1, n0);
    for (std::size_t c = 0; c < n0 && c < ker.size(); ++c)
      for (std::size_t r = 0; r < n1; ++r) d0(r, c) = ker[c][r];
    auto labels = [](const char* p, std::size_t n) {
      std::vector<std::string> v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(p + std::to_string(i));
      return v;
    };
    CochainComplex c(f, {-1, 3}, Basis{{0, labels("a", n0)}, {1, labels("b", n1)}, {2, labels("c", n2)}},
                     {{0, d0}, {1, d1}});
    // Reverse the basis of C^1.
    Matrix p0(f, n1, n0), p1(f, n2, n1);
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t k = 0; k < n0; ++k) p0(n1 - 1 - r, k) = d0(r, k);
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t k = 0; k < n1; ++k) p1(r, n1 - 1 - k) = d1(r, k);
    auto rl = labels("b", n1);
    std::reverse(rl.begin(), rl.end());
    CochainComplex pc(f, {-1, 3}, Basis{{0, labels("a", n0)}, {1, rl}, {2, labels("c", n2)}}, {{0, p0}, {1, p1}});
    CHECK(cohomology(c).dims == cohomology(pc).dims);
  }
}

TEST_CASE("enlarging the window keeps certified degrees") {
  DGAlgebra a = even_sphere_model(2);
  Cohomology small = cohomology(a.to_complex({0, 8}), {0, 8});
  Cohomology large = cohomology(a.to_complex({0, 20}), {0, 20});
  for (int n : small.certified) {
    auto get = [](const Cohomology& h, int k) { return h.dims.count(k) ? h.dims.at(k) : 0; };
    CHECK(get(small, n) == get(large, n));
  }
}
