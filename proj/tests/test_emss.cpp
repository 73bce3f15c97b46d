#include "doctest.h"
#include "dglevel/emss.hpp"

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

GradedDims totals(const BigradedPage& p, int upto) {
  GradedDims g;
  for (const auto& [b, k] : p.dims)
    if (b.first + b.second <= upto) g[b.first + b.second] += k;
  return g;
}

}  // namespace

TEST_CASE("E_2 pages") {
  FieldTag q = FieldTag::rationals();
  BigradedPage p = e2_page({4, {7}, q, {}}, 30);
  const auto& cell = p.entries.at({-2, 8});
  REQUIRE(cell.size() == 1);
  CHECK(label(p.spec, cell[0]) == "γ1(τ)");
  CHECK(p.entries.at({-1, 4}).size() == 1);
  CHECK(p.entries.at({0, 7}).size() == 1);
  for (const auto& [b, v] : p.entries) CHECK(b.first <= 0);

  BigradedPage odd = e2_page({3, {}, q, {}}, 20);
  for (int i = 0; 2 * i <= 20; ++i) {
    REQUIRE(odd.entries.count({-i, 3 * i}));
    CHECK(label(odd.spec, odd.entries.at({-i, 3 * i})[0]) == (i ? "γ" + std::to_string(i) + "(s⁻¹x3)" : "1"));
  }
  CHECK(error_of([&] { e2_page({4, {7}, q, {}}, -1); }) == ErrorCode::WindowTooSmall);
}

TEST_CASE("E_2 agrees with Tor from a bar resolution") {
  for (FieldTag f : {FieldTag::rationals(), FieldTag::prime(2), FieldTag::prime(3)})
    for (int d : {3, 4, 6}) {
      const int top = 18;
      BigradedPage p = e2_page({d, {}, f, {}}, top);
      DGAlgebra s = sphere_cohomology(d, f);
      TorResult t = derived_tensor(RawModule::trivial(s), RawModule::trivial(s), Strategy::Bar, {0, top});
      CHECK(totals(p, top) == t.cohomology.dims);
    }
}

TEST_CASE("d_2 from the Hopf invariant") {
  FieldTag q = FieldTag::rationals();
  BigradedPage p = install_d2(e2_page({4, {7}, q, {}}, 40), Scalar::one(q));
  const Matrix& m = p.differential.at({-2, 8});
  const auto& tgt = p.entries.at({0, 7});
  CHECK(m.rows() == tgt.size());
  CHECK(label(p.spec, tgt[0]) == "x7");
  CHECK(m(0, 0) == Scalar::one(q));
  CHECK(comodule_square_commutes(p, 8));

  BigradedPage zero = install_d2(e2_page({4, {7}, q, {}}, 40), Scalar::zero(q));
  CHECK(zero.differential.empty());
  CHECK(error_of([&] { install_d2(e2_page({5, {9}, q, {}}, 20), Scalar::one(q)); }) ==
        ErrorCode::OddDimensionNonzeroHopf);
  CHECK(error_of([&] { install_d2(e2_page({4, {5}, q, {}}, 20), Scalar::one(q)); }) ==
        ErrorCode::WrongTargetCohomology);
}

TEST_CASE("stable pages") {
  FieldTag q = FieldTag::rationals();
  for (int w : {8, 12, 20, 41}) {
    StableResult r = run_to_stable(install_d2(e2_page({4, {7}, q, {}}, w), Scalar::one(q)));
    REQUIRE(std::holds_alternative<Finite>(r.verdict));
    CHECK(std::get<Finite>(r.verdict).dims == GradedDims{{0, 1}, {3, 1}});
  }
  for (int d : {2, 6, 8}) {
    StableResult r = run_to_stable(install_d2(e2_page({d, {2 * d - 1}, q, {}}, 2 * d), Scalar(q, 3L)));
    REQUIRE(std::holds_alternative<Finite>(r.verdict));
    CHECK(std::get<Finite>(r.verdict).dims == GradedDims{{0, 1}, {d - 1, 1}});
  }

  StableResult inf = run_to_stable(install_d2(e2_page({4, {7}, q, {}}, 40), Scalar::zero(q)));
  REQUIRE(std::holds_alternative<InfiniteCertified>(inf.verdict));
  CHECK(std::get<InfiniteCertified>(inf.verdict).period == 6);

  // The pullback of the Hopf map along itself.
  StableResult enu = run_to_stable(install_d2(e2_page({4, {7, 7}, q, 0}, 40), Scalar::one(q)));
  REQUIRE(std::holds_alternative<Finite>(enu.verdict));
  CHECK(enu.total == GradedDims{{0, 1}, {3, 1}, {7, 1}, {10, 1}});
  CHECK(enu.no_extension_problem);
  CHECK(format_table(enu).find("verdict: Finite") != std::string::npos);
}

TEST_CASE("compactness from the Hopf invariant") {
  FieldTag q = FieldTag::rationals(), f2 = FieldTag::prime(2);
  CHECK(compactness_from_hopf(4, Scalar::one(q)));
  CHECK(!compactness_from_hopf(4, Scalar(f2, 2L)));
  CHECK(compactness_from_hopf(4, Scalar(FieldTag::prime(3), 2L)));
  CHECK(!compactness_from_hopf(5, Scalar::zero(q)));
  CHECK(!compactness_from_hopf(4, Scalar::zero(q)));
}
