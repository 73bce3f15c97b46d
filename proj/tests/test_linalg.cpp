#include "doctest.h"
#include "dglevel/linalg.hpp"
#include "oracle.hpp"

using namespace dgl;

namespace {

Matrix from_ints(FieldTag f, const std::vector<std::vector<long>>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Scalar(f, rows[r][c]);
  return m;
}

void check_kernel(const Matrix& m, const RankKernel& rk) {
  CHECK(rk.rank + rk.kernel.size() == m.cols());
  for (const auto& v : rk.kernel) CHECK(is_zero(m.apply(v)));
}

}  // namespace

TEST_CASE("rank_and_kernel examples") {
  FieldTag q = FieldTag::rationals(), f2 = FieldTag::prime(2);
  auto id = rank_and_kernel(Matrix::identity(q, 2));
  CHECK(id.rank == 2);
  CHECK(id.kernel.empty());

  auto ones = rank_and_kernel(from_ints(f2, {{1, 1}, {1, 1}}));
  CHECK(ones.rank == 1);
  REQUIRE(ones.kernel.size() == 1);
  CHECK(ones.kernel[0] == Vector{Scalar::one(f2), Scalar::one(f2)});

  auto prop = rank_and_kernel(from_ints(q, {{2, 4}, {1, 2}}));
  CHECK(prop.rank == 1);
  REQUIRE(prop.kernel.size() == 1);
  CHECK(prop.kernel[0] == Vector{Scalar(q, -2L), Scalar::one(q)});
}

TEST_CASE("mixed fields are rejected") {
  Matrix a = Matrix::identity(FieldTag::rationals(), 2);
  Matrix b = Matrix::identity(FieldTag::prime(3), 2);
  CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("ranks agree with the textbook oracle") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 9));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 9));
    std::vector<std::vector<long>> ints(rows, std::vector<long>(cols));
    for (auto& row : ints)
      for (auto& x : row) x = rng.uniform(-3, 3);
    oracle::QMatrix qm(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) qm[r][c] = ints[r][c];
    Matrix mq = from_ints(FieldTag::rationals(), ints);
    auto rk = rank_and_kernel(mq);
    CHECK(rk.rank == oracle::rank_q(qm));
    check_kernel(mq, rk);
    for (long p : {2L, 3L, 5L, 7L}) {
      Matrix mp = from_ints(FieldTag::prime(static_cast<std::uint32_t>(p)), ints);
      auto rkp = rank_and_kernel(mp);
      CHECK(rkp.rank == oracle::rank_p(ints, p));
      check_kernel(mp, rkp);
    }
  }
}

TEST_CASE("unimodular row operations preserve rank in every characteristic") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    // Start from a diagonal of ones and zeros, then mix rows by integer shears.
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 7));
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    std::size_t expected = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (rng.uniform(0, 3) > 0) {
        m[i][i] = 1;
        ++expected;
      }
    for (int k = 0; k < 12; ++k) {
      std::size_t a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
      std::size_t b = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
      if (a == b) continue;
      long c = rng.uniform(-2, 2);
      for (std::size_t j = 0; j < n; ++j) m[a][j] += c * m[b][j];
    }
    CHECK(rank(from_ints(FieldTag::rationals(), m)) == expected);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(rank(from_ints(FieldTag::prime(p), m)) == expected);
  }
}

TEST_CASE("solve") {
  FieldTag q = FieldTag::rationals();
  Matrix a = from_ints(q, {{1, 2}, {3, 4}});
  auto x = solve(a, {Scalar(q, 5L), Scalar(q, 6L)});
  REQUIRE(x);
  CHECK(a.apply(*x) == Vector{Scalar(q, 5L), Scalar(q, 6L)});
  Matrix s = from_ints(q, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve(s, {Scalar(q, 1L), Scalar(q, 2L)}));
}
