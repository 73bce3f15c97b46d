#include "dglevel/linalg.hpp"

#include <numeric>
#include <utility>

#include "dglevel/kernels.hpp"

namespace dgl {

Vector zero_vector(FieldTag f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Matrix::Matrix(FieldTag field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldTag field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(FieldTag field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "matrix product");
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

RowEchelon reduce_prime(const Matrix& m) {
  const std::uint32_t p = m.field().characteristic();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint32_t>> rows(m.rows(), std::vector<std::uint32_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < cols; ++c) rows[r][c] = m(r, c).residue();

  RowEchelon out{m.field(), cols, {}, {}};
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    kernels::scale_mod(rows[rank].data(), inverse_mod(rows[rank][c], p), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      kernels::axpy_mod(rows[r].data(), rows[rank].data(), p - rows[r][c], cols, p);
    }
    out.pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = 0; r < rank; ++r) {
    Vector v;
    v.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) v.emplace_back(m.field(), static_cast<long>(rows[r][c]));
    out.rows.push_back(std::move(v));
  }
  return out;
}

void normalize_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

RowEchelon reduce_rational(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).value();
      rows[r][c] = q.get_num() * (l / q.get_den());
    }
  }

  RowEchelon out{m.field(), cols, {}, {}};
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rows.size();
    // Prefer the smallest nonzero pivot to keep entries short.
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0 && (piv == rows.size() || abs(rows[r][c]) < abs(rows[piv][c]))) piv = r;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const mpz_class pv = rows[rank][c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpz_class a = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = pv * rows[r][k] - a * rows[rank][k];
      normalize_content(rows[r]);
    }
    out.pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = 0; r < rank; ++r) {
    const mpz_class pv = rows[r][out.pivots[r]];
    Vector v;
    v.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) v.emplace_back(m.field(), mpq_class(rows[r][c], pv));
    out.rows.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RowEchelon reduce(const Matrix& m) { return m.field().is_rational() ? reduce_rational(m) : reduce_prime(m); }

RankKernel rank_and_kernel(const Matrix& m) {
  RowEchelon e = reduce(m);
  RankKernel out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return reduce(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = reduce(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][m.cols()];
  }
  return x;
}

std::vector<std::size_t> complement_indices(FieldTag field, std::size_t dim, const std::vector<Vector>& base,
                                            const std::vector<Vector>& candidates) {
  std::vector<Vector> cols = base;
  cols.insert(cols.end(), candidates.begin(), candidates.end());
  RowEchelon e = reduce(Matrix::from_columns(field, dim, cols));
  std::vector<std::size_t> out;
  for (auto p : e.pivots)
    if (p >= base.size()) out.push_back(p - base.size());
  return out;
}

}  // namespace dgl
