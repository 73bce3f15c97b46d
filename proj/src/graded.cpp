#include "dglevel/graded.hpp"

#include <algorithm>

namespace dgl {

DegreeWindow DegreeWindow::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "window must be lo:hi, got " + text);
  DegreeWindow w;
  try {
    std::size_t used = 0;
    w.lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    std::string rest = text.substr(colon + 1);
    w.hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidInput, "window must be lo:hi, got " + text);
  }
  if (w.lo > w.hi) throw Error(ErrorCode::InvalidInput, "window lo > hi: " + text);
  return w;
}

GradedDims prune(GradedDims dims) {
  std::erase_if(dims, [](const auto& kv) { return kv.second == 0; });
  return dims;
}

std::size_t total(const GradedDims& dims) {
  std::size_t s = 0;
  for (const auto& [n, k] : dims) s += k;
  return s;
}

GradedDims shift_dims(const GradedDims& dims, int k) {
  GradedDims out;
  for (const auto& [n, v] : dims)
    if (v) out[n - k] = v;
  return out;
}

GradedDims add_dims(const GradedDims& a, const GradedDims& b) {
  GradedDims out = a;
  for (const auto& [n, v] : b) out[n] += v;
  return prune(out);
}

std::string format_dims(const GradedDims& dims) {
  std::string s = "{";
  bool first = true;
  for (const auto& [n, v] : dims) {
    if (!v) continue;
    if (!first) s += ", ";
    first = false;
    s += std::to_string(n) + ":" + std::to_string(v);
  }
  return s + "}";
}

CochainComplex::CochainComplex(FieldTag field, DegreeWindow known, Basis basis, std::map<int, Matrix> d)
    : field_(field), known_(known), basis_(std::move(basis)), d_(std::move(d)) {
  for (const auto& [n, labels] : basis_) {
    if (!known_.contains(n) && !labels.empty())
      throw Error(ErrorCode::InvalidInput, "basis in degree " + std::to_string(n) + " outside the known window");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::InvalidInput, "duplicate basis label in degree " + std::to_string(n));
  }
  for (const auto& [n, m] : d_) {
    if (m.field() != field_) throw Error(ErrorCode::FieldMismatch, "differential over another field");
    if (m.rows() != dim(n + 1) || m.cols() != dim(n))
      throw Error(ErrorCode::InvalidInput, "differential in degree " + std::to_string(n) + " has the wrong shape");
  }
  for (const auto& [n, m] : d_) {
    auto next = d_.find(n + 1);
    if (next == d_.end()) continue;
    if (!(next->second * m).is_zero())
      throw Error(ErrorCode::InvalidInput, "d∘d ≠ 0 starting in degree " + std::to_string(n));
  }
}

std::size_t CochainComplex::dim(int n) const {
  auto it = basis_.find(n);
  return it == basis_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& CochainComplex::labels(int n) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find(n);
  return it == basis_.end() ? empty : it->second;
}

Matrix CochainComplex::differential(int n) const {
  auto it = d_.find(n);
  if (it != d_.end()) return it->second;
  return Matrix(field_, dim(n + 1), dim(n));
}

namespace {

void cohomology_at(const CochainComplex& c, int n, Cohomology& out) {
  const std::size_t dn = c.dim(n);
  if (dn == 0) return;
  RankKernel ker = rank_and_kernel(c.differential(n));
  if (ker.kernel.empty()) return;
  Matrix prev = c.differential(n - 1);
  std::vector<Vector> image;
  if (prev.cols() > 0) {
    RowEchelon e = reduce(Matrix::from_columns(c.field(), dn, [&] {
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < prev.cols(); ++j) cols.push_back(prev.column(j));
      return cols;
    }()));
    for (auto p : e.pivots) image.push_back(prev.column(p));
  }
  std::vector<std::size_t> chosen = complement_indices(c.field(), dn, image, ker.kernel);
  if (chosen.empty()) return;
  out.dims[n] = chosen.size();
  auto& reps = out.representatives[n];
  for (auto i : chosen) reps.push_back(ker.kernel[i]);
}

}  // namespace

Cohomology cohomology(const CochainComplex& c, DegreeWindow w) {
  Cohomology out;
  for (int n = w.lo; n <= w.hi; ++n) {
    if (!c.certifiable(n)) continue;
    out.certified.push_back(n);
    cohomology_at(c, n, out);
  }
  return out;
}

Cohomology cohomology(const CochainComplex& c) { return cohomology(c, c.known()); }

std::size_t cohomology_in_degree(const CochainComplex& c, int n) {
  if (!c.certifiable(n))
    throw Error(ErrorCode::WindowTooSmall, "degree " + std::to_string(n) + " needs n-1, n, n+1 in the window");
  Cohomology out;
  cohomology_at(c, n, out);
  auto it = out.dims.find(n);
  return it == out.dims.end() ? 0 : it->second;
}

int amplitude(const GradedDims& dims) {
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& [n, v] : dims) {
    if (!v) continue;
    if (!any) lo = n;
    hi = n;
    any = true;
  }
  if (!any) throw Error(ErrorCode::ZeroModule, "amplitude of the zero module");
  return hi - lo;
}

}  // namespace dgl
