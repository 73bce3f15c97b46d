// Graded vector spaces and cochain complexes in a degree window.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "dglevel/linalg.hpp"

namespace dgl {

struct DegreeWindow {
  int lo = -16;
  int hi = 64;

  bool contains(int n) const noexcept { return lo <= n && n <= hi; }
  /// "lo:hi"
  static DegreeWindow parse(const std::string& text);
  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

/// degree -> dimension; only nonzero entries are stored.
using GradedDims = std::map<int, std::size_t>;

GradedDims prune(GradedDims dims);
std::size_t total(const GradedDims& dims);
GradedDims shift_dims(const GradedDims& dims, int k);  // result[n] = dims[n + k]
GradedDims add_dims(const GradedDims& a, const GradedDims& b);
std::string format_dims(const GradedDims& dims);  // "{0:1, 4:1}"

using Basis = std::map<int, std::vector<std::string>>;

/// A cochain complex known exactly in the degree range `known`: the cochains
/// C^n for n in known, and d^n : C^n -> C^{n+1} for lo <= n < hi.
/// d^n is stored as a dim(n+1) x dim(n) matrix.
class CochainComplex {
 public:
  CochainComplex() = default;
  CochainComplex(FieldTag field, DegreeWindow known, Basis basis, std::map<int, Matrix> d);

  FieldTag field() const noexcept { return field_; }
  DegreeWindow known() const noexcept { return known_; }
  const Basis& basis() const noexcept { return basis_; }
  std::size_t dim(int n) const;
  const std::vector<std::string>& labels(int n) const;
  Matrix differential(int n) const;
  /// Cohomology at n is determined by the data.
  bool certifiable(int n) const noexcept { return known_.lo <= n - 1 && n + 1 <= known_.hi; }

 private:
  FieldTag field_;
  DegreeWindow known_{0, 0};
  Basis basis_;
  std::map<int, Matrix> d_;
};

struct Cohomology {
  GradedDims dims;
  std::map<int, std::vector<Vector>> representatives;
  std::vector<int> certified;  // degrees of the window that were computed
};

Cohomology cohomology(const CochainComplex& c, DegreeWindow w);
Cohomology cohomology(const CochainComplex& c);
std::size_t cohomology_in_degree(const CochainComplex& c, int n);

/// sup - inf of the support.
int amplitude(const GradedDims& dims);

}  // namespace dgl
