#include "dglevel/rational.hpp"

#include <algorithm>

namespace dgl {

namespace {

const FieldTag kQ = FieldTag::rationals();

Poly generator_poly(const DGAlgebra& a, std::size_t i) {
  Poly p;
  add_term(p, a.generator_monomial(i), Scalar::one(a.field()));
  return p;
}

Vector coordinates(const DGAlgebra& a, const Poly& p, int n) {
  const auto& basis = a.basis(n);
  Vector v = zero_vector(a.field(), basis.size());
  for (const auto& [m, c] : p) {
    if (a.degree(m) != n) throw Error(ErrorCode::InvalidInput, "element is not homogeneous of degree " + std::to_string(n));
    const auto it = std::find(basis.begin(), basis.end(), m);
    v[static_cast<std::size_t>(it - basis.begin())] += c;
  }
  return v;
}

Poly from_coordinates(const DGAlgebra& a, const Vector& v, int n) {
  const auto& basis = a.basis(n);
  Poly p;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!v[k].is_zero()) add_term(p, basis[k], v[k]);
  return p;
}

/// The matrix of d: A^n -> A^{n+1}.
Matrix differential_matrix(const DGAlgebra& a, int n) {
  const auto& src = a.basis(n);
  const std::size_t rows = a.basis(n + 1).size();
  std::vector<Vector> cols;
  for (const auto& m : src) cols.push_back(coordinates(a, a.d(m), n + 1));
  return Matrix::from_columns(a.field(), rows, cols);
}

int extension_top_degree(const TowerSpec& t) {
  int s = 0;
  for (std::size_t i = 0; i < t.extension_size; ++i) s += t.total.generators()[i].degree;
  return s;
}

}  // namespace

DGAlgebra sphere_model(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "sphere dimension must exceed 1");
  if (d % 2) return DGAlgebra(kQ, {{"x", d, GenKind::Exterior, 0}}, {Poly{}});
  std::vector<Generator> gens{{"x", d, GenKind::Polynomial, 0}, {"ξ", 2 * d - 1, GenKind::Exterior, 0}};
  const DGAlgebra bare(kQ, gens, std::vector<Poly>(2));
  const Poly x = generator_poly(bare, 0);
  return DGAlgebra(kQ, gens, {Poly{}, bare.multiply(x, x)});
}

void validate_tower(const TowerSpec& t) {
  const std::size_t n = t.total.size(), k = t.extension_size;
  if (k > n || n - k != t.base.size()) throw Error(ErrorCode::InvalidInput, "tower and base disagree");
  if (!(t.total.tail(k) == t.base)) throw Error(ErrorCode::InvalidInput, "the total algebra does not extend the base");
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& [m, c] : t.total.generator_differential(i))
      for (std::size_t j = i; j < k; ++j)
        if (m[j]) throw Error(ErrorCode::InvalidInput, "D(" + t.total.generators()[i].label + ") involves a later generator");
}

TowerSpec build_P_tower(int l, int d, std::optional<int> m_opt) {
  if (l < 1) throw Error(ErrorCode::InvalidInput, "l must be positive");
  const int m = m_opt.value_or(l * d + 1);
  if (m < l * d + 1) throw Error(ErrorCode::MTooSmall, "m must be at least ld + 1 = " + std::to_string(l * d + 1));
  const DGAlgebra base = sphere_model(d);
  std::vector<Generator> gens;
  const bool even = d % 2 == 0;
  const int wcount = even ? l - 1 : l;
  if (even && l >= 2) gens.push_back({"ρ", d - 1, GenKind::Exterior, 0});
  for (int i = 0; i < wcount; ++i) {
    const int deg = even ? i * (2 * d - 1) + (2 * m - 1) - i : i * d + (2 * m - 1) - i;
    gens.push_back({"w" + std::to_string(i), deg, GenKind::Exterior, 0});
  }
  const std::size_t k = gens.size();
  for (const auto& g : base.generators()) gens.push_back(g);
  const DGAlgebra bare(kQ, gens, std::vector<Poly>(gens.size()));
  std::vector<Poly> diff(gens.size());
  const Poly x = generator_poly(bare, k);
  if (even) {
    diff[k + 1] = bare.multiply(x, x);
    if (k > 0) {
      diff[0] = x;
      Poly rx_minus_xi = bare.multiply(generator_poly(bare, 0), x);
      add_into(rx_minus_xi, generator_poly(bare, k + 1), Scalar(kQ, -1L));
      for (std::size_t i = 2; i < k; ++i) diff[i] = bare.multiply(rx_minus_xi, generator_poly(bare, i - 1));
    }
  } else {
    for (std::size_t i = 1; i < k; ++i) diff[i] = bare.multiply(x, generator_poly(bare, i - 1));
  }
  TowerSpec t{base, DGAlgebra(kQ, gens, diff), k, l, d, m};
  validate_tower(t);
  return t;
}

GradedDims fibre_cohomology(const TowerSpec& t) {
  std::vector<Generator> gens(t.total.generators().begin(), t.total.generators().begin() + static_cast<long>(t.extension_size));
  std::vector<Poly> diff;
  for (std::size_t i = 0; i < t.extension_size; ++i) {
    Poly p;
    for (const auto& [m, c] : t.total.generator_differential(i)) {
      if (std::any_of(m.begin() + static_cast<long>(t.extension_size), m.end(), [](int e) { return e != 0; })) continue;
      p.emplace(Monomial(m.begin(), m.begin() + static_cast<long>(t.extension_size)), c);
    }
    diff.push_back(std::move(p));
  }
  for (const auto& g : gens)
    if (g.kind != GenKind::Exterior || g.degree % 2 == 0)
      throw Error(ErrorCode::InvalidInput, "fibre generator " + g.label + " is not odd");
  const DGAlgebra fibre(t.total.field(), gens, diff);
  const DegreeWindow w{0, extension_top_degree(t)};
  return cohomology(fibre.to_complex(w), w).dims;
}

FreeModule tower_module(const TowerSpec& t) {
  FreeModule over_base = FreeModule::from_extension(t.total, t.extension_size, extension_top_degree(t));
  const DGAlgebra target = sphere_cohomology(t.d, kQ);
  std::vector<Poly> images(t.base.size());
  add_term(images[0], target.generator_monomial(0), Scalar::one(kQ));
  return base_change(over_base, target, images);
}

TowerLevel tower_level_bounds(const TowerSpec& t, std::optional<DegreeWindow> window) {
  validate_tower(t);
  const FreeModule m = tower_module(t);
  const SphereLevel s = sphere_level(m);
  TowerLevel out;
  if (s.decomposition)
    for (const auto& id : s.decomposition->molecules)
      for (const auto& [n, k] : molecule_cohomology(id)) out.cohomology[n] += k;
  if (window && !out.cohomology.empty() &&
      (!window->contains(out.cohomology.begin()->first) || !window->contains(out.cohomology.rbegin()->first)))
    throw Error(ErrorCode::WindowTooSmall, "cohomology reaches degree " + std::to_string(out.cohomology.rbegin()->first));
  out.filtration_class = filtration_class(minimal_filtration(m));
  out.lower = s.lo;
  out.upper = std::min(s.hi, s.filtration_bound.value_or(s.hi));
  out.kind = out.lower == out.upper ? SphereLevel::Kind::Exact : SphereLevel::Kind::Interval;
  out.decomposition = s.decomposition;
  return out;
}

int pile_upper_bound(int c, int extra_odd_spheres) {
  if (c < 0 || extra_odd_spheres < 0) throw Error(ErrorCode::InvalidInput, "counts must be non-negative");
  // Base K[b], |b| = 2; odd spheres y_i with Dy_i = 0; stages x_j with Dx_j = b^{j+1}.
  std::vector<Generator> gens;
  for (int i = 0; i < extra_odd_spheres; ++i) gens.push_back({"y" + std::to_string(i), 3, GenKind::Exterior, 0});
  for (int j = 1; j <= c; ++j) gens.push_back({"x" + std::to_string(j), 2 * j + 1, GenKind::Exterior, 0});
  const std::size_t k = gens.size();
  gens.push_back({"b", 2, GenKind::Polynomial, 0});
  const DGAlgebra bare(kQ, gens, std::vector<Poly>(gens.size()));
  std::vector<Poly> diff(gens.size());
  for (int j = 1; j <= c; ++j) add_term(diff[static_cast<std::size_t>(extra_odd_spheres + j - 1)], bare.generator_monomial(k, j + 1), Scalar::one(kQ));
  const DGAlgebra total(kQ, gens, diff);
  int top = 0;
  for (std::size_t i = 0; i < k; ++i) top += gens[i].degree;
  SemifreeFiltration f{FreeModule::from_extension(total, k, top), {}};
  // F_n: fibre monomials with at most n of the x_j.
  for (int n = 0; n <= c; ++n) {
    std::vector<std::size_t> stage;
    const auto& g = f.module.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      int count = 0;
      for (int j = 1; j <= c; ++j)
        if (g[i].label.find("x" + std::to_string(j)) != std::string::npos) ++count;
      if (count <= n) stage.push_back(i);
    }
    f.stages.push_back(std::move(stage));
  }
  if (filtration_class(f) != c) throw Error(ErrorCode::VerificationFailed, "pile filtration has the wrong class");
  return level_upper_bound(f);
}

int sci_level_bound(int codim) { return pile_upper_bound(codim, 0); }

Scalar hopf_invariant(const HopfMap& h) {
  const DGAlgebra& c = h.target;
  if (c.field() != kQ && c.field().characteristic() == 0) throw Error(ErrorCode::FieldMismatch, "unexpected field");
  const FieldTag f = c.field();
  const int d = h.d;
  if (d < 2) throw Error(ErrorCode::InvalidInput, "sphere dimension must exceed 1");
  if (d % 2) return Scalar::zero(f);
  if (!c.d(h.image_x).empty() || c.d(h.image_xi) != c.multiply(h.image_x, h.image_x))
    throw Error(ErrorCode::NotAChainMap, "the images do not define a DG algebra map");
  const int top = 2 * d - 1;
  const DegreeWindow w{0, top};
  const Cohomology hc = cohomology(c.to_complex({0, top + 1}), w);
  if (hc.dims != GradedDims{{0, 1}, {top, 1}})
    throw Error(ErrorCode::WrongTargetCohomology, "target cohomology " + format_dims(hc.dims) + " up to degree " +
                                                      std::to_string(top));
  const Matrix d_low = differential_matrix(c, d - 1);
  const auto rho = solve(d_low, coordinates(c, h.image_x, d));
  if (!rho) throw Error(ErrorCode::NotExact, "φ(x) is not a coboundary");

  Poly gen = h.generator ? *h.generator : from_coordinates(c, hc.representatives.at(top).at(0), top);
  if (!c.d(gen).empty()) throw Error(ErrorCode::InvalidInput, "the generator is not a cocycle");
  const Matrix d_prev = differential_matrix(c, top - 1);
  std::vector<Vector> cols{coordinates(c, gen, top)};
  for (std::size_t j = 0; j < d_prev.cols(); ++j) cols.push_back(d_prev.column(j));
  const Matrix system = Matrix::from_columns(f, c.basis(top).size(), cols);

  auto coefficient = [&](const Vector& rho_v) {
    Poly z = c.multiply(from_coordinates(c, rho_v, d - 1), h.image_x);
    add_into(z, h.image_xi, Scalar(f, -1L));
    const auto sol = solve(system, coordinates(c, z, top));
    if (!sol) throw Error(ErrorCode::InvalidInput, "the generator does not span H^" + std::to_string(top));
    return (*sol)[0];
  };
  const Scalar value = coefficient(*rho);
  for (const auto& k : rank_and_kernel(d_low).kernel) {
    Vector shifted = *rho;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += k[i];
    if (coefficient(shifted) != value) throw Error(ErrorCode::VerificationFailed, "value depends on the choice of ρ");
  }
  return value;
}

int whitehead_square_invariant(int d) {
  if (d < 2 || d % 2) throw Error(ErrorCode::OddDimension, "the Whitehead square has Hopf invariant 0 for odd d");
  return 2;
}

}  // namespace dgl
