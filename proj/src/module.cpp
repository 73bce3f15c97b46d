#include "dglevel/module.hpp"

#include <algorithm>
#include <set>

namespace dgl {

void add_term(ModElem& v, std::size_t g, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace({g, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

void add_into(ModElem& acc, const ModElem& v, const Scalar& c) {
  for (const auto& [k, x] : v) add_term(acc, k.first, k.second, x * c);
}

namespace {

Scalar sign(FieldTag f, int parity) { return Scalar(f, (parity & 1) ? -1L : 1L); }

std::vector<ModGenerator> uniquify(std::vector<ModGenerator> gens) {
  std::set<std::string> seen;
  for (auto& g : gens) {
    std::string base = g.label;
    for (int i = 2; !seen.insert(g.label).second; ++i) g.label = base + "#" + std::to_string(i);
  }
  return gens;
}

}  // namespace

FreeModule::FreeModule(DGAlgebra algebra, std::vector<ModGenerator> gens, std::vector<ModElem> differential,
                       int complete_upto)
    : algebra_(std::move(algebra)), gens_(uniquify(std::move(gens))), diff_(std::move(differential)),
      complete_upto_(complete_upto) {
  diff_.resize(gens_.size());
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    for (const auto& [k, c] : diff_[g]) {
      if (k.first >= gens_.size() || k.second.size() != algebra_.size() || !algebra_.is_valid(k.second))
        throw Error(ErrorCode::InvalidInput, "malformed term in D(" + gens_[g].label + ")");
      if (c.field() != field()) throw Error(ErrorCode::FieldMismatch, "module differential coefficient");
      if (degree(k.first, k.second) != gens_[g].degree + 1)
        throw Error(ErrorCode::InvalidInput, "D(" + gens_[g].label + ") is not of degree +1");
    }
  }
  for (std::size_t g = 0; g < gens_.size(); ++g)
    if (!D(diff_[g]).empty()) throw Error(ErrorCode::InvalidInput, "D² ≠ 0 on generator " + gens_[g].label);
}

FreeModule FreeModule::algebra_module(const DGAlgebra& a) { return FreeModule(a, {{"1", 0}}, {ModElem{}}); }

FreeModule FreeModule::zero(const DGAlgebra& a) { return FreeModule(a, {}, {}); }

FreeModule FreeModule::from_extension(const DGAlgebra& total, std::size_t split, int max_degree) {
  DGAlgebra base = total.tail(split);
  std::vector<Monomial> fibre = total.monomials_upto(0, split, max_degree);
  bool fibre_finite = true;
  for (std::size_t i = 0; i < split; ++i) {
    const Generator& g = total.generators()[i];
    if (g.kind == GenKind::DividedPower || (g.kind == GenKind::Polynomial && g.max_power == 0)) fibre_finite = false;
  }
  int complete = fibre_finite ? kComplete : max_degree;

  auto split_mono = [&](const Monomial& m) {
    Monomial h(m.begin(), m.begin() + static_cast<long>(split));
    h.resize(total.size(), 0);
    Monomial a(m.begin() + static_cast<long>(split), m.end());
    return std::make_pair(h, a);
  };
  // Drop fibre monomials whose differential leaves the retained set.
  std::vector<bool> keep(fibre.size(), true);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < fibre.size(); ++i) index[fibre[i]] = i;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < fibre.size(); ++i) {
      if (!keep[i]) continue;
      for (const auto& [m, c] : total.d(fibre[i])) {
        auto it = index.find(split_mono(m).first);
        if (it == index.end() || !keep[it->second]) {
          keep[i] = false;
          complete = std::min(complete, total.degree(fibre[i]) - 1);
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<ModGenerator> gens;
  std::map<Monomial, std::size_t> gen_index;
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < fibre.size(); ++i)
    if (keep[i]) {
      gen_index[fibre[i]] = kept.size();
      kept.push_back(fibre[i]);
      gens.push_back({total.label(fibre[i]), total.degree(fibre[i])});
    }
  std::vector<ModElem> diff;
  for (const auto& h : kept) {
    ModElem v;
    for (const auto& [m, c] : total.d(h)) {
      auto [fh, a] = split_mono(m);
      add_term(v, gen_index.at(fh), a, c);
    }
    diff.push_back(std::move(v));
  }
  return FreeModule(std::move(base), std::move(gens), std::move(diff), complete);
}

ModElem FreeModule::D(const ModElem& v) const {
  ModElem out;
  for (const auto& [k, c] : v) {
    const auto& [g, m] = k;
    add_into(out, act(diff_[g], Poly{{m, Scalar::one(field())}}), c);
    const Scalar s = sign(field(), gens_[g].degree) * c;
    for (const auto& [dm, dc] : algebra_.d(m)) add_term(out, g, dm, dc * s);
  }
  return out;
}

ModElem FreeModule::act(const ModElem& v, const Poly& a) const {
  ModElem out;
  for (const auto& [k, c] : v)
    for (const auto& [am, ac] : a)
      if (auto r = algebra_.multiply(k.second, am)) add_term(out, k.first, r->second, r->first * c * ac);
  return out;
}

std::vector<std::pair<std::size_t, Monomial>> FreeModule::basis(int n) const {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (std::size_t g = 0; g < gens_.size(); ++g)
    for (const auto& m : algebra_.basis(n - gens_[g].degree)) out.emplace_back(g, m);
  return out;
}

std::string FreeModule::label(std::size_t g, const Monomial& m) const {
  std::string a = algebra_.label(m);
  return a == "1" ? gens_[g].label : gens_[g].label + "·" + a;
}

Vector FreeModule::coordinates(const ModElem& v, int n) const {
  auto b = basis(n);
  Vector out = zero_vector(field(), b.size());
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i) index[b[i]] = i;
  for (const auto& [k, c] : v) {
    auto it = index.find(k);
    if (it == index.end()) throw Error(ErrorCode::InvalidInput, "element not homogeneous of degree " + std::to_string(n));
    out[it->second] = c;
  }
  return out;
}

ModElem FreeModule::element(const Vector& coords, int n) const {
  auto b = basis(n);
  ModElem out;
  for (std::size_t i = 0; i < b.size(); ++i) add_term(out, b[i].first, b[i].second, coords[i]);
  return out;
}

CochainComplex FreeModule::to_complex(DegreeWindow w) const {
  DegreeWindow known{w.lo - 1, std::min(w.hi + 1, complete_upto_)};
  if (known.hi < known.lo) known.hi = known.lo;
  Basis labels;
  std::map<int, std::vector<std::pair<std::size_t, Monomial>>> bases;
  for (int n = known.lo; n <= known.hi; ++n) {
    bases[n] = basis(n);
    auto& l = labels[n];
    for (const auto& [g, m] : bases[n]) l.push_back(label(g, m));
  }
  std::map<int, Matrix> dmap;
  for (int n = known.lo; n < known.hi; ++n) {
    const auto& src = bases[n];
    const auto& dst = bases[n + 1];
    if (src.empty() || dst.empty()) continue;
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index[dst[r]] = r;
    Matrix mat(field(), dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [k, v] : D(ModElem{{src[c], Scalar::one(field())}})) mat(index.at(k), c) = v;
    dmap.emplace(n, std::move(mat));
  }
  return CochainComplex(field(), known, std::move(labels), std::move(dmap));
}

FreeModule shift(const FreeModule& m, int k) {
  std::vector<ModGenerator> gens = m.generators();
  std::vector<ModElem> diff;
  for (auto& g : gens) g.degree -= k;
  const Scalar s = sign(m.field(), k);
  for (std::size_t g = 0; g < m.rank(); ++g) {
    ModElem v;
    add_into(v, m.generator_differential(g), s);
    diff.push_back(std::move(v));
  }
  int complete = m.is_finite() ? FreeModule::kComplete : m.complete_upto() - k;
  return FreeModule(m.algebra(), std::move(gens), std::move(diff), complete);
}

namespace {

ModElem reindex(const ModElem& v, std::size_t offset) {
  ModElem out;
  for (const auto& [k, c] : v) out.emplace(std::make_pair(k.first + offset, k.second), c);
  return out;
}

}  // namespace

FreeModule direct_sum(const DGAlgebra& a, const std::vector<FreeModule>& ms) {
  std::vector<ModGenerator> gens;
  std::vector<ModElem> diff;
  int complete = FreeModule::kComplete;
  for (const auto& m : ms) {
    if (!(m.algebra() == a)) throw Error(ErrorCode::AlgebraMismatch, "direct sum over different algebras");
    const std::size_t offset = gens.size();
    for (std::size_t g = 0; g < m.rank(); ++g) {
      gens.push_back(m.generators()[g]);
      diff.push_back(reindex(m.generator_differential(g), offset));
    }
    complete = std::min(complete, m.complete_upto());
  }
  return FreeModule(a, std::move(gens), std::move(diff), complete);
}

FreeModule direct_sum(const std::vector<FreeModule>& ms) {
  if (ms.empty()) throw Error(ErrorCode::InvalidInput, "empty direct sum needs an algebra");
  return direct_sum(ms.front().algebra(), ms);
}

ModElem apply(const FreeModule& src, const ModuleMap& f, const ModElem& v) {
  ModElem out;
  for (const auto& [k, c] : v) {
    ModElem img;
    for (const auto& [ik, ic] : f.images[k.first])
      if (auto r = src.algebra().multiply(ik.second, k.second)) add_term(img, ik.first, r->second, r->first * ic);
    add_into(out, img, c);
  }
  return out;
}

bool is_chain_map(const FreeModule& src, const FreeModule& dst, const ModuleMap& f) {
  if (f.images.size() != src.rank()) return false;
  for (std::size_t g = 0; g < src.rank(); ++g) {
    for (const auto& [k, c] : f.images[g])
      if (dst.degree(k.first, k.second) != src.generators()[g].degree + f.degree) return false;
    ModElem lhs = dst.D(f.images[g]);
    ModElem rhs = apply(src, f, src.generator_differential(g));
    add_into(lhs, rhs, Scalar(src.field(), (f.degree % 2) ? 1L : -1L));
    if (!lhs.empty()) return false;
  }
  return true;
}

ModuleMap identity_map(const FreeModule& m) {
  ModuleMap f;
  for (std::size_t g = 0; g < m.rank(); ++g) f.images.push_back(ModElem{{{g, m.algebra().unit()}, Scalar::one(m.field())}});
  return f;
}

ModuleMap zero_map(const FreeModule& m) {
  ModuleMap f;
  f.images.resize(m.rank());
  return f;
}

FreeModule cone(const FreeModule& src, const FreeModule& dst, const ModuleMap& f) {
  if (!(src.algebra() == dst.algebra())) throw Error(ErrorCode::AlgebraMismatch, "cone over different algebras");
  if (f.degree != 0 || !is_chain_map(src, dst, f)) throw Error(ErrorCode::NotAChainMap, "cone of a non-chain map");
  std::vector<ModGenerator> gens = dst.generators();
  std::vector<ModElem> diff;
  for (std::size_t g = 0; g < dst.rank(); ++g) diff.push_back(dst.generator_differential(g));
  const std::size_t offset = dst.rank();
  const Scalar minus = Scalar(src.field(), -1L);
  for (std::size_t g = 0; g < src.rank(); ++g) {
    gens.push_back({"s" + src.generators()[g].label, src.generators()[g].degree - 1});
    ModElem v = f.images[g];
    add_into(v, reindex(src.generator_differential(g), offset), minus);
    diff.push_back(std::move(v));
  }
  int complete = std::min(dst.complete_upto(), src.is_finite() ? FreeModule::kComplete : src.complete_upto() - 1);
  return FreeModule(dst.algebra(), std::move(gens), std::move(diff), complete);
}

namespace {

using HomBasis = std::vector<std::tuple<std::size_t, std::size_t, Monomial>>;

HomBasis hom_basis(const FreeModule& src, const FreeModule& dst, int n) {
  HomBasis out;
  for (std::size_t g = 0; g < src.rank(); ++g)
    for (const auto& [h, m] : dst.basis(src.generators()[g].degree + n)) out.emplace_back(g, h, m);
  return out;
}

ModuleMap map_from_basis(const FreeModule& src, const HomBasis& b, int n, const Vector& v) {
  ModuleMap f;
  f.degree = n;
  f.images.resize(src.rank());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& [g, h, m] = b[i];
    add_term(f.images[g], h, m, v[i]);
  }
  return f;
}

Vector vector_from_map(const HomBasis& b, const ModuleMap& f, FieldTag field) {
  Vector v = zero_vector(field, b.size());
  std::map<std::tuple<std::size_t, std::size_t, Monomial>, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i) index[b[i]] = i;
  for (std::size_t g = 0; g < f.images.size(); ++g)
    for (const auto& [k, c] : f.images[g]) v[index.at({g, k.first, k.second})] = c;
  return v;
}

ModuleMap hom_differential(const FreeModule& src, const FreeModule& dst, const ModuleMap& f) {
  ModuleMap out;
  out.degree = f.degree + 1;
  const Scalar s = Scalar(src.field(), (f.degree % 2) ? 1L : -1L);
  for (std::size_t g = 0; g < src.rank(); ++g) {
    ModElem v = dst.D(f.images[g]);
    add_into(v, apply(src, f, src.generator_differential(g)), s);
    out.images.push_back(std::move(v));
  }
  return out;
}

}  // namespace

MorphismComplex hom_complex(const FreeModule& src, const FreeModule& dst, DegreeWindow w) {
  if (!src.is_finite()) throw Error(ErrorCode::SourceNotFree, "source must be free on finitely many generators");
  if (!(src.algebra() == dst.algebra())) throw Error(ErrorCode::AlgebraMismatch, "hom over different algebras");
  int top = 0;
  for (const auto& g : src.generators()) top = std::max(top, g.degree);
  if (!dst.is_finite() && top + w.hi + 2 > dst.complete_upto())
    throw Error(ErrorCode::WindowTooSmall, "target presentation is truncated below the needed degrees");
  MorphismComplex out;
  DegreeWindow known{w.lo - 1, w.hi + 1};
  Basis labels;
  for (int n = known.lo; n <= known.hi; ++n) {
    out.basis[n] = hom_basis(src, dst, n);
    auto& l = labels[n];
    for (const auto& [g, h, m] : out.basis[n])
      l.push_back(src.generators()[g].label + "↦" + dst.label(h, m));
  }
  std::map<int, Matrix> dmap;
  for (int n = known.lo; n < known.hi; ++n) {
    const auto& b = out.basis[n];
    const auto& b1 = out.basis[n + 1];
    if (b.empty() || b1.empty()) continue;
    Matrix mat(src.field(), b1.size(), b.size());
    for (std::size_t c = 0; c < b.size(); ++c) {
      Vector e = zero_vector(src.field(), b.size());
      e[c] = Scalar::one(src.field());
      Vector img = vector_from_map(b1, hom_differential(src, dst, map_from_basis(src, b, n, e)), src.field());
      for (std::size_t r = 0; r < b1.size(); ++r) mat(r, c) = img[r];
    }
    dmap.emplace(n, std::move(mat));
  }
  out.complex = CochainComplex(src.field(), known, std::move(labels), std::move(dmap));
  return out;
}

ModuleMap map_from_vector(const FreeModule& src, const FreeModule&, const MorphismComplex& h, int n, const Vector& v) {
  return map_from_basis(src, h.basis.at(n), n, v);
}

namespace {

bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t base) {
  for (auto& x : digits) {
    if (++x < base) return true;
    x = 0;
  }
  return false;
}

}  // namespace

IdempotentReport find_idempotents(const FreeModule& m, std::size_t max_dimension) {
  IdempotentReport report;
  const FieldTag f = m.field();
  if (m.rank() == 0) {
    report.exhaustive = true;
    return report;
  }
  MorphismComplex end = hom_complex(m, m, {0, 0});
  Cohomology h = cohomology(end.complex, {0, 0});
  const std::vector<Vector> reps = h.representatives.count(0) ? h.representatives.at(0) : std::vector<Vector>{};
  const std::size_t k = reps.size();
  report.end_dimension = k;
  if (k == 0) {
    report.exhaustive = true;
    return report;
  }
  if (k > max_dimension)
    throw Error(ErrorCode::EndTooLarge, "dim H^0(End) = " + std::to_string(k) + " exceeds " + std::to_string(max_dimension));

  const auto& b0 = end.basis.at(0);
  Matrix prev = end.complex.differential(-1);
  // Columns: class representatives, then coboundaries.
  std::vector<Vector> cols = reps;
  for (std::size_t j = 0; j < prev.cols(); ++j) cols.push_back(prev.column(j));
  Matrix solve_mat = Matrix::from_columns(f, b0.size(), cols);
  auto class_of = [&](const Vector& v) {
    auto x = solve(solve_mat, v);
    if (!x) throw Error(ErrorCode::VerificationFailed, "endomorphism is not a cocycle");
    return Vector(x->begin(), x->begin() + static_cast<long>(k));
  };
  auto to_map = [&](const Vector& coeffs) {
    Vector v = zero_vector(f, b0.size());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < b0.size(); ++r) v[r] += coeffs[i] * reps[i][r];
    return map_from_basis(m, b0, 0, v);
  };
  // Structure constants: table[i][j] = class of r_i ∘ r_j.
  std::vector<std::vector<Vector>> table(k, std::vector<Vector>(k));
  std::vector<ModuleMap> rep_maps;
  for (std::size_t i = 0; i < k; ++i) rep_maps.push_back(map_from_basis(m, b0, 0, reps[i]));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      ModuleMap comp;
      for (std::size_t g = 0; g < m.rank(); ++g) comp.images.push_back(apply(m, rep_maps[i], rep_maps[j].images[g]));
      table[i][j] = class_of(vector_from_map(b0, comp, f));
    }
  auto mul = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(f, k);
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (y[j].is_zero()) continue;
        const Scalar c = x[i] * y[j];
        for (std::size_t l = 0; l < k; ++l) out[l] += c * table[i][j][l];
      }
    }
    return out;
  };
  const Vector unit = class_of(vector_from_map(b0, identity_map(m), f));

  auto consider = [&](const Vector& x) {
    if (is_zero(x) || x == unit) return;
    if (mul(x, x) == x) report.idempotents.push_back(to_map(x));
  };

  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < k && small; ++i) {
      count *= p;
      small = count <= 65536;
    }
    if (small) {
      std::vector<std::uint32_t> digits(k, 0);
      do {
        Vector x;
        for (auto dgt : digits) x.emplace_back(f, static_cast<long>(dgt));
        consider(x);
      } while (next_tuple(digits, static_cast<std::uint32_t>(p)));
      report.exhaustive = true;
      return report;
    }
  } else {
    // In characteristic 0 the radical of the trace form is the Jacobson
    // radical; E/J = K certifies that E is local.
    Matrix gram(f, k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        Vector ea = zero_vector(f, k), eb = zero_vector(f, k);
        ea[a] = Scalar::one(f);
        eb[b] = Scalar::one(f);
        Vector ab = mul(ea, eb);
        Scalar tr = Scalar::zero(f);
        for (std::size_t c = 0; c < k; ++c) {
          Vector ec = zero_vector(f, k);
          ec[c] = Scalar::one(f);
          tr += mul(ab, ec)[c];
        }
        gram(a, b) = tr;
      }
    if (rank(gram) == 1) {
      report.exhaustive = true;
      return report;
    }
  }
  // Bounded search with coefficients in {-1, 0, 1}.
  std::vector<std::uint32_t> digits(k, 0);
  do {
    Vector x;
    for (auto dgt : digits) x.emplace_back(f, static_cast<long>(dgt) - 1);
    consider(x);
  } while (next_tuple(digits, 3));
  return report;
}

RawModule::RawModule(DGAlgebra algebra, CochainComplex complex, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), complex_(std::move(complex)), action_(std::move(action)) {
  const FieldTag f = algebra_.field();
  if (complex_.field() != f) throw Error(ErrorCode::FieldMismatch, "raw module complex");
  for (const auto& [n, labels] : complex_.basis()) {
    offsets_[n] = total_;
    total_ += labels.size();
  }
  action_.resize(algebra_.size(), Matrix(f, total_, total_));
  const Matrix dtot = total_differential();
  for (std::size_t i = 0; i < algebra_.size(); ++i) {
    const Matrix& a = action_[i];
    if (a.rows() != total_ || a.cols() != total_) throw Error(ErrorCode::InvalidInput, "action matrix has the wrong shape");
    const int deg = algebra_.generators()[i].degree;
    for (const auto& [n, off] : offsets_)
      for (std::size_t c = off; c < off + complex_.dim(n); ++c)
        for (std::size_t r = 0; r < total_; ++r) {
          if (a(r, c).is_zero()) continue;
          auto it = offsets_.find(n + deg);
          if (it == offsets_.end() || r < it->second || r >= it->second + complex_.dim(n + deg))
            throw Error(ErrorCode::InvalidInput, "action of " + algebra_.generators()[i].label + " has the wrong degree");
        }
    // d(x v) = (dx) v + (-1)^|x| x dv
    Matrix lhs = dtot * a;
    Matrix rhs = a * dtot;
    Matrix dx(f, total_, total_);
    for (const auto& [mono, c] : algebra_.generator_differential(i)) {
      Matrix t = act(mono);
      for (std::size_t r = 0; r < total_; ++r)
        for (std::size_t col = 0; col < total_; ++col) dx(r, col) += c * t(r, col);
    }
    const Scalar s = Scalar(f, (deg % 2) ? -1L : 1L);
    for (std::size_t r = 0; r < total_; ++r)
      for (std::size_t col = 0; col < total_; ++col)
        if (lhs(r, col) != dx(r, col) + s * rhs(r, col))
          throw Error(ErrorCode::InvalidInput, "action of " + algebra_.generators()[i].label + " is not compatible with d");
  }
  for (std::size_t i = 0; i < algebra_.size(); ++i)
    for (std::size_t j = i + 1; j < algebra_.size(); ++j) {
      const int di = algebra_.generators()[i].degree, dj = algebra_.generators()[j].degree;
      Matrix ab = action_[i] * action_[j], ba = action_[j] * action_[i];
      const Scalar s = Scalar(f, (di * dj) % 2 ? -1L : 1L);
      for (std::size_t r = 0; r < total_; ++r)
        for (std::size_t col = 0; col < total_; ++col)
          if (ab(r, col) != s * ba(r, col)) throw Error(ErrorCode::InvalidInput, "action is not graded-commutative");
    }
  for (std::size_t i = 0; i < algebra_.size(); ++i) {
    const Generator& g = algebra_.generators()[i];
    int bound = g.kind == GenKind::Exterior ? 1 : (g.kind == GenKind::Polynomial ? g.max_power : 0);
    if (bound > 0 && !act(algebra_.generator_monomial(i, bound)).is_zero()) {
      Matrix pw = act(algebra_.generator_monomial(i, bound)) * action_[i];
      if (!pw.is_zero()) throw Error(ErrorCode::InvalidInput, "action violates the relation on " + g.label);
    }
  }
}

RawModule RawModule::trivial(const DGAlgebra& a) {
  return trivial_action(a, GradedDims{{0, 1}}, "1");
}

RawModule RawModule::trivial_action(const DGAlgebra& a, const GradedDims& dims, const std::string& prefix) {
  Basis basis;
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& [n, k] : dims) {
    if (!k) continue;
    lo = any ? std::min(lo, n) : n;
    hi = any ? std::max(hi, n) : n;
    any = true;
    auto& l = basis[n];
    for (std::size_t i = 0; i < k; ++i)
      l.push_back(k == 1 ? (prefix == "1" ? "1" : prefix + std::to_string(n)) : prefix + std::to_string(n) + "_" + std::to_string(i));
  }
  CochainComplex c(a.field(), {lo - 1, hi + 1}, std::move(basis), {});
  return RawModule(a, std::move(c), {});
}

Matrix RawModule::act(const Monomial& m) const {
  const FieldTag f = algebra_.field();
  Matrix out = Matrix::identity(f, total_);
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (algebra_.generators()[i].kind == GenKind::DividedPower && m[i] > 1) {
      if (!action_[i].is_zero())
        throw Error(ErrorCode::InvalidInput, "divided-power action must be given explicitly");
      return Matrix(f, total_, total_);
    }
    for (int e = 0; e < m[i]; ++e) out = action_[i] * out;
  }
  return out;
}

Matrix RawModule::total_differential() const {
  Matrix out(algebra_.field(), total_, total_);
  for (const auto& [n, off] : offsets_) {
    auto next = offsets_.find(n + 1);
    if (next == offsets_.end()) continue;
    Matrix d = complex_.differential(n);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) out(next->second + r, off + c) = d(r, c);
  }
  return out;
}

bool RawModule::action_is_trivial() const {
  for (const auto& a : action_)
    if (!a.is_zero()) return false;
  return true;
}

}  // namespace dgl
