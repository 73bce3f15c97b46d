#include "dglevel/resolve.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dgl {

namespace {

Scalar sgn(FieldTag f, int parity) { return Scalar(f, (parity & 1) ? -1L : 1L); }

std::optional<int> min_degree(const CochainComplex& c) {
  for (const auto& [n, l] : c.basis())
    if (!l.empty()) return n;
  return std::nullopt;
}

std::optional<int> max_degree_of(const CochainComplex& c) {
  std::optional<int> out;
  for (const auto& [n, l] : c.basis())
    if (!l.empty()) out = n;
  return out;
}

/// (degree, index into the total space, label) for each basis vector.
struct RawBasis {
  std::vector<int> degree;
  std::vector<std::string> label;
};

RawBasis raw_basis(const RawModule& m) {
  RawBasis b;
  for (const auto& [n, labels] : m.complex().basis())
    for (const auto& l : labels) {
      b.degree.push_back(n);
      b.label.push_back(l);
    }
  return b;
}

bool finite_dimensional(const DGAlgebra& a) {
  for (const auto& g : a.generators())
    if (g.kind == GenKind::DividedPower || (g.kind == GenKind::Polynomial && g.max_power == 0)) return false;
  return true;
}

int top_degree(const DGAlgebra& a) {
  int top = 0;
  for (const auto& g : a.generators()) top += g.degree * (g.kind == GenKind::Exterior ? 1 : g.max_power);
  return top;
}

}  // namespace

DGAlgebra sphere_cohomology(int d, FieldTag field, const std::string& label) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "sphere dimension must be positive");
  Generator g{label, d, d % 2 ? GenKind::Exterior : GenKind::Polynomial, d % 2 ? 0 : 1};
  return DGAlgebra(field, {g}, {Poly{}});
}

DGAlgebra polynomial_algebra(const std::vector<int>& degrees, FieldTag field, const std::string& prefix) {
  std::vector<Generator> gens;
  std::set<std::string> used;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const int deg = degrees[i];
    if (deg < 1) throw Error(ErrorCode::InvalidInput, "polynomial generator degree must be positive");
    if (deg % 2 && field.characteristic() != 2)
      throw Error(ErrorCode::OddGenerator, "odd polynomial generator of degree " + std::to_string(deg));
    std::string label = prefix + std::to_string(deg);
    for (int k = 2; !used.insert(label).second; ++k) label = prefix + std::to_string(deg) + "'" + std::to_string(k);
    gens.push_back({label, deg, GenKind::Polynomial, 0});
  }
  return DGAlgebra(field, gens, std::vector<Poly>(gens.size()));
}

RawModule regular_module(const DGAlgebra& a) {
  if (!finite_dimensional(a)) throw Error(ErrorCode::InvalidInput, "regular module needs a finite-dimensional algebra");
  const int top = top_degree(a);
  CochainComplex c = a.to_complex({0, top});
  const FieldTag f = a.field();
  std::map<Monomial, std::size_t> index;
  std::size_t total = 0;
  for (const auto& [n, labels] : c.basis())
    for (const auto& m : a.basis(n)) index[m] = total++;
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Matrix mat(f, total, total);
    const Monomial x = a.generator_monomial(i);
    for (const auto& [m, col] : index)
      if (auto r = a.multiply(x, m)) mat(index.at(r->second), col) = r->first;
    action.push_back(std::move(mat));
  }
  return RawModule(a, std::move(c), std::move(action));
}

Resolution bar_resolution(const RawModule& m, int cutoff) {
  const DGAlgebra& a = m.algebra();
  const FieldTag f = a.field();
  for (const auto& g : a.generators())
    if (g.degree < 2)
      throw Error(ErrorCode::NotSimplyConnected, "bar truncation needs A^1 = 0; generator " + g.label + " has degree 1");
  if (cutoff < 0) throw Error(ErrorCode::InvalidInput, "negative bar cutoff");
  const RawBasis mb = raw_basis(m);
  const auto lo = min_degree(m.complex());
  if (!lo) return {FreeModule::zero(a), {}, "bar", FreeModule::kComplete};

  const bool fin = finite_dimensional(a);
  if (!fin && !a.has_zero_differential())
    throw Error(ErrorCode::StrategyInapplicable, "bar resolution needs a finite algebra or zero differential");
  const int sum_cap = fin ? top_degree(a) * std::max(cutoff, 1) : 2 * cutoff;
  std::vector<Monomial> abar;
  for (int n = 1; n <= sum_cap; ++n)
    for (const auto& mono : a.basis(n)) abar.push_back(mono);

  using Word = std::vector<Monomial>;
  std::map<std::pair<std::size_t, Word>, std::size_t> index;
  std::vector<ModGenerator> gens;
  std::vector<std::pair<std::size_t, Word>> keys;
  std::function<void(std::size_t, Word&, int)> words = [&](std::size_t mi, Word& w, int sum) {
    int deg = mb.degree[mi];
    std::string lab = mb.label[mi] + "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      deg += a.degree(w[i]) - 1;
      lab += (i ? "|" : "") + a.label(w[i]);
    }
    index[{mi, w}] = gens.size();
    keys.push_back({mi, w});
    gens.push_back({lab + "]", deg});
    if (static_cast<int>(w.size()) == cutoff) return;
    for (const auto& x : abar) {
      const int s = sum + a.degree(x);
      if (s > sum_cap) continue;
      w.push_back(x);
      words(mi, w, s);
      w.pop_back();
    }
  };
  for (std::size_t mi = 0; mi < mb.degree.size(); ++mi) {
    Word w;
    words(mi, w, 0);
  }

  const Matrix dm = m.total_differential();
  std::map<Monomial, Matrix> act_cache;
  auto act = [&](const Monomial& x) -> const Matrix& {
    auto it = act_cache.find(x);
    if (it == act_cache.end()) it = act_cache.emplace(x, m.act(x)).first;
    return it->second;
  };
  std::vector<ModElem> diff;
  for (const auto& [mi, w] : keys) {
    ModElem v;
    const int mdeg = mb.degree[mi];
    const std::size_t k = w.size();
    std::vector<int> eps(k + 1);
    eps[0] = mdeg;
    for (std::size_t i = 0; i < k; ++i) eps[i + 1] = eps[i] + a.degree(w[i]) - 1;
    auto put = [&](std::size_t mj, const Word& ww, const Monomial& b, const Scalar& c) {
      auto it = index.find({mj, ww});
      if (it == index.end()) throw Error(ErrorCode::VerificationFailed, "bar word escaped the truncation");
      add_term(v, it->second, b, c);
    };
    const Monomial one = a.unit();
    for (std::size_t r = 0; r < dm.rows(); ++r)
      if (!dm(r, mi).is_zero()) put(r, w, one, dm(r, mi));
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& [da, c] : a.d(w[i])) {
        Word ww = w;
        ww[i] = da;
        put(mi, ww, one, -(sgn(f, eps[i]) * c));
      }
    if (k >= 1) {
      const Matrix& x = act(w[0]);
      const Scalar s = sgn(f, mdeg) * sgn(f, mdeg * a.degree(w[0]));
      Word rest(w.begin() + 1, w.end());
      for (std::size_t r = 0; r < x.rows(); ++r)
        if (!x(r, mi).is_zero()) put(r, rest, one, s * x(r, mi));
      for (std::size_t i = 1; i < k; ++i)
        if (auto prod = a.multiply(w[i - 1], w[i])) {
          Word ww(w.begin(), w.begin() + static_cast<long>(i - 1));
          ww.push_back(prod->second);
          ww.insert(ww.end(), w.begin() + static_cast<long>(i + 1), w.end());
          put(mi, ww, one, sgn(f, eps[i]) * prod->first);
        }
      Word front(w.begin(), w.end() - 1);
      put(mi, front, w[k - 1], -sgn(f, eps[k - 1]));
    }
    diff.push_back(std::move(v));
  }
  const int complete = *lo + cutoff;
  FreeModule fm(a, std::move(gens), std::move(diff), complete);

  // Check that the augmentation m[]b -> m.b is a quasi-isomorphism below `complete`.
  DegreeWindow w{*lo, complete - 1};
  CochainComplex fc = fm.to_complex(w);
  Cohomology hf = cohomology(fc, w);
  const CochainComplex& mc = m.complex();
  DegreeWindow mw{w.lo, w.hi};
  Cohomology hm = cohomology(mc, mw);
  for (int n : hf.certified) {
    const std::size_t want = hm.dims.count(n) ? hm.dims.at(n) : 0;
    const std::size_t got = hf.dims.count(n) ? hf.dims.at(n) : 0;
    if (want != got) throw Error(ErrorCode::VerificationFailed, "bar augmentation fails in degree " + std::to_string(n));
    if (!got) continue;
    auto fbasis = fm.basis(n);
    const std::size_t off = m.offsets().at(n);
    std::vector<Vector> images;
    for (const auto& rep : hf.representatives.at(n)) {
      Vector img = zero_vector(f, mc.dim(n));
      for (std::size_t i = 0; i < fbasis.size(); ++i) {
        if (rep[i].is_zero()) continue;
        const auto& [g, b] = fbasis[i];
        const auto& [mi, word] = keys[g];
        if (!word.empty()) continue;
        const Matrix& x = act(b);
        const Scalar s = sgn(f, mb.degree[mi] * a.degree(b));
        for (std::size_t r = off; r < off + mc.dim(n); ++r) img[r - off] += rep[i] * s * x(r, mi);
      }
      images.push_back(std::move(img));
    }
    Matrix prev = mc.differential(n - 1);
    std::vector<Vector> bnd;
    for (std::size_t j = 0; j < prev.cols(); ++j) bnd.push_back(prev.column(j));
    if (complement_indices(f, mc.dim(n), bnd, images).size() != got)
      throw Error(ErrorCode::VerificationFailed, "bar augmentation not injective on cohomology in degree " + std::to_string(n));
  }
  return {std::move(fm), {}, "bar", complete - 1};
}

Resolution koszul_resolution(const DGAlgebra& a, int max_degree) {
  if (!a.has_zero_differential()) throw Error(ErrorCode::StrategyInapplicable, "Koszul strategy needs zero differential");
  const FieldTag f = a.field();
  std::vector<Generator> fibre;
  std::vector<std::pair<std::size_t, std::pair<int, int>>> rules;  // fibre gen -> (fibre factor or -1, base gen)
  std::size_t squares = 0;
  for (const auto& g : a.generators())
    if ((g.kind == GenKind::Exterior && g.degree % 2 == 0) || (g.kind == GenKind::Polynomial && g.max_power == 1)) ++squares;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Generator& g = a.generators()[i];
    const bool square_zero = g.kind == GenKind::Exterior || (g.kind == GenKind::Polynomial && g.max_power == 1);
    if (g.degree < 2) throw Error(ErrorCode::StrategyInapplicable, "Koszul strategy needs generators of degree >= 2");
    const std::string s = "s⁻¹" + g.label;
    if (g.kind == GenKind::Polynomial && g.max_power == 0) {
      rules.push_back({fibre.size(), {-1, static_cast<int>(i)}});
      fibre.push_back({s, g.degree - 1, GenKind::Exterior, 0});
    } else if (square_zero && g.degree % 2 == 1) {
      rules.push_back({fibre.size(), {-1, static_cast<int>(i)}});
      fibre.push_back({s, g.degree - 1, GenKind::DividedPower, 0});
    } else if (square_zero) {
      const std::size_t si = fibre.size();
      rules.push_back({si, {-1, static_cast<int>(i)}});
      fibre.push_back({s, g.degree - 1, GenKind::Exterior, 0});
      rules.push_back({fibre.size(), {static_cast<int>(si), static_cast<int>(i)}});
      fibre.push_back({squares > 1 ? "w(" + g.label + ")" : "w", 2 * g.degree - 2, GenKind::DividedPower, 0});
    } else {
      throw Error(ErrorCode::StrategyInapplicable, "no Koszul factor for generator " + g.label);
    }
  }
  const std::size_t split = fibre.size();
  std::vector<Generator> gens = fibre;
  gens.insert(gens.end(), a.generators().begin(), a.generators().end());
  std::vector<Poly> diff(gens.size());
  for (const auto& [fi, rule] : rules) {
    Monomial m(gens.size(), 0);
    if (rule.first >= 0) m[static_cast<std::size_t>(rule.first)] = 1;
    m[split + static_cast<std::size_t>(rule.second)] = 1;
    diff[fi] = Poly{{m, Scalar::one(f)}};
  }
  DGAlgebra total(f, gens, diff);
  Resolution r{FreeModule::from_extension(total, split, max_degree), {}, "koszul", max_degree};
  for (const auto& g : fibre)
    if (g.kind == GenKind::DividedPower) r.periods.push_back(g.degree);
  std::sort(r.periods.begin(), r.periods.end());
  r.periods.erase(std::unique(r.periods.begin(), r.periods.end()), r.periods.end());
  r.certified_upto = r.module.complete_upto();
  return r;
}

Resolution koszul_resolution_sphere(int d, FieldTag field, int max_degree) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "sphere dimension must be at least 2");
  return koszul_resolution(sphere_cohomology(d, field), max_degree);
}

Resolution koszul_resolution_poly(const std::vector<int>& degrees, FieldTag field) {
  int sum = 0;
  for (int d : degrees) sum += d;
  return koszul_resolution(polynomial_algebra(degrees, field), sum + 1);
}

FreeModule tensor_with_complex(const CochainComplex& v, const FreeModule& fm) {
  const FieldTag f = fm.field();
  std::vector<ModGenerator> gens;
  std::vector<std::pair<int, std::size_t>> vkeys;  // (degree, index within degree)
  std::map<std::pair<std::pair<int, std::size_t>, std::size_t>, std::size_t> index;
  for (const auto& [n, labels] : v.basis())
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t h = 0; h < fm.rank(); ++h) {
        index[{{n, i}, h}] = gens.size();
        const std::string& hl = fm.generators()[h].label;
        gens.push_back({hl == "1" ? labels[i] : labels[i] + "⊗" + hl, n + fm.generators()[h].degree});
      }
  std::vector<ModElem> diff(gens.size());
  for (const auto& [n, labels] : v.basis()) {
    Matrix dv = v.differential(n);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t h = 0; h < fm.rank(); ++h) {
        ModElem& out = diff[index.at({{n, i}, h})];
        for (std::size_t r = 0; r < dv.rows(); ++r)
          if (!dv(r, i).is_zero()) add_term(out, index.at({{n + 1, r}, h}), fm.algebra().unit(), dv(r, i));
        const Scalar s = sgn(f, n);
        for (const auto& [k, c] : fm.generator_differential(h)) add_term(out, index.at({{n, i}, k.first}), k.second, s * c);
      }
  }
  int complete = FreeModule::kComplete;
  if (!fm.is_finite()) complete = fm.complete_upto() + min_degree(v).value_or(0);
  return FreeModule(fm.algebra(), std::move(gens), std::move(diff), complete);
}

std::string_view to_string(Strategy s) { return s == Strategy::Bar ? "bar" : "koszul"; }

Resolution resolve(const RawModule& m, Strategy s, int max_degree) {
  const auto lo = min_degree(m.complex());
  if (!lo) return {FreeModule::zero(m.algebra()), {}, std::string(to_string(s)), FreeModule::kComplete};
  if (s == Strategy::Bar) return bar_resolution(m, std::max(1, max_degree - *lo));
  if (!m.action_is_trivial()) throw Error(ErrorCode::StrategyInapplicable, "Koszul strategy needs a trivial action");
  Resolution k = koszul_resolution(m.algebra(), std::max(0, max_degree - *lo));
  FreeModule fm = tensor_with_complex(m.complex(), k.module);
  return {fm, k.periods, "koszul", fm.complete_upto()};
}

CochainComplex tensor(const FreeModule& fm, const RawModule& n, DegreeWindow w) {
  const FieldTag f = fm.field();
  if (!(fm.algebra() == n.algebra())) throw Error(ErrorCode::AlgebraMismatch, "tensor over different algebras");
  const RawBasis nb = raw_basis(n);
  const int nlo = min_degree(n.complex()).value_or(0);
  DegreeWindow known{w.lo - 1, w.hi + 1};
  if (!fm.is_finite()) known.hi = std::min(known.hi, fm.complete_upto() + nlo);
  if (known.hi < known.lo) known.hi = known.lo;
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> bases;
  Basis labels;
  for (int d = known.lo; d <= known.hi; ++d) {
    auto& b = bases[d];
    auto& l = labels[d];
    for (std::size_t g = 0; g < fm.rank(); ++g)
      for (std::size_t j = 0; j < nb.degree.size(); ++j)
        if (fm.generators()[g].degree + nb.degree[j] == d) {
          b.emplace_back(g, j);
          const std::string& gl = fm.generators()[g].label;
          l.push_back(gl == "1" ? nb.label[j] : (nb.label[j] == "1" ? gl : gl + "⊗" + nb.label[j]));
        }
  }
  std::map<Monomial, Matrix> act_cache;
  auto act = [&](const Monomial& x) -> const Matrix& {
    auto it = act_cache.find(x);
    if (it == act_cache.end()) it = act_cache.emplace(x, n.act(x)).first;
    return it->second;
  };
  const Matrix dn = n.total_differential();
  std::map<int, Matrix> dmap;
  for (int d = known.lo; d < known.hi; ++d) {
    const auto& src = bases[d];
    const auto& dst = bases[d + 1];
    if (src.empty() || dst.empty()) continue;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index[dst[r]] = r;
    Matrix mat(f, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto [g, j] = src[c];
      for (const auto& [k, coeff] : fm.generator_differential(g)) {
        const Matrix& x = act(k.second);
        for (std::size_t r = 0; r < x.rows(); ++r)
          if (!x(r, j).is_zero()) mat(index.at({k.first, r}), c) += coeff * x(r, j);
      }
      const Scalar s = sgn(f, fm.generators()[g].degree);
      for (std::size_t r = 0; r < dn.rows(); ++r)
        if (!dn(r, j).is_zero()) mat(index.at({g, r}), c) += s * dn(r, j);
    }
    dmap.emplace(d, std::move(mat));
  }
  return CochainComplex(f, known, std::move(labels), std::move(dmap));
}

namespace {

DegreeWindow widen_for_finite(const FreeModule& fm, const RawModule& n, DegreeWindow w) {
  if (!fm.is_finite() || fm.rank() == 0) return w;
  const auto nlo = min_degree(n.complex()), nhi = max_degree_of(n.complex());
  if (!nlo) return w;
  int glo = fm.generators()[0].degree, ghi = glo;
  for (const auto& g : fm.generators()) {
    glo = std::min(glo, g.degree);
    ghi = std::max(ghi, g.degree);
  }
  return {std::min(w.lo, glo + *nlo), std::max(w.hi, ghi + *nhi)};
}

}  // namespace

TorResult derived_tensor(const Resolution& r, const RawModule& n, DegreeWindow w) {
  TorResult t;
  DegreeWindow ww = widen_for_finite(r.module, n, w);
  t.complex = tensor(r.module, n, ww);
  t.cohomology = cohomology(t.complex, ww);
  t.periods = r.periods;
  t.resolution_finite = r.module.is_finite();
  return t;
}

TorResult derived_tensor(const RawModule& m, const RawModule& n, Strategy s, DegreeWindow w) {
  if (!(m.algebra() == n.algebra())) throw Error(ErrorCode::AlgebraMismatch, "derived tensor over different algebras");
  const int nlo = min_degree(n.complex()).value_or(0);
  Resolution r = resolve(m, s, w.hi + 2 - nlo);
  return derived_tensor(r, n, w);
}

std::string verdict_name(const FinitenessVerdict& v) {
  if (std::holds_alternative<Finite>(v)) return "Finite";
  if (std::holds_alternative<InfiniteCertified>(v)) return "InfiniteCertified";
  return "UnknownBeyondCap";
}

std::optional<InfiniteCertified> periodic_witness(const Cohomology& h, const std::vector<int>& periods) {
  const std::set<int> cert(h.certified.begin(), h.certified.end());
  auto nonzero = [&](int n) { return cert.count(n) && h.dims.count(n) && h.dims.at(n) > 0; };
  for (const auto& [n, k] : h.dims) {
    for (int p : periods) {
      if (p <= 0) continue;
      std::vector<int> run;
      for (int x = n; nonzero(x); x += p) run.push_back(x);
      if (run.size() >= 3) return InfiniteCertified{p, run};
    }
  }
  return std::nullopt;
}

FinitenessVerdict finiteness(const TorResult& t, DegreeWindow w) {
  if (t.resolution_finite) return Finite{total(t.cohomology.dims), t.cohomology.dims};
  if (auto c = periodic_witness(t.cohomology, t.periods)) return *c;
  return UnknownBeyondCap{w.hi};
}

FinitenessVerdict phi(const FreeModule& m, DegreeWindow w) {
  RawModule k = RawModule::trivial(m.algebra());
  Resolution r{m, {}, "given", m.complete_upto()};
  return finiteness(derived_tensor(r, k, w), w);
}

FinitenessVerdict phi(const RawModule& m, DegreeWindow w) {
  RawModule k = RawModule::trivial(m.algebra());
  TorResult t;
  try {
    t = derived_tensor(m, k, Strategy::Koszul, w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StrategyInapplicable) throw;
    t = derived_tensor(m, k, Strategy::Bar, w);
  }
  return finiteness(t, w);
}

std::string_view to_string(Compactness c) {
  switch (c) {
    case Compactness::Compact: return "compact";
    case Compactness::NotCompact: return "not-compact";
    case Compactness::Unknown: return "unknown";
  }
  return "?";
}

Compactness is_compact(const FinitenessVerdict& v) {
  if (std::holds_alternative<Finite>(v)) return Compactness::Compact;
  if (std::holds_alternative<InfiniteCertified>(v)) return Compactness::NotCompact;
  return Compactness::Unknown;
}

std::optional<InfiniteCertified> infinite_level_certificate(const TorResult& t) {
  if (t.resolution_finite) return std::nullopt;
  return periodic_witness(t.cohomology, t.periods);
}

int filtration_class(const SemifreeFiltration& f) {
  const FreeModule& m = f.module;
  if (m.rank() == 0) return 0;
  if (f.stages.empty()) throw Error(ErrorCode::InvalidFiltration, "no stages");
  std::vector<int> first(m.rank(), -1);
  std::set<std::size_t> prev;
  for (std::size_t n = 0; n < f.stages.size(); ++n) {
    std::set<std::size_t> cur(f.stages[n].begin(), f.stages[n].end());
    for (auto g : prev)
      if (!cur.count(g)) throw Error(ErrorCode::InvalidFiltration, "stages are not nested at " + std::to_string(n));
    for (auto g : cur) {
      if (g >= m.rank()) throw Error(ErrorCode::InvalidFiltration, "unknown generator index");
      if (prev.count(g)) continue;
      first[g] = static_cast<int>(n);
      for (const auto& [k, c] : m.generator_differential(g))
        if (!prev.count(k.first))
          throw Error(ErrorCode::InvalidFiltration, "D(" + m.generators()[g].label + ") leaves stage " +
                                                        std::to_string(static_cast<int>(n) - 1));
    }
    prev = std::move(cur);
  }
  if (prev.size() != m.rank()) throw Error(ErrorCode::InvalidFiltration, "last stage is not the whole module");
  return static_cast<int>(f.stages.size()) - 1;
}

int level_upper_bound(const SemifreeFiltration& f) {
  if (f.module.rank() == 0) return 0;
  return filtration_class(f) + 1;
}

SemifreeFiltration minimal_filtration(const FreeModule& m) {
  const std::size_t r = m.rank();
  std::vector<int> stage(r, -1);
  std::vector<int> state(r, 0);  // 0 new, 1 in progress, 2 done
  std::function<int(std::size_t)> visit = [&](std::size_t g) -> int {
    if (state[g] == 2) return stage[g];
    if (state[g] == 1) throw Error(ErrorCode::InvalidFiltration, "generators depend on each other cyclically");
    state[g] = 1;
    int s = 0;
    for (const auto& [k, c] : m.generator_differential(g)) s = std::max(s, visit(k.first) + 1);
    state[g] = 2;
    return stage[g] = s;
  };
  int top = 0;
  for (std::size_t g = 0; g < r; ++g) top = std::max(top, visit(g));
  SemifreeFiltration f{m, {}};
  if (r == 0) return f;
  for (int n = 0; n <= top; ++n) {
    std::vector<std::size_t> s;
    for (std::size_t g = 0; g < r; ++g)
      if (stage[g] <= n) s.push_back(g);
    f.stages.push_back(std::move(s));
  }
  return f;
}

}  // namespace dgl
