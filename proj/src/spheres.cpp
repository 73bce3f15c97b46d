#include "dglevel/spheres.hpp"

#include "dglevel/rational.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dgl {

namespace {

int floor_mod(int a, int n) { return ((a % n) + n) % n; }

/// The sphere dimension of an algebra of the form H^*(S^d).
int sphere_dimension(const DGAlgebra& a) {
  if (a.size() != 1 || !a.has_zero_differential())
    throw Error(ErrorCode::InvalidInput, "expected the cohomology of a sphere");
  const Generator& g = a.generators()[0];
  const bool square_zero = g.kind == GenKind::Exterior || (g.kind == GenKind::Polynomial && g.max_power == 1);
  if (!square_zero || g.degree < 2) throw Error(ErrorCode::InvalidInput, "expected the cohomology of a sphere");
  return g.degree;
}

GradedDims full_cohomology(const FreeModule& m) {
  if (!m.is_finite()) throw Error(ErrorCode::NotCompactlyDecomposable, "module presentation is truncated");
  if (m.rank() == 0) return {};
  int lo = m.generators()[0].degree, hi = lo;
  for (const auto& g : m.generators()) {
    lo = std::min(lo, g.degree);
    hi = std::max(hi, g.degree);
  }
  int top = 0;
  for (const auto& g : m.algebra().generators()) top += g.degree;
  const DegreeWindow w{lo, hi + top};
  return cohomology(m.to_complex(w), w).dims;
}

/// Dimensions of H^*(Hom(a, b)) over its whole support.
GradedDims hom_dims(const FreeModule& a, const FreeModule& b) {
  if (a.rank() == 0 || b.rank() == 0) return {};
  auto range = [](const FreeModule& m) {
    int lo = m.generators()[0].degree, hi = lo;
    for (const auto& g : m.generators()) {
      lo = std::min(lo, g.degree);
      hi = std::max(hi, g.degree);
    }
    return std::pair(lo, hi);
  };
  const auto [alo, ahi] = range(a);
  const auto [blo, bhi] = range(b);
  int top = 0;
  for (const auto& g : b.algebra().generators()) top += g.degree;
  const DegreeWindow w{blo - ahi, bhi + top - alo};
  return cohomology(hom_complex(a, b, w).complex, w).dims;
}

MoleculeId from_pair(int a, int b, int d) { return {d, b - d, (b - a - d) / (d - 1)}; }

int max_height(const std::vector<MoleculeId>& ms) {
  int h = -1;
  for (const auto& id : ms) h = std::max(h, id.m);
  return h;
}

int height_sum(const std::vector<MoleculeId>& ms) {
  int s = 0;
  for (const auto& id : ms) s += id.m;
  return s;
}

}  // namespace

std::string to_string(const MoleculeId& id) {
  std::string z = "Z_" + std::to_string(id.m);
  if (id.l == 0) return z;
  return "Σ^{" + std::to_string(-id.l) + "}" + z;
}

void validate(const MoleculeId& id) {
  if (id.d < 2) throw Error(ErrorCode::InvalidInput, "sphere dimension must exceed 1");
  if (id.m < 0) throw Error(ErrorCode::InvalidInput, "molecule height must be non-negative");
}

GradedDims molecule_cohomology(const MoleculeId& id) {
  validate(id);
  GradedDims g;
  g[-id.m * (id.d - 1) + id.l] += 1;
  g[id.d + id.l] += 1;
  return g;
}

int molecule_level(const MoleculeId& id) {
  validate(id);
  return id.m + 1;
}

int component_index(const MoleculeId& id) {
  validate(id);
  return floor_mod(id.l, id.d - 1);
}

QuiverComponent quiver_component(int d, int c, int rows, int cols) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "sphere dimension must exceed 1");
  if (c < 0 || c > d - 2) throw Error(ErrorCode::InvalidInput, "component index must lie in [0, d-2]");
  if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidInput, "rows and cols must be positive");
  QuiverComponent q{d, c, {}, {}};
  std::set<MoleculeId> present;
  for (int m = 0; m < rows; ++m)
    for (int k = 0; k < cols; ++k) {
      MoleculeId id{d, c + k * (d - 1), m};
      q.vertices.push_back(id);
      present.insert(id);
    }
  for (const auto& v : q.vertices) {
    const MoleculeId up{d, v.l + d - 1, v.m + 1};
    if (present.count(up)) q.arrows.emplace_back(v, up);
    if (v.m >= 1) {
      const MoleculeId down{d, v.l, v.m - 1};
      if (present.count(down)) q.arrows.emplace_back(v, down);
    }
  }
  return q;
}

std::string to_dot(const QuiverComponent& q, FieldTag field) {
  std::ostringstream out;
  out << "digraph component_" << q.component << " {\n  rankdir=LR;\n";
  auto node = [](const MoleculeId& id) { return "\"l" + std::to_string(id.l) + "m" + std::to_string(id.m) + "\""; };
  for (const auto& v : q.vertices) {
    const GradedDims h = molecule_cohomology(v);
    const Realizability r = realizable(v, field);
    out << "  " << node(v) << " [label=\"" << to_string(v) << " [H: " << h.begin()->first << ","
        << h.rbegin()->first << "] [level " << molecule_level(v) << "] [" << to_string(r.kind) << "]\"];\n";
  }
  for (const auto& [a, b] : q.arrows) out << "  " << node(a) << " -> " << node(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string_view to_string(Realizability::Kind k) {
  switch (k) {
    case Realizability::Kind::Yes: return "yes";
    case Realizability::Kind::No: return "no";
    case Realizability::Kind::CharacteristicTwoUnsupported: return "characteristic-two-unsupported";
  }
  return "no";
}

Realizability realizable(const MoleculeId& id, FieldTag field) {
  validate(id);
  using K = Realizability::Kind;
  if (field.characteristic() == 2) return {K::CharacteristicTwoUnsupported, "characteristic 2 is outside the criterion"};
  const int d = id.d;
  if (id.l == 0 && id.m == 0) return {K::Yes, "S^" + std::to_string(d)};
  if (id.l != id.m * (d - 1))
    return {K::No, "NegativeDegreeObstruction: cohomology must start in degree 0 and vanish below it"};
  if (id.m == 1 && d % 2 == 0) {
    const int h = whitehead_square_invariant(d);
    if (!Scalar(field, static_cast<long>(h)).is_zero())
      return {K::Yes, "S^" + std::to_string(2 * d - 1) + " via the Whitehead square, Hopf invariant " +
                          std::to_string(h)};
  }
  return {K::No, "FibreCohomologyInfinite: the homotopy fibre over S^" + std::to_string(d) +
                     " would have infinite-dimensional cohomology"};
}

Decomposition decompose(const GradedDims& dims, int d) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "sphere dimension must exceed 1");
  std::map<int, int> left;
  std::size_t n = 0;
  for (const auto& [deg, k] : dims)
    if (k) {
      left[deg] = static_cast<int>(k);
      n += k;
    }
  Decomposition out;
  if (n == 0) return out;
  if (n % 2) throw Error(ErrorCode::NoValidMatching, "odd total dimension " + std::to_string(n));

  constexpr std::size_t kMaxResults = 1 << 14;
  std::set<std::vector<MoleculeId>> found;
  std::vector<MoleculeId> cur;
  std::function<void()> search = [&]() {
    if (found.size() >= kMaxResults) return;
    auto it = left.begin();
    while (it != left.end() && it->second == 0) ++it;
    if (it == left.end()) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      found.insert(std::move(s));
      return;
    }
    const int a = it->first;
    --it->second;
    for (auto jt = std::next(it); jt != left.end(); ++jt) {
      const int b = jt->first, diff = b - a;
      if (jt->second == 0 || diff < d || (diff - d) % (d - 1)) continue;
      --jt->second;
      cur.push_back(from_pair(a, b, d));
      search();
      cur.pop_back();
      ++jt->second;
    }
    ++it->second;
  };
  search();
  if (found.empty()) throw Error(ErrorCode::NoValidMatching, format_dims(dims) + " is not a sum of molecule cohomologies");

  std::vector<std::vector<MoleculeId>> all(found.begin(), found.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return std::pair(max_height(x), height_sum(x)) < std::pair(max_height(y), height_sum(y));
  });
  out.molecules = all.front();
  for (const auto& id : out.molecules) out.matching.emplace_back(-id.m * (d - 1) + id.l, d + id.l);
  out.alternatives.assign(all.begin() + 1, all.end());
  out.ambiguous = !out.alternatives.empty();
  return out;
}

FreeModule molecule_model(const MoleculeId& id, FieldTag field) {
  validate(id);
  const int d = id.d;
  const DGAlgebra a = sphere_cohomology(d, field);
  const int base = -id.m * (d - 1) + id.l;
  std::vector<ModGenerator> gens;
  std::vector<ModElem> diff;
  for (int j = 0; j <= id.m; ++j) {
    gens.push_back({"e" + std::to_string(j), base + j * (d - 1)});
    ModElem dj;
    if (j > 0) add_term(dj, static_cast<std::size_t>(j - 1), a.generator_monomial(0), Scalar::one(field));
    diff.push_back(std::move(dj));
  }
  FreeModule m(a, std::move(gens), std::move(diff));
  if (full_cohomology(m) != molecule_cohomology(id))
    throw Error(ErrorCode::VerificationFailed, "cohomology of the model of " + to_string(id));
  if (!find_idempotents(m).idempotents.empty())
    throw Error(ErrorCode::VerificationFailed, to_string(id) + " model is decomposable");
  return m;
}

std::string_view to_string(SphereLevel::Kind k) {
  switch (k) {
    case SphereLevel::Kind::Exact: return "exact";
    case SphereLevel::Kind::Interval: return "interval";
    case SphereLevel::Kind::Infinite: return "infinite";
  }
  return "exact";
}

std::string format_level(const SphereLevel& s) {
  switch (s.kind) {
    case SphereLevel::Kind::Exact: return std::to_string(s.lo);
    case SphereLevel::Kind::Interval: return "[" + std::to_string(s.lo) + ", " + std::to_string(s.hi) + "]";
    case SphereLevel::Kind::Infinite: return "inf";
  }
  return "";
}

SphereLevel sphere_level(const GradedDims& dims, int d) {
  SphereLevel s;
  const GradedDims g = prune(dims);
  if (g.empty()) return s;
  Decomposition dec;
  try {
    dec = decompose(g, d);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotCompactlyDecomposable, e.what());
  }
  s.lo = s.hi = max_height(dec.molecules) + 1;
  for (const auto& alt : dec.alternatives) {
    s.lo = std::min(s.lo, max_height(alt) + 1);
    s.hi = std::max(s.hi, max_height(alt) + 1);
  }
  s.kind = s.lo == s.hi ? SphereLevel::Kind::Exact : SphereLevel::Kind::Interval;
  s.decomposition = std::move(dec);
  return s;
}

SphereLevel sphere_level(const FreeModule& m) {
  const int d = sphere_dimension(m.algebra());
  SphereLevel s = sphere_level(full_cohomology(m), d);
  if (m.rank() == 0) return s;
  const int bound = level_upper_bound(minimal_filtration(m));
  s.filtration_bound = bound;
  if (s.kind != SphereLevel::Kind::Interval) return s;
  // Keep the candidate multisets whose graded endomorphism dimensions match M
  // and whose level respects the filtration bound.
  const GradedDims end_m = hom_dims(m, m);
  std::map<std::pair<MoleculeId, MoleculeId>, GradedDims> pair_cache;
  auto predicted = [&](const std::vector<MoleculeId>& ms) {
    GradedDims g;
    for (const auto& x : ms)
      for (const auto& y : ms) {
        auto key = std::pair(x, y);
        auto it = pair_cache.find(key);
        if (it == pair_cache.end())
          it = pair_cache.emplace(key, hom_dims(molecule_model(x, m.field()), molecule_model(y, m.field()))).first;
        g = add_dims(g, it->second);
      }
    return g;
  };
  std::vector<std::vector<MoleculeId>> all{s.decomposition->molecules};
  all.insert(all.end(), s.decomposition->alternatives.begin(), s.decomposition->alternatives.end());
  std::vector<std::vector<MoleculeId>> kept;
  for (auto& ms : all)
    if (max_height(ms) + 1 <= bound && predicted(ms) == end_m) kept.push_back(std::move(ms));
  if (kept.empty()) throw Error(ErrorCode::VerificationFailed, "no decomposition matches the module");
  s.lo = s.hi = max_height(kept.front()) + 1;
  for (const auto& ms : kept) {
    s.lo = std::min(s.lo, max_height(ms) + 1);
    s.hi = std::max(s.hi, max_height(ms) + 1);
  }
  s.kind = s.lo == s.hi ? SphereLevel::Kind::Exact : SphereLevel::Kind::Interval;
  Decomposition& dec = *s.decomposition;
  dec.molecules = kept.front();
  dec.alternatives.assign(kept.begin() + 1, kept.end());
  dec.ambiguous = !dec.alternatives.empty();
  dec.matching.clear();
  for (const auto& id : dec.molecules) dec.matching.emplace_back(-id.m * (d - 1) + id.l, d + id.l);
  return s;
}

SphereLevel sphere_level(const TorResult& t, int d) {
  if (auto cert = infinite_level_certificate(t)) {
    SphereLevel s;
    s.kind = SphereLevel::Kind::Infinite;
    s.certificate = std::move(cert);
    return s;
  }
  if (!t.resolution_finite)
    throw Error(ErrorCode::NotCompactlyDecomposable, "cohomology is neither certified finite nor certified infinite");
  return sphere_level(t.cohomology.dims, d);
}

FreeModule base_change(const FreeModule& f, const DGAlgebra& target, const std::vector<Poly>& images) {
  const DGAlgebra& src = f.algebra();
  if (images.size() != src.size()) throw Error(ErrorCode::InvalidInput, "one image per generator is required");
  if (src.field() != target.field()) throw Error(ErrorCode::FieldMismatch, "base change across fields");
  const FieldTag k = target.field();
  std::map<Monomial, Poly> cache;
  auto image = [&](const Monomial& m) -> const Poly& {
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    Poly p;
    add_term(p, target.unit(), Scalar::one(k));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 1 && src.generators()[i].kind == GenKind::DividedPower)
        throw Error(ErrorCode::InvalidInput, "base change of divided powers is not supported");
      for (int e = 0; e < m[i]; ++e) p = target.multiply(p, images[i]);
    }
    return cache[m] = std::move(p);
  };
  std::vector<ModElem> diff;
  for (std::size_t g = 0; g < f.rank(); ++g) {
    ModElem v;
    for (const auto& [key, c] : f.generator_differential(g))
      for (const auto& [mono, c2] : image(key.second)) add_term(v, key.first, mono, c * c2);
    diff.push_back(std::move(v));
  }
  return FreeModule(target, f.generators(), std::move(diff), f.complete_upto());
}

std::string_view to_string(Formalizability f) {
  switch (f) {
    case Formalizability::CondI: return "condition-i";
    case Formalizability::CondII: return "condition-ii";
    case Formalizability::Neither: return "neither";
  }
  return "neither";
}

Formalizability formalizability_check(const FormalizabilityData& data) {
  const bool have_i = data.polynomial.has_value();
  const bool have_ii = data.reduced_source && data.loop_target && data.indecomposables;
  if (!have_i && !have_ii) throw Error(ErrorCode::MissingData, "neither condition can be evaluated");
  if (have_i && *data.polynomial) {
    if (data.field.characteristic() != 2) return Formalizability::CondI;
    if (!data.sq1_vanishes) throw Error(ErrorCode::MissingData, "characteristic 2 needs the Sq_1 flag");
    if (*data.sq1_vanishes) return Formalizability::CondI;
  }
  if (have_ii) {
    auto at = [](const GradedDims& g, int n) -> long {
      auto it = g.find(n);
      return it == g.end() ? 0 : static_cast<long>(it->second);
    };
    bool ok = true;
    for (const auto& [i, k] : *data.reduced_source)
      if (k && at(*data.loop_target, i - 1) - at(*data.indecomposables, i) != 0) ok = false;
    if (ok) return Formalizability::CondII;
  }
  return Formalizability::Neither;
}

BundleLevel bundle_level(const std::vector<int>& degrees, bool f4nonzero, FieldTag field, Formalizability declared) {
  if (declared == Formalizability::Neither)
    throw Error(ErrorCode::FormalizabilityNotDeclared, "the pair must be relatively formalizable");
  if (degrees.empty()) throw Error(ErrorCode::InvalidInput, "at least one generator is required");
  if (f4nonzero && degrees[0] != 4)
    throw Error(ErrorCode::InvalidInput, "the first generator must have degree 4 when H^4(f) is nonzero");
  const Resolution kos = koszul_resolution_poly(degrees, field);
  const DGAlgebra s4 = sphere_cohomology(4, field, "z");
  std::vector<Poly> images(degrees.size());
  if (f4nonzero) add_term(images[0], s4.generator_monomial(0), Scalar::one(field));
  FreeModule model = base_change(kos.module, s4, images);
  BundleLevel out{full_cohomology(model), sphere_level(model), model};
  const int expected = f4nonzero ? 2 : 1;
  if (out.level.kind != SphereLevel::Kind::Exact || out.level.lo != expected)
    throw Error(ErrorCode::VerificationFailed, "bundle level " + format_level(out.level) + ", expected " +
                                                   std::to_string(expected));
  return out;
}

int free_pullback_level(const FreeModule& presentation, bool f4nonzero) {
  for (std::size_t g = 0; g < presentation.rank(); ++g)
    if (!presentation.generator_differential(g).empty())
      throw Error(ErrorCode::NotFree, "generator " + presentation.generators()[g].label + " has a nonzero differential");
  const DGAlgebra& a = presentation.algebra();
  const FieldTag field = a.field();
  const DGAlgebra s4 = sphere_cohomology(4, field, "z");
  std::vector<Poly> images(a.size());
  if (f4nonzero && !a.generators().empty() && a.generators()[0].degree == 4)
    add_term(images[0], s4.generator_monomial(0), Scalar::one(field));
  const SphereLevel s = sphere_level(base_change(presentation, s4, images));
  if (s.decomposition)
    for (const auto& id : s.decomposition->molecules)
      if (id.m > 0) throw Error(ErrorCode::NotFree, "summand " + to_string(id) + " is not a shift of H^*(S^4)");
  if (s.kind != SphereLevel::Kind::Exact || s.lo > 1) throw Error(ErrorCode::NotFree, "level " + format_level(s));
  return s.lo;
}

}  // namespace dgl
