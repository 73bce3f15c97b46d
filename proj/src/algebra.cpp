#include "dglevel/algebra.hpp"

namespace dgl {

std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::Exterior: return "exterior";
    case GenKind::Polynomial: return "polynomial";
    case GenKind::DividedPower: return "divided-power";
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view s) {
  if (s == "exterior") return GenKind::Exterior;
  if (s == "polynomial") return GenKind::Polynomial;
  if (s == "divided-power" || s == "divided") return GenKind::DividedPower;
  throw Error(ErrorCode::InvalidInput, "unknown generator kind: " + std::string(s));
}

void add_term(Poly& p, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly scale(const Poly& p, const Scalar& c) {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : p) out.emplace(m, v * c);
  return out;
}

void add_into(Poly& acc, const Poly& p, const Scalar& c) {
  for (const auto& [m, v] : p) add_term(acc, m, v * c);
}

Scalar binomial(FieldTag f, int n, int k) {
  if (k < 0 || k > n) return Scalar::zero(f);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(f, mpq_class(b));
}

DGAlgebra::DGAlgebra(FieldTag field, std::vector<Generator> gens, std::vector<Poly> differential)
    : field_(field), gens_(std::move(gens)), diff_(std::move(differential)) {
  diff_.resize(gens_.size());
  const bool char2 = field_.characteristic() == 2;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Generator& g = gens_[i];
    if (g.degree < 1) throw Error(ErrorCode::InvalidInput, "generator " + g.label + " must have degree >= 1");
    if (g.max_power < 0) throw Error(ErrorCode::InvalidInput, "negative truncation on " + g.label);
    if (g.degree % 2 == 1 && g.kind != GenKind::Exterior && !char2)
      throw Error(ErrorCode::InvalidInput, "odd generator " + g.label + " must be exterior outside characteristic 2");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].label == g.label) throw Error(ErrorCode::InvalidInput, "duplicate generator " + g.label);
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (const auto& [m, c] : diff_[i]) {
      if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "differential coefficient");
      if (m.size() != gens_.size() || !is_valid(m))
        throw Error(ErrorCode::InvalidInput, "malformed monomial in d(" + gens_[i].label + ")");
      if (degree(m) != gens_[i].degree + 1)
        throw Error(ErrorCode::InvalidInput, "d(" + gens_[i].label + ") is not of degree +1");
    }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!d(diff_[i]).empty()) throw Error(ErrorCode::InvalidInput, "d² ≠ 0 on " + gens_[i].label);
    const Generator& g = gens_[i];
    if (g.kind == GenKind::Polynomial && g.max_power > 0 && !diff_[i].empty()) {
      // d must kill the relation x^(max+1) = 0.
      Poly rel = multiply(Poly{{generator_monomial(i, g.max_power), binomial(field_, g.max_power + 1, 1)}}, diff_[i]);
      if (!rel.empty()) throw Error(ErrorCode::InvalidInput, "differential incompatible with truncation of " + g.label);
    }
  }
}

std::optional<std::size_t> DGAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].label == label) return i;
  return std::nullopt;
}

bool DGAlgebra::has_zero_differential() const {
  for (const auto& p : diff_)
    if (!p.empty()) return false;
  return true;
}

Monomial DGAlgebra::generator_monomial(std::size_t i, int power) const {
  Monomial m = unit();
  m[i] = power;
  return m;
}

int DGAlgebra::degree(const Monomial& m) const {
  int deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] * gens_[i].degree;
  return deg;
}

bool DGAlgebra::is_valid(const Monomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) return false;
    const Generator& g = gens_[i];
    if (g.kind == GenKind::Exterior && m[i] > 1) return false;
    if (g.kind == GenKind::Polynomial && g.max_power > 0 && m[i] > g.max_power) return false;
  }
  return true;
}

void DGAlgebra::enumerate(std::size_t i, std::size_t last, int remaining, bool exact, Monomial& cur,
                          std::vector<Monomial>& out) const {
  if (i == last) {
    if (!exact || remaining == 0) out.push_back(cur);
    return;
  }
  const Generator& g = gens_[i];
  int cap = remaining / g.degree;
  if (g.kind == GenKind::Exterior) cap = std::min(cap, 1);
  if (g.kind == GenKind::Polynomial && g.max_power > 0) cap = std::min(cap, g.max_power);
  for (int e = 0; e <= cap; ++e) {
    cur[i] = e;
    enumerate(i + 1, last, remaining - e * g.degree, exact, cur, out);
  }
  cur[i] = 0;
}

const std::vector<Monomial>& DGAlgebra::basis(int n) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->basis.find(n);
  if (it != cache_->basis.end()) return it->second;
  std::vector<Monomial> out;
  if (n >= 0) {
    Monomial cur = unit();
    enumerate(0, gens_.size(), n, true, cur, out);
  }
  return cache_->basis.emplace(n, std::move(out)).first->second;
}

std::vector<Monomial> DGAlgebra::monomials_upto(std::size_t first, std::size_t last, int max_degree) const {
  std::vector<Monomial> out;
  if (max_degree < 0) return out;
  Monomial cur = unit();
  enumerate(first, last, max_degree, false, cur, out);
  std::stable_sort(out.begin(), out.end(),
                   [&](const Monomial& a, const Monomial& b) { return degree(a) < degree(b); });
  return out;
}

std::optional<std::pair<Scalar, Monomial>> DGAlgebra::multiply(const Monomial& a, const Monomial& b) const {
  const std::size_t n = gens_.size();
  Monomial out(n, 0);
  Scalar coeff = Scalar::one(field_);
  // Move each x_j^{b_j} left past x_k^{a_k} for k > j.
  int suffix_a = 0;  // parity of sum_{k>j} a_k |x_k|
  int sign = 0;
  for (std::size_t jj = n; jj-- > 0;) {
    const int bdeg = b[jj] * gens_[jj].degree;
    sign ^= (bdeg & 1) & (suffix_a & 1);
    suffix_a ^= (a[jj] * gens_[jj].degree) & 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Generator& g = gens_[j];
    const int e = a[j] + b[j];
    switch (g.kind) {
      case GenKind::Exterior:
        if (e > 1) return std::nullopt;
        break;
      case GenKind::Polynomial:
        if (g.max_power > 0 && e > g.max_power) return std::nullopt;
        break;
      case GenKind::DividedPower:
        if (a[j] > 0 && b[j] > 0) {
          coeff *= binomial(field_, e, a[j]);
          if (coeff.is_zero()) return std::nullopt;
        }
        break;
    }
    out[j] = e;
  }
  if (sign) coeff = -coeff;
  return std::make_pair(coeff, std::move(out));
}

Poly DGAlgebra::multiply(const Poly& a, const Poly& b) const {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      if (auto r = multiply(ma, mb)) add_term(out, r->second, r->first * ca * cb);
  return out;
}

Poly DGAlgebra::d(const Monomial& m) const {
  Poly out;
  Monomial prefix = unit();
  int prefix_parity = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] > 0 && !diff_[j].empty()) {
      // d(x_j^{e}) = c * x_j^{e-1} * dx_j (gamma_{e-1} for divided powers).
      Scalar c = Scalar::one(field_);
      if (gens_[j].kind == GenKind::Polynomial) c = Scalar(field_, static_cast<long>(m[j]));
      Monomial lower = unit();
      lower[j] = m[j] - 1;
      Monomial suffix = unit();
      for (std::size_t k = j + 1; k < m.size(); ++k) suffix[k] = m[k];
      if (prefix_parity) c = -c;
      Poly term = multiply(multiply(Poly{{prefix, c}}, multiply(Poly{{lower, Scalar::one(field_)}}, diff_[j])),
                           Poly{{suffix, Scalar::one(field_)}});
      add_into(out, term, Scalar::one(field_));
    }
    prefix[j] = m[j];
    prefix_parity ^= (m[j] * gens_[j].degree) & 1;
  }
  return out;
}

Poly DGAlgebra::d(const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p) add_into(out, d(m), c);
  return out;
}

std::string DGAlgebra::label(const Monomial& m) const {
  std::string s;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!s.empty()) s += "·";
    const Generator& g = gens_[j];
    if (g.kind == GenKind::DividedPower)
      s += "γ" + std::to_string(m[j]) + "(" + g.label + ")";
    else if (m[j] == 1)
      s += g.label;
    else
      s += g.label + "^" + std::to_string(m[j]);
  }
  return s.empty() ? "1" : s;
}

std::string DGAlgebra::label(const Poly& p) const {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p) {
    if (!s.empty()) s += " + ";
    s += c.is_one() ? label(m) : "(" + c.to_string() + ")" + label(m);
  }
  return s;
}

CochainComplex DGAlgebra::to_complex(DegreeWindow w) const {
  DegreeWindow known{std::min(w.lo, 0) - 1, std::max(w.hi, 0) + 1};
  Basis basis;
  std::map<int, Matrix> dmap;
  for (int n = std::max(known.lo, 0); n <= known.hi; ++n) {
    auto& labels = basis[n];
    for (const auto& m : this->basis(n)) labels.push_back(label(m));
  }
  for (int n = std::max(known.lo, 0); n < known.hi; ++n) {
    const auto& src = this->basis(n);
    const auto& dst = this->basis(n + 1);
    if (src.empty() || dst.empty()) continue;
    std::map<Monomial, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index[dst[r]] = r;
    Matrix mat(field_, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [m, v] : d(src[c])) mat(index.at(m), c) = v;
    dmap.emplace(n, std::move(mat));
  }
  return CochainComplex(field_, known, std::move(basis), std::move(dmap));
}

bool DGAlgebra::simply_connected() const {
  CochainComplex c = to_complex({0, 1});
  return cohomology_in_degree(c, 0) == 1 && cohomology_in_degree(c, 1) == 0;
}

DGAlgebra DGAlgebra::tail(std::size_t first) const {
  std::vector<Generator> gens(gens_.begin() + static_cast<long>(first), gens_.end());
  std::vector<Poly> diff;
  for (std::size_t i = first; i < gens_.size(); ++i) {
    Poly p;
    for (const auto& [m, c] : diff_[i]) {
      for (std::size_t k = 0; k < first; ++k)
        if (m[k] != 0) throw Error(ErrorCode::InvalidInput, "base differential involves fibre generators");
      p.emplace(Monomial(m.begin() + static_cast<long>(first), m.end()), c);
    }
    diff.push_back(std::move(p));
  }
  return DGAlgebra(field_, std::move(gens), std::move(diff));
}

bool DGAlgebra::same_presentation(const DGAlgebra& o) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Generator &a = gens_[i], &b = o.gens_[i];
    if (a.label != b.label || a.degree != b.degree || a.kind != b.kind || a.max_power != b.max_power) return false;
    if (diff_[i] != o.diff_[i]) return false;
  }
  return true;
}

}  // namespace dgl
