#include "dglevel/emss.hpp"

#include <algorithm>
#include <sstream>

namespace dgl {

namespace {

bool even(int d) { return d % 2 == 0; }

/// Total-degree step between consecutive divided-power layers.
int period(int d) { return even(d) ? 2 * d - 2 : d - 1; }

int top_degree(const FibreSquareSpec& spec, unsigned mask) {
  int t = 0;
  for (std::size_t k = 0; k < spec.top.size(); ++k)
    if (mask >> k & 1u) t += spec.top[k];
  return t;
}

int total_degree(const Bidegree& b) { return b.first + b.second; }

void check_spec(const FibreSquareSpec& spec) {
  if (spec.d < 2) throw Error(ErrorCode::InvalidInput, "base sphere dimension must exceed 1");
  if (spec.top.size() > 16) throw Error(ErrorCode::InvalidInput, "at most 16 top sphere factors");
  for (int k : spec.top)
    if (k < 1) throw Error(ErrorCode::InvalidInput, "top sphere dimensions must be positive");
}

std::size_t hopf_factor(const FibreSquareSpec& spec) {
  if (spec.hopf_factor) {
    if (*spec.hopf_factor >= spec.top.size() || spec.top[*spec.hopf_factor] != 2 * spec.d - 1)
      throw Error(ErrorCode::WrongTargetCohomology, "the chosen factor is not S^" + std::to_string(2 * spec.d - 1));
    return *spec.hopf_factor;
  }
  for (std::size_t k = 0; k < spec.top.size(); ++k)
    if (spec.top[k] == 2 * spec.d - 1) return k;
  throw Error(ErrorCode::WrongTargetCohomology, "no factor S^" + std::to_string(2 * spec.d - 1) + " in the top space");
}

std::size_t index_in(const std::vector<EmssClass>& v, const EmssClass& c) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), c) - v.begin());
}

/// d_2 of a basis element as (target, coefficient), or nothing.
std::optional<std::pair<EmssClass, Scalar>> d2_of(const FibreSquareSpec& spec, std::size_t factor, const Scalar& h,
                                                  const EmssClass& c) {
  const unsigned bit = 1u << factor;
  if (c.i == 0 || (c.mask & bit) || h.is_zero()) return std::nullopt;
  int before = 0;
  for (std::size_t k = 0; k < factor; ++k)
    if (c.mask >> k & 1u) before += spec.top[k];
  const Scalar sign(spec.field, (before % 2) ? -1L : 1L);
  return std::pair(EmssClass{c.mask | bit, c.eps, c.i - 1}, h * sign);
}

}  // namespace

Bidegree bidegree(const FibreSquareSpec& spec, const EmssClass& c) {
  const int d = spec.d;
  if (even(d)) return {-(2 * c.i + c.eps), top_degree(spec, c.mask) + c.eps * d + 2 * d * c.i};
  return {-c.i, top_degree(spec, c.mask) + d * c.i};
}

std::string label(const FibreSquareSpec& spec, const EmssClass& c) {
  std::vector<std::string> parts;
  std::map<int, int> seen;
  for (std::size_t k = 0; k < spec.top.size(); ++k) {
    const int n = ++seen[spec.top[k]];
    if (c.mask >> k & 1u) parts.push_back("x" + std::to_string(spec.top[k]) + (n > 1 ? std::string(n - 1, '\'') : ""));
  }
  const std::string s = "s⁻¹x" + std::to_string(spec.d);
  if (c.eps) parts.push_back(s);
  if (c.i > 0) parts.push_back("γ" + std::to_string(c.i) + (even(spec.d) ? "(τ)" : "(" + s + ")"));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += "·" + parts[k];
  return out;
}

BigradedPage e2_page(const FibreSquareSpec& spec, int max_total) {
  check_spec(spec);
  if (max_total < 0) throw Error(ErrorCode::WindowTooSmall, "window must reach total degree 0");
  const int d = spec.d, p = period(d);
  int top_sum = 0;
  for (int k : spec.top) top_sum += k;
  BigradedPage page;
  page.spec = spec;
  page.max_total = max_total;
  // Layers 0..2 in full, and one degree beyond the window for the collapse check.
  page.built_total = std::max(max_total + 2, 2 * p + (d - 1) + top_sum + 2);
  const int eps_max = even(d) ? 1 : 0;
  for (unsigned mask = 0; mask < (1u << spec.top.size()); ++mask)
    for (int eps = 0; eps <= eps_max; ++eps)
      for (int i = 0;; ++i) {
        const EmssClass c{mask, eps, i};
        const Bidegree b = bidegree(spec, c);
        if (total_degree(b) > page.built_total) break;
        page.entries[b].push_back(c);
      }
  for (auto& [b, v] : page.entries) {
    std::sort(v.begin(), v.end());
    page.dims[b] = v.size();
  }
  return page;
}

BigradedPage install_d2(const BigradedPage& page, const Scalar& hopf) {
  const FibreSquareSpec& spec = page.spec;
  if (hopf.field() != spec.field) throw Error(ErrorCode::FieldMismatch, "Hopf invariant over another field");
  if (!hopf.is_zero() && !even(spec.d))
    throw Error(ErrorCode::OddDimensionNonzeroHopf, "odd spheres carry no Hopf invariant");
  BigradedPage out = page;
  out.r = 2;
  out.differential.clear();
  if (hopf.is_zero()) return out;
  const std::size_t factor = hopf_factor(spec);
  for (const auto& [b, src] : page.entries) {
    const Bidegree tb{b.first + 2, b.second - 1};
    auto it = page.entries.find(tb);
    if (it == page.entries.end()) continue;
    Matrix m(spec.field, it->second.size(), src.size());
    bool any = false;
    for (std::size_t c = 0; c < src.size(); ++c)
      if (auto img = d2_of(spec, factor, hopf, src[c])) {
        const std::size_t r = index_in(it->second, img->first);
        if (r == it->second.size()) throw Error(ErrorCode::VerificationFailed, "d_2 target outside the page");
        m(r, c) = img->second;
        any = true;
      }
    if (any) out.differential.emplace(b, std::move(m));
  }
  for (const auto& [b, m] : out.differential) {
    auto it = out.differential.find({b.first + 2, b.second - 1});
    if (it != out.differential.end() && !(it->second * m).is_zero())
      throw Error(ErrorCode::VerificationFailed, "d_2 does not square to zero");
  }
  return out;
}

bool comodule_square_commutes(const BigradedPage& page, int up_to) {
  const FibreSquareSpec& spec = page.spec;
  if (page.differential.empty()) return true;
  const std::size_t factor = hopf_factor(spec);
  // Recover h from any installed entry: d_2(γ_1) = h x_{2d-1}.
  const EmssClass g1{0, 0, 1};
  const Bidegree b1 = bidegree(spec, g1);
  const Matrix& m = page.differential.at(b1);
  const auto& tgt = page.entries.at({b1.first + 2, b1.second - 1});
  const Scalar h = m(index_in(tgt, EmssClass{1u << factor, 0, 0}), index_in(page.entries.at(b1), g1));
  using Tensor = std::map<std::pair<EmssClass, int>, Scalar>;
  auto add = [](Tensor& t, const EmssClass& c, int l, const Scalar& s) {
    auto [it, fresh] = t.emplace(std::pair(c, l), s);
    if (!fresh) it->second += s;
    if (it->second.is_zero()) t.erase(it);
  };
  // Coaction on the divided-power factor only.
  auto coact = [&](const EmssClass& c, const Scalar& s, Tensor& t) {
    for (int l = 0; l <= c.i; ++l) add(t, EmssClass{c.mask, c.eps, c.i - l}, l, s);
  };
  for (int n = 1; n <= up_to; ++n) {
    Tensor lhs, rhs;
    if (auto img = d2_of(spec, factor, h, EmssClass{0, 0, n})) coact(img->first, img->second, lhs);
    for (int l = 0; l <= n; ++l)
      if (auto img = d2_of(spec, factor, h, EmssClass{0, 0, n - l})) add(rhs, img->first, l, img->second);
    if (lhs != rhs) return false;
  }
  return true;
}

StableResult run_to_stable(const BigradedPage& page) {
  const FibreSquareSpec& spec = page.spec;
  const int d = spec.d, p = period(d);
  StableResult out;
  out.e3 = page;
  out.e3.r = 3;
  out.e3.differential.clear();
  out.e3.dims.clear();
  for (const auto& [b, v] : page.entries) {
    if (total_degree(b) > page.built_total - 1) continue;
    std::size_t k = v.size();
    if (auto it = page.differential.find(b); it != page.differential.end()) k -= rank(it->second);
    if (auto it = page.differential.find({b.first - 2, b.second + 1}); it != page.differential.end())
      k -= rank(it->second);
    if (k) out.e3.dims[b] = k;
  }
  // Higher differentials: no nonzero pair of E_3 entries may be joined by bidegree (r, 1-r), r >= 3.
  for (const auto& [b, k] : out.e3.dims) {
    if (total_degree(b) > page.max_total) continue;
    for (int r = 3; b.first + r <= 0; ++r)
      if (out.e3.dims.count({b.first + r, b.second - r + 1}))
        throw Error(ErrorCode::CannotCertifyCollapse,
                    "d_" + std::to_string(r) + " may connect (" + std::to_string(b.first) + "," +
                        std::to_string(b.second) + ") to (" + std::to_string(b.first + r) + "," +
                        std::to_string(b.second - r + 1) + ")");
  }
  // Divided-power layers i >= 1 all carry the same d_2, so layer 1 decides finiteness.
  auto layer = [&](const Bidegree& b) { return even(d) ? (-b.first) / 2 : -b.first; };
  std::optional<int> lowest;
  for (const auto& [b, k] : out.e3.dims)
    if (layer(b) == 1 && (!lowest || total_degree(b) < *lowest)) lowest = total_degree(b);
  out.einf = out.e3.dims;
  const bool finite = !lowest.has_value();
  for (const auto& [b, k] : out.einf)
    if (finite || total_degree(b) <= page.max_total) out.total[total_degree(b)] += k;
  if (finite) {
    out.verdict = Finite{total(out.total), out.total};
  } else {
    out.verdict = InfiniteCertified{p, {*lowest, *lowest + p, *lowest + 2 * p}};
  }
  std::map<int, int> per_total;
  for (const auto& [b, k] : out.einf) ++per_total[total_degree(b)];
  out.no_extension_problem = std::all_of(per_total.begin(), per_total.end(), [](const auto& e) { return e.second <= 1; });
  return out;
}

bool compactness_from_hopf(int d, const Scalar& hopf) {
  if (!even(d)) return false;
  FibreSquareSpec spec{d, {2 * d - 1}, hopf.field(), 0};
  const StableResult r = run_to_stable(install_d2(e2_page(spec, 4 * d), hopf));
  return std::holds_alternative<Finite>(r.verdict);
}

std::string format_table(const StableResult& r) {
  std::ostringstream out;
  out << "(s,t)\tE2\tE_inf\tclasses\n";
  for (const auto& [b, v] : r.e3.entries) {
    if (total_degree(b) > r.e3.max_total) continue;
    auto it = r.einf.find(b);
    out << "(" << b.first << "," << b.second << ")\t" << v.size() << "\t" << (it == r.einf.end() ? 0 : it->second)
        << "\t";
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << label(r.e3.spec, v[k]);
    out << "\n";
  }
  out << "total E_inf: " << format_dims(r.total) << "\n";
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  return out.str();
}

}  // namespace dgl
