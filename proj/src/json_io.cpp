#include "dglevel/json_io.hpp"

#include <sstream>

namespace dgl::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    bad("not an integer: '" + s + "'");
  }
  if (used != s.size()) bad("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Monomial monomial_from_json(const DGAlgebra& a, const Json& j) {
  Monomial m = a.unit();
  if (j.is_null()) return m;
  if (!j.is_object()) bad("monomial must be an object of label: power");
  for (const auto& [label, power] : j.items()) {
    const auto i = a.index_of(label);
    if (!i) bad("unknown generator " + label);
    m[*i] = power.get<int>();
  }
  if (!a.is_valid(m)) bad("monomial exceeds a truncation or exterior bound");
  return m;
}

Json monomial_to_json(const DGAlgebra& a, const Monomial& m) {
  Json j = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) j[a.generators()[i].label] = m[i];
  return j;
}

}  // namespace

GradedDims parse_dims(const std::string& text) {
  GradedDims g;
  for (const auto& part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) bad("expected degree:dimension, got '" + part + "'");
    const int n = parse_int(part.substr(0, colon)), k = parse_int(part.substr(colon + 1));
    if (k < 0) bad("negative dimension in '" + part + "'");
    g[n] += static_cast<std::size_t>(k);
  }
  return prune(g);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

Json to_json(const GradedDims& g) {
  Json j = Json::object();
  for (const auto& [n, k] : g)
    if (k) j[std::to_string(n)] = k;
  return j;
}

GradedDims dims_from_json(const Json& j) {
  if (!j.is_object()) bad("graded dimensions must be an object");
  GradedDims g;
  for (const auto& [n, k] : j.items()) g[parse_int(n)] = k.get<std::size_t>();
  return prune(g);
}

Json to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

Scalar scalar_from_json(FieldTag f, const Json& j) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  bad("scalar must be an integer or a string");
}

Json to_json(const DGAlgebra& a, const Poly& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p) j.push_back({{"coeff", to_json(c)}, {"monomial", monomial_to_json(a, m)}});
  return j;
}

Poly poly_from_json(const DGAlgebra& a, const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  Poly p;
  for (const auto& term : j)
    add_term(p, monomial_from_json(a, term.value("monomial", Json())), scalar_from_json(a.field(), field_of(term, "coeff")));
  return p;
}

Json to_json(const DGAlgebra& a) {
  Json gens = Json::array();
  Json diff = Json::object();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Generator& g = a.generators()[i];
    Json jg{{"label", g.label}, {"degree", g.degree}, {"kind", std::string(to_string(g.kind))}};
    if (g.max_power) jg["maxPower"] = g.max_power;
    gens.push_back(std::move(jg));
    if (!a.generator_differential(i).empty()) diff[g.label] = to_json(a, a.generator_differential(i));
  }
  return {{"field", a.field().name()}, {"generators", gens}, {"differential", diff}};
}

DGAlgebra algebra_from_json(const Json& j) {
  const FieldTag f = FieldTag::parse(j.value("field", std::string("q")));
  std::vector<Generator> gens;
  for (const auto& g : field_of(j, "generators"))
    gens.push_back({field_of(g, "label").get<std::string>(), field_of(g, "degree").get<int>(),
                    parse_gen_kind(g.value("kind", std::string("polynomial"))), g.value("maxPower", 0)});
  const DGAlgebra bare(f, gens, std::vector<Poly>(gens.size()));
  std::vector<Poly> diff(gens.size());
  if (j.contains("differential"))
    for (const auto& [label, p] : j.at("differential").items()) {
      const auto i = bare.index_of(label);
      if (!i) bad("differential of unknown generator " + label);
      diff[*i] = poly_from_json(bare, p);
    }
  return DGAlgebra(f, gens, diff);
}

Json to_json(const FreeModule& m) {
  const DGAlgebra& a = m.algebra();
  Json gens = Json::array(), diff = Json::object();
  for (std::size_t g = 0; g < m.rank(); ++g) {
    gens.push_back({{"label", m.generators()[g].label}, {"degree", m.generators()[g].degree}});
    Json terms = Json::array();
    for (const auto& [key, c] : m.generator_differential(g))
      terms.push_back({{"coeff", to_json(c)},
                       {"generator", m.generators()[key.first].label},
                       {"monomial", monomial_to_json(a, key.second)}});
    if (!terms.empty()) diff[m.generators()[g].label] = std::move(terms);
  }
  return {{"algebra", to_json(a)}, {"generators", gens}, {"differential", diff}};
}

FreeModule module_from_json(const Json& j) {
  const DGAlgebra a = algebra_from_json(field_of(j, "algebra"));
  std::vector<ModGenerator> gens;
  std::map<std::string, std::size_t> index;
  for (const auto& g : field_of(j, "generators")) {
    const std::string label = field_of(g, "label").get<std::string>();
    if (!index.emplace(label, gens.size()).second) bad("duplicate module generator " + label);
    gens.push_back({label, field_of(g, "degree").get<int>()});
  }
  std::vector<ModElem> diff(gens.size());
  if (j.contains("differential"))
    for (const auto& [label, terms] : j.at("differential").items()) {
      auto it = index.find(label);
      if (it == index.end()) bad("differential of unknown module generator " + label);
      for (const auto& t : terms) {
        auto target = index.find(field_of(t, "generator").get<std::string>());
        if (target == index.end()) bad("unknown module generator in D(" + label + ")");
        add_term(diff[it->second], target->second, monomial_from_json(a, t.value("monomial", Json())),
                 scalar_from_json(a.field(), field_of(t, "coeff")));
      }
    }
  return FreeModule(a, gens, diff);
}

HopfMap hopf_from_json(const Json& j) {
  HopfMap h;
  h.d = field_of(j, "d").get<int>();
  h.target = algebra_from_json(field_of(j, "target"));
  h.image_x = poly_from_json(h.target, field_of(j, "imageX"));
  h.image_xi = poly_from_json(h.target, j.value("imageXi", Json::array()));
  if (j.contains("generator")) h.generator = poly_from_json(h.target, j.at("generator"));
  return h;
}

Json to_json(const MoleculeId& id) {
  return {{"name", to_string(id)}, {"d", id.d}, {"l", id.l}, {"m", id.m}, {"component", component_index(id)},
          {"level", molecule_level(id)}};
}

Json to_json(const Decomposition& d) {
  Json mols = Json::array(), matching = Json::array(), alts = Json::array();
  for (const auto& id : d.molecules) mols.push_back(to_json(id));
  for (const auto& [a, b] : d.matching) matching.push_back({a, b});
  for (const auto& alt : d.alternatives) {
    Json one = Json::array();
    for (const auto& id : alt) one.push_back(to_string(id));
    alts.push_back(std::move(one));
  }
  return {{"molecules", mols}, {"matching", matching}, {"ambiguous", d.ambiguous}, {"alternatives", alts}};
}

Json to_json(const SphereLevel& s) {
  Json j{{"kind", std::string(to_string(s.kind))}};
  switch (s.kind) {
    case SphereLevel::Kind::Exact: j["level"] = s.lo; break;
    case SphereLevel::Kind::Interval: j["lower"] = s.lo; j["upper"] = s.hi; break;
    case SphereLevel::Kind::Infinite:
      j["certificate"] = {{"period", s.certificate->period}, {"witnesses", s.certificate->witnesses}};
      break;
  }
  if (s.filtration_bound) j["filtrationBound"] = *s.filtration_bound;
  return j;
}

Json to_json(const FinitenessVerdict& v) {
  Json j{{"verdict", verdict_name(v)}};
  if (const auto* f = std::get_if<Finite>(&v)) {
    j["total"] = f->total;
    j["dims"] = to_json(f->dims);
  } else if (const auto* c = std::get_if<InfiniteCertified>(&v)) {
    j["period"] = c->period;
    j["witnesses"] = c->witnesses;
  } else {
    j["cap"] = std::get<UnknownBeyondCap>(v).cap;
  }
  return j;
}

Json error_json(const Error& e) { return {{"error", std::string(to_string(e.code()))}, {"message", e.what()}}; }

}  // namespace dgl::io
