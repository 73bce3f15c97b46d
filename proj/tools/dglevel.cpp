// Command-line front end: each subcommand prints one JSON report (or DOT /
// a table when asked). Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "dglevel/json_io.hpp"

using namespace dgl;
using io::Json;

namespace {

struct Common {
  std::string field = "q";
  std::string window;
  std::string format = "json";
  bool timing = false;

  FieldTag field_tag() const { return FieldTag::parse(field); }
  DegreeWindow degree_window() const {
    if (!window.empty()) return DegreeWindow::parse(window);
    if (const char* env = std::getenv("DG_LEVEL_WINDOW")) return DegreeWindow::parse(env);
    return {};
  }
};

struct Output {
  Json report;
  std::string text;  // DOT or table output replaces the JSON when set
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

Json report(const std::string& command, Json inputs, const std::string& claim, Json result) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"claim", claim}, {"result", std::move(result)}};
}

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("format '" + c.format + "' is not available for this command");
}

Formalizability parse_formalizability(const std::string& s) {
  if (s == "i") return Formalizability::CondI;
  if (s == "ii") return Formalizability::CondII;
  if (s == "none") return Formalizability::Neither;
  throw UsageError("--formalizable must be i, ii or none");
}

std::vector<int> parse_top(const std::string& s) {
  if (s == "point") return {};
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',' || ch == 'x') {
      if (cur.size() < 2 || (cur[0] != 's' && cur[0] != 'S')) throw UsageError("--top expects point or s7,s7");
      out.push_back(std::stoi(cur.substr(1)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levels of DG modules over cochain algebras of spheres"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--field", common.field, "q, f2, f3, f5, ...");
  app.add_option("--window", common.window, "degree window lo:hi (default -16:64, or DG_LEVEL_WINDOW)");
  app.add_option("--format", common.format, "json, table or dot");
  app.add_flag("--timing", common.timing, "add wall-clock time to the report");

  std::function<Output()> run;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // quiver
  int q_d = 4, q_c = 0, q_rows = 3, q_cols = 4;
  auto* quiver = sub("quiver", "a component of the Auslander-Reiten quiver over S^d");
  quiver->add_option("--d", q_d)->required();
  quiver->add_option("--component", q_c);
  quiver->add_option("--rows", q_rows);
  quiver->add_option("--cols", q_cols);
  quiver->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json", "dot"});
      const QuiverComponent q = quiver_component(q_d, q_c, q_rows, q_cols);
      if (common.format == "dot") {
        const std::string note = "// the quiver over S^" + std::to_string(q_d) + " has " + std::to_string(q_d - 1) +
                                 " components; this is component " + std::to_string(q_c) + "\n";
        return {{}, note + to_dot(q, common.field_tag())};
      }
      Json verts = Json::array(), arrows = Json::array();
      for (const auto& v : q.vertices) verts.push_back(io::to_json(v));
      for (const auto& [a, b] : q.arrows) arrows.push_back({to_string(a), to_string(b)});
      return {report("quiver", {{"d", q_d}, {"component", q_c}, {"rows", q_rows}, {"cols", q_cols}},
                     "each of the d-1 components is a translation quiver of type ZA_inf",
                     {{"components", q_d - 1}, {"vertices", verts}, {"arrows", arrows}}),
              {}};
    };
  });

  // molecule
  int m_d = 4, m_l = 0, m_m = 0;
  bool m_model = false;
  auto* molecule = sub("molecule", "cohomology, level and realizability of Σ^{-l}Z_m");
  molecule->add_option("--d", m_d)->required();
  molecule->add_option("--l", m_l)->required();
  molecule->add_option("--m", m_m)->required();
  molecule->add_flag("--model", m_model, "include the free model");
  molecule->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      const MoleculeId id{m_d, m_l, m_m};
      const Realizability r = realizable(id, common.field_tag());
      Json res{{"molecule", to_string(id)},
               {"cohomology", io::to_json(molecule_cohomology(id))},
               {"level", molecule_level(id)},
               {"component", component_index(id)},
               {"realizable", std::string(to_string(r.kind))},
               {"realizableDetail", r.detail}};
      if (m_model) res["model"] = io::to_json(molecule_model(id, common.field_tag()));
      return {report("molecule", {{"d", m_d}, {"l", m_l}, {"m", m_m}, {"field", common.field}},
                     "H(Σ^{-l}Z_m) sits in degrees -m(d-1)+l and d+l; level m+1", res),
              {}};
    };
  });

  // decompose
  int dec_d = 4;
  std::string dec_dims;
  auto* decompose_cmd = sub("decompose", "split graded dimensions into molecule cohomologies");
  decompose_cmd->add_option("--d", dec_d)->required();
  decompose_cmd->add_option("--dims", dec_dims)->required();
  decompose_cmd->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      const GradedDims g = io::parse_dims(dec_dims);
      const Decomposition d = decompose(g, dec_d);
      Json res = io::to_json(d);
      res["level"] = io::to_json(sphere_level(g, dec_d));
      return {report("decompose", {{"d", dec_d}, {"dims", io::to_json(g)}, {"field", common.field}},
                     "compact modules over S^d are sums of molecules determined up to shift by their cohomology",
                     res),
              {}};
    };
  });

  // level
  int lv_d = 4;
  std::string lv_dims, lv_module;
  auto* level_cmd = sub("level", "level over S^d from dimensions or a free module file");
  level_cmd->add_option("--d", lv_d);
  level_cmd->add_option("--dims", lv_dims);
  level_cmd->add_option("--module", lv_module, "JSON free module over H*(S^d)");
  level_cmd->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      if (lv_dims.empty() == lv_module.empty()) throw UsageError("give exactly one of --dims and --module");
      SphereLevel s;
      Json inputs;
      if (!lv_module.empty()) {
        s = sphere_level(io::module_from_json(read_json_file(lv_module)));
        inputs["module"] = lv_module;
      } else {
        inputs["d"] = lv_d;
        s = sphere_level(io::parse_dims(lv_dims), lv_d);
        inputs["dims"] = io::to_json(io::parse_dims(lv_dims));
      }
      Json res = io::to_json(s);
      if (s.decomposition) res["decomposition"] = io::to_json(*s.decomposition);
      return {report("level", inputs, "the level of a sum is the maximum of m+1 over its molecules", res), {}};
    };
  });

  // tor
  int t_d = 4, t_level_over = 0;
  std::string t_left = "0:1", t_right = "0:1", t_strategy = "koszul";
  auto* tor = sub("tor", "derived tensor product over H*(S^d) of trivial modules");
  tor->add_option("--d", t_d)->required();
  tor->add_option("--left", t_left, "graded dimensions of the right module");
  tor->add_option("--right", t_right, "graded dimensions of the left module");
  tor->add_option("--strategy", t_strategy, "koszul or bar");
  tor->add_option("--level-over", t_level_over, "also report the level over S^k");
  tor->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      if (t_strategy != "koszul" && t_strategy != "bar") throw UsageError("--strategy must be koszul or bar");
      const FieldTag f = common.field_tag();
      const DegreeWindow w = common.degree_window();
      const DGAlgebra a = sphere_cohomology(t_d, f);
      const RawModule left = RawModule::trivial_action(a, io::parse_dims(t_left), "u");
      const RawModule right = RawModule::trivial_action(a, io::parse_dims(t_right), "v");
      const TorResult t = derived_tensor(left, right, t_strategy == "bar" ? Strategy::Bar : Strategy::Koszul, w);
      Json res{{"cohomology", io::to_json(t.cohomology.dims)}, {"finiteness", io::to_json(finiteness(t, w))}};
      if (t_level_over > 0) res["level"] = io::to_json(sphere_level(t, t_level_over));
      return {report("tor",
                     {{"d", t_d}, {"left", t_left}, {"right", t_right}, {"strategy", t_strategy},
                      {"field", common.field}, {"window", {w.lo, w.hi}}},
                     "infinite-dimensional cohomology forces infinite level over a finite-dimensional algebra", res),
              {}};
    };
  });

  // phi
  int p_d = 4;
  std::string p_dims = "0:1", p_module;
  auto* phi_cmd = sub("phi", "dim H(M ⊗^L K) and compactness");
  phi_cmd->add_option("--d", p_d);
  phi_cmd->add_option("--dims", p_dims, "trivial module with these dimensions");
  phi_cmd->add_option("--module", p_module, "JSON free module");
  phi_cmd->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      const DegreeWindow w = common.degree_window();
      FinitenessVerdict v;
      Json inputs{{"window", {w.lo, w.hi}}};
      if (!p_module.empty()) {
        v = phi(io::module_from_json(read_json_file(p_module)), w);
        inputs["module"] = p_module;
      } else {
        inputs["d"] = p_d;
        inputs["dims"] = io::to_json(io::parse_dims(p_dims));
        const DGAlgebra a = sphere_cohomology(p_d, common.field_tag());
        v = phi(RawModule::trivial_action(a, io::parse_dims(p_dims)), w);
      }
      Json res = io::to_json(v);
      res["compactness"] = std::string(to_string(is_compact(v)));
      return {report("phi", inputs,
                     "a module is compact exactly when H(M ⊗^L K) is finite-dimensional", res),
              {}};
    };
  });

  // emss
  int e_d = 4, e_max = 40;
  std::string e_top = "s7", e_hopf = "1";
  auto* emss = sub("emss", "Eilenberg-Moore spectral sequence of a pullback over S^d");
  emss->add_option("--d", e_d)->required();
  emss->add_option("--top", e_top, "point, s7 or s7,s7");
  emss->add_option("--hopf", e_hopf, "Hopf invariant of the map");
  emss->add_option("--max-total", e_max, "largest total degree shown");
  emss->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json", "table"});
      const FieldTag f = common.field_tag();
      const FibreSquareSpec spec{e_d, parse_top(e_top), f, {}};
      const Scalar h = Scalar::parse(f, e_hopf);
      const StableResult r = run_to_stable(install_d2(e2_page(spec, e_max), h));
      if (common.format == "table") return {{}, format_table(r)};
      Json cells = Json::array();
      for (const auto& [b, k] : r.einf)
        if (b.first + b.second <= e_max) cells.push_back({{"s", b.first}, {"t", b.second}, {"dim", k}});
      return {report("emss", {{"d", e_d}, {"top", e_top}, {"hopf", e_hopf}, {"field", common.field}},
                     "d_2 is multiplication by the Hopf invariant; the fibre is compact iff it is nonzero",
                     {{"einf", cells},
                      {"total", io::to_json(r.total)},
                      {"finiteness", io::to_json(r.verdict)},
                      {"noExtensionProblem", r.no_extension_problem}}),
              {}};
    };
  });

  // hopf
  std::string h_model, h_generator = "file";
  auto* hopf = sub("hopf", "cochain-level Hopf invariant of a map of models");
  hopf->add_option("--model", h_model)->required();
  hopf->add_option("--generator", h_generator, "file (use the file's generator if any) or auto");
  hopf->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      if (h_generator != "file" && h_generator != "auto") throw UsageError("--generator must be file or auto");
      HopfMap h = io::hopf_from_json(read_json_file(h_model));
      if (h_generator == "auto") h.generator.reset();
      const Scalar v = hopf_invariant(h);
      return {report("hopf", {{"model", h_model}, {"generator", h_generator}}, "[ρ φ(x) - φ(ξ)] = H(φ) [x_{2d-1}]", {{"hopf", io::to_json(v)}}),
              {}};
    };
  });

  // p-tower
  int pt_l = 2, pt_d = 4, pt_m = 0;
  std::string pt_report = "level";
  auto* ptower = sub("p-tower", "the tower P_l -> S^d and its level");
  ptower->add_option("--l", pt_l)->required();
  ptower->add_option("--d", pt_d)->required();
  ptower->add_option("--m", pt_m, "suspension parameter (default ld+1)");
  ptower->add_option("--report", pt_report, "level or model");
  ptower->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      const TowerSpec t = build_P_tower(pt_l, pt_d, pt_m ? std::optional<int>(pt_m) : std::nullopt);
      Json inputs{{"l", pt_l}, {"d", pt_d}, {"m", t.m}};
      Json res;
      if (pt_report == "model") {
        res = {{"total", io::to_json(t.total)}, {"extensionSize", t.extension_size},
               {"fibreCohomology", io::to_json(fibre_cohomology(t))}};
      } else if (pt_report == "level") {
        const TowerLevel lv = tower_level_bounds(t);
        res = {{"kind", std::string(to_string(lv.kind))}, {"lower", lv.lower}, {"upper", lv.upper},
               {"filtrationClass", lv.filtration_class}, {"cohomology", io::to_json(lv.cohomology)}};
        if (lv.decomposition) res["decomposition"] = io::to_json(*lv.decomposition);
      } else {
        throw UsageError("--report must be level or model");
      }
      return {report("p-tower", inputs, "towers of odd-sphere fibrations over S^d of prescribed level", res), {}};
    };
  });

  // pile
  int pl_stages = 0, pl_odd = 0;
  auto* pile = sub("pile", "level bound for a pile of odd-sphere fibrations");
  pile->add_option("--stages", pl_stages)->required();
  pile->add_option("--odd-spheres", pl_odd);
  pile->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      return {report("pile", {{"stages", pl_stages}, {"oddSpheres", pl_odd}},
                     "c stages of odd-sphere fibrations give level at most c+1",
                     {{"upperBound", pile_upper_bound(pl_stages, pl_odd)}}),
              {}};
    };
  });

  // bundle-level
  std::string b_gens, b_f4 = "nonzero", b_formal = "ii";
  auto* bundle = sub("bundle-level", "level over S^4 of a principal bundle pulled back from BG");
  bundle->add_option("--gens", b_gens, "degrees of the polynomial generators of H*(BG)")->required();
  bundle->add_option("--f4", b_f4, "nonzero or zero");
  bundle->add_option("--formalizable", b_formal, "declared formalizability condition: i, ii or none");
  bundle->callback([&] {
    run = [&]() -> Output {
      require_format(common, {"json"});
      if (b_f4 != "nonzero" && b_f4 != "zero") throw UsageError("--f4 must be nonzero or zero");
      const BundleLevel b = bundle_level(io::parse_int_list(b_gens), b_f4 == "nonzero", common.field_tag(),
                                         parse_formalizability(b_formal));
      Json res = io::to_json(b.level);
      res["cohomology"] = io::to_json(b.cohomology);
      if (b.level.decomposition) res["decomposition"] = io::to_json(*b.level.decomposition);
      return {report("bundle-level", {{"gens", io::parse_int_list(b_gens)}, {"f4", b_f4}, {"field", common.field}},
                     "the level is 2 when H^4(f) is nonzero and 1 otherwise", res),
              {}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Output out = run();
    if (!out.text.empty()) {
      std::cout << out.text;
      return 0;
    }
    if (common.timing)
      out.report["timingMs"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << out.report.dump(2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << io::error_json(e).dump(2) << "\n";
    return 1;
  }
}
