#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bethe/flags/flags.hpp"
#include "bethe/population/population.hpp"

namespace bethe::cli {

Json scalar_json(const Scalar& s, const FieldSpec& f) { return f.format(s); }

Json poly_json(const Poly& p, const FieldSpec& f) {
  Json a = Json::array();
  for (const Scalar& c : p.coeffs()) a.push_back(scalar_json(c, f));
  return a;
}

Json ratfunc_json(const RatFunc& r, const FieldSpec& f) { return Json::array({poly_json(r.num(), f), poly_json(r.den(), f)}); }

Json node_json(const BetheNode& n, const FieldSpec& f) {
  Json j = {{"parity", n.parity.signs()}};
  Json ys = Json::array();
  for (const Poly& y : n.y) ys.push_back(poly_json(y, f));
  j["y"] = ys;
  if (n.twisted()) {
    Json t = Json::array();
    for (const Scalar& q : n.twist) t.push_back(scalar_json(q, f));
    j["twist"] = t;
  }
  return j;
}

namespace {

void require_object(const Json& j, const std::string& ptr, const std::vector<std::string>& allowed) {
  if (!j.is_object()) throw InputError(ptr, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw InputError(ptr + "/" + it.key(), "unknown field");
}

const Json& field_at(const Json& j, const std::string& key, const std::string& ptr) {
  if (!j.contains(key)) throw InputError(ptr + "/" + key, "missing field");
  return j.at(key);
}

const Json& array_at(const Json& j, const std::string& key, const std::string& ptr) {
  const Json& a = field_at(j, key, ptr);
  if (!a.is_array()) throw InputError(ptr + "/" + key, "expected an array");
  return a;
}

long integer(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw InputError(ptr, "expected an integer");
  return j.get<long>();
}

Scalar scalar(const Json& j, const FieldSpec& f, const std::string& ptr) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw InputError(ptr, "expected a scalar string or integer");
  try {
    return f.parse_scalar(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(ptr, e.what());
  }
}

std::vector<Scalar> scalars(const Json& j, const FieldSpec& f, const std::string& ptr) {
  if (!j.is_array()) throw InputError(ptr, "expected an array");
  std::vector<Scalar> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], f, ptr + "/" + std::to_string(i)));
  return out;
}

Json scalars_json(const std::vector<Scalar>& v, const FieldSpec& f) {
  Json a = Json::array();
  for (const Scalar& s : v) a.push_back(scalar_json(s, f));
  return a;
}

FieldSpec parse_field(const Json& j, const std::string& ptr) {
  require_object(j, ptr, {"d", "params", "h"});
  FieldSpec f;
  if (j.contains("d") && !j["d"].is_null()) f.radical = integer(j["d"], ptr + "/d");
  if (j.contains("params")) {
    const Json& p = j["params"];
    if (!p.is_array()) throw InputError(ptr + "/params", "expected an array");
    for (size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_string()) throw InputError(ptr + "/params/" + std::to_string(i), "expected a name");
      f.params.push_back(p[i].get<std::string>());
    }
  }
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(ptr, e.what());
  }
  if (j.contains("h")) {
    f.h = scalar(j["h"], f, ptr + "/h");
    if (f.h.is_zero()) throw InputError(ptr + "/h", "h must be nonzero");
  }
  return f;
}

Json field_json(const FieldSpec& f) {
  Json j = Json::object();
  if (f.radical) j["d"] = *f.radical;
  j["params"] = f.params;
  j["h"] = scalar_json(f.h, f);
  return j;
}

std::string param_text(const ProjParam& c, const FieldSpec& f) { return c ? f.format(*c) : "inf"; }

Json proj_json(const ProjParam& c, const FieldSpec& f) { return c ? scalar_json(*c, f) : Json("inf"); }

std::string node_text(const BetheNode& n, const FieldSpec& f) {
  std::string s = n.parity.to_string();
  for (size_t i = 0; i < n.y.size(); ++i) s += "  y" + std::to_string(i + 1) + " = " + f.format(n.y[i]);
  return s;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

int factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

ExploreOptions explore_options(const RunConfig& cfg, const Input& in) {
  ExploreOptions o;
  o.rng_seed = cfg.seed;
  o.retries = cfg.retries;
  if (cfg.symbolic) {
    if (in.field.params.empty()) throw InputError("/field/params", "symbolic mode needs a field parameter");
    o.mode = ExploreOptions::Mode::Symbolic;
    o.family_param = int(in.field.params.size()) - 1;
  }
  return o;
}

Json graph_json(const PopulationGraph& g, const FieldSpec& f) {
  Json nodes = Json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const PopulationNode& n = g.nodes[i];
    Json j = {{"id", i}};
    j.update(node_json(n.node, f));
    j["family"] = n.family;
    j["generic"] = n.generic;
    nodes.push_back(j);
  }
  Json edges = Json::array();
  for (const PopulationEdge& e : g.edges) {
    Json j = {{"from", e.from}, {"to", e.to}, {"direction", e.direction},
              {"kind", e.kind == EdgeKind::Bosonic ? "bosonic" : "fermionic"}};
    if (e.kind == EdgeKind::Bosonic) j["parameter"] = proj_json(e.parameter, f);
    edges.push_back(j);
  }
  Json comps = Json::array();
  for (const auto& [s, ids] : g.components()) comps.push_back({{"parity", s.signs()}, {"nodes", ids}});
  return {{"nodes", nodes}, {"edges", edges}, {"components", comps}};
}

std::string graphviz(const PopulationGraph& g, const FieldSpec& f) {
  std::ostringstream o;
  o << "graph population {\n";
  int k = 0;
  for (const auto& [s, ids] : g.components()) {
    o << "  subgraph cluster_" << k++ << " {\n    label=" << quote(s.to_string()) << ";\n";
    for (int id : ids) {
      std::string label;
      const auto& ys = g.nodes[id].node.y;
      for (size_t i = 0; i < ys.size(); ++i)
        label += (i ? "\\n" : "") + std::string("y") + std::to_string(i + 1) + " = " + f.format(ys[i]);
      o << "    n" << id << " [label=" << quote(label) << "];\n";
    }
    o << "  }\n";
  }
  for (const PopulationEdge& e : g.edges) {
    std::string label = std::to_string(e.direction) + (e.kind == EdgeKind::Bosonic ? " b" : " f");
    if (e.kind == EdgeKind::Bosonic) label += " c=" + param_text(e.parameter, f);
    o << "  n" << e.from << " -- n" << e.to << " [label=" << quote(label) << "];\n";
  }
  o << "}\n";
  return o.str();
}

void graph_text(const PopulationGraph& g, const FieldSpec& f, std::vector<std::string>& out) {
  auto comps = g.components();
  out.push_back("nodes: " + std::to_string(g.nodes.size()) + "  edges: " + std::to_string(g.edges.size()) +
                "  components: " + std::to_string(comps.size()));
  for (const auto& [s, ids] : comps) {
    out.push_back("component " + s.to_string());
    for (int id : ids)
      out.push_back("  [" + std::to_string(id) + "]" + (g.nodes[id].family ? " family " : " ") +
                    node_text(g.nodes[id].node, f));
  }
}

void invariance_section(const PopulationGraph& g, const FieldSpec& f, Report& r) {
  InvarianceReport inv = invariance_report(g, g.weights);
  Json entries = Json::array();
  r.text.push_back("edge  from -> to  dir  at  operator  eigenvalue");
  for (const InvarianceEntry& e : inv.entries) {
    const PopulationEdge& ed = g.edges[e.edge];
    Json j = {{"edge", e.edge}, {"operator", e.operator_equal}, {"eigenvalue", e.eigenvalue_equal}};
    if (e.at) j["at"] = proj_json(*e.at, f);
    if (!e.message.empty()) j["message"] = e.message;
    entries.push_back(j);
    std::ostringstream line;
    line << e.edge << "  " << ed.from << " -> " << ed.to << "  " << ed.direction << "  "
         << (e.at ? param_text(*e.at, f) : "-") << "  " << (e.operator_equal ? "pass" : "FAIL") << "  "
         << (e.eigenvalue_equal ? "pass" : "FAIL");
    r.text.push_back(line.str());
  }
  r.doc["invariance"] = {{"passed", inv.passed()}, {"entries", entries}, {"failures", inv.failures(g)}};
  r.passed = r.passed && inv.passed();
}

Report verify_bae(const Input& in) {
  Report r;
  const BetheNode& n = in.node;
  bool ok = satisfies_bae(n, in.weights);
  r.doc["input"] = to_json(in);
  r.doc["satisfies"] = ok;
  r.text.push_back(node_text(n, in.field));
  r.text.push_back(std::string("polynomial form: ") + (ok ? "pass" : "FAIL"));
  Json dirs = Json::array();
  for (const DirectionStatus& d : reproduction_conditions(n, in.weights))
    dirs.push_back({{"direction", d.direction}, {"bosonic", d.bosonic}, {"solvable", d.solvable}, {"detail", d.detail}});
  r.doc["directions"] = dirs;
  std::optional<RootLists> roots = split_roots(n, in.field.radical);
  if (roots) {
    BaeReport b = bae_residuals(n, in.weights, *roots);
    Json res = Json::array();
    for (const BaeResidual& e : b.residuals)
      res.push_back({{"color", e.color}, {"index", e.index}, {"value", scalar_json(e.value, in.field)}});
    Json rl = Json::array();
    for (const auto& l : *roots) rl.push_back(scalars_json(l, in.field));
    r.doc["roots"] = rl;
    r.doc["residuals"] = res;
    r.doc["violations"] = b.violations;
    r.doc["solved"] = b.solved();
    r.text.push_back(std::string("root form: ") + (b.solved() ? "pass" : "FAIL"));
    for (const std::string& v : b.violations) r.text.push_back("  " + v);
    ok = ok && b.solved();
  } else {
    r.doc["roots"] = nullptr;
    r.text.push_back("root form: skipped (y does not split over the field)");
  }
  GenericityReport gen = is_generic(n, in.weights);
  r.doc["generic"] = {{"generic", gen.generic}, {"diagnostics", gen.diagnostics}};
  r.passed = ok;
  return r;
}

Report reproduce(const RunConfig& cfg, const Input& in) {
  Report r;
  const BetheNode& n = in.node;
  int N = n.parity.size();
  if (cfg.direction < 0 || cfg.direction >= N) throw InputError("", "direction out of range 1.." + std::to_string(N - 1));
  r.doc["input"] = to_json(in);
  r.text.push_back("seed  " + node_text(n, in.field));
  Json out = Json::array();
  for (int i = 1; i < N; ++i) {
    if (cfg.direction && i != cfg.direction) continue;
    Json j = {{"direction", i}};
    try {
      if (n.twisted()) {
        BetheNode img = twisted_reproduce(n, in.weights, i);
        j["kind"] = "twisted";
        j["image"] = node_json(img, in.field);
        r.text.push_back(std::to_string(i) + " twisted  " + node_text(img, in.field));
      } else if (n.parity[i] == n.parity[i + 1]) {
        BosonicFamily f = bosonic_reproduce(n, in.weights, i);
        j["kind"] = "bosonic";
        j["particular"] = poly_json(f.particular, in.field);
        j["base"] = poly_json(f.base, in.field);
        r.text.push_back(std::to_string(i) + " bosonic  y = " + in.field.format(f.particular) + " - c*(" +
                         in.field.format(f.base) + ")");
      } else {
        BetheNode img = fermionic_reproduce(n, in.weights, i);
        j["kind"] = "fermionic";
        j["image"] = node_json(img, in.field);
        r.text.push_back(std::to_string(i) + " fermionic  " + node_text(img, in.field));
      }
    } catch (const std::exception& e) {
      j["error"] = e.what();
      r.text.push_back(std::to_string(i) + " FAIL  " + e.what());
      r.passed = false;
    }
    out.push_back(j);
  }
  r.doc["reproductions"] = out;
  return r;
}

Report population(const RunConfig& cfg, const Input& in, PopulationGraph& g) {
  Report r;
  g = explore(in.node, in.weights, explore_options(cfg, in));
  r.doc["input"] = to_json(in);
  r.doc["seed"] = cfg.seed;
  r.doc["mode"] = cfg.symbolic ? "symbolic" : "sampled";
  r.doc["graph"] = graph_json(g, in.field);
  graph_text(g, in.field, r.text);
  invariance_section(g, in.field, r);
  r.graphviz = graphviz(g, in.field);
  return r;
}

Report twisted(const RunConfig& cfg, const Input& in) {
  if (!in.weights.twisted()) throw InputError("/twist", "missing field");
  PopulationGraph g;
  Report r = population(cfg, in, g);
  int expected = factorial(in.weights.m + in.weights.n);
  bool count = int(g.nodes.size()) == expected;
  r.doc["expected_nodes"] = expected;
  r.doc["node_count"] = g.nodes.size();
  r.text.push_back("nodes " + std::to_string(g.nodes.size()) + " of " + std::to_string(expected) +
                   (count ? "  pass" : "  FAIL"));
  r.passed = r.passed && count;
  return r;
}

Report operator_report(const Input& in) {
  Report r;
  FactoredRatOp op = build_operator(in.node, in.weights);
  r.doc["input"] = to_json(in);
  Json factors = Json::array();
  r.text.push_back("factors of " + node_text(in.node, in.field));
  for (const FactorWitness& w : op.factors) {
    Json j = {{"witness", ratfunc_json(w.g, in.field)}, {"sign", w.sign}};
    if (!w.multiplier.is_one()) j["multiplier"] = scalar_json(w.multiplier, in.field);
    factors.push_back(j);
    r.text.push_back("  (1 - ln'(" + in.field.format(w.g) + ") tau)" + (w.sign < 0 ? "^-1" : ""));
  }
  r.doc["factors"] = factors;
  FractionalForm fr = to_minimal_fraction(op);
  auto coeffs = [&](const DiffOp& d) {
    Json a = Json::array();
    for (const RatFunc& c : d.coeffs()) a.push_back(ratfunc_json(c, in.field));
    return a;
  };
  r.doc["fraction"] = {{"d0", coeffs(fr.d0)}, {"d1", coeffs(fr.d1)}};
  r.text.push_back("minimal fraction: ord D0 = " + std::to_string(fr.d0.order()) +
                   ", ord D1 = " + std::to_string(fr.d1.order()));
  return r;
}

Report flags(const RunConfig& cfg, const Input& in) {
  Report r;
  PopulationGraph g = explore(in.node, in.weights, explore_options(cfg, in));
  KernelOptions ko;
  ko.rng_seed = cfg.seed;
  KernelSpaces k = kernel_spaces(g, in.weights, ko);
  BijectionOptions bo;
  bo.rng_seed = cfg.seed;
  BijectionReport b = bijection_check(g, in.weights, k, bo);
  auto space = [&](const FunctionSpace& s) {
    Json a = Json::array();
    for (const RatFunc& f : s.basis) a.push_back(ratfunc_json(f, in.field));
    return a;
  };
  r.doc["input"] = to_json(in);
  r.doc["seed"] = cfg.seed;
  r.doc["V"] = space(k.V);
  r.doc["U"] = space(k.U);
  r.doc["ym"] = poly_json(k.ym, in.field);
  r.doc["technical"] = {{"holds", k.technical.holds()}, {"window", k.technical.window}};
  r.text.push_back("dim V = " + std::to_string(k.V.dim()) + ", dim U = " + std::to_string(k.U.dim()));
  Json checks = Json::array();
  for (const FlagCheck& c : b.checks) {
    static const char* kinds[] = {"none", "node", "family", "operator"};
    Json j = {{"parity", c.parity.signs()}, {"label", c.label}, {"membership", kinds[int(c.membership)]},
              {"operator_equal", c.operator_equal}, {"passed", c.passed()}};
    if (!c.message.empty()) j["message"] = c.message;
    checks.push_back(j);
    r.text.push_back(c.parity.to_string() + "  " + c.label + "  " + kinds[int(c.membership)] + "  " +
                     (c.passed() ? "pass" : "FAIL"));
  }
  r.doc["checks"] = checks;
  r.passed = b.passed();
  return r;
}

Json spectrum_json(const std::vector<RatFunc>& v, const FieldSpec& f) {
  Json a = Json::array();
  for (const RatFunc& e : v) a.push_back(ratfunc_json(e, f));
  return a;
}

void completeness_section(const Gl11Weights& w, const FieldSpec& f, Report& r) {
  CompletenessReport c = completeness_report(w, f.radical);
  Json sols = Json::array();
  for (size_t i = 0; i < c.solutions.size(); ++i)
    sols.push_back({{"y", poly_json(c.solutions[i].y, f)}, {"eigenvalue", ratfunc_json(c.eigenvalues[i], f)}});
  r.doc["solutions"] = sols;
  r.doc["completeness"] = {{"expected", c.expected}, {"singular_dim", c.singular_dim}, {"nonzero", c.nonzero},
                           {"singular", c.singular}, {"eigen", c.eigen}, {"orthogonal", c.orthogonal},
                           {"independent", c.independent}, {"spanning", c.spanning}, {"norms", c.norms},
                           {"problems", c.problems}, {"passed", c.passed()}};
  r.text.push_back("solutions " + std::to_string(c.solutions.size()) + " of " + std::to_string(c.expected) +
                   ", singular subspace dim " + std::to_string(c.singular_dim));
  for (size_t i = 0; i < c.solutions.size(); ++i)
    r.text.push_back("  y = " + f.format(c.solutions[i].y) + "  E = " + f.format(c.eigenvalues[i]));
  for (const std::string& p : c.problems) r.text.push_back("  " + p);
  r.text.push_back(std::string("completeness: ") + (c.passed() ? "pass" : "FAIL"));
  r.passed = r.passed && c.passed();
}

Report gl11(const RunConfig& cfg) {
  Report r;
  if (cfg.gl11_mode == "homogeneous") {
    if (cfg.sites < 1 || cfg.sites > 4) throw InputError("", "homogeneous chain needs 1 <= p <= 4");
    Spectrum sp = homogeneous_spectrum(cfg.sites);
    FieldSpec f;
    f.radical = sp.radical;
    r.doc["p"] = sp.p;
    r.doc["field"] = field_json(f);
    r.doc["spectrum"] = spectrum_json(sp.computed, f);
    r.doc["closed_form"] = spectrum_json(sp.closed_form, f);
    r.doc["matches"] = sp.matches;
    r.doc["simple"] = sp.simple;
    r.text.push_back("homogeneous chain, p = " + std::to_string(sp.p));
    for (const RatFunc& e : sp.computed) r.text.push_back("  " + f.format(e));
    r.text.push_back(std::string("closed form: ") + (sp.matches ? "pass" : "FAIL") +
                     ", simple: " + (sp.simple ? "pass" : "FAIL"));
    r.passed = sp.matches && sp.simple;
    completeness_section(Gl11Weights::homogeneous(cfg.sites), f, r);
    return r;
  }
  if (cfg.gl11_mode != "chain") throw InputError("", "unknown gl11 mode '" + cfg.gl11_mode + "'");
  Gl11Input in = parse_gl11_input(load_document(cfg.input));
  r.doc["input"] = to_json(in);
  r.doc["irreducible"] = in.weights.irreducible();
  if (!in.weights.typical()) {
    r.text.push_back("atypical chain (a + b = 0)");
    r.doc["typical"] = false;
    return r;
  }
  completeness_section(in.weights, in.field, r);
  return r;
}

}  // namespace

Input parse_input(const Json& doc) {
  require_object(doc, "", {"m", "n", "field", "weights", "z", "twist", "parity", "y"});
  Input in;
  in.field = doc.contains("field") ? parse_field(doc["field"], "/field") : FieldSpec{};
  WeightData& w = in.weights;
  w.m = int(integer(field_at(doc, "m", ""), "/m"));
  w.n = int(integer(field_at(doc, "n", ""), "/n"));
  if (w.m < 0 || w.n < 0 || w.m + w.n < 2) throw InputError("/m", "need m, n >= 0 and m + n >= 2");
  w.h = in.field.h;
  const Json& ws = array_at(doc, "weights", "");
  for (size_t k = 0; k < ws.size(); ++k) {
    std::string ptr = "/weights/" + std::to_string(k);
    if (!ws[k].is_array()) throw InputError(ptr, "expected an array");
    Weight l;
    for (size_t i = 0; i < ws[k].size(); ++i) l.push_back(int(integer(ws[k][i], ptr + "/" + std::to_string(i))));
    try {
      validate_weight(l, w.m, w.n);
    } catch (const std::invalid_argument& e) {
      throw InputError(ptr, e.what());
    }
    w.weights.push_back(l);
  }
  w.z = scalars(array_at(doc, "z", ""), in.field, "/z");
  if (w.z.size() != w.weights.size()) throw InputError("/z", "expected one point per weight");
  if (doc.contains("twist")) w.twist = scalars(doc["twist"], in.field, "/twist");
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(w.twisted() ? "/twist" : "/weights", e.what());
  }
  ParitySeq s = ParitySeq::standard(w.m, w.n);
  if (doc.contains("parity")) {
    const Json& p = doc["parity"];
    if (!p.is_array()) throw InputError("/parity", "expected an array");
    std::vector<int> signs;
    for (size_t i = 0; i < p.size(); ++i) signs.push_back(int(integer(p[i], "/parity/" + std::to_string(i))));
    try {
      s = ParitySeq(signs);
    } catch (const std::invalid_argument& e) {
      throw InputError("/parity", e.what());
    }
    if (s.m() != w.m || s.size() != w.m + w.n) throw InputError("/parity", "does not match gl(m|n)");
  }
  std::vector<Poly> ys(w.m + w.n - 1, Poly(1));
  if (doc.contains("y")) {
    const Json& y = doc["y"];
    if (!y.is_array()) throw InputError("/y", "expected an array");
    if (int(y.size()) != w.m + w.n - 1) throw InputError("/y", "expected m + n - 1 polynomials");
    for (size_t i = 0; i < y.size(); ++i) ys[i] = Poly(scalars(y[i], in.field, "/y/" + std::to_string(i)));
  }
  try {
    in.node = BetheNode(s, ys, w.twist);
  } catch (const std::invalid_argument& e) {
    throw InputError("/y", e.what());
  }
  return in;
}

Json to_json(const Input& in) {
  const WeightData& w = in.weights;
  Json j = {{"m", w.m}, {"n", w.n}, {"field", field_json(in.field)}, {"weights", w.weights},
            {"z", scalars_json(w.z, in.field)}};
  if (w.twisted()) j["twist"] = scalars_json(w.twist, in.field);
  j["parity"] = in.node.parity.signs();
  Json ys = Json::array();
  for (const Poly& y : in.node.y) ys.push_back(poly_json(y, in.field));
  j["y"] = ys;
  return j;
}

Gl11Input parse_gl11_input(const Json& doc) {
  require_object(doc, "", {"field", "weights", "z"});
  Gl11Input in;
  in.field = doc.contains("field") ? parse_field(doc["field"], "/field") : FieldSpec{};
  if (!in.field.h.is_one()) throw InputError("/field/h", "the gl(1|1) chain uses h = 1");
  const Json& ws = array_at(doc, "weights", "");
  for (size_t k = 0; k < ws.size(); ++k) {
    std::string ptr = "/weights/" + std::to_string(k);
    std::vector<Scalar> ab = scalars(ws[k], in.field, ptr);
    if (ab.size() != 2) throw InputError(ptr, "expected a pair (a, b)");
    in.weights.a.push_back(ab[0]);
    in.weights.b.push_back(ab[1]);
  }
  in.weights.z = scalars(array_at(doc, "z", ""), in.field, "/z");
  try {
    in.weights.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError("/weights", e.what());
  }
  return in;
}

Json to_json(const Gl11Input& in) {
  Json ws = Json::array();
  for (int k = 0; k < in.weights.p(); ++k)
    ws.push_back({scalar_json(in.weights.a[k], in.field), scalar_json(in.weights.b[k], in.field)});
  return {{"field", field_json(in.field)}, {"weights", ws}, {"z", scalars_json(in.weights.z, in.field)}};
}

Json load_document(const std::string& input) {
  if (input.empty()) throw InputError("", "no input given (use --input)");
  std::string text;
  if (input.front() == '{') {
    text = input;
  } else if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(input);
    if (!f) throw InputError("", "cannot read " + input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("", e.what());
  }
}

Report run_report(const RunConfig& cfg) {
  const std::string& c = cfg.subcommand;
  if (c == "gl11") return gl11(cfg);
  Input in = parse_input(load_document(cfg.input));
  if (c == "verify-bae") return verify_bae(in);
  if (c == "reproduce") return reproduce(cfg, in);
  if (c == "population") {
    PopulationGraph g;
    return population(cfg, in, g);
  }
  if (c == "twisted") return twisted(cfg, in);
  if (c == "operator") return operator_report(in);
  if (c == "flags") return flags(cfg, in);
  throw InputError("", "unknown subcommand '" + c + "'");
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json:
      return r.doc.is_null() ? std::string() : r.doc.dump(2) + "\n";
    case Format::Text: {
      std::string out;
      for (const std::string& l : r.text) out += l + "\n";
      return out;
    }
    case Format::Graphviz:
      if (!r.graphviz) throw InputError("", "graphviz output is only available for population graphs");
      return *r.graphviz;
  }
  return {};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Report r = run_report(cfg);
    out << render(r, cfg.format);
    if (!r.passed) err << "verification failed\n";
    return r.passed ? 0 : 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // the input was well formed but the computation could not finish
    Json j = {{"error", e.what()}, {"passed", false}};
    if (cfg.format == Format::Json) out << j.dump(2) << "\n";
    err << "failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bethe::cli
