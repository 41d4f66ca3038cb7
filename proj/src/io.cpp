#include "nambu/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nambu {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Rational parse_scalar(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail(where, "expected a rational string like \"2/3\"");
  const std::string s = j.get<std::string>();
  auto r = parse_rational(s);
  if (!r) fail(where, "malformed rational \"" + s + "\"");
  return *r;
}

Vector parse_vector(const json& j, int dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rationals");
  if (dim >= 0 && static_cast<int>(j.size()) != dim)
    fail(where, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  Vector v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<int>(i)] = parse_scalar(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

LinearMap parse_matrix(const json& j, int dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  if (dim >= 0 && static_cast<int>(j.size()) != dim)
    fail(where, "expected " + std::to_string(dim) + " rows, got " + std::to_string(j.size()));
  const int d = static_cast<int>(j.size());
  std::vector<std::vector<Rational>> rows;
  rows.reserve(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != d)
      fail(rw, "expected a row of " + std::to_string(d) + " entries");
    std::vector<Rational> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(parse_scalar(j[r][c], rw + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  return LinearMap::from_rows(rows);
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(to_string(v[i]));
  return a;
}

json matrix_to_json(const LinearMap& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json witness_to_json(const Witness& w) {
  json o;
  o["identity"] = w.identity;
  if (!w.basis_tuple.empty()) {
    json t = json::array();
    for (int i : w.basis_tuple) t.push_back(i + 1);  // 1-based in documents
    o["basis_tuple"] = std::move(t);
  }
  json args = json::array();
  for (const Vector& a : w.args) args.push_back(vector_to_json(a));
  o["args"] = std::move(args);
  o["lhs"] = vector_to_json(w.lhs);
  o["rhs"] = vector_to_json(w.rhs);
  return o;
}

json report_to_json(const CheckReport& rep) {
  json o;
  o["identity"] = rep.identity;
  o["mode"] = rep.mode == CheckMode::exhaustive ? "exhaustive" : "randomized";
  if (rep.mode == CheckMode::randomized) {
    o["samples"] = rep.samples;
    o["seed"] = rep.seed;
  }
  o["passed"] = rep.passed;
  o["tuples_checked"] = rep.tuples_checked;
  if (!rep.note.empty()) o["note"] = rep.note;
  if (rep.witness) o["witness"] = witness_to_json(*rep.witness);
  return o;
}

}  // namespace

std::string render_report(const CheckReport& rep) { return report_to_json(rep).dump(2); }

// ---------------------------------------------------------------------------
// Algebra documents
// ---------------------------------------------------------------------------

AlgebraDocument parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    fail("document", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("format_version") || doc["format_version"] != "1")
    fail("format_version", "expected \"1\"");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1)
    fail("dim", "expected a positive integer");
  if (!doc.contains("arity") || !doc["arity"].is_number_integer() || doc["arity"].get<int>() < 2)
    fail("arity", "expected an integer >= 2");
  const int dim = doc["dim"].get<int>();
  const int arity = doc["arity"].get<int>();

  std::map<std::uint64_t, Vector> table;
  if (doc.contains("bracket")) {
    if (!doc["bracket"].is_array()) fail("bracket", "expected an array of records");
    for (std::size_t r = 0; r < doc["bracket"].size(); ++r) {
      const std::string rw = "bracket[" + std::to_string(r) + "]";
      const json& rec = doc["bracket"][r];
      if (!rec.is_object() || !rec.contains("args") || !rec.contains("out"))
        fail(rw, "expected {args, out}");
      const json& args = rec["args"];
      if (!args.is_array() || static_cast<int>(args.size()) != arity)
        fail(rw + ".args", "expected " + std::to_string(arity) + " basis indices");
      std::vector<int> idx;
      for (std::size_t a = 0; a < args.size(); ++a) {
        const std::string aw = rw + ".args[" + std::to_string(a) + "]";
        if (!args[a].is_number_integer()) fail(aw, "expected a 1-based basis index");
        const int v = args[a].get<int>();
        if (v < 1 || v > dim)
          fail(aw, "index " + std::to_string(v) + " out of range [1, " + std::to_string(dim) + "]");
        idx.push_back(v - 1);
      }
      Vector out(dim);
      const json& outs = rec["out"];
      if (!outs.is_array()) fail(rw + ".out", "expected an array of {index, coeff}");
      for (std::size_t t = 0; t < outs.size(); ++t) {
        const std::string ow = rw + ".out[" + std::to_string(t) + "]";
        const json& term = outs[t];
        if (!term.is_object() || !term.contains("index") || !term.contains("coeff"))
          fail(ow, "expected {index, coeff}");
        if (!term["index"].is_number_integer()) fail(ow + ".index", "expected a 1-based index");
        const int oi = term["index"].get<int>();
        if (oi < 1 || oi > dim)
          fail(ow + ".index",
               "index " + std::to_string(oi) + " out of range [1, " + std::to_string(dim) + "]");
        out[oi - 1] += parse_scalar(term["coeff"], ow + ".coeff");
      }
      const std::uint64_t key = pack_indices(idx, dim);
      if (table.count(key)) fail(rw + ".args", "duplicate bracket record for this tuple");
      if (!out.is_zero()) table.emplace(key, std::move(out));
    }
  }

  std::vector<LinearMap> twists;
  if (!doc.contains("twists") || !doc["twists"].is_array() ||
      static_cast<int>(doc["twists"].size()) != arity - 1)
    fail("twists", "expected " + std::to_string(arity - 1) + " twist matrices");
  for (std::size_t t = 0; t < doc["twists"].size(); ++t)
    twists.push_back(parse_matrix(doc["twists"][t], dim, "twists[" + std::to_string(t) + "]"));

  std::map<std::string, std::string> metadata;
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) fail("metadata", "expected an object of strings");
    for (const auto& [k, v] : doc["metadata"].items()) {
      if (!v.is_string()) fail("metadata." + k, "expected a string value");
      metadata.emplace(k, v.get<std::string>());
    }
  }

  return AlgebraDocument{HomAlgebra(MultilinearMap(dim, arity, std::move(table)), std::move(twists)),
                         std::move(metadata)};
}

std::string serialize_algebra(const AlgebraDocument& docval) {
  const HomAlgebra& A = docval.algebra;
  json doc;
  doc["format_version"] = "1";
  doc["dim"] = A.dim();
  doc["arity"] = A.arity();
  json bracket = json::array();
  for (const auto& [key, v] : A.bracket().table()) {
    json rec;
    json args = json::array();
    for (int i : unpack_indices(key, A.dim(), A.arity())) args.push_back(i + 1);
    rec["args"] = std::move(args);
    json out = json::array();
    for (int i = 0; i < v.dim(); ++i) {
      if (sgn(v[i]) == 0) continue;
      json term;
      term["index"] = i + 1;
      term["coeff"] = to_string(v[i]);
      out.push_back(std::move(term));
    }
    rec["out"] = std::move(out);
    bracket.push_back(std::move(rec));
  }
  doc["bracket"] = std::move(bracket);
  json twists = json::array();
  for (const LinearMap& t : A.twists()) twists.push_back(matrix_to_json(t));
  doc["twists"] = std::move(twists);
  json meta = json::object();
  for (const auto& [k, v] : docval.metadata) meta[k] = v;
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

AlgebraDocument load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

void save_algebra_file(const AlgebraDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << serialize_algebra(doc);
}

// ---------------------------------------------------------------------------
// Example registry
// ---------------------------------------------------------------------------

namespace {

using Params = std::map<std::string, std::string>;

std::string get_param(const Params& p, const std::string& key, const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

int get_int(const Params& p, const std::string& key, int fallback) {
  const std::string s = get_param(p, key, std::to_string(fallback));
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    fail("param " + key, "expected an integer, got \"" + s + "\"");
  }
}

Rational get_rational(const Params& p, const std::string& key, const std::string& fallback) {
  const std::string s = get_param(p, key, fallback);
  auto r = parse_rational(s);
  if (!r) fail("param " + key, "malformed rational \"" + s + "\"");
  return *r;
}

std::vector<Rational> get_rational_list(const Params& p, const std::string& key,
                                        const std::string& fallback) {
  const std::string s = get_param(p, key, fallback);
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = parse_rational(item);
    if (!r) fail("param " + key, "malformed rational \"" + item + "\"");
    out.push_back(*r);
  }
  return out;
}

LinearMap get_matrix(const Params& p, const std::string& key, const LinearMap& fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  json j;
  try {
    j = json::parse(it->second);
  } catch (const std::exception& e) {
    fail("param " + key, std::string("invalid JSON: ") + e.what());
  }
  return parse_matrix(j, -1, "param " + key);
}

void set_name(AlgebraDocument& doc, const std::string& name) { doc.metadata["name"] = name; }

}  // namespace

ExampleBundle make_example(const std::string& name, const Params& params) {
  ExampleBundle b;
  if (name == "bilinear_lts" || name == "bilinear_jts") {
    const int N = get_int(params, "N", 2);
    const Rational lambda = get_rational(params, "lambda", "1");
    const BilinearForm form = BilinearForm::fermionic(N);
    b.doc.algebra = name == "bilinear_lts" ? bilinear_lts(form, lambda) : bilinear_jts(form, lambda);
  } else if (name == "fermionic") {
    const int N = get_int(params, "N", 2);
    const Rational lambda = get_rational(params, "lambda", "1");
    std::vector<Rational> eta = get_rational_list(params, "eta", "2,3");
    FermionicSystem f = fermionic_system(N, lambda, eta);
    b.doc.algebra = std::move(f.algebra);
    b.maps.emplace("alpha", std::move(f.alpha));
  } else if (name == "octonions") {
    b.doc.algebra = octonions();
    b.maps.emplace("automorphism", octonion_basic_triple_automorphism());
    b.maps.emplace("conjugate", octonion_conjugate());
  } else if (name == "exceptional_jordan") {
    b.doc.algebra = exceptional_jordan();
    b.maps.emplace("lift", exceptional_jordan_lift(octonion_basic_triple_automorphism()));
  } else if (name == "matrix_jts") {
    b.doc.algebra = matrix_jts(get_int(params, "p", 2), get_int(params, "q", 2));
  } else if (name == "involution_jts") {
    b.doc.algebra = involution_jts();
  } else if (name == "hom_pair_ternary_ring") {
    const int p = get_int(params, "p", 1);
    const int q = get_int(params, "q", 2);
    LinearMap beta_default = LinearMap::scalar(p, Rational(2));
    LinearMap gamma_default = LinearMap::identity(q);
    if (q >= 2) gamma_default.at(1, 1) = 3;
    HomPairTernary h = hom_pair_ternary_ring(p, q, get_matrix(params, "beta", beta_default),
                                             get_matrix(params, "gamma", gamma_default));
    b.doc.algebra = std::move(h.algebra);
    b.maps.emplace("alpha", std::move(h.alpha));
  } else if (name == "quaternion_cross_3lie") {
    b.doc.algebra = quaternion_cross_3lie();
  } else if (name == "sl2") {
    b.doc.algebra = sl2();
    b.maps.emplace("scaling_automorphism",
                   sl2_scaling_automorphism(get_rational(params, "t", "2")));
  } else if (name == "affine2") {
    b.doc.algebra = affine2();
    b.traces.emplace("tau", affine2_trace());
    b.maps.emplace("beta", LinearMap::scalar(2, Rational(2)));
    b.elements.emplace("a", Vector::unit(2, 0));
  } else {
    fail("example", "unknown example name: " + name);
  }
  set_name(b.doc, name);
  return b;
}

std::vector<std::string> example_names() {
  return {"bilinear_lts", "bilinear_jts", "fermionic", "octonions",
          "exceptional_jordan", "matrix_jts", "involution_jts", "hom_pair_ternary_ring",
          "quaternion_cross_3lie", "sl2", "affine2"};
}

// ---------------------------------------------------------------------------
// Recipes
// ---------------------------------------------------------------------------

std::vector<std::string> recipe_names() {
  return {"twist", "derived", "ternary_twist", "jts_from_ternary_assoc", "lts_from_jts",
          "lts_from_ternary_assoc", "ternary_assoc_from_hom_assoc", "lts_from_hom_lie",
          "lts_from_hom_assoc", "plus_algebra", "minus_algebra", "jts_from_jordan",
          "lts_from_maltsev", "raise_arity", "iterate_raise", "lower_arity", "lower_arity_k",
          "ternary_from_trace", "reduce_trace_bracket", "with_identity_twists"};
}

HomAlgebra apply_recipe(const HomAlgebra& input, const RecipeStep& step) {
  json p;
  try {
    p = step.params_json.empty() ? json::object() : json::parse(step.params_json);
  } catch (const std::exception& e) {
    fail("recipe " + step.recipe, std::string("invalid parameter JSON: ") + e.what());
  }
  if (!p.is_object()) fail("recipe " + step.recipe, "parameters must be a JSON object");
  const std::string& r = step.recipe;
  const int d = input.dim();

  auto need_matrix = [&](const char* key) {
    if (!p.contains(key)) fail("recipe " + r, std::string("missing parameter: ") + key);
    return parse_matrix(p[key], d, "recipe " + r + "." + key);
  };
  auto need_vector = [&](const char* key) {
    if (!p.contains(key)) fail("recipe " + r, std::string("missing parameter: ") + key);
    return parse_vector(p[key], d, "recipe " + r + "." + key);
  };
  auto need_uint = [&](const char* key) -> unsigned {
    if (!p.contains(key) || !p[key].is_number_integer() || p[key].get<int>() < 0)
      fail("recipe " + r, std::string("missing or invalid parameter: ") + key);
    return static_cast<unsigned>(p[key].get<int>());
  };
  auto opt_cfg = [&]() {
    CheckConfig cfg;
    if (p.contains("budget")) cfg.budget = p["budget"].get<std::uint64_t>();
    return cfg;
  };

  if (r == "twist") return twist(input, need_matrix("beta"));
  if (r == "derived") return derived(input, need_uint("k"));
  if (r == "ternary_twist") return ternary_twist(input, need_matrix("beta"));
  if (r == "jts_from_ternary_assoc") return jts_from_ternary_assoc(input);
  if (r == "lts_from_jts") return lts_from_jts(input);
  if (r == "lts_from_ternary_assoc") return lts_from_ternary_assoc(input);
  if (r == "ternary_assoc_from_hom_assoc") return ternary_assoc_from_hom_assoc(input);
  if (r == "lts_from_hom_lie") return lts_from_hom_lie(input);
  if (r == "lts_from_hom_assoc") return lts_from_hom_assoc(input);
  if (r == "plus_algebra") return plus_algebra(input);
  if (r == "minus_algebra") return minus_algebra(input);
  if (r == "jts_from_jordan") return jts_from_jordan(input);
  if (r == "lts_from_maltsev") return lts_from_maltsev(input);
  if (r == "raise_arity") return raise_arity(input, Verify::on, opt_cfg());
  if (r == "iterate_raise") return iterate_raise(input, need_uint("k"), Verify::on, opt_cfg());
  if (r == "lower_arity") return lower_arity(input, need_vector("a"));
  if (r == "lower_arity_k") {
    if (!p.contains("as") || !p["as"].is_array())
      fail("recipe " + r, "missing parameter: as (array of vectors)");
    std::vector<Vector> as;
    for (std::size_t i = 0; i < p["as"].size(); ++i)
      as.push_back(parse_vector(p["as"][i], d, "recipe " + r + ".as[" + std::to_string(i) + "]"));
    return lower_arity_k(input, as);
  }
  if (r == "ternary_from_trace")
    return ternary_from_trace(input, TraceFunctional{need_vector("tau")}, need_matrix("beta"));
  if (r == "reduce_trace_bracket")
    return reduce_trace_bracket(input, TraceFunctional{need_vector("tau")}, need_matrix("beta"),
                                need_vector("a"));
  if (r == "with_identity_twists")
    return HomAlgebra(input.bracket(), std::vector<LinearMap>(input.twists().size(),
                                                              LinearMap::identity(d)));
  fail("recipe", "unknown recipe name: " + r);
}

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

namespace {

CheckConfig parse_check_config(const json& c, const std::string& where) {
  CheckConfig cfg;
  if (c.contains("mode")) {
    const std::string m = c["mode"].get<std::string>();
    if (m == "exhaustive")
      cfg.mode = CheckConfig::Mode::exhaustive;
    else if (m == "random" || m == "randomized")
      cfg.mode = CheckConfig::Mode::randomized;
    else if (m == "auto" || m == "automatic")
      cfg.mode = CheckConfig::Mode::automatic;
    else
      fail(where + ".mode", "expected exhaustive, random, or auto");
  }
  if (c.contains("samples")) cfg.samples = c["samples"].get<std::uint64_t>();
  if (c.contains("seed")) cfg.seed = c["seed"].get<std::uint64_t>();
  if (c.contains("budget")) cfg.budget = c["budget"].get<std::uint64_t>();
  return cfg;
}

}  // namespace

PipelineResult run_pipeline(const std::string& pipeline_text) {
  json doc;
  try {
    doc = json::parse(pipeline_text);
  } catch (const std::exception& e) {
    fail("pipeline", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("input")) fail("pipeline", "expected {input, steps, checks}");

  AlgebraDocument current;
  const json& input = doc["input"];
  if (input.is_object() && input.contains("file")) {
    current = load_algebra_file(input["file"].get<std::string>());
  } else if (input.is_object() && input.contains("example")) {
    Params params;
    if (input.contains("params"))
      for (const auto& [k, v] : input["params"].items())
        params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    current = make_example(input["example"].get<std::string>(), params).doc;
  } else {
    fail("pipeline.input", "expected {file} or {example, params}");
  }

  json report;
  report["input"] = json{{"dim", current.algebra.dim()},
                         {"arity", current.algebra.arity()},
                         {"metadata", json::object()}};
  for (const auto& [k, v] : current.metadata) report["input"]["metadata"][k] = v;

  bool ok = true;
  json steps = json::array();
  bool refused = false;
  if (doc.contains("steps")) {
    if (!doc["steps"].is_array()) fail("pipeline.steps", "expected an array");
    for (std::size_t s = 0; s < doc["steps"].size(); ++s) {
      const json& sj = doc["steps"][s];
      const std::string where = "pipeline.steps[" + std::to_string(s) + "]";
      if (!sj.is_object() || !sj.contains("recipe")) fail(where, "expected {recipe, ...params}");
      RecipeStep step;
      step.recipe = sj["recipe"].get<std::string>();
      json params = sj;
      params.erase("recipe");
      step.params_json = params.dump();
      json entry;
      entry["recipe"] = step.recipe;
      try {
        current.algebra = apply_recipe(current.algebra, step);
        entry["status"] = "ok";
        entry["dim"] = current.algebra.dim();
        entry["arity"] = current.algebra.arity();
      } catch (const HypothesisError& e) {
        entry["status"] = "refused";
        entry["hypothesis"] = e.hypothesis;
        if (e.witness) entry["witness"] = witness_to_json(*e.witness);
        ok = false;
        refused = true;
      }
      steps.push_back(std::move(entry));
      if (refused) break;
    }
  }
  report["steps"] = std::move(steps);

  json checks = json::array();
  if (!refused && doc.contains("checks")) {
    if (!doc["checks"].is_array()) fail("pipeline.checks", "expected an array");
    for (std::size_t c = 0; c < doc["checks"].size(); ++c) {
      const json& cj = doc["checks"][c];
      const std::string where = "pipeline.checks[" + std::to_string(c) + "]";
      if (!cj.is_object() || !cj.contains("identity")) fail(where, "expected {identity, ...config}");
      const std::string identity = cj["identity"].get<std::string>();
      const CheckConfig cfg = parse_check_config(cj, where);
      json entry;
      try {
        const CheckReport rep = check_identity_by_name(identity, current.algebra, cfg);
        entry = report_to_json(rep);
        if (!rep.passed) ok = false;
      } catch (const BudgetExceeded& e) {
        entry["identity"] = identity;
        entry["error"] = e.what();
        ok = false;
      } catch (const std::invalid_argument& e) {
        fail(where, e.what());
      }
      checks.push_back(std::move(entry));
    }
  }
  report["checks"] = std::move(checks);
  report["passed"] = ok;
  return PipelineResult{report.dump(2) + "\n", ok};
}

PipelineResult run_pipeline_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_pipeline(ss.str());
}

}  // namespace nambu
