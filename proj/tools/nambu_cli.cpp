#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nambu/io.hpp"

namespace {

int run_check(const std::string& file, const std::string& identity, const std::string& mode,
              std::uint64_t samples, std::uint64_t seed, std::uint64_t budget) {
  const nambu::AlgebraDocument doc = nambu::load_algebra_file(file);
  nambu::CheckConfig cfg;
  if (mode == "exhaustive")
    cfg.mode = nambu::CheckConfig::Mode::exhaustive;
  else if (mode == "random")
    cfg.mode = nambu::CheckConfig::Mode::randomized;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.budget = budget;
  const nambu::CheckReport rep = nambu::check_identity_by_name(identity, doc.algebra, cfg);
  std::cout << nambu::render_report(rep) << "\n";
  return rep.passed ? 0 : 1;
}

int run_construct(const std::string& file, const std::string& recipe, const std::string& params,
                  const std::string& out) {
  nambu::AlgebraDocument doc = nambu::load_algebra_file(file);
  nambu::RecipeStep step{recipe, params.empty() ? "{}" : params};
  doc.algebra = nambu::apply_recipe(doc.algebra, step);
  doc.metadata["recipe"] = recipe;
  nambu::save_algebra_file(doc, out);
  std::cout << "wrote " << out << " (dim " << doc.algebra.dim() << ", arity "
            << doc.algebra.arity() << ")\n";
  return 0;
}

int run_example(const std::string& name, const std::vector<std::string>& params,
                const std::string& out) {
  std::map<std::string, std::string> p;
  for (const std::string& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --param expects key=value, got \"" << kv << "\"\n";
      return 2;
    }
    p[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const nambu::ExampleBundle b = nambu::make_example(name, p);
  nambu::save_algebra_file(b.doc, out);
  std::cout << "wrote " << out << " (dim " << b.doc.algebra.dim() << ", arity "
            << b.doc.algebra.arity() << ")\n";
  return 0;
}

int run_pipeline_cmd(const std::string& file, const std::string& report_out) {
  const nambu::PipelineResult res = nambu::run_pipeline_file(file);
  if (report_out.empty()) {
    std::cout << res.report;
  } else {
    std::ofstream out(report_out);
    if (!out) {
      std::cerr << "error: cannot write " << report_out << "\n";
      return 2;
    }
    out << res.report;
  }
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant engine for n-ary Hom-algebras"};
  app.require_subcommand(1);

  std::string file, identity, out, recipe, params_json, report_out, example_name;
  std::string mode = "auto";
  std::uint64_t samples = 200, seed = 0, budget = 100'000'000;
  std::vector<std::string> params;

  auto* check = app.add_subcommand("check", "Check an identity on an algebra file");
  check->add_option("file", file)->required();
  check->add_option("--identity", identity)->required();
  check->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random", "auto"}));
  check->add_option("--samples", samples);
  check->add_option("--seed", seed);
  check->add_option("--budget", budget);

  auto* construct = app.add_subcommand("construct", "Apply a construction to an algebra file");
  construct->add_option("file", file)->required();
  construct->add_option("--recipe", recipe)->required();
  construct->add_option("--params", params_json, "Recipe parameters as a JSON object");
  construct->add_option("-o,--output", out)->required();

  auto* example = app.add_subcommand("example", "Generate a built-in example algebra");
  example->add_option("name", example_name)->required();
  example->add_option("--param", params, "key=value parameter (repeatable)");
  example->add_option("-o,--output", out)->required();

  auto* pipeline = app.add_subcommand("pipeline", "Run a pipeline document");
  pipeline->add_option("file", file)->required();
  pipeline->add_option("--report", report_out, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(file, identity, mode, samples, seed, budget);
    if (construct->parsed()) return run_construct(file, recipe, params_json, out);
    if (example->parsed()) return run_example(example_name, params, out);
    if (pipeline->parsed()) return run_pipeline_cmd(file, report_out);
  } catch (const nambu::HypothesisError& e) {
    std::cerr << "refused: " << e.hypothesis << "\n";
    if (e.witness) std::cerr << e.witness->to_string() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
