#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nambu/constructions.hpp"
#include "nambu/examples.hpp"
#include "nambu/hom_algebra.hpp"

namespace nambu {

// Malformed documents; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An algebra plus free-form metadata; what algebra files hold.
struct AlgebraDocument {
  HomAlgebra algebra;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
    return a.algebra == b.algebra && a.metadata == b.metadata;
  }
};

// JSON text format, version "1": dim, arity, sparse bracket records with
// 1-based basis indices and exact rational coefficient strings, dense twist
// matrices, metadata. Serialization is canonical (lexicographic tuple order,
// reduced scalars), so parse(serialize(x)) == x and serialization is
// byte-stable.
AlgebraDocument parse_algebra(const std::string& text);
std::string serialize_algebra(const AlgebraDocument& doc);
AlgebraDocument load_algebra_file(const std::string& path);
void save_algebra_file(const AlgebraDocument& doc, const std::string& path);

// A generated algebra together with the named maps, trace functionals, and
// distinguished elements that constructions on it need.
struct ExampleBundle {
  AlgebraDocument doc;
  std::map<std::string, LinearMap> maps;
  std::map<std::string, TraceFunctional> traces;
  std::map<std::string, Vector> elements;
};

// Catalog: bilinear_lts, bilinear_jts, fermionic, octonions,
// exceptional_jordan, matrix_jts, involution_jts, hom_pair_ternary_ring,
// quaternion_cross_3lie, sl2, affine2. Parameters are name-specific strings
// (e.g. N, lambda, eta for fermionic). Throws ParseError for unknown names
// or bad parameters.
ExampleBundle make_example(const std::string& name,
                           const std::map<std::string, std::string>& params);
std::vector<std::string> example_names();

// One pipeline construction step: a recipe name from the fixed catalog plus
// its JSON-encoded parameters (matrices as row arrays of rational strings,
// vectors as coordinate arrays, integers as numbers).
struct RecipeStep {
  std::string recipe;
  std::string params_json;  // JSON object; "{}" when the recipe needs none
};

std::vector<std::string> recipe_names();
// Applies one step; throws HypothesisError on refusal, ParseError on bad
// parameters.
HomAlgebra apply_recipe(const HomAlgebra& input, const RecipeStep& step);

struct PipelineResult {
  std::string report;  // canonical JSON report document
  bool ok = false;     // false iff any check failed or any construction refused
};

// Runs a pipeline document: input (file or example), construction steps,
// checks. Deterministic for a fixed document.
PipelineResult run_pipeline(const std::string& pipeline_text);
PipelineResult run_pipeline_file(const std::string& path);

// Canonical JSON rendering of a check outcome (used by the CLI and reports).
std::string render_report(const CheckReport& rep);

}  // namespace nambu
