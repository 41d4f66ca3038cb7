#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nambu/hom_algebra.hpp"
#include "nambu/report.hpp"

namespace nambu {

// One testable equation lhs(args) = rhs(args). Exhaustive mode enumerates
// basis tuples (which proves the identity for all arguments when both sides
// are multilinear); randomized mode samples integer-coordinate vectors.
// Identities that are not multilinear (Maltsev, Jordan) supply a polarized
// multilinear form for exhaustive mode and the original equation for
// randomized mode.
struct Condition {
  std::string label;
  int exhaustive_len = 0;
  int randomized_len = 0;
  // First sym_prefix slots are symmetric; exhaustive enumeration restricts to
  // non-decreasing index prefixes.
  int sym_prefix = 0;
  using Eval = std::function<void(std::span<const Vector* const>, Vector& lhs, Vector& rhs)>;
  Eval eval_exhaustive;
  Eval eval_randomized;  // defaults to eval_exhaustive
};

// Shared driver behind all checkers.
CheckReport run_conditions(const std::string& identity, int dim, std::vector<Condition> conditions,
                           const CheckConfig& cfg);

CheckReport check_hom_nambu(const HomAlgebra& L, const CheckConfig& cfg = {});
CheckReport check_antisymmetry(const HomAlgebra& L, const CheckConfig& cfg = {});
CheckReport check_ternary_total_hom_assoc(const HomAlgebra& A, const CheckConfig& cfg = {});
CheckReport check_hom_jordan_ts(const HomAlgebra& J, const CheckConfig& cfg = {});
CheckReport check_hom_lie_ts(const HomAlgebra& T, const CheckConfig& cfg = {});
CheckReport check_hom_associative(const HomAlgebra& A, const CheckConfig& cfg = {});
CheckReport check_hom_lie(const HomAlgebra& L, const CheckConfig& cfg = {});
// Requires identity twist; checked at alpha = Id only.
CheckReport check_maltsev(const HomAlgebra& A, const CheckConfig& cfg = {});
CheckReport check_alternative(const HomAlgebra& A, const CheckConfig& cfg = {});
// Commutativity plus the Jordan identity (x^2 y) x = x^2 (y x).
CheckReport check_jordan(const HomAlgebra& A, const CheckConfig& cfg = {});

// Catalog lookup for the CLI and pipelines; also accepts "multiplicative".
// Throws std::invalid_argument for unknown names.
CheckReport check_identity_by_name(const std::string& name, const HomAlgebra& L,
                                   const CheckConfig& cfg = {});
std::vector<std::string> checker_names();

}  // namespace nambu
