#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nambu/linalg.hpp"

namespace nambu {

// Exact counterexample to an identity: the arguments tried and the two sides
// that came out different. Exhaustive checks record the basis tuple as well.
struct Witness {
  std::string identity;
  std::vector<int> basis_tuple;  // empty for randomized witnesses
  std::vector<Vector> args;
  Vector lhs;
  Vector rhs;

  std::string to_string() const;
};

enum class CheckMode { exhaustive, randomized };

struct CheckReport {
  std::string identity;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t samples = 0;  // randomized only
  std::uint64_t seed = 0;     // randomized only
  bool passed = false;
  std::optional<Witness> witness;
  std::uint64_t tuples_checked = 0;
  std::string note;  // failing sub-condition, skip reasons, etc.
};

struct CheckConfig {
  enum class Mode { automatic, exhaustive, randomized };
  Mode mode = Mode::automatic;
  std::uint64_t samples = 200;
  std::uint64_t seed = 0;
  int coord_min = -3;
  int coord_max = 3;
  // Exhaustive enumeration refuses beyond this many tuples; automatic mode
  // falls back to randomized sampling instead.
  std::uint64_t budget = 100'000'000;
};

// Thrown when an explicitly requested exhaustive check exceeds the budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a construction's hypothesis fails; carries the counterexample.
struct HypothesisError : std::runtime_error {
  std::string hypothesis;
  std::optional<Witness> witness;

  HypothesisError(std::string hyp, std::optional<Witness> w);
};

}  // namespace nambu
