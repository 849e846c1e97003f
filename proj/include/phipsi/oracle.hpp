#pragma once

// Brute-force ground truth on small unweighted instances: the least possible
// max_reach over every tripartite graph of given part sizes that passes
// verify(), under uniform weights.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "phipsi/graph.hpp"
#include "phipsi/witness.hpp"

namespace phipsi {

struct OracleQuery {
  std::size_t a_size = 1, b_size = 1, c_size = 1;
  ConstraintParams params;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Rational value;
  Tripartition graph;
};

inline constexpr std::size_t kOracleMaxPartSize = 4;

/// nullopt when no graph of these sizes passes verify(). Throws
/// BudgetExceeded if any part is larger than kOracleMaxPartSize. Among
/// minimisers the first in enumeration order is returned, so the parallel and
/// serial versions agree exactly.
std::optional<OracleResult> exhaustive_min_max(const OracleQuery& q);
std::optional<OracleResult> exhaustive_min_max_serial(const OracleQuery& q);

/// Samples `trials` degree-feasible graphs and keeps the smallest max_reach.
/// Deterministic in `seed`; nullopt for trials = 0 or if no sample was
/// feasible. Parts may hold up to 64 vertices.
std::optional<OracleResult> randomized_upper_bound(std::array<std::size_t, 3> sizes, const ConstraintParams& params,
                                                   std::uint64_t trials, std::uint64_t seed);

struct CrossCheckBudget {
  std::size_t max_blow_up_part = 200;
  std::size_t max_exhaustive_part = kOracleMaxPartSize;
};

struct CrossCheckReport {
  Certification certification;
  std::optional<std::array<std::size_t, 3>> blow_up_sizes;  // unset when over budget
  bool blow_up_verified = false;
  std::optional<Rational> blow_up_reach;
  bool reach_matches = false;
  std::optional<Rational> exhaustive_value;  // unset when skipped or infeasible
  bool exhaustive_consistent = true;
  std::vector<std::string> notes;  // partial-report reasons

  bool passed() const;
  std::string describe() const;
};

CrossCheckReport cross_check(const Witness& w, const CrossCheckBudget& budget = {});

}  // namespace phipsi
