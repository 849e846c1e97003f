#pragma once

// Exact region predicates for the known bounds on phi and psi, point
// evaluation with provenance, and grid scans.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phipsi/rational.hpp"
#include "phipsi/witness.hpp"

namespace phipsi {

enum class Relation { at_least, below, at_most };
std::string to_string(Relation r);

struct Conclusion {
  Function function;
  Relation relation;
  Rational level;

  bool operator==(const Conclusion&) const = default;
};

struct RegionOptions {
  // The first alternative of 3/4ub3 is printed as (3x-1)/(12-12y-4) and read
  // here as (3x-1)/(8-12y); this switch drops that alternative.
  bool use_suspect_3_4ub3 = true;
  int k_max = 100;
};

struct TheoremPredicate {
  std::string id;
  Function function;
  Relation relation;
  std::optional<Rational> level;  // nullopt when the level depends on (x, y)
  std::string statement;
  // Empty when the hypothesis fails at (x, y). Several entries only for the
  // two-sided results (intk, cayleybound, trivialbounds).
  std::function<std::vector<Conclusion>(const Rational&, const Rational&, const RegionOptions&)> evaluate;

  bool holds(const Rational& x, const Rational& y, const RegionOptions& options = {}) const {
    return !evaluate(x, y, options).empty();
  }
};

const std::vector<TheoremPredicate>& predicate_catalog();

struct Finding {
  std::string id;
  Conclusion conclusion;
  bool swapped = false;  // predicate evaluated at (y, x); phi only
  bool lifted = false;   // moved between phi and psi via phi <= psi
  std::string label() const;
};

struct Contradiction {
  Function function;
  Finding lower;  // at_least
  Finding upper;  // below or at_most
  std::string describe() const;
};

enum class Verdict { at_least, below, unknown };
std::string to_string(Verdict v);

struct LevelVerdict {
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> sources;  // labels of the findings that decide it
};

struct PointVerdict {
  Rational x, y;
  std::vector<Finding> direct;  // predicates holding at (x, y) itself
  std::vector<Finding> phi;     // full phi fact set after symmetry and closure
  std::vector<Finding> psi;
  std::vector<Contradiction> contradictions;

  LevelVerdict verdict(Function f, const Rational& level) const;
};

/// Raw predicate conclusions at one point, before symmetry and closure.
std::vector<Finding> evaluate_raw(const Rational& x, const Rational& y, const RegionOptions& options = {});

/// Combines the raw findings at (x, y) and (y, x). Closure uses only
/// phi >= z => psi >= z and psi < z (or <= z) => phi < z (or <= z).
PointVerdict assemble_point(const Rational& x, const Rational& y, const std::vector<Finding>& at_xy,
                            const std::vector<Finding>& at_yx);

/// Throws std::domain_error unless 0 < x, y <= 1.
PointVerdict evaluate_point(const Rational& x, const Rational& y, const RegionOptions& options = {});

inline const std::array<Rational, 3>& scan_levels() {
  static const std::array<Rational, 3> levels{Rational(3, 4), Rational(2, 5), Rational(3, 5)};
  return levels;
}

struct VerdictCounts {
  std::size_t at_least = 0, below = 0, unknown = 0;
  std::size_t total() const { return at_least + below + unknown; }
  bool operator==(const VerdictCounts&) const = default;
};

struct GridScanReport {
  Rational step;
  std::size_t points = 0;
  std::vector<Rational> levels;
  std::map<std::pair<Function, std::string>, VerdictCounts> counts;  // keyed by (function, level text)
  std::vector<std::string> contradictions;
  std::vector<std::string> symmetry_violations;
  std::string output_path;

  const VerdictCounts& count(Function f, const Rational& level) const;
};

struct ScanOptions {
  RegionOptions regions;
  std::string csv_path;       // empty: no CSV
  std::string boundary_path;  // empty: no boundary file
  bool parallel = true;
};

/// Evaluates every point (i*step, j*step) for 1 <= i, j <= 1/step. Throws
/// std::invalid_argument unless step = 1/n, std::runtime_error if an output
/// file cannot be written.
GridScanReport scan_grid(const Rational& step, const ScanOptions& options = {});

/// CSV text for a scan without touching the file system; rows in grid order.
std::string scan_csv(const Rational& step, const RegionOptions& options = {}, bool parallel = true);

}  // namespace phipsi
