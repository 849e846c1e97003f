#pragma once

// Certified witness builders. Every function here either returns a Witness
// that has just passed certify() or throws ConstructionError naming the
// condition that failed.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phipsi/witness.hpp"

namespace phipsi {

struct ConstructionError : std::runtime_error {
  ConstructionError(std::string condition, const std::string& detail);
  std::string condition;
};

struct GadgetInterval {
  Rational lower;
  Rational upper;
  std::string lower_source;  // which bound is binding, for error messages
  std::string upper_source;

  bool feasible() const { return lower <= upper; }
  bool contains(const Rational& r) const { return lower <= r && r <= upper; }
  Rational midpoint() const { return (lower + upper) / Rational(2); }
};

/// Cyclic interval graph on N + N + N vertices: a_i ~ b_i..b_{i+p-1} and
/// b_i ~ c_i..c_{i+q-1} (indices mod N), uniform weights. Certifies
/// psi(p/N, q/N) <= min(1, (p+q-1)/N).
Witness interval_witness(int n, int p, int q);

/// Everything the two-component circulant construction decides before any
/// vertex exists. `conditions` holds the construction's inequalities for
/// the chosen branch (seven for ay <= x, six otherwise), each evaluated on
/// its own.
struct CirculantPlan {
  Rational x, y;
  long a = 0, b = 0;
  int branch = 1;  // 1: ay <= x, 2: ax <= y
  Rational k;      // b/a - 1, possibly fractional
  long n = 0;
  long p = 0, q = 0;
  long m = 0;  // b - a
  Rational r;
  std::vector<std::pair<std::string, bool>> conditions;
};

/// Throws ConstructionError on a violated hypothesis (a/b <= 1/2,
/// bx/a + y <= 1, x + by/a <= 1, ay <= x or ax <= y) or if N would exceed
/// `max_n`.
CirculantPlan plan_circulant(const Rational& x, const Rational& y, long a, long b, long max_n = 4096);

/// Certifies psi(x, y) < a/b. A failing construction condition is reported with its
/// index; that would be a bug, not an expected outcome.
Witness circulant_witness(const Rational& x, const Rational& y, long a, long b, long max_n = 4096);

/// Gadget lifting a phi-witness at ((2x-1)/x, y/(1-y)) with reach below
/// (2z-1)/z to a strict witness phi(x, y) < z. The base graph only has to
/// verify (constrained) at the derived parameters, so any base at larger
/// parameters is accepted.
Witness extend_phi(const Witness& base, const Rational& x, const Rational& y, const Rational& z);

struct GadgetOptions {
  std::optional<Rational> p;       // default: midpoint of the p-interval
  std::optional<Rational> q;       // default: midpoint of the q-interval
  std::optional<Rational> base_x;  // default: the base claim's x
  std::optional<Rational> base_y;  // default: the base claim's y
};

struct GadgetPlan {
  Rational base_x, base_y, base_reach;
  GadgetInterval p_range, q_range;
  Rational p, q;
  bool strict = false;
  std::vector<std::pair<std::string, bool>> conditions;  // the six hypotheses, non-strict forms
};

/// New a complete to B', b complete to A', and the edge b-c; weights p, q, y
/// on the new vertices.
GadgetPlan plan_psi_top(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                        const GadgetOptions& options = {});
Witness extend_psi_top(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                       const GadgetOptions& options = {});

/// New edge a-b, b complete to C', c complete to B'; weights p, q, 1-y on
/// the new vertices.
GadgetPlan plan_psi_bottom(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                           const GadgetOptions& options = {});
Witness extend_psi_bottom(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                          const GadgetOptions& options = {});

}  // namespace phipsi
