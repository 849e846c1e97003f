#include "phipsi/constructions.hpp"

#include <numeric>

namespace phipsi {

ConstructionError::ConstructionError(std::string failed, const std::string& detail)
    : std::runtime_error(failed + (detail.empty() ? "" : ": " + detail)), condition(std::move(failed)) {}

namespace {

const Rational kOne(1);

Witness certified(Witness w) {
  const Certification c = certify(w);
  if (!c.passed) throw ConstructionError("certification", c.failure);
  return w;
}

void require(bool ok, const std::string& condition, const std::string& detail = "") {
  if (!ok) throw ConstructionError(condition, detail);
}

void require_unit(const Rational& r, const std::string& name) {
  require(in_unit_interval(r), name + " in (0,1]", name + " = " + r.str());
}

WeightedTripartite make_weighted(Tripartition t, std::vector<Rational> wa, std::vector<Rational> wb,
                                 std::vector<Rational> wc) {
  try {
    return WeightedTripartite(std::move(t), std::move(wa), std::move(wb), std::move(wc));
  } catch (const std::invalid_argument& e) {
    throw ConstructionError("weight table", e.what());
  }
}

// Appends one new vertex to every part of `base`. Old weights in each part are
// scaled so that together with the new vertex the part sums to one.
WeightedTripartite attach_gadget(const WeightedTripartite& base, const Rational& wa, const Rational& wb,
                                 const Rational& wc, std::vector<Edge> extra_ab, std::vector<Edge> extra_bc) {
  const Tripartition& t = base.structure();
  auto ab = t.ab_edges();
  auto bc = t.bc_edges();
  ab.insert(ab.end(), extra_ab.begin(), extra_ab.end());
  bc.insert(bc.end(), extra_bc.begin(), extra_bc.end());
  Tripartition grown(t.a_size() + 1, t.b_size() + 1, t.c_size() + 1, ab, bc);

  auto scaled = [&](Part part, const Rational& fresh) {
    std::vector<Rational> out;
    const Rational factor = kOne - fresh;
    for (const auto& w : base.weights(part)) out.push_back(w * factor);
    out.push_back(fresh);
    return out;
  };
  return make_weighted(std::move(grown), scaled(Part::A, wa), scaled(Part::B, wb), scaled(Part::C, wc));
}

struct Bound {
  std::string name;
  Rational value;
};

// Intersects lower and upper bounds, naming the first pair that crosses.
GadgetInterval intersect(const std::string& variable, const std::vector<Bound>& lower,
                         const std::vector<Bound>& upper) {
  for (const Bound& l : lower)
    for (const Bound& u : upper)
      require(l.value <= u.value, variable + "-interval: " + l.name + " <= " + u.name,
              l.value.str() + " > " + u.value.str());
  GadgetInterval out{lower.front().value, upper.front().value, lower.front().name, upper.front().name};
  for (const Bound& l : lower)
    if (l.value > out.lower) out.lower = l.value, out.lower_source = l.name;
  for (const Bound& u : upper)
    if (u.value < out.upper) out.upper = u.value, out.upper_source = u.name;
  return out;
}

Rational pick(const std::optional<Rational>& explicit_value, const GadgetInterval& range, const std::string& name) {
  const Rational value = explicit_value.value_or(range.midpoint());
  require(range.contains(value), name + " within [" + range.lower.str() + ", " + range.upper.str() + "]",
          name + " = " + value.str());
  require(value.sign() > 0 && value < kOne, "non-positive weight", name + " = " + value.str() + " leaves no room");
  return value;
}

void check_all(const std::vector<std::pair<std::string, bool>>& conditions) {
  for (const auto& [name, ok] : conditions) require(ok, name);
}

struct Base {
  Rational x, y, reach;
};

Base psi_base(const Witness& base, const GadgetOptions& options) {
  require(base.claim.function == Function::psi, "base is a psi witness", "got a " + to_string(base.claim.function) +
                                                                             " claim");
  Base out{options.base_x.value_or(base.claim.x), options.base_y.value_or(base.claim.y), {}};
  require_unit(out.x, "x'");
  require_unit(out.y, "y'");
  const auto report = verify(base.graph, {out.x, out.y, Mode::biconstrained});
  require(report.passed, "base mismatch",
          "base graph is not (" + out.x.str() + "," + out.y.str() + ")-biconstrained: " +
              (report.violation ? report.violation->describe() : std::string()));
  out.reach = max_reach(base.graph).value;
  return out;
}

std::string gadget_provenance(const std::string& name, const Witness& base, const GadgetPlan& plan) {
  return name + " p=" + plan.p.str() + " q=" + plan.q.str() + " base=[" + base.provenance + "]";
}

}  // namespace

Witness interval_witness(int n, int p, int q) {
  require(n >= 1 && p >= 1 && q >= 1 && p <= n && q <= n, "1 <= p,q <= N",
          "N=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
  const auto size = static_cast<std::size_t>(n);
  std::vector<Edge> ab, bc;
  for (std::size_t i = 0; i < size; ++i) {
    for (int j = 0; j < p; ++j) ab.push_back({i, (i + static_cast<std::size_t>(j)) % size});
    for (int j = 0; j < q; ++j) bc.push_back({i, (i + static_cast<std::size_t>(j)) % size});
  }
  Witness w{WeightedTripartite::uniform(Tripartition(size, size, size, ab, bc)),
            Claim{Function::psi, Rational(p, n), Rational(q, n), min(kOne, Rational(p + q - 1, n)), false},
            "interval N=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q)};
  return certified(std::move(w));
}

CirculantPlan plan_circulant(const Rational& x, const Rational& y, long a, long b, long max_n) {
  require(a >= 1 && b >= 1, "a,b positive integers");
  require_unit(x, "x");
  require_unit(y, "y");
  const Rational ratio(a, b);
  require(ratio <= Rational(1, 2), "a/b <= 1/2", "a/b = " + ratio.str());
  const Rational ra(a), rb(b);
  require(rb * x / ra + y <= kOne, "bx/a + y <= 1", "value " + (rb * x / ra + y).str());
  require(x + rb * y / ra <= kOne, "x + by/a <= 1", "value " + (x + rb * y / ra).str());
  require(ra * y <= x || ra * x <= y, "ay <= x or ax <= y");

  CirculantPlan plan;
  plan.x = x;
  plan.y = y;
  plan.a = a;
  plan.b = b;
  plan.branch = ra * y <= x ? 1 : 2;
  plan.k = rb / ra - kOne;
  plan.m = b - a;
  const Rational& k = plan.k;
  const Rational k1 = k + kOne;
  const Rational inv_k1 = k1.reciprocal();

  const Rational shrink = kOne - k * (plan.branch == 1 ? x : y);
  const Rational p_rate = x / shrink, q_rate = y / shrink;
  mpz_class n;
  mpz_lcm(n.get_mpz_t(), p_rate.denominator().get_mpz_t(), q_rate.denominator().get_mpz_t());
  require(n <= max_n, "N <= " + std::to_string(max_n), "smallest admissible N is " + n.get_str());
  plan.n = n.get_si();
  const Rational rn(plan.n);
  plan.p = (p_rate * rn).numerator().get_si();
  plan.q = (q_rate * rn).numerator().get_si();

  if (plan.branch == 1) {
    plan.r = (inv_k1 - x) / (k1 * rn);
  } else {
    plan.r = min((inv_k1 - x) / (k1 * rn), inv_k1 - y) / Rational(2);
  }
  const Rational& r = plan.r;
  const Rational rp(plan.p), rq(plan.q);
  const Rational w_ai = k * r * (rn + kOne) / rn;
  const Rational w_star = inv_k1 - rn * k * r;
  const Rational hub_degree = rp * w_ai + w_star;
  const Rational reach_c = w_star + (rp + rq - kOne) * w_ai;

  auto& c = plan.conditions;
  if (plan.branch == 1) {
    c = {{"ay <= x", ra * y <= x},
         {"x <= p(1-kx)/N", x <= rp * shrink / rn},
         {"y <= q(1-kx)/N", y <= rq * shrink / rn},
         {"y <= q(1-kay)/N", y <= rq * (kOne - k * ra * y) / rn},
         {"x <= 1/(k+1) - r", x <= inv_k1 - r},
         {"x <= pkr(N+1)/N + 1/(k+1) - Nkr", x <= hub_degree},
         {"1/(k+1) > 1/(k+1) - Nkr + (p+q-1)kr(N+1)/N", inv_k1 > reach_c}};
  } else {
    c = {{"ax <= y", ra * x <= y},
         {"x <= p(1-ky)/N", x <= rp * shrink / rn},
         {"y <= q(1-ky)/N", y <= rq * shrink / rn},
         {"x <= 1/b - r/a", x <= Rational(1, b) - r / ra},
         {"x <= pkr(N+1)/N + 1/(k+1) - Nkr", x <= hub_degree},
         {"1/(k+1) > 1/(k+1) - Nkr + (p+q-1)kr(N+1)/N", inv_k1 > reach_c}};
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    require(c[i].second, "circulant condition " + std::to_string(i + 1), c[i].first);
  return plan;
}

Witness circulant_witness(const Rational& x, const Rational& y, long a, long b, long max_n) {
  const CirculantPlan plan = plan_circulant(x, y, a, b, max_n);
  const auto n = static_cast<std::size_t>(plan.n);
  const auto m = static_cast<std::size_t>(plan.m);
  const auto width = static_cast<std::size_t>(a);
  const std::size_t star = n;  // a* sits right after a_0..a_{N-1}

  // A: a_0..a_{N-1}, a*, a'_0..a'_{m-1}; B: b_0..b_{N-1}, b'_0..; C: c_0..c_{N-1}, c'_0..
  std::vector<Edge> ab, bc;
  for (std::size_t i = 0; i < n; ++i) {
    for (long j = 0; j < plan.p; ++j) ab.push_back({i, (i + static_cast<std::size_t>(j)) % n});
    for (long j = 0; j < plan.q; ++j) bc.push_back({i, (i + static_cast<std::size_t>(j)) % n});
    ab.push_back({star, i});
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (plan.branch == 1) {
      for (std::size_t j = 0; j < width; ++j) ab.push_back({n + 1 + i, n + (i + j) % m});
      bc.push_back({n + i, n + i});
    } else {
      ab.push_back({n + 1 + i, n + i});
      for (std::size_t j = 0; j < width; ++j) bc.push_back({n + i, n + (i + j) % m});
    }
  }
  Tripartition t(n + 1 + m, n + m, n + m, ab, bc);

  const Rational& k = plan.k;
  const Rational rn(plan.n), ra(a);
  const Rational inv_k1 = (k + kOne).reciprocal();
  std::vector<Rational> wa(n, k * plan.r * (rn + kOne) / rn);
  wa.push_back(inv_k1 - rn * k * plan.r);
  wa.insert(wa.end(), m, Rational(1, b) - plan.r / ra);
  std::vector<Rational> wb, wc;
  if (plan.branch == 1) {
    wb.assign(n, (kOne - k * x) / rn);
    wb.insert(wb.end(), m, x / ra);
    wc.assign(n, (kOne - k * ra * y) / rn);
    wc.insert(wc.end(), m, y);
  } else {
    wb.assign(n, (kOne - k * y) / rn);
    wb.insert(wb.end(), m, y / ra);
    wc.assign(n, (kOne - k * y) / rn);
    wc.insert(wc.end(), m, y / ra);
  }
  Witness w{make_weighted(std::move(t), std::move(wa), std::move(wb), std::move(wc)),
            Claim{Function::psi, x, y, Rational(a, b), true},
            "circulant x=" + x.str() + " y=" + y.str() + " a=" + std::to_string(a) + " b=" + std::to_string(b)};
  return certified(std::move(w));
}

Witness extend_phi(const Witness& base, const Rational& x, const Rational& y, const Rational& z) {
  require_unit(x, "x");
  require_unit(y, "y");
  require_unit(z, "z");
  require(x >= Rational(1, 2), "x >= 1/2", "x = " + x.str());
  require(y <= Rational(1, 2), "y <= 1/2", "y = " + y.str());
  const Rational base_x = (Rational(2) * x - kOne) / x;
  const Rational base_y = y / (kOne - y);
  require_unit(base_x, "x' = (2x-1)/x");
  require_unit(base_y, "y' = y/(1-y)");
  require(x < kOne, "non-positive weight", "w(b) = 1-x = 0");
  require(z < kOne, "non-positive weight", "w(a) = 1-z = 0");

  const auto report = verify(base.graph, {base_x, base_y, Mode::constrained});
  require(report.passed, "base mismatch",
          "base graph is not (" + base_x.str() + "," + base_y.str() + ")-constrained: " +
              (report.violation ? report.violation->describe() : std::string()));
  const Rational level = (Rational(2) * z - kOne) / z;
  const Rational base_reach = max_reach(base.graph).value;
  require(base_reach < level, "base reach < (2z-1)/z",
          "base reaches " + base_reach.str() + ", need below " + level.str());

  // With exactly 1-z on a, c would reach all of A' and land on z itself. Half
  // of the slack left by the base moves from A' to a so every C-vertex stays
  // strictly below z.
  const Rational slack = Rational(2) * z - kOne - z * base_reach;
  const Rational shift = slack / (Rational(2) * (kOne - base_reach));

  const Tripartition& t = base.graph.structure();
  const std::size_t a_new = t.a_size(), b_new = t.b_size(), c_new = t.c_size();
  std::vector<Edge> ab, bc{{b_new, c_new}};
  for (std::size_t j = 0; j < t.b_size(); ++j) ab.push_back({a_new, j});
  for (std::size_t i = 0; i < t.a_size(); ++i) ab.push_back({i, b_new});

  Witness w{attach_gadget(base.graph, kOne - z + shift, kOne - x, y, std::move(ab), std::move(bc)),
            Claim{Function::phi, x, y, z, true},
            "extend-phi base=[" + base.provenance + "]"};
  return certified(std::move(w));
}

GadgetPlan plan_psi_top(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                        const GadgetOptions& options) {
  require_unit(x, "x");
  require_unit(y, "y");
  require_unit(z, "z");
  const Base bp = psi_base(base, options);
  const Rational &xb = bp.x, &yb = bp.y, &zb = bp.reach;

  GadgetPlan plan;
  plan.base_x = xb;
  plan.base_y = yb;
  plan.base_reach = zb;
  plan.conditions = {{"x <= 1/(2-x')", x * (Rational(2) - xb) <= kOne},
                     {"y <= y'/(1+y')", y * (kOne + yb) <= yb},
                     {"x <= z", x <= z},
                     {"x + (1-x')y/y' <= 1", x * yb + (kOne - xb) * y <= yb},
                     {"z >= 1/(2-z')", z * (Rational(2) - zb) >= kOne},
                     {"x <= (z-z'+x'(1-z))/(1-z')", x * (kOne - zb) <= z - zb + xb * (kOne - z)}};
  check_all(plan.conditions);
  const bool strict_hypotheses =
      x < z && z * (Rational(2) - zb) > kOne && x * (kOne - zb) < z - zb + xb * (kOne - z);

  std::vector<Bound> p_lower{{"1-z", kOne - z}}, p_upper{{"1-x", kOne - x}};
  std::vector<Bound> q_lower{{"y", y}}, q_upper{{"1-x", kOne - x}, {"1-y/y'", kOne - y / yb}};
  if (xb < kOne) {
    const Rational lift = (x - xb) / (kOne - xb);
    p_lower.push_back({"(x-x')/(1-x')", lift});
    q_lower.push_back({"(x-x')/(1-x')", lift});
  }
  if (zb < kOne) p_upper.push_back({"(z-z')/(1-z')", (z - zb) / (kOne - zb)});
  else require(z == kOne, "p-interval: (1-p)z'+p <= z", "base reaches all of A'");
  plan.p_range = intersect("p", p_lower, p_upper);
  plan.q_range = intersect("q", q_lower, q_upper);
  plan.p = pick(options.p, plan.p_range, "p");
  plan.q = pick(options.q, plan.q_range, "q");
  require(y < kOne, "non-positive weight", "C' would weigh 1-y = 0");
  plan.strict = strict_hypotheses && kOne - plan.p < z && plan.p + (kOne - plan.p) * zb < z;
  return plan;
}

Witness extend_psi_top(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                       const GadgetOptions& options) {
  const GadgetPlan plan = plan_psi_top(base, x, y, z, options);
  const Tripartition& t = base.graph.structure();
  const std::size_t a_new = t.a_size(), b_new = t.b_size(), c_new = t.c_size();
  std::vector<Edge> ab, bc{{b_new, c_new}};
  for (std::size_t j = 0; j < t.b_size(); ++j) ab.push_back({a_new, j});
  for (std::size_t i = 0; i < t.a_size(); ++i) ab.push_back({i, b_new});
  Witness w{attach_gadget(base.graph, plan.p, plan.q, y, std::move(ab), std::move(bc)),
            Claim{Function::psi, x, y, z, plan.strict}, gadget_provenance("extend-psi-top", base, plan)};
  return certified(std::move(w));
}

GadgetPlan plan_psi_bottom(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                           const GadgetOptions& options) {
  require_unit(x, "x");
  require_unit(y, "y");
  require_unit(z, "z");
  const Base bp = psi_base(base, options);
  const Rational &xb = bp.x, &yb = bp.y, &zb = bp.reach;

  GadgetPlan plan;
  plan.base_x = xb;
  plan.base_y = yb;
  plan.base_reach = zb;
  plan.conditions = {{"y <= 1/(2-y')", y * (Rational(2) - yb) <= kOne},
                     {"x <= x'/(1+x')", x * (kOne + xb) <= xb},
                     {"x <= x'z", x <= xb * z},
                     {"(1-y')x/x' + y <= 1", (kOne - yb) * x + y * xb <= xb},
                     {"z >= 1/(2-z')", z * (Rational(2) - zb) >= kOne},
                     {"x <= (z-z')/(1-z')", x * (kOne - zb) <= z - zb}};
  check_all(plan.conditions);
  const bool strict_hypotheses = x < xb * z && z * (Rational(2) - zb) > kOne && x * (kOne - zb) < z - zb;

  const Rational starve = kOne - x / xb;
  std::vector<Bound> p_lower{{"x", x}, {"1-z", kOne - z}}, p_upper{{"1-x/x'", starve}};
  std::vector<Bound> q_lower{{"x", x}}, q_upper{{"1-y", kOne - y}, {"1-x/x'", starve}};
  if (zb < kOne) p_upper.push_back({"(z-z')/(1-z')", (z - zb) / (kOne - zb)});
  else require(z == kOne, "p-interval: (1-p)z'+p <= z", "base reaches all of A'");
  if (yb < kOne) q_lower.push_back({"(y-y')/(1-y')", (y - yb) / (kOne - yb)});
  plan.p_range = intersect("p", p_lower, p_upper);
  plan.q_range = intersect("q", q_lower, q_upper);
  plan.p = pick(options.p, plan.p_range, "p");
  plan.q = pick(options.q, plan.q_range, "q");
  require(y < kOne, "non-positive weight", "c would weigh 1-y = 0");
  plan.strict = strict_hypotheses && kOne - plan.p < z && plan.p + (kOne - plan.p) * zb < z;
  return plan;
}

Witness extend_psi_bottom(const Witness& base, const Rational& x, const Rational& y, const Rational& z,
                          const GadgetOptions& options) {
  const GadgetPlan plan = plan_psi_bottom(base, x, y, z, options);
  const Tripartition& t = base.graph.structure();
  const std::size_t a_new = t.a_size(), b_new = t.b_size(), c_new = t.c_size();
  std::vector<Edge> ab{{a_new, b_new}}, bc;
  for (std::size_t k = 0; k < t.c_size(); ++k) bc.push_back({b_new, k});
  for (std::size_t j = 0; j < t.b_size(); ++j) bc.push_back({j, c_new});
  Witness w{attach_gadget(base.graph, plan.p, plan.q, kOne - y, std::move(ab), std::move(bc)),
            Claim{Function::psi, x, y, z, plan.strict}, gadget_provenance("extend-psi-bottom", base, plan)};
  return certified(std::move(w));
}

}  // namespace phipsi
