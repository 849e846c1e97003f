// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails. All limits below are fixed here and nowhere else.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "../support.hpp"
#include "phipsi/constructions.hpp"
#include "phipsi/oracle.hpp"
#include "phipsi/regions.hpp"

using namespace phipsi;
using R = Rational;

namespace {

// Runtime limits in seconds.
constexpr double kOracleSmallLimit = 1.0;
constexpr double kOracleLargeLimit = 120.0;
constexpr double kCayleyLimit = 10.0;
constexpr double kConstructionLimit = 60.0;
constexpr double kScanLimit = 120.0;
constexpr double kCrossLimit = 10.0;
constexpr double kBlowUpLimit = 60.0;
constexpr double kLemmaLimit = 30.0;

constexpr int kCayleyMaxN = 12;
constexpr std::size_t kSamplesPerRegion = 40;
constexpr std::size_t kRequiredPerRegion = 25;
constexpr long kSampleMaxDenominator = 60;
constexpr long kScanDenominator = 120;
constexpr int kRandomBlowUpGraphs = 20;
constexpr long kRandomBlowUpMaxDenominator = 6;
constexpr std::size_t kBlowUpMaxPart = 200;
constexpr int kLemmaTrials = 200;
constexpr int kLemmaMaxK = 3;
constexpr long kCirculantMaxN = 1024;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string seconds_text(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return out.str();
}

int failures = 0;

void report(int id, const Outcome& o, double elapsed) {
  if (!o.pass) ++failures;
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << " ["
            << seconds_text(elapsed) << "]" << std::endl;
}

// ---------------------------------------------------------------------------
// Criterion 1

Outcome pinned_oracle_values() {
  Outcome o;
  auto run = [&](std::size_t n, const R& v, double limit) {
    const auto start = Clock::now();
    const auto result = exhaustive_min_max({n, n, n, {v, v, Mode::constrained}});
    const double t = since(start);
    const bool ok = result && result->value == v && t < limit;
    o.pass = o.pass && ok;
    o.detail += "(" + std::to_string(n) + "," + std::to_string(n) + "," + std::to_string(n) + ") x=y=" + v.str() +
                " -> " + (result ? result->value.str() : "infeasible") + " in " + seconds_text(t) + "; ";
  };
  run(2, R(1, 2), kOracleSmallLimit);
  run(3, R(1, 3), kOracleLargeLimit);
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 2

Outcome cayley_tightness() {
  Outcome o;
  int checked = 0, wrong = 0;
  for (int n = 1; n <= kCayleyMaxN; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        const Witness w = interval_witness(n, p, q);
        const R expected = min(R(1), R(p + q - 1, n));
        const R reach = max_reach(w.graph).value;
        ++checked;
        if (reach != expected || testing::naive_max_reach(testing::plain(w.graph)) != expected) {
          ++wrong;
          if (wrong <= 3) o.detail += "interval(" + std::to_string(n) + "," + std::to_string(p) + "," +
                                      std::to_string(q) + ") reach " + reach.str() + "; ";
        }
      }
  o.pass = wrong == 0;
  o.detail += std::to_string(checked) + " interval witnesses, " + std::to_string(wrong) + " mismatches";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 3: scripted base search and the construction pipelines.

// Set when a construction fails somewhere other than a hypothesis check.
std::vector<std::string> construction_bugs;

bool is_bug(const ConstructionError& e) {
  return e.condition == "certification" || e.condition == "weight table" ||
         e.condition.starts_with("circulant condition");
}

template <typename F>
std::optional<Witness> attempt(F&& build) {
  try {
    return build();
  } catch (const ConstructionError& e) {
    if (is_bug(e)) construction_bugs.push_back(e.what());
  }
  return std::nullopt;
}

long ceil_long(const R& v) { return v.ceil().get_si(); }

R ceil_to(const R& v, long d) { return R(ceil_long(v * R(d)), d); }

bool valid_point(const R& x, const R& y) { return R(0) < x && x <= R(1) && R(0) < y && y <= R(1); }

// A witness whose graph verifies (constrained) at (x, y) with max_reach < bound.
std::optional<Witness> phi_base(const R& x, const R& y, const R& bound, int depth) {
  if (!valid_point(x, y) || bound <= R(0)) return std::nullopt;
  const ConstraintParams params{x, y, Mode::constrained};
  auto usable = [&](const Witness& w) { return verify(w.graph, params).passed && max_reach(w.graph).value < bound; };

  for (long n = 1; n <= 40; ++n) {
    const long p = ceil_long(x * R(n)), q = ceil_long(y * R(n));
    if (p > n || q > n || min(R(1), R(p + q - 1, n)) >= bound) continue;
    return interval_witness(static_cast<int>(n), static_cast<int>(p), static_cast<int>(q));
  }

  static const std::vector<std::pair<long, long>> ratios{{1, 2}, {2, 5}, {1, 3}, {2, 7}, {1, 4}};
  for (const auto& [a, b] : ratios) {
    if (R(a, b) > bound) continue;
    std::vector<std::pair<R, R>> points{{x, y}};
    for (long d = 2; d <= 40; ++d) points.emplace_back(ceil_to(x, d), ceil_to(y, d));
    for (const auto& [px, py] : points) {
      try {
        plan_circulant(px, py, a, b, kCirculantMaxN);
      } catch (const ConstructionError&) {
        continue;
      }
      if (auto w = attempt([&] { return circulant_witness(px, py, a, b, kCirculantMaxN); }); w && usable(*w)) return w;
    }
  }

  if (depth > 0 && x > R(1, 2) && y < R(1, 2)) {
    const R inner = (R(2) * bound - R(1)) / bound;
    if (auto base = phi_base((R(2) * x - R(1)) / x, y / (R(1) - y), inner, depth - 1))
      if (auto w = attempt([&] { return extend_phi(*base, x, y, bound); }); w && usable(*w)) return w;
  }
  return std::nullopt;
}

std::vector<Witness> interval_bases(const R& below, const std::optional<Witness>& preferred) {
  std::vector<Witness> out;
  if (preferred) out.push_back(*preferred);
  for (int n = 1; n <= 12; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q)
        if (min(R(1), R(p + q - 1, n)) < below) out.push_back(interval_witness(n, p, q));
  return out;
}

using Pipeline = std::function<std::optional<Witness>(const R&, const R&)>;

Pipeline psi_gadget(bool top, const R& z, std::vector<Witness> bases) {
  return [top, z, bases = std::move(bases)](const R& x, const R& y) -> std::optional<Witness> {
    for (const Witness& base : bases) {
      // Cheap screen before building anything.
      try {
        const GadgetPlan plan = top ? plan_psi_top(base, x, y, z) : plan_psi_bottom(base, x, y, z);
        if (!plan.strict) continue;
      } catch (const ConstructionError&) {
        continue;
      }
      auto w = attempt([&] { return top ? extend_psi_top(base, x, y, z) : extend_psi_bottom(base, x, y, z); });
      if (w && w->claim.strict) return w;
    }
    return std::nullopt;
  };
}

// psi_bottom at z = 3/5 on circulant bases (x', 1-3x') with a/b = 1/3.
std::optional<Witness> psi_bottom_circulant(const R& x, const R& y) {
  const R z(3, 5);
  for (long d = 4; d <= 60; ++d)
    for (long n = 1; n < d; ++n) {
      const R xp(n, d);
      if (xp.denominator() != d || xp < R(1, 4) || xp >= R(1, 3)) continue;
      if (!(x < xp * z && x <= xp / (R(1) + xp) && y <= R(1) / (R(1) + R(3) * xp))) continue;
      const R yp = R(1) - R(3) * xp;
      try {
        plan_circulant(xp, yp, 1, 3, kCirculantMaxN);
      } catch (const ConstructionError&) {
        continue;
      }
      const auto base = attempt([&] { return circulant_witness(xp, yp, 1, 3, kCirculantMaxN); });
      if (!base) continue;
      if (auto w = attempt([&] { return extend_psi_bottom(*base, x, y, z); }); w && w->claim.strict) return w;
    }
  return std::nullopt;
}

Pipeline philb(const R& z) {
  return [z](const R& x, const R& y) -> std::optional<Witness> {
    const R bound = (R(2) * z - R(1)) / z;
    const auto base = phi_base((R(2) * x - R(1)) / x, y / (R(1) - y), bound, 2);
    if (!base) return std::nullopt;
    return attempt([&] { return extend_phi(*base, x, y, z); });
  };
}

struct Region {
  std::string name;
  Function function;
  R level;
  std::function<bool(const R&, const R&)> inside;
  Pipeline build;
};

std::vector<std::pair<R, R>> sample_region(std::mt19937_64& rng, const std::function<bool(const R&, const R&)>& inside,
                                           std::size_t count) {
  std::set<std::pair<R, R>> seen;
  std::vector<std::pair<R, R>> out;
  for (int tries = 0; out.size() < count && tries < 2'000'000; ++tries) {
    const long d = 6 + static_cast<long>(rng() % (kSampleMaxDenominator - 5));
    const R x(1 + static_cast<long>(rng() % d), d), y(1 + static_cast<long>(rng() % d), d);
    if (!inside(x, y) || !seen.insert({x, y}).second) continue;
    out.emplace_back(x, y);
  }
  return out;
}

struct RegionResult {
  std::string name;
  std::size_t sampled = 0, certified = 0, no_base = 0;
  std::vector<std::string> uncovered;
};

std::vector<Witness> criterion3_witnesses;

bool certified_for(const Witness& w, Function f, const R& x, const R& y, const R& z) {
  return w.claim.function == f && w.claim.x == x && w.claim.y == y && w.claim.z == z && w.claim.strict &&
         certify(w).passed && testing::naive_certify(w);
}

RegionResult run_region(std::mt19937_64& rng, const Region& region) {
  RegionResult out;
  out.name = region.name;
  for (const auto& [x, y] : sample_region(rng, region.inside, kSamplesPerRegion)) {
    ++out.sampled;
    const auto w = region.build(x, y);
    if (w && certified_for(*w, region.function, x, y, region.level)) {
      ++out.certified;
      criterion3_witnesses.push_back(*w);
    } else {
      ++out.no_base;
      out.uncovered.push_back("(" + x.str() + "," + y.str() + ")");
    }
  }
  return out;
}

std::vector<Region> regions() {
  const R one(1), two(2), three(3);
  std::vector<Region> out;
  out.push_back({"2/5psilb", Function::psi, R(2, 5),
                 [=](const R& x, const R& y) {
                   return (R(5, 2) * x + y <= one && x >= R(1, 3)) || (x + R(5, 2) * y <= one && y >= R(1, 3));
                 },
                 [](const R& x, const R& y) { return attempt([&] { return circulant_witness(x, y, 2, 5); }); }});
  out.push_back({"3/4psilb bullet 1", Function::psi, R(3, 4),
                 [=](const R& x, const R& y) { return R(1, 7) <= y && y <= R(1, 6) && x + two * y <= one; },
                 psi_gadget(true, R(3, 4), interval_bases(R(2, 3), interval_witness(5, 3, 1)))});
  out.push_back({"3/4psilb bullet 2", Function::psi, R(3, 4),
                 [=](const R& x, const R& y) { return R(1, 7) <= x && x <= R(1, 6) && two * x + y <= one; },
                 psi_gadget(false, R(3, 4), interval_bases(R(2, 3), std::nullopt))});
  out.push_back({"3/5psilb bullet 1", Function::psi, R(3, 5),
                 [=](const R& x, const R& y) { return R(1, 7) <= y && y <= R(1, 6) && x + three * y <= one; },
                 psi_gadget(true, R(3, 5), interval_bases(R(1, 3), interval_witness(4, 1, 1)))});
  out.push_back({"3/5psilb bullet 2", Function::psi, R(3, 5),
                 [=](const R& x, const R& y) { return R(1, 7) <= x && x <= R(1, 6) && three * x + y <= one; },
                 psi_bottom_circulant});
  // extend_phi needs x > 1/2; the rest of each region is covered separately below.
  out.push_back({"3/4philb (x > 1/2)", Function::phi, R(3, 4),
                 [=](const R& x, const R& y) {
                   return x > R(1, 2) && x < one && y < R(1, 3) && x / (one - x) + y / (one - three * y) <= three;
                 },
                 philb(R(3, 4))});
  out.push_back({"3/5philb (x > 1/2)", Function::phi, R(3, 5),
                 [=](const R& x, const R& y) {
                   return x > R(1, 2) && x < R(2, 3) && y < R(1, 3) &&
                          (one - x) / (two - three * x) + y / (one - three * y) <= two;
                 },
                 philb(R(3, 5))});
  return out;
}

// The x <= 1/2 part of the philb regions: the interval witness at (1/2,1/2)
// verifies at every smaller (x, y) and reaches 1/2.
Region small_x_region(const std::string& name, const R& level, std::function<bool(const R&, const R&)> inside) {
  return {name, Function::phi, level, std::move(inside), [level](const R& x, const R& y) -> std::optional<Witness> {
            const Witness base = interval_witness(2, 1, 1);
            Witness w{base.graph, {Function::phi, x, y, level, true}, base.provenance + " at x=" + x.str() + " y=" + y.str()};
            if (!certify(w).passed) return std::nullopt;
            return w;
          }};
}

Outcome construction_certification(std::mt19937_64& rng) {
  Outcome o;
  for (const Region& region : regions()) {
    const RegionResult r = run_region(rng, region);
    const bool ok = r.certified >= kRequiredPerRegion;
    o.pass = o.pass && ok;
    o.detail += r.name + " " + std::to_string(r.certified) + "/" + std::to_string(r.sampled);
    if (r.no_base) {
      o.detail += " (no base at";
      for (const auto& point : r.uncovered) o.detail += " " + point;
      o.detail += ")";
    }
    o.detail += "; ";
  }
  const R one(1), two(2), three(3);
  for (const Region& region :
       {small_x_region("3/4philb (x <= 1/2)", R(3, 4),
                       [=](const R& x, const R& y) {
                         return x <= R(1, 2) && y < R(1, 3) && x / (one - x) + y / (one - three * y) <= three;
                       }),
        small_x_region("3/5philb (x <= 1/2)", R(3, 5), [=](const R& x, const R& y) {
          return x <= R(1, 2) && y < R(1, 3) && (one - x) / (two - three * x) + y / (one - three * y) <= two;
        })}) {
    const RegionResult r = run_region(rng, region);
    o.detail += r.name + " " + std::to_string(r.certified) + "/" + std::to_string(r.sampled) + "; ";
    o.pass = o.pass && r.certified == r.sampled;
  }
  if (!construction_bugs.empty()) {
    o.pass = false;
    o.detail += "construction bugs: " + construction_bugs.front();
  }
  o.detail += std::to_string(criterion3_witnesses.size()) + " witnesses";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 4 and 8

GridScanReport scan_report;

Outcome region_consistency() {
  scan_report = scan_grid(R(1, kScanDenominator));
  Outcome o;
  o.pass = scan_report.contradictions.empty() && scan_report.symmetry_violations.empty() &&
           scan_report.points == static_cast<std::size_t>(kScanDenominator * kScanDenominator);
  o.detail = "step 1/" + std::to_string(kScanDenominator) + ", " + std::to_string(scan_report.points) + " points, " +
             std::to_string(predicate_catalog().size()) + " predicates, " +
             std::to_string(scan_report.contradictions.size()) + " contradictions, " +
             std::to_string(scan_report.symmetry_violations.size()) + " phi-symmetry violations";
  if (!scan_report.contradictions.empty()) o.detail += "; first: " + scan_report.contradictions.front();
  return o;
}

Outcome unknown_band() {
  Outcome o;
  for (Function f : {Function::phi, Function::psi})
    for (const R& level : scan_levels()) {
      const auto& c = scan_report.count(f, level);
      o.pass = o.pass && c.at_least > 0 && c.below > 0 && c.unknown > 0 &&
               c.total() == scan_report.points;
      o.detail += to_string(f) + " " + level.str() + ": >= " + std::to_string(c.at_least) + ", < " +
                  std::to_string(c.below) + ", unknown " + std::to_string(c.unknown) + "; ";
    }
  o.detail += "exact boundaries of phi and psi are not computed";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 5

Outcome witness_region_cross_check() {
  Outcome o;
  std::size_t checked = 0, clashes = 0;
  for (const Witness& w : criterion3_witnesses) {
    if (!w.claim.strict) continue;
    ++checked;
    const PointVerdict v = evaluate_point(w.claim.x, w.claim.y);
    const LevelVerdict lv = v.verdict(w.claim.function, w.claim.z);
    if (lv.verdict == Verdict::at_least || !v.contradictions.empty()) {
      ++clashes;
      if (clashes <= 3) o.detail += w.claim.describe() + " vs " + (lv.sources.empty() ? "?" : lv.sources.front()) + "; ";
    }
  }
  o.pass = clashes == 0 && checked > 0;
  o.detail += std::to_string(checked) + " strict witnesses, " + std::to_string(clashes) + " clashes";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 6

bool blow_up_agrees(const WeightedTripartite& g, std::mt19937_64& rng, std::string& why) {
  const BlowUp b = blow_up(g, kBlowUpMaxPart);
  if (max_reach(b.graph).value != max_reach(g).value) {
    why = "max_reach " + max_reach(g).value.str() + " vs " + max_reach(b.graph).value.str();
    return false;
  }
  for (int t = 0; t < 6; ++t) {
    const R x(1 + static_cast<long>(rng() % 6), 6), y(1 + static_cast<long>(rng() % 6), 6);
    for (Mode mode : {Mode::constrained, Mode::biconstrained}) {
      const ConstraintParams params{x, y, mode};
      if (verify(g, params).passed != verify(b.graph, params).passed) {
        why = "verify differs at (" + x.str() + "," + y.str() + ")";
        return false;
      }
    }
  }
  return true;
}

bool within_blow_up_budget(const WeightedTripartite& g) {
  for (const auto& n : blow_up_sizes(g))
    if (n > kBlowUpMaxPart) return false;
  return true;
}

Outcome blow_up_equivalence(std::mt19937_64& rng) {
  Outcome o;
  int random_checked = 0, witness_checked = 0, skipped = 0, bad = 0;
  std::string why;
  for (int i = 0; i < kRandomBlowUpGraphs; ++i) {
    const WeightedTripartite g = testing::random_weighted(rng, 4, kRandomBlowUpMaxDenominator, 50);
    ++random_checked;
    if (!blow_up_agrees(g, rng, why)) ++bad;
  }
  for (const Witness& w : criterion3_witnesses) {
    if (!within_blow_up_budget(w.graph)) {
      ++skipped;
      continue;
    }
    ++witness_checked;
    if (!blow_up_agrees(w.graph, rng, why)) ++bad;
    const BlowUp b = blow_up(w.graph, kBlowUpMaxPart);
    if (!verify(b.graph, w.claim.params()).passed) {
      ++bad;
      why = w.claim.describe() + " blow-up fails verify";
    }
  }
  o.pass = bad == 0 && random_checked == kRandomBlowUpGraphs;
  o.detail = std::to_string(random_checked) + " random graphs, " + std::to_string(witness_checked) +
             " construction witnesses (" + std::to_string(skipped) + " over " + std::to_string(kBlowUpMaxPart) +
             " per part), " + std::to_string(bad) + " disagreements";
  if (bad) o.detail += "; " + why;
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 7

struct LemmaInstance {
  WeightedTripartite graph;
  ConstraintParams params;
  R z;
};

std::vector<LemmaInstance> lemma_instances(std::mt19937_64& rng) {
  std::vector<LemmaInstance> out;
  auto add_witness = [&](const Witness& w) {
    if (w.claim.mode() != Mode::biconstrained) return;
    const R reach = max_reach(w.graph).value;
    const R z = w.claim.strict ? w.claim.z : (reach + R(1)) / R(2);
    if (reach < z) out.push_back({w.graph, w.claim.params(), z});
  };
  for (int n = 2; n <= 7; ++n)
    for (int p = 1; p < n; ++p) add_witness(interval_witness(n, p, 1));
  add_witness(circulant_witness(R(1, 3), R(1, 6), 2, 5));
  add_witness(circulant_witness(R(1, 6), R(1, 3), 2, 5));
  for (const Witness& w : criterion3_witnesses)
    if (w.graph.structure().b_size() <= 64) add_witness(w);

  // Random graphs with parameters read off their own minimum degrees.
  while (out.size() < 60) {
    const WeightedTripartite g = testing::random_weighted(rng, 6, 12, 70);
    const auto p = testing::plain(g);
    std::vector<R> a_deg(p.a), b_deg_c(p.b), b_deg_a(p.b), c_deg(p.c);
    for (const Edge& e : p.ab) a_deg[e.from] += p.wb[e.to], b_deg_a[e.to] += p.wa[e.from];
    for (const Edge& e : p.bc) b_deg_c[e.from] += p.wc[e.to], c_deg[e.to] += p.wb[e.from];
    R x(1), y(1);
    for (const auto& d : a_deg) x = min(x, d);
    for (const auto& d : b_deg_a) x = min(x, d);
    for (const auto& d : b_deg_c) y = min(y, d);
    for (const auto& d : c_deg) y = min(y, d);
    if (x.is_zero() || y.is_zero()) continue;
    const R reach = max_reach(g).value;
    if (reach >= R(1)) continue;
    out.push_back({g, {x, y, Mode::biconstrained}, (reach + R(1)) / R(2)});
  }
  return out;
}

Outcome expansion_lemma(std::mt19937_64& rng) {
  Outcome o;
  const auto instances = lemma_instances(rng);
  std::map<LemmaOutcome, int> tally;
  std::string first_counterexample;
  for (int t = 0; t < kLemmaTrials; ++t) {
    const LemmaInstance& inst = instances[rng() % instances.size()];
    const std::size_t b = inst.graph.structure().b_size();
    const int k = 1 + static_cast<int>(rng() % kLemmaMaxK);
    // Dense subsets make the lemma applicable more often.
    const int density = 50 + static_cast<int>(rng() % 51);
    Bitset subset(b);
    for (std::size_t j = 0; j < b; ++j)
      if (static_cast<int>(rng() % 100) < density) subset.set(j);
    const LemmaCheck check = check_expansion_lemma(inst.graph, inst.params, inst.z, k, subset);
    ++tally[check.outcome];
    if (check.outcome == LemmaOutcome::counterexample && first_counterexample.empty())
      first_counterexample = "k=" + std::to_string(k) + " w(B_k)=" + check.subset_weight.str();
  }
  o.pass = tally[LemmaOutcome::counterexample] == 0;
  o.detail = std::to_string(kLemmaTrials) + " trials over " + std::to_string(instances.size()) +
             " instances: holds " + std::to_string(tally[LemmaOutcome::holds]) + ", not_applicable " +
             std::to_string(tally[LemmaOutcome::not_applicable]) + ", COUNTEREXAMPLE " +
             std::to_string(tally[LemmaOutcome::counterexample]);
  if (!first_counterexample.empty()) o.detail += "; " + first_counterexample;
  return o;
}

template <typename F>
void timed(int id, double limit, F&& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double t = since(start);
  if (t >= limit) {
    o.pass = false;
    o.detail += "; over the " + seconds_text(limit) + " limit";
  }
  report(id, o, t);
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  timed(1, kOracleSmallLimit + kOracleLargeLimit, pinned_oracle_values);
  timed(2, kCayleyLimit, cayley_tightness);
  timed(3, kConstructionLimit, [&] { return construction_certification(rng); });
  timed(4, kScanLimit, region_consistency);
  timed(5, kCrossLimit, witness_region_cross_check);
  timed(6, kBlowUpLimit, [&] { return blow_up_equivalence(rng); });
  timed(7, kLemmaLimit, [&] { return expansion_lemma(rng); });
  timed(8, 1.0, unknown_band);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
