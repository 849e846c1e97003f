#include "phipsi/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <sstream>

namespace phipsi {

namespace {

using Mask = std::uint64_t;

// Smallest integer degree d with d >= r * n.
std::size_t min_degree(const Rational& r, std::size_t n) { return (r * Rational(n)).ceil().get_ui(); }

int popcount(Mask m) { return std::popcount(m); }

// Non-decreasing index sequences of length `len` over `choices` options.
std::vector<std::vector<std::size_t>> multisets(std::size_t choices, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(len, 0);
  if (choices == 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == choices - 1) --i;
    if (i == 0) break;
    const std::size_t v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < len; ++j) cur[j] = v;
  }
  return out;
}

std::vector<Mask> rows_with_degree(std::size_t width, std::size_t degree) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << width); ++m)
    if (static_cast<std::size_t>(popcount(m)) >= degree) out.push_back(m);
  return out;
}

Tripartition from_masks(std::size_t a, std::size_t b, std::size_t c, const std::vector<Mask>& b_of_a,
                        const std::vector<Mask>& c_of_b) {
  std::vector<Edge> ab, bc;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (b_of_a[i] >> j & 1) ab.push_back({i, j});
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t k = 0; k < c; ++k)
      if (c_of_b[j] >> k & 1) bc.push_back({j, k});
  return Tripartition(a, b, c, ab, bc);
}

struct LayerBest {
  std::size_t reach = std::numeric_limits<std::size_t>::max();
  std::vector<Mask> b_of_a;
};

std::optional<OracleResult> exhaustive(const OracleQuery& q, bool parallel) {
  q.params.validate();
  const std::size_t a = q.a_size, b = q.b_size, c = q.c_size;
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("oracle part sizes must be positive");
  if (std::max({a, b, c}) > kOracleMaxPartSize)
    throw BudgetExceeded("exhaustive oracle handles parts of at most " + std::to_string(kOracleMaxPartSize) +
                         " vertices, got " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
  const bool bi = q.params.mode == Mode::biconstrained;
  const auto& x = q.params.x;
  const auto& y = q.params.y;

  const auto a_rows = rows_with_degree(b, min_degree(x, b));
  const auto b_rows = rows_with_degree(c, min_degree(y, c));
  const std::size_t b_from_a = bi ? min_degree(x, a) : 0;
  const std::size_t c_from_b = bi ? min_degree(y, b) : 0;

  // Sorting the B->C rows fixes the order of B and sorting the A->B rows
  // fixes the order of A; max_reach does not see either order.
  const auto outer = multisets(b_rows.size(), b);
  const auto inner = multisets(a_rows.size(), a);
  std::vector<LayerBest> best(outer.size());

  const auto count = static_cast<long long>(outer.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long long o = 0; o < count; ++o) {
    const auto& layer = outer[static_cast<std::size_t>(o)];
    std::vector<Mask> b_of_c(c, 0);
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k)
        if (b_rows[layer[j]] >> k & 1) b_of_c[k] |= Mask{1} << j;
    if (bi && std::any_of(b_of_c.begin(), b_of_c.end(),
                          [&](Mask m) { return static_cast<std::size_t>(popcount(m)) < c_from_b; }))
      continue;

    LayerBest& mine = best[static_cast<std::size_t>(o)];
    for (const auto& choice : inner) {
      if (bi) {
        Mask covered_ok = 0;
        for (std::size_t j = 0; j < b; ++j) {
          std::size_t deg = 0;
          for (std::size_t i = 0; i < a; ++i) deg += a_rows[choice[i]] >> j & 1;
          if (deg >= b_from_a) covered_ok |= Mask{1} << j;
        }
        if (covered_ok != (Mask{1} << b) - 1) continue;
      }
      std::size_t worst = 0;
      for (std::size_t k = 0; k < c && worst < mine.reach; ++k) {
        std::size_t reach = 0;
        for (std::size_t i = 0; i < a; ++i) reach += (a_rows[choice[i]] & b_of_c[k]) != 0;
        worst = std::max(worst, reach);
      }
      if (worst < mine.reach) {
        mine.reach = worst;
        mine.b_of_a.clear();
        for (std::size_t i = 0; i < a; ++i) mine.b_of_a.push_back(a_rows[choice[i]]);
      }
    }
  }

  std::optional<std::size_t> winner;
  for (std::size_t o = 0; o < best.size(); ++o)
    if (!best[o].b_of_a.empty() && (!winner || best[o].reach < best[*winner].reach)) winner = o;
  if (!winner) return std::nullopt;
  std::vector<Mask> c_of_b;
  for (std::size_t j = 0; j < b; ++j) c_of_b.push_back(b_rows[outer[*winner][j]]);
  return OracleResult{Rational(static_cast<long>(best[*winner].reach), static_cast<long>(a)),
                      from_masks(a, b, c, best[*winner].b_of_a, c_of_b)};
}

}  // namespace

std::optional<OracleResult> exhaustive_min_max(const OracleQuery& q) { return exhaustive(q, true); }
std::optional<OracleResult> exhaustive_min_max_serial(const OracleQuery& q) { return exhaustive(q, false); }

std::optional<OracleResult> randomized_upper_bound(std::array<std::size_t, 3> sizes, const ConstraintParams& params,
                                                   std::uint64_t trials, std::uint64_t seed) {
  params.validate();
  const auto [a, b, c] = sizes;
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("oracle part sizes must be positive");
  if (std::max({a, b, c}) > 64) throw BudgetExceeded("randomized oracle handles parts of at most 64 vertices");
  if (trials == 0) return std::nullopt;
  const bool bi = params.mode == Mode::biconstrained;
  const std::size_t need_ab = min_degree(params.x, b), need_bc = min_degree(params.y, c);
  const std::size_t need_ba = bi ? min_degree(params.x, a) : 0, need_cb = bi ? min_degree(params.y, b) : 0;

  std::mt19937_64 rng(seed);
  auto random_subset = [&](std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng() % (n - i)]);
    Mask m = 0;
    for (std::size_t i = 0; i < k; ++i) m |= Mask{1} << idx[i];
    return m;
  };
  // Adds random elements of {0..n-1} to `m` until it has k of them.
  auto top_up = [&](Mask m, std::size_t n, std::size_t k) {
    while (static_cast<std::size_t>(popcount(m)) < k) m |= Mask{1} << (rng() % n);
    return m;
  };
  auto transpose = [](const std::vector<Mask>& rows, std::size_t width) {
    std::vector<Mask> out(width, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < width; ++j)
        if (rows[i] >> j & 1) out[j] |= Mask{1} << i;
    return out;
  };

  std::optional<OracleResult> best;
  std::size_t best_reach = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<Mask> b_of_a(a), c_of_b(b);
    for (auto& row : b_of_a) row = random_subset(b, need_ab);
    for (auto& row : c_of_b) row = random_subset(c, need_bc);
    auto a_of_b = transpose(b_of_a, b);
    auto b_of_c = transpose(c_of_b, c);
    if (bi) {
      for (auto& col : a_of_b) col = top_up(col, a, need_ba);
      for (auto& col : b_of_c) col = top_up(col, b, need_cb);
      b_of_a = transpose(a_of_b, a);
      c_of_b = transpose(b_of_c, b);
    }

    // Greedy pruning in random order: fewer edges never raise a reach.
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // B-C edges carry u + 64
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        if (b_of_a[i] >> j & 1) edges.push_back({i, j});
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k)
        if (c_of_b[j] >> k & 1) edges.push_back({64 + j, k});
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng() % i]);
    for (const auto& [u, v] : edges) {
      if (u < 64) {
        if (static_cast<std::size_t>(popcount(b_of_a[u])) <= need_ab ||
            static_cast<std::size_t>(popcount(a_of_b[v])) <= need_ba)
          continue;
        b_of_a[u] &= ~(Mask{1} << v);
        a_of_b[v] &= ~(Mask{1} << u);
      } else {
        const std::size_t j = u - 64;
        if (static_cast<std::size_t>(popcount(c_of_b[j])) <= need_bc ||
            static_cast<std::size_t>(popcount(b_of_c[v])) <= need_cb)
          continue;
        c_of_b[j] &= ~(Mask{1} << v);
        b_of_c[v] &= ~(Mask{1} << j);
      }
    }

    std::size_t worst = 0;
    for (std::size_t k = 0; k < c; ++k) {
      Mask reach = 0;
      for (std::size_t j = 0; j < b; ++j)
        if (b_of_c[k] >> j & 1) reach |= a_of_b[j];
      worst = std::max(worst, static_cast<std::size_t>(popcount(reach)));
    }
    if (worst < best_reach) {
      best_reach = worst;
      best = OracleResult{Rational(static_cast<long>(worst), static_cast<long>(a)), from_masks(a, b, c, b_of_a, c_of_b)};
    }
  }
  return best;
}

bool CrossCheckReport::passed() const {
  if (!certification.passed || !exhaustive_consistent) return false;
  return !blow_up_sizes || (blow_up_verified && reach_matches);
}

std::string CrossCheckReport::describe() const {
  std::ostringstream out;
  out << "certification: " << (certification.passed ? "pass" : "FAIL " + certification.failure) << '\n';
  out << "max_reach: " << certification.reach.value << " at C" << certification.reach.vertex << '\n';
  if (blow_up_sizes) {
    out << "blow-up: " << (*blow_up_sizes)[0] << ',' << (*blow_up_sizes)[1] << ',' << (*blow_up_sizes)[2]
        << " verify " << (blow_up_verified ? "pass" : "fail") << " max_reach " << *blow_up_reach
        << (reach_matches ? " (matches)" : " (MISMATCH)") << '\n';
  }
  if (exhaustive_value)
    out << "exhaustive: " << *exhaustive_value << (exhaustive_consistent ? " <= " : " > ")
        << certification.reach.value << '\n';
  for (const auto& note : notes) out << "note: " << note << '\n';
  out << "result: " << (passed() ? "pass" : "FAIL") << '\n';
  return out.str();
}

CrossCheckReport cross_check(const Witness& w, const CrossCheckBudget& budget) {
  CrossCheckReport report;
  report.certification = certify(w);
  const auto params = w.claim.params();
  const auto sizes = blow_up_sizes(w.graph);
  for (const auto& s : sizes) {
    if (s > static_cast<unsigned long>(budget.max_blow_up_part)) {
      report.notes.push_back("blow-up skipped: sizes " + sizes[0].get_str() + "," + sizes[1].get_str() + "," +
                             sizes[2].get_str() + " exceed " + std::to_string(budget.max_blow_up_part));
      return report;
    }
  }
  const BlowUp blown = blow_up(w.graph, budget.max_blow_up_part);
  const std::array<std::size_t, 3> dims{blown.graph.structure().a_size(), blown.graph.structure().b_size(),
                                        blown.graph.structure().c_size()};
  report.blow_up_sizes = dims;
  report.blow_up_verified = verify(blown.graph, params).passed;
  report.blow_up_reach = max_reach(blown.graph).value;
  report.reach_matches = report.blow_up_verified == report.certification.verification.passed &&
                         *report.blow_up_reach == report.certification.reach.value;

  if (std::max({dims[0], dims[1], dims[2]}) > budget.max_exhaustive_part) {
    report.notes.push_back("exhaustive comparison skipped: blow-up too large");
    return report;
  }
  const auto exact = exhaustive_min_max(OracleQuery{dims[0], dims[1], dims[2], params});
  if (!exact) {
    // The blow-up itself belongs to the family, so this can only mean a bug.
    report.exhaustive_consistent = !report.blow_up_verified;
    report.notes.push_back("exhaustive oracle found no feasible graph");
    return report;
  }
  report.exhaustive_value = exact->value;
  report.exhaustive_consistent = exact->value <= report.certification.reach.value;
  return report;
}

}  // namespace phipsi
