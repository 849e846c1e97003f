#pragma once

// Independent reference computations for the tests. Everything here works
// from edge lists and plain loops so it shares no code path with the bitset
// implementation under test.

#include <random>
#include <set>
#include <vector>

#include "phipsi/graph.hpp"
#include "phipsi/witness.hpp"

namespace phipsi::testing {

struct Plain {
  std::size_t a = 0, b = 0, c = 0;
  std::vector<Edge> ab, bc;
  std::vector<Rational> wa, wb, wc;
};

inline Plain plain(const WeightedTripartite& g) {
  const auto& t = g.structure();
  return {t.a_size(), t.b_size(), t.c_size(), t.ab_edges(), t.bc_edges(),
          g.weights(Part::A), g.weights(Part::B), g.weights(Part::C)};
}

// Breadth-first search over the whole graph; A-vertices at distance exactly
// two from C-vertex c.
inline std::set<std::size_t> distance_two_a(const Plain& p, std::size_t c) {
  // Vertex ids: A = [0,a), B = [a,a+b), C = [a+b, a+b+c).
  const std::size_t n = p.a + p.b + p.c;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : p.ab) {
    adj[e.from].push_back(p.a + e.to);
    adj[p.a + e.to].push_back(e.from);
  }
  for (const Edge& e : p.bc) {
    adj[p.a + e.from].push_back(p.a + p.b + e.to);
    adj[p.a + p.b + e.to].push_back(p.a + e.from);
  }
  std::vector<int> dist(n, -1);
  std::vector<std::size_t> queue{p.a + p.b + c};
  dist[queue[0]] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t w : adj[queue[head]])
      if (dist[w] < 0) {
        dist[w] = dist[queue[head]] + 1;
        queue.push_back(w);
      }
  std::set<std::size_t> out;
  for (std::size_t v = 0; v < p.a; ++v)
    if (dist[v] == 2) out.insert(v);
  return out;
}

inline Rational naive_max_reach(const Plain& p) {
  Rational best(-1);
  for (std::size_t c = 0; c < p.c; ++c) {
    Rational total;
    for (std::size_t a : distance_two_a(p, c)) total += p.wa[a];
    best = max(best, total);
  }
  return best;
}

inline bool naive_verify(const Plain& p, const Rational& x, const Rational& y, Mode mode) {
  std::vector<Rational> a_deg(p.a), b_deg_c(p.b), b_deg_a(p.b), c_deg(p.c);
  for (const Edge& e : p.ab) {
    a_deg[e.from] += p.wb[e.to];
    b_deg_a[e.to] += p.wa[e.from];
  }
  for (const Edge& e : p.bc) {
    b_deg_c[e.from] += p.wc[e.to];
    c_deg[e.to] += p.wb[e.from];
  }
  for (const auto& d : a_deg)
    if (d < x) return false;
  for (const auto& d : b_deg_c)
    if (d < y) return false;
  if (mode == Mode::biconstrained) {
    for (const auto& d : b_deg_a)
      if (d < x) return false;
    for (const auto& d : c_deg)
      if (d < y) return false;
  }
  return true;
}

inline bool naive_certify(const Witness& w) {
  const Plain p = plain(w.graph);
  if (!naive_verify(p, w.claim.x, w.claim.y, w.claim.mode())) return false;
  const Rational r = naive_max_reach(p);
  return w.claim.strict ? r < w.claim.z : r <= w.claim.z;
}

// Positive weights with denominators dividing `den`, summing to one.
inline std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t n, long den) {
  // Split den units into n positive parts.
  std::vector<long> units(n, 1);
  for (long left = den - static_cast<long>(n); left > 0; --left) ++units[rng() % n];
  std::vector<Rational> out;
  for (long u : units) out.emplace_back(u, den);
  return out;
}

inline WeightedTripartite random_weighted(std::mt19937_64& rng, std::size_t max_part, long max_den, int density) {
  const std::size_t a = 1 + rng() % max_part, b = 1 + rng() % max_part, c = 1 + rng() % max_part;
  std::vector<Edge> ab, bc;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (static_cast<int>(rng() % 100) < density) ab.push_back({i, j});
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t k = 0; k < c; ++k)
      if (static_cast<int>(rng() % 100) < density) bc.push_back({j, k});
  auto den = [&](std::size_t n) { return static_cast<long>(n) + static_cast<long>(rng() % (max_den - n + 1)); };
  return WeightedTripartite(Tripartition(a, b, c, ab, bc), random_weights(rng, a, den(a)),
                            random_weights(rng, b, den(b)), random_weights(rng, c, den(c)));
}

}  // namespace phipsi::testing
