#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "phipsi/regions.hpp"

using namespace phipsi;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

const TheoremPredicate& predicate(const std::string& id) {
  for (const auto& p : predicate_catalog())
    if (p.id == id) return p;
  throw std::out_of_range(id);
}

bool has(const std::vector<Finding>& facts, const std::string& label, Relation relation, const Rational& level) {
  return std::any_of(facts.begin(), facts.end(), [&](const Finding& f) {
    return f.label() == label && f.conclusion.relation == relation && f.conclusion.level == level;
  });
}

// Hypotheses with denominators cleared, on x = i/n, y = j/n in plain integers.
using Ref = std::function<bool(long long i, long long j, long long n)>;

const std::vector<std::pair<std::string, Ref>>& references() {
  static const std::vector<std::pair<std::string, Ref>> refs{
      {"3/4ub1", [](auto i, auto j, auto n) { return 3 * j > n && 2 * i >= n && 2 * j * n - 2 * j * j > n * n - i * n; }},
      {"3/4ub4", [](auto i, auto j, auto n) { return 4 * i >= n && 3 * j > 2 * n; }},
      {"edgecounting",
       [](auto i, auto j, auto n) {
         return 2 * j > n && 3 * j < 2 * n && (2 * n - 3 * j) * (2 * j - n) > n * (n - i - j);
       }},
      {"3/4from5.7",
       [](auto i, auto j, auto n) { return 2 * j > n && 16 * i * i * j >= (3 * n - 4 * i) * (3 * n - 4 * i) * n; }},
      {"3/4phiub",
       [](auto i, auto j, auto n) { return 3 * j < n && i * (n * n + j * n - 3 * j * j) > (n - j) * n * n; }},
      {"3/4philb",
       [](auto i, auto j, auto n) {
         return i < n && 3 * j < n && i * (n - 3 * j) + j * (n - i) <= 3 * (n - i) * (n - 3 * j);
       }},
      {"2/3phiub",
       [](auto i, auto j, auto n) { return 2 * j <= n && i * (n * n - 2 * j * j) > (n - j) * (n - j) * n; }},
      {"2/3philb",
       [](auto i, auto j, auto n) {
         return i < n && 2 * j < n && i * (n - 2 * j) + j * (n - i) <= 2 * (n - i) * (n - 2 * j);
       }},
      {"2/5psiub1",
       [](auto i, auto j, auto n) { return 5 * i >= n && 3 * j > n && 3 * j * n - 2 * j * j > n * n - i * n; }},
      {"2/5phiub1",
       [](auto i, auto j, auto n) { return 12 * i * i * j >= 5 * (n - i - j) * (n - i - j) * n; }},
      {"2/5phiub2",
       [](auto i, auto j, auto n) {
         const auto d = 5 * n - 11 * j;
         return 3 * i > n && (d <= 0 || d * d <= 3 * n * n);
       }},
      {"2/5psilb",
       [](auto i, auto j, auto n) {
         return (5 * i + 2 * j <= 2 * n && 3 * i >= n) || (2 * i + 5 * j <= 2 * n && 3 * j >= n);
       }},
      {"2/5philb",
       [](auto i, auto j, auto n) {
         return 2 * i < n && 3 * j < n && i * (n - 3 * j) + j * (n - 2 * i) <= 2 * (n - 2 * i) * (n - 3 * j);
       }},
      {"3/5psiub2", [](auto i, auto j, auto n) { return 2 * i > n && i + 2 * j > n; }},
      {"3/5phiub1",
       [](auto i, auto j, auto n) { return 2 * j > n && 40 * i * i * j >= (3 * n - 5 * i) * (3 * n - 5 * i) * n; }},
      {"3/5psilb",
       [](auto i, auto j, auto n) {
         return (7 * j >= n && 6 * j <= n && i + 3 * j <= n) || (7 * i >= n && 6 * i <= n && 3 * i + j <= n);
       }},
      {"3/5philb",
       [](auto i, auto j, auto n) {
         return 3 * j < n && 3 * i < 2 * n &&
                (n - i) * (n - 3 * j) + j * (2 * n - 3 * i) <= 2 * (2 * n - 3 * i) * (n - 3 * j);
       }},
  };
  return refs;
}

// Largest k with kx, ky < 1 and x/(1-kx) + y/(1-ky) <= 1, or 0.
long long reference_kphilb(long long i, long long j, long long n, int k_max) {
  long long best = 0;
  for (long long k = 1; k <= k_max && k * i < n && k * j < n; ++k)
    if (i * (n - k * j) + j * (n - k * i) <= (n - k * i) * (n - k * j)) best = k;
  return best;
}

}  // namespace

TEST_CASE("catalog has thirty unique entries") {
  const auto& catalog = predicate_catalog();
  CHECK(catalog.size() == 30);
  std::set<std::string> ids;
  for (const auto& p : catalog) ids.insert(p.id);
  CHECK(ids.size() == catalog.size());
  std::size_t at34 = 0, at25 = 0, at35 = 0;
  for (const auto& p : catalog) {
    if (p.level == r(3, 4)) ++at34;
    if (p.level == r(2, 5)) ++at25;
    if (p.level == r(3, 5)) ++at35;
  }
  CHECK(at34 == 10);
  CHECK(at25 == 6);
  CHECK(at35 == 5);
}

TEST_CASE("every predicate evaluates at (1/2,1/2) and on the grid edges") {
  for (const auto& p : predicate_catalog())
    for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
             {r(1, 2), r(1, 2)}, {r(1), r(1)}, {r(1), r(1, 3)}, {r(1, 3), r(1)}, {r(1, 2), r(1, 3)}, {r(2, 3), r(1, 2)}}) {
      CHECK_NOTHROW(p.holds(x, y));
      for (const auto& c : p.evaluate(x, y, {})) {
        CHECK(c.function == p.function);
        if (p.level) CHECK(c.level == *p.level);
      }
    }
}

TEST_CASE("predicates agree with integer reference forms") {
  for (long long n : {7LL, 12LL, 30LL, 60LL, 97LL})
    for (long long i = 1; i <= n; ++i)
      for (long long j = 1; j <= n; ++j) {
        const Rational x(static_cast<long>(i), static_cast<long>(n)), y(static_cast<long>(j), static_cast<long>(n));
        for (const auto& [id, ref] : references()) {
          const bool got = predicate(id).holds(x, y);
          if (got != ref(i, j, n)) FAIL_CHECK(id << " at " << x << "," << y);
        }
        const auto k = reference_kphilb(i, j, n, 100);
        const auto found = predicate("1/kphilb").evaluate(x, y, {});
        if (k == 0) {
          CHECK(found.empty());
        } else {
          REQUIRE(found.size() == 1);
          CHECK(found[0].level == Rational(1, static_cast<long>(k) + 1));
        }
      }
}

TEST_CASE("point evaluation examples") {
  const auto a = evaluate_point(r(1, 2), r(2, 5));
  CHECK(has(a.psi, "2/5psiub1", Relation::at_least, r(2, 5)));
  CHECK(a.contradictions.empty());

  const auto b = evaluate_point(r(1, 3), r(1, 6));
  CHECK(has(b.psi, "2/5psilb", Relation::below, r(2, 5)));
  CHECK(has(b.phi, "2/5psilb->phi", Relation::below, r(2, 5)));
  CHECK(b.verdict(Function::phi, r(2, 5)).verdict == Verdict::below);
  CHECK(b.contradictions.empty());

  const auto c = evaluate_point(r(1, 100), r(1, 100));
  CHECK(has(c.phi, "maxbound", Relation::at_least, r(1, 100)));
  CHECK(has(c.psi, "trivialbounds", Relation::at_most, r(1, 100)));
  CHECK(has(c.phi, "trivialbounds->phi", Relation::at_most, r(1, 100)));
  CHECK(c.contradictions.empty());
}

TEST_CASE("phi facts move across the diagonal, psi facts do not") {
  // 3/4phiub holds at (9/10, 1/10) and so phi(1/10, 9/10) >= 3/4 as well.
  const auto v = evaluate_point(r(1, 10), r(9, 10));
  CHECK(has(v.phi, "3/4phiub@swap", Relation::at_least, r(3, 4)));
  CHECK(has(v.psi, "3/4phiub@swap->psi", Relation::at_least, r(3, 4)));
  // 3/5psiub2 at (9/10, 1/10) says nothing about psi(1/10, 9/10).
  CHECK_FALSE(std::any_of(v.psi.begin(), v.psi.end(), [](const Finding& f) { return f.id == "3/5psiub2"; }));
}

TEST_CASE("contradiction detection") {
  const Finding lo{"lo", {Function::psi, Relation::at_least, r(3, 4)}};
  const Finding below_same{"hi", {Function::psi, Relation::below, r(3, 4)}};
  const Finding at_most_same{"hi", {Function::psi, Relation::at_most, r(3, 4)}};
  CHECK(assemble_point(r(1, 2), r(1, 3), {lo, below_same}, {}).contradictions.size() == 1);
  CHECK(assemble_point(r(1, 2), r(1, 3), {lo, at_most_same}, {}).contradictions.empty());
  const Finding phi_lo{"lo", {Function::phi, Relation::at_least, r(1, 2)}};
  const Finding phi_hi{"hi", {Function::phi, Relation::below, r(1, 2)}};
  const auto v = assemble_point(r(1, 2), r(1, 3), {phi_lo}, {phi_hi});
  REQUIRE(v.contradictions.size() == 1);
  CHECK(v.contradictions[0].describe() == "phi >= 1/2 [lo] vs phi < 1/2 [hi@swap]");
}

TEST_CASE("verdicts") {
  const auto v = evaluate_point(r(9, 10), r(9, 10));
  CHECK(v.verdict(Function::psi, r(3, 4)).verdict == Verdict::at_least);
  CHECK(v.verdict(Function::phi, r(3, 4)).verdict == Verdict::at_least);
  const auto u = evaluate_point(r(1, 5), r(1, 5));
  CHECK(u.verdict(Function::phi, r(3, 4)).verdict == Verdict::below);
  CHECK_FALSE(u.verdict(Function::phi, r(3, 4)).sources.empty());
}

TEST_CASE("suspect 3/4ub3 branch can be switched off") {
  const auto& p = predicate("3/4ub3");
  int differ = 0;
  for (long i = 1; i <= 60; ++i)
    for (long j = 1; j <= 60; ++j) {
      const Rational x(i, 60), y(j, 60);
      RegionOptions off;
      off.use_suspect_3_4ub3 = false;
      const bool with = p.holds(x, y), without = p.holds(x, y, off);
      CHECK((with || !without));
      differ += with != without;
    }
  CHECK(differ > 0);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(evaluate_point(r(0), r(1, 2)), std::domain_error);
  CHECK_THROWS_AS(evaluate_point(r(1, 2), r(3, 2)), std::domain_error);
  CHECK_NOTHROW(evaluate_point(r(1), r(1)));
}

TEST_CASE("phi verdicts are symmetric on a grid") {
  for (long i = 1; i <= 40; ++i)
    for (long j = 1; j < i; ++j) {
      const auto v = evaluate_point(Rational(i, 40), Rational(j, 40));
      const auto w = evaluate_point(Rational(j, 40), Rational(i, 40));
      CHECK(v.contradictions.empty());
      for (const Rational& level : scan_levels())
        CHECK(v.verdict(Function::phi, level).verdict == w.verdict(Function::phi, level).verdict);
    }
}
