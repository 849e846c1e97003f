#include "phipsi/regions.hpp"

#include <algorithm>
#include <set>

namespace phipsi {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::at_least: return ">=";
    case Relation::below: return "<";
    case Relation::at_most: return "<=";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::at_least: return "at_least";
    case Verdict::below: return "below";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

using R = Rational;
using Conclusions = std::vector<Conclusion>;

const R one(1);
const R two(2);
const R three(3);

Conclusions when(bool hypothesis, Function f, Relation rel, const R& level) {
  if (!hypothesis) return {};
  return {Conclusion{f, rel, level}};
}

TheoremPredicate fixed(std::string id, Function f, Relation rel, R level, std::string statement,
                       std::function<bool(const R&, const R&, const RegionOptions&)> hypothesis) {
  TheoremPredicate p{std::move(id), f, rel, level, std::move(statement), {}};
  p.evaluate = [f, rel, level, hypothesis = std::move(hypothesis)](const R& x, const R& y, const RegionOptions& o) {
    return when(hypothesis(x, y, o), f, rel, level);
  };
  return p;
}

// Every way the 5.7 inequality can be cashed in at a level the scan cares about.
const std::vector<R>& levels_5_7() {
  static const std::vector<R> levels{R(1, 3), R(2, 5), R(1, 2), R(3, 5), R(2, 3), R(3, 4)};
  return levels;
}

std::vector<TheoremPredicate> build_catalog() {
  const Function phi = Function::phi, psi = Function::psi;
  const Relation ge = Relation::at_least, lt = Relation::below;
  std::vector<TheoremPredicate> c;

  // General results.
  c.push_back({"maxbound", phi, ge, std::nullopt, "phi(x,y) >= max(x,y)",
               [](const R& x, const R& y, const RegionOptions&) {
                 return Conclusions{{Function::phi, Relation::at_least, max(x, y)}};
               }});
  c.push_back({"cayleybound", phi, Relation::at_most, std::nullopt, "phi(x,y) <= (ceil(kx)+ceil(ky)-1)/k",
               [](const R& x, const R& y, const RegionOptions& o) {
                 return Conclusions{{Function::phi, Relation::at_most, cayley_bound(x, y, o.k_max)}};
               }});
  c.push_back({"trivialbounds", psi, ge, std::nullopt, "max(x,y) <= psi(x,y) <= (ceil(kx)+ceil(ky)-1)/k",
               [](const R& x, const R& y, const RegionOptions& o) {
                 return Conclusions{{Function::psi, Relation::at_least, max(x, y)},
                                    {Function::psi, Relation::at_most, cayley_bound(x, y, o.k_max)}};
               }});
  c.push_back({"intk", phi, ge, std::nullopt, "max(x,y) = 1/k implies phi(x,y) = 1/k",
               [](const R& x, const R& y, const RegionOptions& o) {
                 const R m = max(x, y);
                 const R inv = m.reciprocal();
                 if (!inv.is_integer() || inv > R(o.k_max)) return Conclusions{};
                 return Conclusions{{Function::phi, Relation::at_least, m}, {Function::phi, Relation::at_most, m}};
               }});
  c.push_back({"5.7", phi, ge, std::nullopt, "y > 1/2 and 4x^2y(1-z) >= (z-x)^2 implies phi(x,y) >= z",
               [](const R& x, const R& y, const RegionOptions&) {
                 if (y <= R(1, 2)) return Conclusions{};
                 std::optional<R> best;
                 for (const R& z : levels_5_7()) {
                   const R gap = z - x;
                   if (R(4) * x * x * y * (one - z) >= gap * gap) best = z;
                 }
                 if (!best) return Conclusions{};
                 return Conclusions{{Function::phi, Relation::at_least, *best}};
               }});
  c.push_back(fixed("2/3psilb", psi, lt, R(2, 3), "three bullets, psi(x,y) < 2/3",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return (R(1, 2) <= y && y <= R(3, 5) && two * x + y <= one) ||
                             (R(3, 5) <= y && x + three * y <= two) ||
                             (R(4, 7) <= x && x <= R(11, 17) && x + three * y <= one);
                    }));
  c.push_back(fixed("2/3philb", phi, lt, R(2, 3), "y <= 1/2 and x/(1-x) + y/(1-2y) <= 2",
                    [](const R& x, const R& y, const RegionOptions&) {
                      if (x >= one || y >= R(1, 2)) return false;
                      return x / (one - x) + y / (one - two * y) <= two;
                    }));
  c.push_back({"1/kphilb", phi, lt, std::nullopt, "x/(1-kx) + y/(1-ky) <= 1 implies phi(x,y) < 1/(k+1)",
               [](const R& x, const R& y, const RegionOptions& o) {
                 std::optional<int> best;
                 for (int k = 1; k <= o.k_max; ++k) {
                   const R kr(k);
                   if (kr * x >= one || kr * y >= one) break;
                   if (x / (one - kr * x) + y / (one - kr * y) <= one) best = k;
                 }
                 if (!best) return Conclusions{};
                 return Conclusions{{Function::phi, Relation::below, R(1L, *best + 1L)}};
               }});
  c.push_back(fixed("2/3phiub", phi, ge, R(2, 3), "y <= 1/2 and x > (1-y)^2/(1-2y^2)",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return y <= R(1, 2) && x * (one - two * y * y) > (one - y) * (one - y);
                    }));

  // Level 3/4.
  const R l34(3, 4);
  c.push_back(fixed("3/4ub1", psi, ge, l34, "y > 1/3, x >= 1/2, 2y-2y^2 > 1-x",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return y > R(1, 3) && x >= R(1, 2) && two * y - two * y * y > one - x;
                    }));
  c.push_back(fixed("3/4ub2", psi, ge, l34,
                    "x > 2/3, x+2y > 1, x+y/(4(1-2y)) >= 3/4, and y(5-6y)/(3(1-y)) >= 1-x or x+y/(4(1-y)) >= 3/4",
                    [](const R& x, const R& y, const RegionOptions&) {
                      if (!(x > R(2, 3) && x + two * y > one && y < R(1, 2))) return false;
                      if (x + y / (R(4) * (one - two * y)) < R(3, 4)) return false;
                      return y * (R(5) - R(6) * y) / (three * (one - y)) >= one - x ||
                             x + y / (R(4) * (one - y)) >= R(3, 4);
                    }));
  c.push_back(fixed("3/4ub3", psi, ge, l34,
                    "y > 1/2, x > 1/3, 3y+x > 2, and (3x-1)/(8-12y)+x >= 1/2 or x >= (3-4y)/(4-4y)",
                    [](const R& x, const R& y, const RegionOptions& o) {
                      if (!(y > R(1, 2) && x > R(1, 3) && three * y + x > two)) return false;
                      const bool suspect = o.use_suspect_3_4ub3 && y < R(2, 3) &&
                                           (three * x - one) / (R(8) - R(12) * y) + x >= R(1, 2);
                      const bool alternative = y < one && x >= (three - R(4) * y) / (R(4) - R(4) * y);
                      return suspect || alternative;
                    }));
  c.push_back(fixed("edgecounting", psi, ge, l34, "1/2 < y < 2/3 and (2-3y)(2y-1) > 1-x-y",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return R(1, 2) < y && y < R(2, 3) && (two - three * y) * (two * y - one) > one - x - y;
                    }));
  c.push_back(fixed("3/4ub4", psi, ge, l34, "x >= 1/4 and y > 2/3",
                    [](const R& x, const R& y, const RegionOptions&) { return x >= R(1, 4) && y > R(2, 3); }));
  c.push_back(fixed("3/4ub5", psi, ge, l34, "2y+x-1 > 1-y+max(1-y, 1-x/(1-y))",
                    [](const R& x, const R& y, const RegionOptions&) {
                      const R slack = one - y;
                      // 1 - x/(1-y) falls to -infinity as y -> 1, leaving the 1-y branch.
                      const R tail = slack.is_zero() ? slack : max(slack, one - x / slack);
                      return two * y + x - one > slack + tail;
                    }));
  c.push_back(fixed("3/4from5.7", phi, ge, l34, "y > 1/2 and 16x^2y >= (3-4x)^2",
                    [](const R& x, const R& y, const RegionOptions&) {
                      const R d = three - R(4) * x;
                      return y > R(1, 2) && R(16) * x * x * y >= d * d;
                    }));
  c.push_back(fixed("3/4phiub", phi, ge, l34, "y < 1/3 and x > (1-y)/(1+y-3y^2)",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return y < R(1, 3) && x * (one + y - three * y * y) > one - y;
                    }));
  c.push_back(fixed("3/4psilb", psi, lt, l34, "four bullets, psi(x,y) < 3/4",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return (R(1, 7) <= y && y <= R(1, 6) && x + two * y <= one) ||
                             (R(1, 7) <= x && x <= R(1, 6) && two * x + y <= one) ||
                             (x <= R(1, 7) && x + R(4) * y <= three) ||
                             // Empty as printed: 5/7 > 13/19.
                             (R(5, 7) <= x && x <= R(13, 19) && x + three * y <= one);
                    }));
  c.push_back(fixed("3/4philb", phi, lt, l34, "y <= 1/3 and x/(1-x) + y/(1-3y) <= 3",
                    [](const R& x, const R& y, const RegionOptions&) {
                      if (x >= one || y >= R(1, 3)) return false;
                      return x / (one - x) + y / (one - three * y) <= three;
                    }));

  // Level 2/5.
  const R l25(2, 5);
  c.push_back(fixed("2/5psiub1", psi, ge, l25, "x >= 1/5, y > 1/3, 3y-2y^2 > 1-x",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return x >= R(1, 5) && y > R(1, 3) && three * y - two * y * y > one - x;
                    }));
  c.push_back(fixed("2/5psiub2", psi, ge, l25, "x > 1/3, x+3y > 1, and y >= 1/4 or x+y/(10(1-2y)) >= 2/5",
                    [](const R& x, const R& y, const RegionOptions&) {
                      if (!(x > R(1, 3) && x + three * y > one)) return false;
                      return y >= R(1, 4) || x + y / (R(10) * (one - two * y)) >= R(2, 5);
                    }));
  c.push_back(fixed("2/5phiub1", phi, ge, l25, "12x^2y >= 5(1-x-y)^2",
                    [](const R& x, const R& y, const RegionOptions&) {
                      const R d = one - x - y;
                      return R(12) * x * x * y >= R(5) * d * d;
                    }));
  c.push_back(fixed("2/5phiub2", phi, ge, l25, "x > 1/3 and y >= (5-sqrt(3))/11",
                    [](const R& x, const R& y, const RegionOptions&) {
                      if (x <= R(1, 3)) return false;
                      // y >= (5 - sqrt 3)/11  <=>  5 - 11y <= sqrt 3
                      const R d = R(5) - R(11) * y;
                      return d.sign() <= 0 || d * d <= three;
                    }));
  c.push_back(fixed("2/5psilb", psi, lt, l25, "5x/2+y <= 1 and x >= 1/3, or x+5y/2 <= 1 and y >= 1/3",
                    [](const R& x, const R& y, const RegionOptions&) {
                      const R half5(5, 2);
                      return (half5 * x + y <= one && x >= R(1, 3)) || (x + half5 * y <= one && y >= R(1, 3));
                    }));
  c.push_back(fixed("2/5philb", phi, lt, l25, "y <= 1/3 and x/(1-2x) + y/(1-3y) <= 2",
                    [](const R& x, const R& y, const RegionOptions&) {
                      if (x >= R(1, 2) || y >= R(1, 3)) return false;
                      return x / (one - two * x) + y / (one - three * y) <= two;
                    }));

  // Level 3/5.
  const R l35(3, 5);
  c.push_back(fixed("3/5psiub1", psi, ge, l35, "y > 1/2, x >= 1/5, 2y - y^2(3-5x)/(3(1-x)) > 1-x",
                    [](const R& x, const R& y, const RegionOptions&) {
                      if (!(y > R(1, 2) && x >= R(1, 5) && x < one)) return false;
                      return two * y - y * y * (three - R(5) * x) / (three * (one - x)) > one - x;
                    }));
  c.push_back(fixed("3/5psiub2", psi, ge, l35, "x > 1/2 and x+2y > 1",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return x > R(1, 2) && x + two * y > one;
                    }));
  c.push_back(fixed("3/5phiub1", phi, ge, l35, "y > 1/2 and 40x^2y >= (3-5x)^2",
                    [](const R& x, const R& y, const RegionOptions&) {
                      const R d = three - R(5) * x;
                      return y > R(1, 2) && R(40) * x * x * y >= d * d;
                    }));
  c.push_back(fixed("3/5psilb", psi, lt, l35, "two bullets, psi(x,y) < 3/5",
                    [](const R& x, const R& y, const RegionOptions&) {
                      return (R(1, 7) <= y && y <= R(1, 6) && x + three * y <= one) ||
                             (R(1, 7) <= x && x <= R(1, 6) && three * x + y <= one);
                    }));
  c.push_back(fixed("3/5philb", phi, lt, l35, "y < 1/3 and (1-x)/(2-3x) + y/(1-3y) <= 2",
                    [](const R& x, const R& y, const RegionOptions&) {
                      // Past x = 2/3 the first term changes sign and the inequality
                      // stops meaning anything.
                      if (y >= R(1, 3) || x >= R(2, 3)) return false;
                      return (one - x) / (two - three * x) + y / (one - three * y) <= two;
                    }));
  return c;
}

bool is_upper(Relation r) { return r != Relation::at_least; }

Finding lift(Finding f, Function to) {
  f.conclusion.function = to;
  f.lifted = true;
  return f;
}

// lower >= a and upper < b (or <= b) clash when a >= b (or a > b).
bool clash(const Conclusion& lower, const Conclusion& upper) {
  return upper.relation == Relation::below ? lower.level >= upper.level : lower.level > upper.level;
}

}  // namespace

const std::vector<TheoremPredicate>& predicate_catalog() {
  static const std::vector<TheoremPredicate> catalog = build_catalog();
  return catalog;
}

std::string Finding::label() const {
  std::string out = id;
  if (swapped) out += "@swap";
  if (lifted) out += conclusion.function == Function::psi ? "->psi" : "->phi";
  return out;
}

std::string Contradiction::describe() const {
  const auto side = [&](const Finding& f) {
    return to_string(function) + " " + to_string(f.conclusion.relation) + " " + f.conclusion.level.str() + " [" +
           f.label() + "]";
  };
  return side(lower) + " vs " + side(upper);
}

std::vector<Finding> evaluate_raw(const Rational& x, const Rational& y, const RegionOptions& options) {
  std::vector<Finding> out;
  for (const auto& p : predicate_catalog())
    for (auto& conclusion : p.evaluate(x, y, options)) out.push_back({p.id, std::move(conclusion)});
  return out;
}

PointVerdict assemble_point(const Rational& x, const Rational& y, const std::vector<Finding>& at_xy,
                            const std::vector<Finding>& at_yx) {
  PointVerdict v{x, y, at_xy, {}, {}, {}};
  const bool diagonal = x == y;
  auto sources = [&](auto&& visit) {
    for (const Finding& f : at_xy) visit(f);
    if (!diagonal)
      for (Finding f : at_yx) {
        f.swapped = true;
        visit(f);
      }
  };
  sources([&](const Finding& f) {
    const auto& c = f.conclusion;
    if (c.function == Function::phi) {
      // phi is symmetric, so phi facts at (y, x) transfer; psi facts do not.
      v.phi.push_back(f);
      if (c.relation == Relation::at_least) v.psi.push_back(lift(f, Function::psi));
    } else if (!f.swapped) {
      v.psi.push_back(f);
      if (is_upper(c.relation)) v.phi.push_back(lift(f, Function::phi));
    } else if (is_upper(c.relation)) {
      // psi(y,x) <= z bounds phi(y,x) = phi(x,y).
      v.phi.push_back(lift(f, Function::phi));
    }
  });

  for (const auto* facts : {&v.phi, &v.psi}) {
    const Function fn = facts == &v.phi ? Function::phi : Function::psi;
    for (const Finding& lo : *facts) {
      if (lo.conclusion.relation != Relation::at_least) continue;
      for (const Finding& hi : *facts)
        if (is_upper(hi.conclusion.relation) && clash(lo.conclusion, hi.conclusion))
          v.contradictions.push_back({fn, lo, hi});
    }
  }
  return v;
}

LevelVerdict PointVerdict::verdict(Function f, const Rational& level) const {
  const auto& facts = f == Function::phi ? phi : psi;
  LevelVerdict lower, upper;
  for (const Finding& finding : facts) {
    const auto& c = finding.conclusion;
    if (c.relation == Relation::at_least) {
      if (c.level >= level) lower.sources.push_back(finding.label());
    } else if (c.relation == Relation::below ? c.level <= level : c.level < level) {
      upper.sources.push_back(finding.label());
    }
  }
  // A point with both is a contradiction and already reported as such; the
  // lower bound wins here so the verdict stays a single value.
  if (!lower.sources.empty()) {
    lower.verdict = Verdict::at_least;
    return lower;
  }
  if (!upper.sources.empty()) upper.verdict = Verdict::below;
  return upper;
}

PointVerdict evaluate_point(const Rational& x, const Rational& y, const RegionOptions& options) {
  if (!in_unit_interval(x) || !in_unit_interval(y))
    throw std::domain_error("point must lie in (0,1]^2, got (" + x.str() + "," + y.str() + ")");
  const auto at_xy = evaluate_raw(x, y, options);
  const auto at_yx = x == y ? std::vector<Finding>{} : evaluate_raw(y, x, options);
  return assemble_point(x, y, at_xy, at_yx);
}

}  // namespace phipsi
