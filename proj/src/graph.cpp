#include "phipsi/graph.hpp"

#include <algorithm>
#include <numeric>

namespace phipsi {

std::string to_string(Part part) {
  switch (part) {
    case Part::A: return "A";
    case Part::B: return "B";
    case Part::C: return "C";
  }
  return "?";
}

std::string to_string(Mode mode) { return mode == Mode::constrained ? "constrained" : "biconstrained"; }

std::string to_string(LemmaOutcome outcome) {
  switch (outcome) {
    case LemmaOutcome::not_applicable: return "not_applicable";
    case LemmaOutcome::holds: return "holds";
    case LemmaOutcome::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

Tripartition::Tripartition(std::size_t a_size, std::size_t b_size, std::size_t c_size, std::span<const Edge> ab,
                           std::span<const Edge> bc) {
  if (a_size == 0 || b_size == 0 || c_size == 0) throw std::invalid_argument("tripartition parts must be nonempty");
  b_of_a_.assign(a_size, Bitset(b_size));
  a_of_b_.assign(b_size, Bitset(a_size));
  c_of_b_.assign(b_size, Bitset(c_size));
  b_of_c_.assign(c_size, Bitset(b_size));
  for (const Edge& e : ab) {
    if (e.from >= a_size || e.to >= b_size)
      throw std::invalid_argument("ab edge " + std::to_string(e.from) + " " + std::to_string(e.to) + " out of range");
    b_of_a_[e.from].set(e.to);
    a_of_b_[e.to].set(e.from);
  }
  for (const Edge& e : bc) {
    if (e.from >= b_size || e.to >= c_size)
      throw std::invalid_argument("bc edge " + std::to_string(e.from) + " " + std::to_string(e.to) + " out of range");
    c_of_b_[e.from].set(e.to);
    b_of_c_[e.to].set(e.from);
  }
}

std::size_t Tripartition::size(Part part) const {
  switch (part) {
    case Part::A: return a_size();
    case Part::B: return b_size();
    case Part::C: return c_size();
  }
  return 0;
}

namespace {

std::vector<Edge> edges_of(const std::vector<Bitset>& rows) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto j = rows[i].find_first(); j != Bitset::npos; j = rows[i].find_next(j)) out.push_back({i, j});
  return out;
}

}  // namespace

std::vector<Edge> Tripartition::ab_edges() const { return edges_of(b_of_a_); }
std::vector<Edge> Tripartition::bc_edges() const { return edges_of(c_of_b_); }

Bitset Tripartition::a_neighbourhood(const Bitset& b_subset) const {
  Bitset out(a_size());
  for (auto b = b_subset.find_first(); b != Bitset::npos; b = b_subset.find_next(b)) out |= a_of_b_[b];
  return out;
}

Bitset Tripartition::second_neighbourhood(std::size_t c) const { return a_neighbourhood(b_of_c_.at(c)); }

WeightedTripartite::WeightedTripartite(Tripartition structure, std::vector<Rational> weights_a,
                                       std::vector<Rational> weights_b, std::vector<Rational> weights_c)
    : structure_(std::move(structure)),
      weights_a_(std::move(weights_a)),
      weights_b_(std::move(weights_b)),
      weights_c_(std::move(weights_c)) {
  for (Part part : {Part::A, Part::B, Part::C}) {
    const auto& w = weights(part);
    if (w.size() != structure_.size(part))
      throw std::invalid_argument("part " + to_string(part) + " has " + std::to_string(structure_.size(part)) +
                                  " vertices but " + std::to_string(w.size()) + " weights");
    Rational total;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].sign() <= 0)
        throw std::invalid_argument("non-positive weight " + w[i].str() + " at " + to_string(part) +
                                    std::to_string(i));
      total += w[i];
    }
    if (total != Rational(1))
      throw std::invalid_argument("weights of part " + to_string(part) + " sum to " + total.str());
  }
}

WeightedTripartite WeightedTripartite::uniform(Tripartition structure) {
  auto make = [](std::size_t n) { return std::vector<Rational>(n, Rational(1L, static_cast<long>(n))); };
  auto a = make(structure.a_size()), b = make(structure.b_size()), c = make(structure.c_size());
  return WeightedTripartite(std::move(structure), std::move(a), std::move(b), std::move(c));
}

const std::vector<Rational>& WeightedTripartite::weights(Part part) const {
  switch (part) {
    case Part::A: return weights_a_;
    case Part::B: return weights_b_;
    case Part::C: return weights_c_;
  }
  throw std::logic_error("bad part");
}

Rational WeightedTripartite::weight_of(Part part, const Bitset& subset) const {
  const auto& w = weights(part);
  Rational total;
  for (auto i = subset.find_first(); i != Bitset::npos; i = subset.find_next(i)) total += w.at(i);
  return total;
}

void ConstraintParams::validate() const {
  if (!in_unit_interval(x) || !in_unit_interval(y))
    throw std::domain_error("constraint parameters must lie in (0,1], got x=" + x.str() + " y=" + y.str());
}

std::string Violation::describe() const {
  return to_string(part) + std::to_string(index) + " has weighted " + to_string(toward) + "-degree " +
         weighted_degree.str() + " < " + required.str();
}

VerificationReport verify(const WeightedTripartite& g, const ConstraintParams& params) {
  params.validate();
  const Tripartition& t = g.structure();

  struct Check {
    Part part, toward;
    const Rational* required;
  };
  std::vector<Check> checks{{Part::A, Part::B, &params.x}, {Part::B, Part::C, &params.y}};
  if (params.mode == Mode::biconstrained) {
    checks.push_back({Part::B, Part::A, &params.x});
    checks.push_back({Part::C, Part::B, &params.y});
  }

  for (const Check& check : checks) {
    for (std::size_t v = 0; v < t.size(check.part); ++v) {
      const Bitset* row = nullptr;
      if (check.part == Part::A) row = &t.b_of_a(v);
      else if (check.part == Part::C) row = &t.b_of_c(v);
      else row = check.toward == Part::C ? &t.c_of_b(v) : &t.a_of_b(v);
      Rational degree = g.weight_of(check.toward, *row);
      if (degree < *check.required)
        return {false, Violation{check.part, v, check.toward, std::move(degree), *check.required}};
    }
  }
  return {};
}

std::vector<std::size_t> second_neighborhood(const WeightedTripartite& g, std::size_t c) {
  if (c >= g.structure().c_size()) throw std::out_of_range("C-index " + std::to_string(c) + " out of range");
  const Bitset reach = g.structure().second_neighbourhood(c);
  std::vector<std::size_t> out;
  for (auto a = reach.find_first(); a != Bitset::npos; a = reach.find_next(a)) out.push_back(a);
  return out;
}

Reach max_reach(const WeightedTripartite& g) {
  Reach best{Rational(-1), 0};
  for (std::size_t c = 0; c < g.structure().c_size(); ++c) {
    Rational value = g.weight_of(Part::A, g.structure().second_neighbourhood(c));
    if (value > best.value) best = {std::move(value), c};
  }
  return best;
}

namespace {

mpz_class denominator_lcm(const std::vector<Rational>& weights) {
  mpz_class l = 1;
  for (const auto& w : weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.denominator().get_mpz_t());
  return l;
}

}  // namespace

std::array<mpz_class, 3> blow_up_sizes(const WeightedTripartite& g) {
  // Weights in a part sum to one, so the copy counts sum to the lcm itself.
  return {denominator_lcm(g.weights(Part::A)), denominator_lcm(g.weights(Part::B)),
          denominator_lcm(g.weights(Part::C))};
}

BlowUp blow_up(const WeightedTripartite& g, std::size_t max_part_size) {
  const auto sizes = blow_up_sizes(g);
  std::array<std::size_t, 3> scale{};
  std::array<std::vector<std::size_t>, 3> origin;
  std::array<std::vector<std::vector<std::size_t>>, 3> copies;
  const std::array<Part, 3> parts{Part::A, Part::B, Part::C};
  for (std::size_t p = 0; p < 3; ++p) {
    if (sizes[p] > static_cast<unsigned long>(max_part_size))
      throw std::length_error("blow-up of part " + to_string(parts[p]) + " needs " + sizes[p].get_str() +
                              " vertices, limit " + std::to_string(max_part_size));
    scale[p] = sizes[p].get_ui();
    const auto& w = g.weights(parts[p]);
    copies[p].resize(w.size());
    for (std::size_t v = 0; v < w.size(); ++v) {
      const Rational count = w[v] * Rational(scale[p]);
      for (unsigned long i = 0; i < count.numerator().get_ui(); ++i) {
        copies[p][v].push_back(origin[p].size());
        origin[p].push_back(v);
      }
    }
  }

  const Tripartition& t = g.structure();
  auto expand = [](const std::vector<Edge>& edges, const auto& from_copies, const auto& to_copies) {
    std::vector<Edge> out;
    for (const Edge& e : edges)
      for (std::size_t u : from_copies[e.from])
        for (std::size_t v : to_copies[e.to]) out.push_back({u, v});
    return out;
  };
  const auto ab = expand(t.ab_edges(), copies[0], copies[1]);
  const auto bc = expand(t.bc_edges(), copies[1], copies[2]);
  Tripartition blown(origin[0].size(), origin[1].size(), origin[2].size(), ab, bc);
  return {WeightedTripartite::uniform(std::move(blown)), scale, std::move(origin)};
}

LemmaCheck check_expansion_lemma(const WeightedTripartite& g, const ConstraintParams& params, const Rational& z,
                                 int k, const Bitset& b_subset) {
  if (k < 1) throw LemmaPreconditionError("expansion lemma needs k >= 1");
  if (b_subset.size() != g.structure().b_size())
    throw LemmaPreconditionError("subset has " + std::to_string(b_subset.size()) + " slots but |B| = " +
                                 std::to_string(g.structure().b_size()));
  ConstraintParams bi = params;
  bi.mode = Mode::biconstrained;
  if (const auto report = verify(g, bi); !report.passed)
    throw LemmaPreconditionError("graph is not biconstrained: " + report.violation->describe());
  if (const auto reach = max_reach(g); reach.value >= z)
    throw LemmaPreconditionError("max_reach " + reach.value.str() + " is not below z = " + z.str());

  const Rational one(1);
  const Rational slack = one - params.y;
  // 1 - x/(1-y) tends to -infinity as y -> 1, so only the 1-y branch survives.
  const Rational tail = slack.is_zero() ? slack : max(slack, one - params.x / slack);

  LemmaCheck out;
  out.subset_weight = g.weight_of(Part::B, b_subset);
  out.threshold = Rational(k - 1) * slack + tail;
  out.required = params.x + Rational(k) * (one - z);
  out.neighbourhood_weight = g.weight_of(Part::A, g.structure().a_neighbourhood(b_subset));
  if (out.subset_weight <= out.threshold)
    out.outcome = LemmaOutcome::not_applicable;
  else
    out.outcome = out.neighbourhood_weight > out.required ? LemmaOutcome::holds : LemmaOutcome::counterexample;
  return out;
}

}  // namespace phipsi
