#pragma once

// Tripartite graphs (A, B, C) with edges only between A-B and B-C, optionally
// carrying positive rational vertex weights that sum to one in each part.
// A, B and C are stable and A-C is empty because the representation has no
// way to express anything else.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "phipsi/rational.hpp"

namespace phipsi {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

enum class Part { A, B, C };
enum class Mode { constrained, biconstrained };

std::string to_string(Part part);
std::string to_string(Mode mode);

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Tripartition {
 public:
  /// `ab` holds (A-index, B-index) pairs and `bc` holds (B-index, C-index)
  /// pairs. Duplicates collapse. Throws std::invalid_argument on an empty part
  /// or an out-of-range endpoint.
  Tripartition(std::size_t a_size, std::size_t b_size, std::size_t c_size, std::span<const Edge> ab,
               std::span<const Edge> bc);

  std::size_t a_size() const { return b_of_a_.size(); }
  std::size_t b_size() const { return a_of_b_.size(); }
  std::size_t c_size() const { return b_of_c_.size(); }
  std::size_t size(Part part) const;

  const Bitset& b_of_a(std::size_t a) const { return b_of_a_.at(a); }
  const Bitset& a_of_b(std::size_t b) const { return a_of_b_.at(b); }
  const Bitset& c_of_b(std::size_t b) const { return c_of_b_.at(b); }
  const Bitset& b_of_c(std::size_t c) const { return b_of_c_.at(c); }

  /// Edge lists in lexicographic order.
  std::vector<Edge> ab_edges() const;
  std::vector<Edge> bc_edges() const;

  /// A-vertices with a neighbour in `b_subset`.
  Bitset a_neighbourhood(const Bitset& b_subset) const;
  /// A-vertices at distance two from C-vertex `c`.
  Bitset second_neighbourhood(std::size_t c) const;

  friend bool operator==(const Tripartition&, const Tripartition&) = default;

 private:
  std::vector<Bitset> b_of_a_, a_of_b_, c_of_b_, b_of_c_;
};

class WeightedTripartite {
 public:
  /// Throws std::invalid_argument unless every weight is positive, each part
  /// sums to exactly one, and the weight counts match the part sizes.
  WeightedTripartite(Tripartition structure, std::vector<Rational> weights_a, std::vector<Rational> weights_b,
                     std::vector<Rational> weights_c);

  /// Every vertex of a part weighs 1/|part|.
  static WeightedTripartite uniform(Tripartition structure);

  const Tripartition& structure() const { return structure_; }
  const std::vector<Rational>& weights(Part part) const;
  const Rational& weight(Part part, std::size_t index) const { return weights(part).at(index); }

  /// Total weight of the members of `subset` within `part`.
  Rational weight_of(Part part, const Bitset& subset) const;

  friend bool operator==(const WeightedTripartite&, const WeightedTripartite&) = default;

 private:
  Tripartition structure_;
  std::vector<Rational> weights_a_, weights_b_, weights_c_;
};

struct ConstraintParams {
  Rational x;
  Rational y;
  Mode mode = Mode::constrained;

  /// Throws std::domain_error unless 0 < x,y <= 1.
  void validate() const;
};

struct Violation {
  Part part = Part::A;    // where the deficient vertex lives
  std::size_t index = 0;  // its index within that part
  Part toward = Part::B;  // which neighbouring part it lacks weight in
  Rational weighted_degree;
  Rational required;

  std::string describe() const;
};

struct VerificationReport {
  bool passed = true;
  std::optional<Violation> violation;  // first failure in check order A->B, B->C, B->A, C->B
};

/// Non-strict weighted degree checks: every A-vertex sees >= x of B, every
/// B-vertex sees >= y of C, and in biconstrained mode every B-vertex sees
/// >= x of A and every C-vertex sees >= y of B.
VerificationReport verify(const WeightedTripartite& g, const ConstraintParams& params);

/// A-indices sharing a B-neighbour with C-vertex `c`, ascending.
std::vector<std::size_t> second_neighborhood(const WeightedTripartite& g, std::size_t c);

struct Reach {
  Rational value;
  std::size_t vertex = 0;  // lowest C-index attaining value
};

/// Maximum over C of the A-weight of the second neighbourhood.
Reach max_reach(const WeightedTripartite& g);

struct BlowUp {
  WeightedTripartite graph;          // uniform weights
  std::array<std::size_t, 3> scale;  // copies per unit weight, per part (lcm of weight denominators)
  std::array<std::vector<std::size_t>, 3> origin;  // blown-up index -> original index
};

/// Per-part vertex counts blow_up would produce, without building anything.
std::array<mpz_class, 3> blow_up_sizes(const WeightedTripartite& g);

/// Replaces each vertex v of part P by w(v) * lcm(denominators of P) copies
/// with inherited adjacency. Throws std::length_error if some part would
/// exceed `max_part_size` vertices.
BlowUp blow_up(const WeightedTripartite& g, std::size_t max_part_size = 1u << 16);

enum class LemmaOutcome { not_applicable, holds, counterexample };
std::string to_string(LemmaOutcome outcome);

struct LemmaPreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LemmaCheck {
  LemmaOutcome outcome = LemmaOutcome::not_applicable;
  Rational subset_weight;         // w(B_k)
  Rational threshold;             // (k-1)(1-y) + max(1-y, 1-x/(1-y))
  Rational neighbourhood_weight;  // w(N_A(B_k))
  Rational required;              // x + k(1-z); the lemma asserts a strictly larger neighbourhood
};

/// Expansion lemma: on a biconstrained graph whose every C-vertex reaches
/// less than z of A, a B-subset heavier than the threshold has an
/// A-neighbourhood heavier than x + k(1-z). Throws LemmaPreconditionError if
/// the graph fails verification, max_reach >= z, k < 1, or the subset size
/// does not match |B|.
LemmaCheck check_expansion_lemma(const WeightedTripartite& g, const ConstraintParams& params, const Rational& z,
                                 int k, const Bitset& b_subset);

}  // namespace phipsi
