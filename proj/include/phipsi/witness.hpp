#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "phipsi/graph.hpp"
#include "phipsi/rational.hpp"

namespace phipsi {

enum class Function { phi, psi };
std::string to_string(Function f);

/// "function(x, y) < z" (strict) or "<= z". A phi claim is about
/// constrained graphs and a psi claim about biconstrained ones.
struct Claim {
  Function function = Function::psi;
  Rational x, y, z;
  bool strict = false;

  Mode mode() const { return function == Function::psi ? Mode::biconstrained : Mode::constrained; }
  ConstraintParams params() const { return {x, y, mode()}; }
  std::string describe() const;
};

struct Witness {
  WeightedTripartite graph;
  Claim claim;
  std::string provenance;
};

struct Certification {
  bool passed = false;
  VerificationReport verification;
  Reach reach;
  std::string failure;  // empty when passed
};

/// Re-checks a witness from scratch: the graph must verify at the claimed
/// (x, y, mode) and its max_reach must be < z (strict) or <= z.
Certification certify(const Witness& w);

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what);
  std::size_t line;
};

/// Line-oriented text form:
///
///   sizes a b c
///   weights_a p/q ...
///   weights_b p/q ...
///   weights_c p/q ...
///   ab i j          (one per A-B edge)
///   bc j k          (one per B-C edge)
///   claim psi|phi x y z strict|nonstrict     (optional)
///   provenance <name> <params...>            (optional)
///   oracle exhaustive|randomized             (optional)
///
/// Blank lines and lines starting with '#' are skipped on input.
struct GraphDocument {
  WeightedTripartite graph;
  std::optional<Claim> claim;
  std::optional<std::string> provenance;
  std::optional<std::string> oracle;
};

GraphDocument parse_document(std::istream& in);
void write_document(std::ostream& out, const GraphDocument& doc);
std::string format_document(const GraphDocument& doc);

GraphDocument read_document_file(const std::string& path);
/// Throws std::runtime_error if the file cannot be written.
void write_document_file(const std::string& path, const GraphDocument& doc);

GraphDocument to_document(const Witness& w);
/// Throws std::invalid_argument if the document carries no claim line.
Witness to_witness(const GraphDocument& doc);

}  // namespace phipsi
