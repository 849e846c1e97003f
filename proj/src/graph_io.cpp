#include <fstream>
#include <sstream>
#include <vector>

#include "phipsi/witness.hpp"

namespace phipsi {

std::string to_string(Function f) { return f == Function::phi ? "phi" : "psi"; }

std::string Claim::describe() const {
  return to_string(function) + "(" + x.str() + "," + y.str() + ") " + (strict ? "< " : "<= ") + z.str();
}

Certification certify(const Witness& w) {
  Certification out;
  out.verification = verify(w.graph, w.claim.params());
  out.reach = max_reach(w.graph);
  if (!out.verification.passed) {
    out.failure = "verification failed: " + out.verification.violation->describe();
    return out;
  }
  const bool bounded = w.claim.strict ? out.reach.value < w.claim.z : out.reach.value <= w.claim.z;
  if (!bounded) {
    out.failure = "max_reach " + out.reach.value.str() + " at C" + std::to_string(out.reach.vertex) +
                  " does not certify " + w.claim.describe();
    return out;
  }
  out.passed = true;
  return out;
}

ParseError::ParseError(std::size_t line_number, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t parse_index(const std::string& word, std::size_t line) {
  if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative integer, got '" + word + "'");
  try {
    return std::stoul(word);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range '" + word + "'");
  }
}

Rational parse_rational(const std::string& word, std::size_t line) {
  try {
    return Rational::parse(word);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

GraphDocument parse_document(std::istream& in) {
  std::optional<std::array<std::size_t, 3>> sizes;
  std::array<std::optional<std::vector<Rational>>, 3> weights;
  std::vector<Edge> ab, bc;
  std::optional<Claim> claim;
  std::optional<std::string> provenance, oracle;

  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto words = split_words(line);
    if (words.empty() || words[0].starts_with('#')) continue;
    const std::string& key = words[0];
    if (key == "sizes") {
      if (words.size() != 4) throw ParseError(number, "sizes needs three counts");
      sizes = {parse_index(words[1], number), parse_index(words[2], number), parse_index(words[3], number)};
    } else if (key == "weights_a" || key == "weights_b" || key == "weights_c") {
      auto& slot = weights[static_cast<std::size_t>(key.back() - 'a')];
      if (slot) throw ParseError(number, "duplicate " + key);
      slot.emplace();
      for (std::size_t i = 1; i < words.size(); ++i) slot->push_back(parse_rational(words[i], number));
    } else if (key == "ab" || key == "bc") {
      if (words.size() != 3) throw ParseError(number, key + " needs two indices");
      (key == "ab" ? ab : bc).push_back({parse_index(words[1], number), parse_index(words[2], number)});
    } else if (key == "claim") {
      if (words.size() != 6) throw ParseError(number, "claim needs: psi|phi x y z strict|nonstrict");
      Claim c;
      if (words[1] == "psi") c.function = Function::psi;
      else if (words[1] == "phi") c.function = Function::phi;
      else throw ParseError(number, "claim function must be psi or phi");
      c.x = parse_rational(words[2], number);
      c.y = parse_rational(words[3], number);
      c.z = parse_rational(words[4], number);
      if (words[5] == "strict") c.strict = true;
      else if (words[5] != "nonstrict") throw ParseError(number, "claim must end in strict or nonstrict");
      claim = c;
    } else if (key == "provenance") {
      const auto at = line.find("provenance") + std::string("provenance").size();
      const auto start = line.find_first_not_of(" \t", at);
      provenance = start == std::string::npos ? "" : line.substr(start);
    } else if (key == "oracle") {
      if (words.size() != 2 || (words[1] != "exhaustive" && words[1] != "randomized"))
        throw ParseError(number, "oracle must be exhaustive or randomized");
      oracle = words[1];
    } else {
      throw ParseError(number, "unknown record '" + key + "'");
    }
  }

  if (!sizes) throw ParseError(0, "missing sizes line");
  for (std::size_t p = 0; p < 3; ++p)
    if (!weights[p]) throw ParseError(0, std::string("missing weights_") + static_cast<char>('a' + p) + " line");
  try {
    Tripartition t((*sizes)[0], (*sizes)[1], (*sizes)[2], ab, bc);
    WeightedTripartite g(std::move(t), std::move(*weights[0]), std::move(*weights[1]), std::move(*weights[2]));
    return {std::move(g), claim, provenance, oracle};
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

void write_document(std::ostream& out, const GraphDocument& doc) {
  const auto& g = doc.graph;
  const auto& t = g.structure();
  out << "sizes " << t.a_size() << ' ' << t.b_size() << ' ' << t.c_size() << '\n';
  const char* names[] = {"weights_a", "weights_b", "weights_c"};
  const Part parts[] = {Part::A, Part::B, Part::C};
  for (int p = 0; p < 3; ++p) {
    out << names[p];
    for (const auto& w : g.weights(parts[p])) out << ' ' << w;
    out << '\n';
  }
  for (const Edge& e : t.ab_edges()) out << "ab " << e.from << ' ' << e.to << '\n';
  for (const Edge& e : t.bc_edges()) out << "bc " << e.from << ' ' << e.to << '\n';
  if (doc.claim) {
    const Claim& c = *doc.claim;
    out << "claim " << to_string(c.function) << ' ' << c.x << ' ' << c.y << ' ' << c.z << ' '
        << (c.strict ? "strict" : "nonstrict") << '\n';
  }
  if (doc.provenance) out << "provenance " << *doc.provenance << '\n';
  if (doc.oracle) out << "oracle " << *doc.oracle << '\n';
}

std::string format_document(const GraphDocument& doc) {
  std::ostringstream out;
  write_document(out, doc);
  return out.str();
}

GraphDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_document(in);
}

void write_document_file(const std::string& path, const GraphDocument& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_document(out, doc);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

GraphDocument to_document(const Witness& w) { return {w.graph, w.claim, w.provenance, std::nullopt}; }

Witness to_witness(const GraphDocument& doc) {
  if (!doc.claim) throw std::invalid_argument("document has no claim line");
  return {doc.graph, *doc.claim, doc.provenance.value_or("")};
}

}  // namespace phipsi
