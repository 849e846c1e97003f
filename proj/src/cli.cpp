#include "phipsi/cli.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "phipsi/constructions.hpp"
#include "phipsi/oracle.hpp"
#include "phipsi/regions.hpp"

namespace phipsi {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::optional<Rational> optional_rational(const std::string& text, const std::string& flag) {
  if (text.empty()) return std::nullopt;
  return rational_flag(text, flag);
}

Mode mode_flag(const std::string& text) {
  if (text == "bi") return Mode::biconstrained;
  if (text == "con") return Mode::constrained;
  throw UsageError("--mode must be bi or con, got '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

GraphDocument load(const std::string& path) {
  try {
    return read_document_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

Witness load_witness(const std::string& path) {
  const GraphDocument doc = load(path);
  if (!doc.claim) throw UsageError(path + ": no claim line");
  return to_witness(doc);
}

void print_reach(std::ostream& out, const Reach& r) { out << "max_reach: " << r.value << " at C" << r.vertex << '\n'; }

struct VerifyFlags {
  std::string file, x, y, mode = "bi";
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const GraphDocument doc = load(f.file);
  Rational x, y;
  if (!f.x.empty()) x = rational_flag(f.x, "--x");
  else if (doc.claim) x = doc.claim->x;
  else throw UsageError("--x is required when the file has no claim");
  if (!f.y.empty()) y = rational_flag(f.y, "--y");
  else if (doc.claim) y = doc.claim->y;
  else throw UsageError("--y is required when the file has no claim");
  const ConstraintParams params{x, y, mode_flag(f.mode)};
  if (!in_unit_interval(x) || !in_unit_interval(y)) throw UsageError("--x and --y must lie in (0,1]");

  const auto report = verify(doc.graph, params);
  const auto reach = max_reach(doc.graph);
  out << "verify (" << x << "," << y << ") " << to_string(params.mode) << ": " << (report.passed ? "pass" : "fail")
      << '\n';
  if (report.violation) out << "violation: " << report.violation->describe() << '\n';
  print_reach(out, reach);
  bool ok = report.passed;
  if (doc.claim) {
    const bool bounded = doc.claim->strict ? reach.value < doc.claim->z : reach.value <= doc.claim->z;
    out << "claim " << doc.claim->describe() << ": " << (bounded ? "reach bound holds" : "reach bound FAILS")
        << '\n';
    ok = ok && bounded;
  }
  return ok ? kExitOk : kExitClaimFailed;
}

struct ConstructFlags {
  std::string method, out, x, y, z, base, p_frac, q_frac, base_x, base_y;
  int n = 0, p = 0, q = 0;
  long a = 0, b = 0;
};

int cmd_construct(const ConstructFlags& f, std::ostream& out, std::ostream& err) {
  auto need = [&](const std::string& v, const std::string& flag) {
    if (v.empty()) throw UsageError(flag + " is required for --method " + f.method);
    return rational_flag(v, flag);
  };
  std::optional<Witness> built;
  try {
    if (f.method == "interval") {
      built = interval_witness(f.n, f.p, f.q);
    } else if (f.method == "circulant") {
      built = circulant_witness(need(f.x, "--x"), need(f.y, "--y"), f.a, f.b);
    } else if (f.method == "extend-phi") {
      if (f.base.empty()) throw UsageError("--base is required for --method extend-phi");
      built = extend_phi(load_witness(f.base), need(f.x, "--x"), need(f.y, "--y"), need(f.z, "--z"));
    } else if (f.method == "extend-psi-top" || f.method == "extend-psi-bottom") {
      if (f.base.empty()) throw UsageError("--base is required for --method " + f.method);
      GadgetOptions o{optional_rational(f.p_frac, "--gadget-p"), optional_rational(f.q_frac, "--gadget-q"),
                      optional_rational(f.base_x, "--base-x"), optional_rational(f.base_y, "--base-y")};
      const Witness base = load_witness(f.base);
      const Rational x = need(f.x, "--x"), y = need(f.y, "--y"), z = need(f.z, "--z");
      built = f.method == "extend-psi-top" ? extend_psi_top(base, x, y, z, o) : extend_psi_bottom(base, x, y, z, o);
    } else {
      throw UsageError("unknown --method '" + f.method + "'");
    }
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kExitClaimFailed;
  }
  const Witness& w = *built;
  try {
    write_document_file(f.out, to_document(w));
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  out << "certified " << w.claim.describe() << '\n';
  out << "provenance " << w.provenance << '\n';
  print_reach(out, max_reach(w.graph));
  out << "wrote " << f.out << '\n';
  return kExitOk;
}

struct RegionFlags {
  std::string point;
  bool no_suspect = false;
};

int cmd_region(const RegionFlags& f, std::ostream& out) {
  const auto parts = split(f.point, ',');
  if (parts.size() != 2) throw UsageError("--point expects x,y");
  const Rational x = rational_flag(parts[0], "--point"), y = rational_flag(parts[1], "--point");
  if (!in_unit_interval(x) || !in_unit_interval(y)) throw UsageError("--point must lie in (0,1]^2");
  RegionOptions options;
  options.use_suspect_3_4ub3 = !f.no_suspect;
  const PointVerdict v = evaluate_point(x, y, options);

  out << "point (" << x << "," << y << ")\n";
  for (const auto& finding : v.direct)
    out << "  " << finding.id << ": " << to_string(finding.conclusion.function) << ' '
        << to_string(finding.conclusion.relation) << ' ' << finding.conclusion.level << '\n';
  for (Function fn : {Function::phi, Function::psi}) {
    for (const auto& level : scan_levels()) {
      const auto lv = v.verdict(fn, level);
      out << to_string(fn) << " vs " << level << ": " << to_string(lv.verdict);
      for (const auto& s : lv.sources) out << ' ' << s;
      out << '\n';
    }
  }
  out << "contradictions: " << v.contradictions.size() << '\n';
  for (const auto& c : v.contradictions) out << "  " << c.describe() << '\n';
  return v.contradictions.empty() ? kExitOk : kExitClaimFailed;
}

struct ScanFlags {
  std::string step, out, boundaries;
  bool serial = false, no_suspect = false;
};

int cmd_scan(const ScanFlags& f, std::ostream& out) {
  ScanOptions options;
  options.csv_path = f.out;
  options.boundary_path = f.boundaries;
  options.parallel = !f.serial;
  options.regions.use_suspect_3_4ub3 = !f.no_suspect;
  GridScanReport report;
  try {
    report = scan_grid(rational_flag(f.step, "--step"), options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  out << "step " << report.step << ", " << report.points << " points\n";
  for (Function fn : {Function::phi, Function::psi})
    for (const auto& level : report.levels) {
      const auto& c = report.count(fn, level);
      out << to_string(fn) << ' ' << level << ": at_least " << c.at_least << ", below " << c.below << ", unknown "
          << c.unknown << '\n';
    }
  out << "contradictions: " << report.contradictions.size() << '\n';
  for (const auto& c : report.contradictions) out << "  " << c << '\n';
  out << "symmetry violations: " << report.symmetry_violations.size() << '\n';
  for (const auto& s : report.symmetry_violations) out << "  " << s << '\n';
  if (!report.output_path.empty()) out << "wrote " << report.output_path << '\n';
  return report.contradictions.empty() && report.symmetry_violations.empty() ? kExitOk : kExitClaimFailed;
}

struct OracleFlags {
  std::string sizes, x, y, mode = "con", out;
  std::uint64_t random = 0, seed = 1;
};

int cmd_oracle(const OracleFlags& f, std::ostream& out) {
  const auto parts = split(f.sizes, ',');
  if (parts.size() != 3) throw UsageError("--sizes expects a,b,c");
  std::array<std::size_t, 3> sizes{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (parts[i].empty() || parts[i].find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--sizes entries must be positive integers");
    sizes[i] = std::stoul(parts[i]);
    if (sizes[i] == 0) throw UsageError("--sizes entries must be positive integers");
  }
  const ConstraintParams params{rational_flag(f.x, "--x"), rational_flag(f.y, "--y"), mode_flag(f.mode)};
  if (!in_unit_interval(params.x) || !in_unit_interval(params.y)) throw UsageError("--x and --y must lie in (0,1]");

  std::optional<OracleResult> result;
  const bool randomized = f.random > 0;
  try {
    result = randomized ? randomized_upper_bound(sizes, params, f.random, f.seed)
                        : exhaustive_min_max(OracleQuery{sizes[0], sizes[1], sizes[2], params});
  } catch (const BudgetExceeded& e) {
    throw UsageError(e.what());
  }
  if (!result) {
    out << "infeasible\n";
    return kExitClaimFailed;
  }
  out << "value: " << result->value << '\n';
  if (!f.out.empty()) {
    GraphDocument doc{WeightedTripartite::uniform(result->graph),
                      Claim{params.mode == Mode::biconstrained ? Function::psi : Function::phi, params.x, params.y,
                            result->value, false},
                      "oracle sizes=" + f.sizes + (randomized ? " trials=" + std::to_string(f.random) +
                                                                    " seed=" + std::to_string(f.seed)
                                                              : std::string()),
                      randomized ? "randomized" : "exhaustive"};
    try {
      write_document_file(f.out, doc);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
    out << "wrote " << f.out << '\n';
  }
  return kExitOk;
}

struct CrossCheckFlags {
  std::string file;
  std::size_t max_blow_up = 200;
};

int cmd_cross_check(const CrossCheckFlags& f, std::ostream& out) {
  const CrossCheckReport report = cross_check(load_witness(f.file), {f.max_blow_up, kOracleMaxPartSize});
  out << report.describe();
  return report.passed() ? kExitOk : kExitClaimFailed;
}

struct LemmaFlags {
  std::string file, z, subset;
  int k = 1;
  std::uint64_t random = 0, seed = 1;
};

int cmd_lemma(const LemmaFlags& f, std::ostream& out) {
  const Witness w = load_witness(f.file);
  const Rational z = rational_flag(f.z, "--z");
  const std::size_t b = w.graph.structure().b_size();
  const ConstraintParams params{w.claim.x, w.claim.y, Mode::biconstrained};

  std::vector<Bitset> subsets;
  if (f.random > 0) {
    std::mt19937_64 rng(f.seed);
    for (std::uint64_t t = 0; t < f.random; ++t) {
      Bitset s(b);
      for (std::size_t j = 0; j < b; ++j)
        if (rng() & 1) s.set(j);
      subsets.push_back(std::move(s));
    }
  } else {
    Bitset s(b);
    if (f.subset == "all") {
      s.set();
    } else if (!f.subset.empty() && f.subset != "none") {
      for (const auto& item : split(f.subset, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
          throw UsageError("--subset expects comma-separated B indices, 'all' or 'none'");
        const auto j = std::stoul(item);
        if (j >= b) throw UsageError("--subset index " + item + " out of range");
        s.set(j);
      }
    }
    subsets.push_back(std::move(s));
  }

  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : subsets) {
    LemmaCheck check;
    try {
      check = check_expansion_lemma(w.graph, params, z, f.k, s);
    } catch (const LemmaPreconditionError& e) {
      out << "precondition: " << e.what() << '\n';
      return kExitClaimFailed;
    }
    ++counts[static_cast<int>(check.outcome)];
    if (subsets.size() == 1 || check.outcome == LemmaOutcome::counterexample)
      out << to_string(check.outcome) << ": |B_k| = " << check.subset_weight << " vs threshold " << check.threshold
          << ", |N_A(B_k)| = " << check.neighbourhood_weight << " vs " << check.required << '\n';
  }
  if (subsets.size() > 1)
    out << "not_applicable " << counts[0] << ", holds " << counts[1] << ", COUNTEREXAMPLE " << counts[2] << '\n';
  return counts[2] == 0 ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constrained tripartite graphs: verification, witnesses, regions and oracle", "phipsi"};
  app.require_subcommand(1);

  VerifyFlags verify_f;
  auto* verify_cmd = app.add_subcommand("verify", "check a graph file against (x,y)");
  verify_cmd->add_option("file", verify_f.file, "graph or witness file")->required();
  verify_cmd->add_option("--x", verify_f.x, "x as p/q (default: the file's claim)");
  verify_cmd->add_option("--y", verify_f.y, "y as p/q (default: the file's claim)");
  verify_cmd->add_option("--mode", verify_f.mode, "bi or con")->capture_default_str();

  ConstructFlags construct_f;
  auto* construct_cmd = app.add_subcommand("construct", "build a certified witness");
  construct_cmd->add_option("--method", construct_f.method,
                            "interval|circulant|extend-phi|extend-psi-top|extend-psi-bottom")
      ->required();
  construct_cmd->add_option("--out", construct_f.out, "witness file to write")->required();
  construct_cmd->add_option("--n", construct_f.n, "interval: N");
  construct_cmd->add_option("--p", construct_f.p, "interval: window into B");
  construct_cmd->add_option("--q", construct_f.q, "interval: window into C");
  construct_cmd->add_option("--a", construct_f.a, "circulant: numerator of the level a/b");
  construct_cmd->add_option("--b", construct_f.b, "circulant: denominator of the level a/b");
  construct_cmd->add_option("--x", construct_f.x);
  construct_cmd->add_option("--y", construct_f.y);
  construct_cmd->add_option("--z", construct_f.z);
  construct_cmd->add_option("--base", construct_f.base, "base witness file for extend-*");
  construct_cmd->add_option("--gadget-p", construct_f.p_frac, "extend-psi-*: explicit p");
  construct_cmd->add_option("--gadget-q", construct_f.q_frac, "extend-psi-*: explicit q");
  construct_cmd->add_option("--base-x", construct_f.base_x, "extend-psi-*: x' (default: base claim)");
  construct_cmd->add_option("--base-y", construct_f.base_y, "extend-psi-*: y' (default: base claim)");

  RegionFlags region_f;
  auto* region_cmd = app.add_subcommand("region", "evaluate every region predicate at a point");
  region_cmd->add_option("--point", region_f.point, "x,y")->required();
  region_cmd->add_flag("--no-suspect-3-4ub3", region_f.no_suspect, "drop the (3x-1)/(8-12y) alternative");

  ScanFlags scan_f;
  auto* scan_cmd = app.add_subcommand("scan", "grid scan of all predicates");
  scan_cmd->add_option("--step", scan_f.step, "1/n")->required();
  scan_cmd->add_option("--out", scan_f.out, "CSV output");
  scan_cmd->add_option("--boundaries", scan_f.boundaries, "verdict-change output");
  scan_cmd->add_flag("--serial", scan_f.serial, "single-threaded reference path");
  scan_cmd->add_flag("--no-suspect-3-4ub3", scan_f.no_suspect);

  OracleFlags oracle_f;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive or randomized min max_reach");
  oracle_cmd->add_option("--sizes", oracle_f.sizes, "a,b,c")->required();
  oracle_cmd->add_option("--x", oracle_f.x)->required();
  oracle_cmd->add_option("--y", oracle_f.y)->required();
  oracle_cmd->add_option("--mode", oracle_f.mode, "bi or con")->capture_default_str();
  oracle_cmd->add_option("--random", oracle_f.random, "randomized search with this many trials");
  oracle_cmd->add_option("--seed", oracle_f.seed)->capture_default_str();
  oracle_cmd->add_option("--out", oracle_f.out, "write the minimising graph");

  CrossCheckFlags cross_f;
  auto* cross_cmd = app.add_subcommand("cross-check", "blow up a witness and compare against the oracle");
  cross_cmd->add_option("file", cross_f.file)->required();
  cross_cmd->add_option("--max-blow-up", cross_f.max_blow_up, "largest blown-up part")->capture_default_str();

  LemmaFlags lemma_f;
  auto* lemma_cmd = app.add_subcommand("lemma-check", "expansion lemma on a witness graph");
  lemma_cmd->add_option("file", lemma_f.file)->required();
  lemma_cmd->add_option("--z", lemma_f.z)->required();
  lemma_cmd->add_option("--k", lemma_f.k)->capture_default_str();
  auto* subset_opt = lemma_cmd->add_option("--subset", lemma_f.subset, "B indices, 'all' or 'none'");
  auto* random_opt = lemma_cmd->add_option("--random", lemma_f.random, "number of random subsets");
  lemma_cmd->add_option("--seed", lemma_f.seed)->capture_default_str();
  subset_opt->excludes(random_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify_f, out);
    if (*construct_cmd) return cmd_construct(construct_f, out, err);
    if (*region_cmd) return cmd_region(region_f, out);
    if (*scan_cmd) return cmd_scan(scan_f, out);
    if (*oracle_cmd) return cmd_oracle(oracle_f, out);
    if (*cross_cmd) return cmd_cross_check(cross_f, out);
    if (*lemma_cmd) return cmd_lemma(lemma_f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace phipsi
