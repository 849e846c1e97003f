#include <fstream>
#include <sstream>

#include "phipsi/regions.hpp"

namespace phipsi {

const VerdictCounts& GridScanReport::count(Function f, const Rational& level) const {
  return counts.at({f, level.str()});
}

namespace {

constexpr std::array<Function, 2> kFunctions{Function::phi, Function::psi};

struct PointResult {
  std::array<std::array<Verdict, 3>, 2> verdicts{};
  std::string csv_rows;
  std::vector<std::string> contradictions;
};

struct ScanRun {
  GridScanReport report;
  std::string csv;
  std::string boundaries;
};

std::size_t grid_size(const Rational& step) {
  if (step.sign() <= 0 || step > Rational(1) || step.numerator() != 1)
    throw std::invalid_argument("scan step must be 1/n for a positive integer n, got " + step.str());
  if (!step.denominator().fits_ulong_p() || step.denominator() > 100000)
    throw std::invalid_argument("scan step " + step.str() + " is too fine");
  return step.denominator().get_ui();
}

PointResult summarize(const PointVerdict& v) {
  PointResult out;
  std::ostringstream rows;
  const auto& levels = scan_levels();
  for (std::size_t f = 0; f < kFunctions.size(); ++f) {
    for (std::size_t l = 0; l < levels.size(); ++l) {
      const LevelVerdict lv = v.verdict(kFunctions[f], levels[l]);
      out.verdicts[f][l] = lv.verdict;
      rows << v.x << ',' << v.y << ',' << to_string(kFunctions[f]) << ',' << levels[l] << ','
           << to_string(lv.verdict) << ',';
      for (std::size_t s = 0; s < lv.sources.size(); ++s) rows << (s ? ";" : "") << lv.sources[s];
      rows << '\n';
    }
  }
  out.csv_rows = rows.str();
  for (const auto& c : v.contradictions)
    out.contradictions.push_back("(" + v.x.str() + "," + v.y.str() + ") " + c.describe());
  return out;
}

ScanRun run_scan(const Rational& step, const RegionOptions& options, bool parallel) {
  const std::size_t n = grid_size(step);
  const std::size_t total = n * n;
  auto coord = [&](std::size_t i) { return Rational(static_cast<long>(i + 1), static_cast<long>(n)); };

  // raw[i*n + j] holds the predicates at (x_i, y_j); assembly reads both
  // (i, j) and (j, i), so every point is evaluated exactly once.
  std::vector<std::vector<Finding>> raw(total);
  std::vector<PointResult> results(total);
  const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long long idx = 0; idx < count; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    raw[u] = evaluate_raw(coord(u / n), coord(u % n), options);
  }
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long long idx = 0; idx < count; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    const std::size_t i = u / n, j = u % n;
    const auto& mirror = i == j ? std::vector<Finding>{} : raw[j * n + i];
    results[u] = summarize(assemble_point(coord(i), coord(j), raw[u], mirror));
  }

  ScanRun run;
  GridScanReport& report = run.report;
  report.step = step;
  report.points = total;
  const auto& levels = scan_levels();
  report.levels.assign(levels.begin(), levels.end());
  for (Function f : kFunctions)
    for (const auto& level : levels) report.counts[{f, level.str()}];

  std::ostringstream csv;
  csv << "x,y,function,level,relation,source\n";
  for (std::size_t u = 0; u < total; ++u) {
    const PointResult& r = results[u];
    csv << r.csv_rows;
    report.contradictions.insert(report.contradictions.end(), r.contradictions.begin(), r.contradictions.end());
    for (std::size_t f = 0; f < kFunctions.size(); ++f) {
      for (std::size_t l = 0; l < levels.size(); ++l) {
        auto& c = report.counts[{kFunctions[f], levels[l].str()}];
        switch (r.verdicts[f][l]) {
          case Verdict::at_least: ++c.at_least; break;
          case Verdict::below: ++c.below; break;
          case Verdict::unknown: ++c.unknown; break;
        }
      }
    }
    const std::size_t i = u / n, j = u % n;
    if (i < j) {
      const PointResult& mirror = results[j * n + i];
      for (std::size_t l = 0; l < levels.size(); ++l)
        if (r.verdicts[0][l] != mirror.verdicts[0][l])
          report.symmetry_violations.push_back("phi at level " + levels[l].str() + ": (" + coord(i).str() + "," +
                                               coord(j).str() + ") is " + to_string(r.verdicts[0][l]) +
                                               " but the mirror is " + to_string(mirror.verdicts[0][l]));
    }
  }
  run.csv = csv.str();

  // One line per verdict change walking up each column x = const.
  std::ostringstream edges;
  edges << "function,level,x,y_low,y_high,verdict_low,verdict_high\n";
  for (std::size_t f = 0; f < kFunctions.size(); ++f)
    for (std::size_t l = 0; l < levels.size(); ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) {
          const Verdict lo = results[i * n + j].verdicts[f][l], hi = results[i * n + j + 1].verdicts[f][l];
          if (lo != hi)
            edges << to_string(kFunctions[f]) << ',' << levels[l] << ',' << coord(i) << ',' << coord(j) << ','
                  << coord(j + 1) << ',' << to_string(lo) << ',' << to_string(hi) << '\n';
        }
  run.boundaries = edges.str();
  return run;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

GridScanReport scan_grid(const Rational& step, const ScanOptions& options) {
  ScanRun run = run_scan(step, options.regions, options.parallel);
  if (!options.csv_path.empty()) {
    write_text(options.csv_path, run.csv);
    run.report.output_path = options.csv_path;
  }
  if (!options.boundary_path.empty()) write_text(options.boundary_path, run.boundaries);
  return run.report;
}

std::string scan_csv(const Rational& step, const RegionOptions& options, bool parallel) {
  return run_scan(step, options, parallel).csv;
}

}  // namespace phipsi
