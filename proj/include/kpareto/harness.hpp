#ifndef KPARETO_HARNESS_HPP
#define KPARETO_HARNESS_HPP

#include "kpareto/construction.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kpareto {

struct TrialRecord {
  Family family = Family::baseline;
  std::int64_t n = 0;
  int d = 1;
  Rational phi = 1;
  std::int64_t n_p = 0;
  std::int64_t n_q = 0;
  std::uint64_t seed = 0;  // master seed
  std::int64_t trial = 0;
  std::int64_t pareto_count = 0;
  std::int64_t wall_millis = 0;
};

struct CellKey {
  std::int64_t n = 0;
  int d = 1;
  Rational phi = 1;
  std::int64_t n_p = 0;
  std::int64_t n_q = 0;

  bool operator==(const CellKey&) const = default;
  bool operator<(const CellKey& other) const;
};

/// Aggregates use exact integer sums; mean and stddev are derived on demand.
struct CellStats {
  CellKey key;
  std::int64_t trials = 0;
  BigInt count_sum = 0;
  BigInt count_sq_sum = 0;
  std::int64_t min_count = 0;
  std::int64_t max_count = 0;

  double mean() const;
  double stddev() const;  // sample standard deviation
};

struct GrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double std_error = 0.0;  // of the slope
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  int points = 0;
};

struct FitGroup {
  int d = 1;
  Rational phi = 1;
  GrowthFit fit;
};

struct CellFailure {
  CellKey key;
  std::string message;
};

struct ExperimentSummary {
  Family family = Family::baseline;
  std::uint64_t master_seed = 0;
  std::int64_t trials = 0;
  std::vector<CellStats> cells;     // sorted by key
  std::vector<FitGroup> fits;       // log mean count vs log n per (d, phi)
  std::vector<CellFailure> failures;
};

/// Axes of the experiment grid. Cells are the cartesian product of the
/// family's axes: baseline uses n; bicriteria uses (n, phi), or (np, nq, phi)
/// to pin the construction directly; multicriteria uses (n, d, phi) or
/// (nq, d, phi).
struct GridSpec {
  Family family = Family::baseline;
  std::vector<std::int64_t> n;
  std::vector<int> d;
  std::vector<Rational> phi;
  std::vector<std::int64_t> np;
  std::vector<std::int64_t> nq;
};

/// Parses "n=6..16;phi=3,5,10;d=2" style grid text: semicolon-separated axes,
/// each a comma list or an inclusive integer range a..b.
GridSpec parse_grid(Family family, std::string_view text);

struct ExperimentResult {
  ExperimentSummary summary;
  std::vector<TrialRecord> records;
};

/// Plans, builds, samples, and counts (via merge_pareto) every cell for
/// `trials` trials. Deterministic in (grid, trials, master_seed) except for
/// wall-clock fields. Cells that fail their planner preconditions are
/// recorded as failures without aborting the grid.
ExperimentResult run_experiment(const GridSpec& grid, std::int64_t trials,
                                std::uint64_t master_seed);

/// Least-squares fit of log y against log x. Requires >= 3 points, all
/// coordinates positive.
GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points);

/// Rebuilds the summary from raw records; run_experiment uses this same path,
/// so a records round trip reproduces the summary bit-exactly.
ExperimentSummary summarize(Family family, std::uint64_t master_seed, std::int64_t trials,
                            const std::vector<TrialRecord>& records,
                            std::vector<CellFailure> failures = {});

/// CSV columns, in order: family,n,d,phi,n_p,n_q,seed,trial,pareto_count,wall_millis.
void write_records_csv(const std::vector<TrialRecord>& records, std::ostream& out);
std::vector<TrialRecord> read_records_csv(std::istream& in);

nlohmann::json records_to_json(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> records_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const ExperimentSummary& summary);

/// Writes records as "csv" or "json"; errors carry the path.
void emit_results(const std::vector<TrialRecord>& records, const std::string& path,
                  const std::string& format);
std::vector<TrialRecord> read_results(const std::string& path, const std::string& format);

}  // namespace kpareto

#endif  // KPARETO_HARNESS_HPP
