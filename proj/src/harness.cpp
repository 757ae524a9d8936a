#include "kpareto/harness.hpp"

#include "kpareto/engine.hpp"
#include "kpareto/sampler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kpareto {

bool CellKey::operator<(const CellKey& other) const {
  if (n != other.n) {
    return n < other.n;
  }
  if (d != other.d) {
    return d < other.d;
  }
  if (phi != other.phi) {
    return phi < other.phi;
  }
  if (n_p != other.n_p) {
    return n_p < other.n_p;
  }
  return n_q < other.n_q;
}

double CellStats::mean() const {
  if (trials == 0) {
    return 0.0;
  }
  return to_double(Rational(count_sum, trials));
}

double CellStats::stddev() const {
  if (trials < 2) {
    return 0.0;
  }
  const Rational variance = Rational(count_sq_sum * trials - count_sum * count_sum,
                                     BigInt(trials) * (trials - 1));
  return std::sqrt(to_double(variance));
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      break;
    }
    parts.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::vector<std::int64_t> parse_int_axis(const std::string& text, const std::string& axis) {
  std::vector<std::int64_t> values;
  for (const std::string& item : split(text, ',')) {
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const std::int64_t lo = std::stoll(item.substr(0, dots));
      const std::int64_t hi = std::stoll(item.substr(dots + 2));
      if (hi < lo) {
        throw std::invalid_argument("grid axis " + axis + ": empty range " + item);
      }
      for (std::int64_t v = lo; v <= hi; ++v) {
        values.push_back(v);
      }
    } else {
      values.push_back(std::stoll(item));
    }
  }
  return values;
}

}  // namespace

GridSpec parse_grid(Family family, std::string_view text) {
  GridSpec grid;
  grid.family = family;
  for (const std::string& axis_text : split(text, ';')) {
    if (axis_text.empty()) {
      continue;
    }
    const auto eq = axis_text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("grid axis missing '=': '" + axis_text + "'");
    }
    const std::string axis = axis_text.substr(0, eq);
    const std::string values = axis_text.substr(eq + 1);
    if (axis == "n") {
      grid.n = parse_int_axis(values, axis);
    } else if (axis == "d") {
      for (std::int64_t v : parse_int_axis(values, axis)) {
        grid.d.push_back(static_cast<int>(v));
      }
    } else if (axis == "np") {
      grid.np = parse_int_axis(values, axis);
    } else if (axis == "nq") {
      grid.nq = parse_int_axis(values, axis);
    } else if (axis == "phi") {
      for (const std::string& item : split(values, ',')) {
        grid.phi.push_back(parse_rational(item));
      }
    } else {
      throw std::invalid_argument("unknown grid axis: '" + axis + "'");
    }
  }
  return grid;
}

namespace {

struct Cell {
  CellKey key;
  ConstructionPlan plan;
};

std::vector<Cell> expand_cells(const GridSpec& grid, std::vector<CellFailure>& failures) {
  std::vector<Cell> cells;
  const auto add_cell = [&](CellKey key, const std::function<ConstructionPlan()>& make_plan) {
    try {
      ConstructionPlan plan = make_plan();
      key.n = plan.n;
      key.n_p = plan.n_p;
      key.n_q = plan.n_q;
      cells.push_back(Cell{key, std::move(plan)});
    } catch (const std::exception& e) {
      failures.push_back(CellFailure{key, e.what()});
    }
  };

  switch (grid.family) {
    case Family::baseline: {
      if (grid.n.empty()) {
        throw std::invalid_argument("baseline grid requires an n axis");
      }
      for (std::int64_t n : grid.n) {
        add_cell(CellKey{n, 1, 1, 0, 0}, [n] { return plan_baseline(n); });
      }
      break;
    }
    case Family::bicriteria: {
      if (grid.phi.empty()) {
        throw std::invalid_argument("bicriteria grid requires a phi axis");
      }
      if (!grid.np.empty() || !grid.nq.empty()) {
        if (grid.np.empty() || grid.nq.empty()) {
          throw std::invalid_argument("bicriteria grid with np/nq requires both axes");
        }
        for (const Rational& phi : grid.phi) {
          for (std::int64_t np : grid.np) {
            for (std::int64_t nq : grid.nq) {
              add_cell(CellKey{0, 1, phi, np, nq},
                       [=] { return bicriteria_plan_for(np, phi, nq); });
            }
          }
        }
      } else {
        if (grid.n.empty()) {
          throw std::invalid_argument("bicriteria grid requires an n axis (or np/nq)");
        }
        for (const Rational& phi : grid.phi) {
          for (std::int64_t n : grid.n) {
            add_cell(CellKey{n, 1, phi, 0, 0}, [=] { return plan_bicriteria(n, phi); });
          }
        }
      }
      break;
    }
    case Family::multicriteria: {
      if (grid.phi.empty() || grid.d.empty()) {
        throw std::invalid_argument("multicriteria grid requires d and phi axes");
      }
      if (!grid.nq.empty()) {
        for (const Rational& phi : grid.phi) {
          for (int d : grid.d) {
            for (std::int64_t nq : grid.nq) {
              add_cell(CellKey{0, d, phi, 0, nq},
                       [=] { return multicriteria_plan_for(d, phi, nq); });
            }
          }
        }
      } else {
        if (grid.n.empty()) {
          throw std::invalid_argument("multicriteria grid requires an n axis (or nq)");
        }
        for (const Rational& phi : grid.phi) {
          for (int d : grid.d) {
            for (std::int64_t n : grid.n) {
              add_cell(CellKey{n, d, phi, 0, 0}, [=] { return plan_multicriteria(n, d, phi); });
            }
          }
        }
      }
      break;
    }
  }
  return cells;
}

}  // namespace

ExperimentResult run_experiment(const GridSpec& grid, std::int64_t trials,
                                std::uint64_t master_seed) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  std::vector<CellFailure> failures;
  const std::vector<Cell> cells = expand_cells(grid, failures);

  std::vector<TrialRecord> records;
  records.reserve(cells.size() * static_cast<std::size_t>(trials));
  for (const Cell& cell : cells) {
    KnapsackInstance instance;
    try {
      instance = build_instance(cell.plan);
    } catch (const std::exception& e) {
      failures.push_back(CellFailure{cell.key, e.what()});
      continue;
    }
    for (std::int64_t trial = 0; trial < trials; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      const KnapsackInstance realized =
          sample_instance(instance, SampleSeed{master_seed, static_cast<std::uint64_t>(trial)});
      const std::int64_t count = merge_pareto(realized).count();
      const auto stop = std::chrono::steady_clock::now();
      if (count < 1) {
        throw std::runtime_error("pareto count invariant violated (count < 1)");
      }
      records.push_back(TrialRecord{
          grid.family, cell.key.n, cell.key.d, cell.key.phi, cell.key.n_p, cell.key.n_q,
          master_seed, trial, count,
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()});
    }
  }

  ExperimentResult result;
  result.summary = summarize(grid.family, master_seed, trials, records, std::move(failures));
  result.records = std::move(records);
  return result;
}

GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw std::invalid_argument("fit_growth requires at least 3 points");
  }
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("fit_growth requires positive coordinates");
    }
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_growth requires at least two distinct x values");
  }

  GrowthFit fit;
  fit.points = static_cast<int>(points.size());
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double residual = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ssr += residual * residual;
    sst += (ly[i] - my) * (ly[i] - my);
  }
  fit.r2 = sst > 0.0 ? 1.0 - ssr / sst : (ssr == 0.0 ? 1.0 : 0.0);
  fit.std_error = points.size() > 2 ? std::sqrt(ssr / (n - 2.0) / sxx) : 0.0;
  fit.ci95_lo = fit.slope - 1.96 * fit.std_error;
  fit.ci95_hi = fit.slope + 1.96 * fit.std_error;
  return fit;
}

ExperimentSummary summarize(Family family, std::uint64_t master_seed, std::int64_t trials,
                            const std::vector<TrialRecord>& records,
                            std::vector<CellFailure> failures) {
  ExperimentSummary summary;
  summary.family = family;
  summary.master_seed = master_seed;
  summary.trials = trials;
  summary.failures = std::move(failures);

  std::map<CellKey, CellStats> cells;
  for (const TrialRecord& record : records) {
    const CellKey key{record.n, record.d, record.phi, record.n_p, record.n_q};
    auto [it, inserted] = cells.try_emplace(key);
    CellStats& stats = it->second;
    if (inserted) {
      stats.key = key;
      stats.min_count = record.pareto_count;
      stats.max_count = record.pareto_count;
    }
    stats.trials += 1;
    stats.count_sum += record.pareto_count;
    stats.count_sq_sum += BigInt(record.pareto_count) * record.pareto_count;
    stats.min_count = std::min(stats.min_count, record.pareto_count);
    stats.max_count = std::max(stats.max_count, record.pareto_count);
  }
  summary.cells.reserve(cells.size());
  for (auto& [key, stats] : cells) {
    summary.cells.push_back(std::move(stats));
  }

  // One growth fit per (d, phi) group along the n axis, when enough cells.
  std::map<std::pair<int, Rational>, std::vector<std::pair<double, double>>> groups;
  for (const CellStats& stats : summary.cells) {
    if (stats.key.n > 0 && stats.mean() > 0.0) {
      groups[{stats.key.d, stats.key.phi}].emplace_back(static_cast<double>(stats.key.n),
                                                        stats.mean());
    }
  }
  for (const auto& [group_key, points] : groups) {
    std::map<double, bool> distinct;
    for (const auto& p : points) {
      distinct[p.first] = true;
    }
    if (distinct.size() < 3) {
      continue;
    }
    FitGroup fit_group;
    fit_group.d = group_key.first;
    fit_group.phi = group_key.second;
    fit_group.fit = fit_growth(points);
    summary.fits.push_back(std::move(fit_group));
  }
  return summary;
}

void write_records_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
  out << "family,n,d,phi,n_p,n_q,seed,trial,pareto_count,wall_millis\n";
  for (const TrialRecord& r : records) {
    out << family_name(r.family) << ',' << r.n << ',' << r.d << ',' << fraction_string(r.phi)
        << ',' << r.n_p << ',' << r.n_q << ',' << r.seed << ',' << r.trial << ','
        << r.pareto_count << ',' << r.wall_millis << '\n';
  }
}

std::vector<TrialRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("CSV is empty");
  }
  if (line != "family,n,d,phi,n_p,n_q,seed,trial,pareto_count,wall_millis") {
    throw std::runtime_error("CSV header does not match the trial record schema");
  }
  std::vector<TrialRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 10) {
      throw std::runtime_error("CSV row has " + std::to_string(fields.size()) +
                               " fields, expected 10");
    }
    TrialRecord r;
    r.family = parse_family(fields[0]);
    r.n = std::stoll(fields[1]);
    r.d = std::stoi(fields[2]);
    r.phi = parse_rational(fields[3]);
    r.n_p = std::stoll(fields[4]);
    r.n_q = std::stoll(fields[5]);
    r.seed = std::stoull(fields[6]);
    r.trial = std::stoll(fields[7]);
    r.pareto_count = std::stoll(fields[8]);
    r.wall_millis = std::stoll(fields[9]);
    records.push_back(std::move(r));
  }
  return records;
}

nlohmann::json records_to_json(const std::vector<TrialRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const TrialRecord& r : records) {
    out.push_back(nlohmann::json{{"family", family_name(r.family)},
                                 {"n", r.n},
                                 {"d", r.d},
                                 {"phi", fraction_string(r.phi)},
                                 {"n_p", r.n_p},
                                 {"n_q", r.n_q},
                                 {"seed", r.seed},
                                 {"trial", r.trial},
                                 {"pareto_count", r.pareto_count},
                                 {"wall_millis", r.wall_millis}});
  }
  return out;
}

std::vector<TrialRecord> records_from_json(const nlohmann::json& j) {
  std::vector<TrialRecord> records;
  for (const nlohmann::json& jr : j) {
    TrialRecord r;
    r.family = parse_family(jr.at("family").get<std::string>());
    r.n = jr.at("n").get<std::int64_t>();
    r.d = jr.at("d").get<int>();
    r.phi = parse_rational(jr.at("phi").get<std::string>());
    r.n_p = jr.at("n_p").get<std::int64_t>();
    r.n_q = jr.at("n_q").get<std::int64_t>();
    r.seed = jr.at("seed").get<std::uint64_t>();
    r.trial = jr.at("trial").get<std::int64_t>();
    r.pareto_count = jr.at("pareto_count").get<std::int64_t>();
    r.wall_millis = jr.at("wall_millis").get<std::int64_t>();
    records.push_back(std::move(r));
  }
  return records;
}

nlohmann::json summary_to_json(const ExperimentSummary& summary) {
  nlohmann::json cells = nlohmann::json::array();
  for (const CellStats& stats : summary.cells) {
    cells.push_back(nlohmann::json{{"n", stats.key.n},
                                   {"d", stats.key.d},
                                   {"phi", fraction_string(stats.key.phi)},
                                   {"n_p", stats.key.n_p},
                                   {"n_q", stats.key.n_q},
                                   {"trials", stats.trials},
                                   {"count_sum", stats.count_sum.str()},
                                   {"mean", stats.mean()},
                                   {"stddev", stats.stddev()},
                                   {"min", stats.min_count},
                                   {"max", stats.max_count}});
  }
  nlohmann::json fits = nlohmann::json::array();
  for (const FitGroup& group : summary.fits) {
    fits.push_back(nlohmann::json{{"d", group.d},
                                  {"phi", fraction_string(group.phi)},
                                  {"x", "n"},
                                  {"slope", group.fit.slope},
                                  {"intercept", group.fit.intercept},
                                  {"r2", group.fit.r2},
                                  {"std_error", group.fit.std_error},
                                  {"ci95", {group.fit.ci95_lo, group.fit.ci95_hi}},
                                  {"points", group.fit.points}});
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const CellFailure& failure : summary.failures) {
    failures.push_back(nlohmann::json{{"n", failure.key.n},
                                      {"d", failure.key.d},
                                      {"phi", fraction_string(failure.key.phi)},
                                      {"n_p", failure.key.n_p},
                                      {"n_q", failure.key.n_q},
                                      {"message", failure.message}});
  }
  return nlohmann::json{{"family", family_name(summary.family)},
                        {"master_seed", summary.master_seed},
                        {"trials", summary.trials},
                        {"cells", std::move(cells)},
                        {"fits", std::move(fits)},
                        {"failures", std::move(failures)}};
}

void emit_results(const std::vector<TrialRecord>& records, const std::string& path,
                  const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  if (format == "csv") {
    write_records_csv(records, out);
  } else if (format == "json") {
    out << records_to_json(records).dump(2) << '\n';
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::vector<TrialRecord> read_results(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  if (format == "csv") {
    return read_records_csv(in);
  }
  if (format == "json") {
    nlohmann::json j;
    in >> j;
    return records_from_json(j);
  }
  throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
}

}  // namespace kpareto
