// Command-line front end: plan, build, sample, enumerate, verify, experiment,
// fit. All randomness is controlled by --seed; every subcommand is
// deterministic given its flags.

#include "kpareto/construction.hpp"
#include "kpareto/engine.hpp"
#include "kpareto/harness.hpp"
#include "kpareto/json_io.hpp"
#include "kpareto/sampler.hpp"
#include "kpareto/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using namespace kpareto;

struct PlanFlags {
  std::string family = "bi";
  std::int64_t n = 0;
  int d = 2;
  std::string phi = "3";
  std::int64_t np = 0;
  std::int64_t nq = 0;
};

void add_plan_flags(CLI::App* cmd, PlanFlags& flags) {
  cmd->add_option("--family", flags.family, "baseline | bi | multi")->required();
  cmd->add_option("--n", flags.n, "object budget");
  cmd->add_option("--d", flags.d, "profit dimensions (multi)");
  cmd->add_option("--phi", flags.phi, "max density, rational or decimal");
  cmd->add_option("--np", flags.np, "direct construction: number of singleton objects (bi)");
  cmd->add_option("--nq", flags.nq, "direct construction: number of copy steps");
}

ConstructionPlan make_plan(const PlanFlags& flags) {
  const Family family = parse_family(flags.family);
  const Rational phi = parse_rational(flags.phi);
  switch (family) {
    case Family::baseline:
      return plan_baseline(flags.n);
    case Family::bicriteria:
      if (flags.np > 0 || flags.nq > 0) {
        return bicriteria_plan_for(flags.np, phi, flags.nq);
      }
      return plan_bicriteria(flags.n, phi);
    case Family::multicriteria:
      if (flags.nq > 0) {
        return multicriteria_plan_for(flags.d, phi, flags.nq);
      }
      return plan_multicriteria(flags.n, flags.d, phi);
  }
  throw std::invalid_argument("unknown family");
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

KnapsackInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  nlohmann::json j;
  in >> j;
  return instance_from_json(j);
}

int run_verify(const std::string& suite, const PlanFlags& flags, std::int64_t trials,
               std::uint64_t seed) {
  const Rational phi = parse_rational(flags.phi);
  std::int64_t passed = 0;
  std::int64_t total = 0;

  if (suite == "doubling") {
    const std::int64_t np = flags.np > 0 ? flags.np : 4;
    for (std::int64_t t = 0; t < trials; ++t) {
      ++total;
      passed += verify_doubling(np, phi, SampleSeed{seed, static_cast<std::uint64_t>(t)});
    }
  } else if (suite == "all-pareto-multi") {
    const ConstructionPlan plan = flags.nq > 0
                                      ? multicriteria_plan_for(flags.d, phi, flags.nq)
                                      : plan_multicriteria(flags.n, flags.d, phi);
    for (std::int64_t t = 0; t < trials; ++t) {
      ++total;
      passed += verify_all_pareto_multi(plan, SampleSeed{seed, static_cast<std::uint64_t>(t)});
    }
  } else if (suite == "interval") {
    const ConstructionPlan plan = flags.np > 0 ? bicriteria_plan_for(flags.np, phi, flags.nq)
                                               : plan_bicriteria(flags.n, phi);
    for (std::int64_t t = 0; t < trials; ++t) {
      ++total;
      passed +=
          verify_interval_separation(plan, SampleSeed{seed, static_cast<std::uint64_t>(t)});
    }
  } else if (suite == "budget") {
    for (std::int64_t n = 4; n <= 40; n += 3) {
      for (const char* p : {"3", "5", "10", "1000000"}) {
        ++total;
        passed += verify_budget(plan_bicriteria(n, parse_rational(p)));
      }
    }
    for (int d = 2; d <= 4; ++d) {
      for (std::int64_t n = 16 * d; n <= 16 * d + 32; n += 8) {
        for (const Rational& p : {Rational(2 * d), Rational(4 * d), Rational(1000000000)}) {
          ++total;
          passed += verify_budget(plan_multicriteria(n, d, p));
        }
      }
    }
  } else if (suite == "m-formula") {
    const std::int64_t terms = flags.nq > 0 ? flags.nq : 20;
    ++total;
    passed += verify_m_formula(flags.d, phi, terms);
  } else {
    throw std::invalid_argument(
        "unknown suite '" + suite +
        "' (expected doubling, all-pareto-multi, interval, budget, m-formula)");
  }

  std::cout << passed << "/" << total << " passed\n";
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower-bound instance workbench for the grouped multi-profit knapsack problem"};
  app.require_subcommand(1);

  PlanFlags plan_flags;
  std::string in_path, out_path, format = "csv", engine = "merge", suite, grid_text, x_axis = "n";
  std::uint64_t seed = 0;
  std::int64_t trial = 0, trials = 100;
  std::uint64_t cap = kDefaultSolutionCap;
  bool emit_set = false;

  CLI::App* plan_cmd = app.add_subcommand("plan", "print a construction plan as JSON");
  add_plan_flags(plan_cmd, plan_flags);

  CLI::App* build_cmd = app.add_subcommand("build", "build an instance and print it as JSON");
  add_plan_flags(build_cmd, plan_flags);
  build_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* sample_cmd = app.add_subcommand("sample", "realize profits of an instance");
  sample_cmd->add_option("--in", in_path, "instance JSON path")->required();
  sample_cmd->add_option("--seed", seed, "master seed (64-bit)");
  sample_cmd->add_option("--trial", trial, "trial index");
  sample_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "count (and emit) the Pareto set");
  enum_cmd->add_option("--in", in_path, "realized instance JSON path")->required();
  enum_cmd->add_option("--engine", engine, "merge | brute");
  enum_cmd->add_option("--cap", cap, "solution-space cap");
  enum_cmd->add_flag("--set", emit_set, "emit the Pareto set as JSON lines");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite,
                         "doubling | all-pareto-multi | interval | budget | m-formula")
      ->required();
  add_plan_flags(verify_cmd, plan_flags);
  verify_cmd->get_option("--family")->required(false);
  verify_cmd->add_option("--trials", trials, "number of seeds");
  verify_cmd->add_option("--seed", seed, "master seed");

  CLI::App* exp_cmd = app.add_subcommand("experiment", "run a Monte Carlo grid");
  std::string exp_family = "baseline";
  exp_cmd->add_option("--family", exp_family, "baseline | bi | multi")->required();
  exp_cmd->add_option("--grid", grid_text, "axes, e.g. \"n=6..16;phi=3,5\"")->required();
  exp_cmd->add_option("--trials", trials, "trials per cell");
  exp_cmd->add_option("--seed", seed, "master seed");
  exp_cmd->add_option("--out", out_path, "records output path");
  exp_cmd->add_option("--format", format, "csv | json");

  CLI::App* fit_cmd = app.add_subcommand("fit", "fit log mean count vs log x from a records CSV");
  fit_cmd->add_option("--in", in_path, "records CSV path")->required();
  fit_cmd->add_option("--x", x_axis, "x axis column: n | phi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (plan_cmd->parsed()) {
      std::cout << plan_to_json(make_plan(plan_flags)).dump(2) << '\n';
    } else if (build_cmd->parsed()) {
      const KnapsackInstance instance = build_instance(make_plan(plan_flags));
      write_output(out_path, instance_to_json(instance).dump(2) + "\n");
    } else if (sample_cmd->parsed()) {
      const KnapsackInstance realized =
          sample_instance(load_instance(in_path), SampleSeed{seed, static_cast<std::uint64_t>(trial)});
      write_output(out_path, instance_to_json(realized).dump(2) + "\n");
    } else if (enum_cmd->parsed()) {
      const KnapsackInstance instance = load_instance(in_path);
      const ParetoResult result =
          engine == "brute" ? brute_force_pareto(instance, cap) : merge_pareto(instance, cap);
      std::cout << nlohmann::json{{"count", result.count()}}.dump() << '\n';
      if (emit_set) {
        for (std::size_t i = 0; i < result.solutions.size(); ++i) {
          std::cout << solution_to_json(instance, result.solutions[i], result.values[i]).dump()
                    << '\n';
        }
      }
    } else if (verify_cmd->parsed()) {
      return run_verify(suite, plan_flags, trials, seed);
    } else if (exp_cmd->parsed()) {
      const Family family = parse_family(exp_family);
      const GridSpec grid = parse_grid(family, grid_text);
      const ExperimentResult result = run_experiment(grid, trials, seed);
      if (!out_path.empty()) {
        emit_results(result.records, out_path, format);
      }
      std::cout << summary_to_json(result.summary).dump(2) << '\n';
    } else if (fit_cmd->parsed()) {
      std::ifstream in(in_path, std::ios::binary);
      if (!in) {
        throw std::runtime_error("cannot open for reading: " + in_path);
      }
      const std::vector<TrialRecord> records = read_records_csv(in);
      // Mean count per x value, exact integer sums.
      std::map<Rational, std::pair<BigInt, std::int64_t>> cells;
      for (const TrialRecord& r : records) {
        const Rational x = x_axis == "phi" ? r.phi : Rational(r.n);
        auto& [sum, count] = cells[x];
        sum += r.pareto_count;
        count += 1;
      }
      std::vector<std::pair<double, double>> points;
      for (const auto& [x, agg] : cells) {
        points.emplace_back(to_double(x), to_double(Rational(agg.first, agg.second)));
      }
      const GrowthFit fit = fit_growth(points);
      std::cout << nlohmann::json{{"x", x_axis},
                                  {"slope", fit.slope},
                                  {"intercept", fit.intercept},
                                  {"r2", fit.r2},
                                  {"std_error", fit.std_error},
                                  {"ci95", {fit.ci95_lo, fit.ci95_hi}},
                                  {"points", fit.points}}
                       .dump(2)
                << '\n';
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
