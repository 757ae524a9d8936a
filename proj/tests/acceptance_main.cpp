// Acceptance suite: one check per claim the artifact is expected to
// reproduce, each printed as a PASS/FAIL line with its runtime. Exit code is
// nonzero when any check fails.

#include "kpareto/construction.hpp"
#include "kpareto/engine.hpp"
#include "kpareto/harness.hpp"
#include "kpareto/sampler.hpp"
#include "kpareto/verify.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kpareto;

constexpr std::uint64_t kMasterSeed = 20260810;

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<ConstructionPlan> bicriteria_test_cells() {
  std::vector<ConstructionPlan> plans;
  for (std::int64_t n = 10; n <= 20; ++n) {
    for (const Rational phi : {Rational(3), Rational(5), Rational(10)}) {
      plans.push_back(plan_bicriteria(n, phi));
    }
  }
  return plans;
}

std::vector<ConstructionPlan> multicriteria_test_cells() {
  std::vector<ConstructionPlan> plans;
  for (int d : {2, 3, 4}) {
    for (std::int64_t n_q : {1, 2, 3}) {
      for (const Rational phi : {Rational(2 * d), Rational(4 * d)}) {
        plans.push_back(multicriteria_plan_for(d, phi, n_q));
      }
    }
  }
  return plans;
}

Outcome copy_step_doubling() {
  Outcome outcome;
  int passed = 0, total = 0;
  for (std::int64_t n_p = 1; n_p <= 6; ++n_p) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      ++total;
      passed += verify_doubling(n_p, Rational(1), SampleSeed{kMasterSeed, t});
    }
  }
  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) + " doubled exactly";
  return outcome;
}

Outcome interval_separation() {
  Outcome outcome;
  int passed = 0, total = 0;
  for (const ConstructionPlan& plan : bicriteria_test_cells()) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      ++total;
      passed += verify_interval_separation(plan, SampleSeed{kMasterSeed, t});
    }
  }
  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) +
                   " realizations satisfied q_i > sum(p) + sum(q_<i)";
  return outcome;
}

Outcome bicriteria_counting_identity() {
  Outcome outcome;
  int passed = 0, total = 0;
  for (std::int64_t n : {10, 13, 16, 20}) {
    for (const Rational phi : {Rational(3), Rational(5), Rational(10)}) {
      const ConstructionPlan plan = plan_bicriteria(n, phi);
      const KnapsackInstance instance = build_bicriteria(plan);
      for (std::uint64_t t = 0; t < 50; ++t) {
        const KnapsackInstance realized = sample_instance(instance, SampleSeed{kMasterSeed, t});
        KnapsackInstance sub = realized;
        sub.groups.resize(static_cast<std::size_t>(plan.n_p));  // realized profits carried
        const std::int64_t full = merge_pareto(realized).count();
        const std::int64_t base = merge_pareto(sub).count();
        ++total;
        passed += full == (std::int64_t{1} << plan.n_q) * base;
      }
    }
  }
  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) +
                   " realizations matched count = 2^n_q * base";
  return outcome;
}

Outcome baseline_growth() {
  Outcome outcome;
  const GridSpec grid = parse_grid(Family::baseline, "n=6..16");
  const ExperimentResult result = run_experiment(grid, 500, kMasterSeed);
  if (result.summary.fits.size() != 1) {
    outcome.ok = false;
    outcome.detail = "expected one growth fit";
    return outcome;
  }
  const double slope = result.summary.fits[0].fit.slope;
  double previous = 0.0;
  bool increasing = true;
  for (const CellStats& cell : result.summary.cells) {
    increasing = increasing && cell.mean() > previous;
    previous = cell.mean();
  }
  outcome.ok = slope >= 1.6 && slope <= 2.4 && increasing;
  std::ostringstream detail;
  detail << "log-log slope " << slope << " in [1.6, 2.4], means "
         << (increasing ? "strictly increasing" : "NOT increasing");
  outcome.detail = detail.str();
  return outcome;
}

Outcome multicriteria_all_pareto() {
  Outcome outcome;
  int passed = 0, total = 0;
  for (const ConstructionPlan& plan : multicriteria_test_cells()) {
    for (std::uint64_t t = 0; t < 50; ++t) {
      ++total;
      passed += verify_all_pareto_multi(plan, SampleSeed{kMasterSeed, t});
    }
  }
  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) +
                   " realizations had count = (1 + C(d, ceil(d/2)))^n_q";
  return outcome;
}

Outcome m_sequence_consistency() {
  Outcome outcome;
  int passed = 0, total = 0;
  for (int d = 2; d <= 5; ++d) {
    for (const Rational& phi : {Rational(d + 1), Rational(2 * d), Rational(4 * d),
                                Rational(3 * d + 1, 3), Rational(16 * d)}) {
      ++total;
      passed += verify_m_formula(d, phi, 20);
    }
  }
  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) +
                   " (d, phi) cells agree exactly for i <= 20";
  return outcome;
}

Outcome object_budgets() {
  Outcome outcome;
  int passed = 0, total = 0;
  const auto check = [&](const ConstructionPlan& plan) {
    ++total;
    passed += verify_budget(plan);
  };
  for (const ConstructionPlan& plan : bicriteria_test_cells()) {
    check(plan);
  }
  for (std::int64_t n = 4; n <= 40; n += 3) {
    check(plan_bicriteria(n, Rational(1000000)));  // exponential regime
  }
  for (int d : {2, 3, 4}) {
    for (std::int64_t n : {16 * d, 16 * d + 9, 16 * d + 20}) {
      for (const Rational phi : {Rational(2 * d), Rational(4 * d), Rational(1000000000)}) {
        check(plan_multicriteria(n, d, phi));
      }
    }
  }
  for (std::int64_t n = 1; n <= 16; ++n) {
    check(plan_baseline(n));
  }
  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) +
                   " planner cells satisfy N <= n exactly";
  return outcome;
}

Outcome density_bound() {
  Outcome outcome;
  int passed = 0, total = 0;
  const auto check = [&](const ConstructionPlan& plan) {
    ++total;
    passed += verify_box_geometry(build_instance(plan), plan.phi_eff);
  };
  for (const ConstructionPlan& plan : bicriteria_test_cells()) {
    check(plan);
  }
  check(plan_bicriteria(4, Rational(1000000)));
  check(plan_bicriteria(40, Rational(1000000)));
  for (const ConstructionPlan& plan : multicriteria_test_cells()) {
    check(plan);
  }
  check(plan_multicriteria(32, 2, Rational(1000000000)));
  check(plan_baseline(8));
  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) +
                   " instances have all box sides = 1/phi_eff inside [0,1]";
  return outcome;
}

Outcome phi_prime_fixed_points() {
  Outcome outcome;
  bool ok = true;
  std::ostringstream detail;

  for (std::int64_t n : {4, 10, 40}) {
    const double phi_prime = solve_phi_prime_bi(n);
    const double ratio = (2.0 * phi_prime - 1.0) / (phi_prime - 1.0);
    const double residual =
        std::fabs(phi_prime - std::pow(ratio, static_cast<double>(n - 1) / 3.0));
    ok = ok && residual < 1e-9;
  }
  const double golden_gap = std::fabs(solve_phi_prime_bi(4) - (3.0 + std::sqrt(5.0)) / 2.0);
  ok = ok && golden_gap < 1e-9;

  const double multi_prime = solve_phi_prime_multi(32, 2);
  const double rho = 2.0 * multi_prime / (multi_prime - 2.0);
  const double multi_residual = std::fabs(multi_prime - 2.0 - 0.5 * std::pow(rho, 8.0));
  ok = ok && multi_residual < 1e-9 && multi_prime >= 65.0 * 2;

  outcome.ok = ok;
  detail << "bi residuals < 1e-9; |phi'(4) - (3+sqrt5)/2| = " << golden_gap
         << "; phi'(32,2) = " << multi_prime << " >= 130";
  outcome.detail = detail.str();
  return outcome;
}

Outcome engine_oracle_equivalence() {
  Outcome outcome;
  int passed = 0, total = 0;
  const auto check = [&](const KnapsackInstance& realized) {
    ++total;
    const ParetoResult brute = brute_force_pareto(realized);
    const ParetoResult merged = merge_pareto(realized);
    passed += same_solution_set(brute, merged);
  };

  std::mt19937_64 rng(kMasterSeed);
  for (int it = 0; it < 200; ++it) {
    const KnapsackInstance instance = testing::make_random_instance(rng, 14, 3);
    check(sample_instance(instance, SampleSeed{kMasterSeed, static_cast<std::uint64_t>(it)}));
  }
  for (const ConstructionPlan& plan : bicriteria_test_cells()) {
    check(sample_instance(build_bicriteria(plan), SampleSeed{kMasterSeed, 1}));
  }
  for (const ConstructionPlan& plan : multicriteria_test_cells()) {
    check(sample_instance(build_multicriteria(plan), SampleSeed{kMasterSeed, 1}));
  }
  for (std::int64_t n = 6; n <= 16; ++n) {
    check(sample_instance(build_uniform_baseline(n), SampleSeed{kMasterSeed, 2}));
  }

  outcome.ok = passed == total;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(total) +
                   " instances: merge and brute force select identical sets";
  return outcome;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"copy-step-doubling", copy_step_doubling},
      {"interval-separation", interval_separation},
      {"bicriteria-counting-identity", bicriteria_counting_identity},
      {"baseline-growth", baseline_growth},
      {"multicriteria-all-pareto", multicriteria_all_pareto},
      {"m-sequence-consistency", m_sequence_consistency},
      {"object-budgets", object_budgets},
      {"density-bound", density_bound},
      {"phi-prime-fixed-points", phi_prime_fixed_points},
      {"engine-oracle-equivalence", engine_oracle_equivalence},
  };

  const std::string filter = argc > 1 ? argv[1] : "";
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!filter.empty() && filter != criteria[i].name) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu %-30s (%6.2f s)  %s\n", outcome.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, seconds, outcome.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && outcome.ok;
  }
  return all_ok ? 0 : 1;
}
