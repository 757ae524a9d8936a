#include "kpareto/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace kpareto;

TEST_CASE("copy step doubles the Pareto count") {
  SUBCASE("n_p = 1 gives counts (2, 4)") {
    const DoublingCheck check = doubling_counts(1, Rational(1), SampleSeed{11, 0});
    CHECK(check.base_count == 2);
    CHECK(check.extended_count == 4);
    CHECK(check.premise_ok);
    CHECK(check.doubled());
  }
  SUBCASE("holds across n_p and seeds") {
    for (std::int64_t n_p = 2; n_p <= 6; ++n_p) {
      for (std::uint64_t t = 0; t < 25; ++t) {
        CHECK(verify_doubling(n_p, Rational(1), SampleSeed{77, t}));
      }
    }
  }
  SUBCASE("holds for narrower profit boxes") {
    for (std::uint64_t t = 0; t < 25; ++t) {
      CHECK(verify_doubling(4, Rational(3), SampleSeed{78, t}));
    }
  }
  SUBCASE("a too-small copy profit violates the premise and is skipped") {
    const KnapsackInstance realized =
        sample_instance(build_uniform_baseline(3), SampleSeed{5, 0});
    double profit_sum = 0.0;
    for (const Group& group : realized.groups) {
      profit_sum += (*group.objects[0].profits)[0];
    }
    const DoublingCheck check =
        doubling_counts_with_profit(3, Rational(1), SampleSeed{5, 0}, profit_sum - 0.25);
    CHECK_FALSE(check.premise_ok);
    CHECK_FALSE(check.doubled());
    CHECK(check.extended_count == 0);  // extended instance never counted
  }
}

TEST_CASE("every multicriteria solution is Pareto optimal") {
  SUBCASE("(d=2, n_q=1, phi=4): count 3") {
    const ConstructionPlan plan = multicriteria_plan_for(2, Rational(4), 1);
    const KnapsackInstance realized =
        sample_instance(build_multicriteria(plan), SampleSeed{21, 0});
    CHECK(brute_force_pareto(realized).count() == 3);
    CHECK(verify_all_pareto_multi(plan, SampleSeed{21, 0}));
  }
  SUBCASE("(d=2, n_q=2, phi=4): count 9 via m_2 = 5, k_2 = 5") {
    const ConstructionPlan plan = multicriteria_plan_for(2, Rational(4), 2);
    CHECK(plan.m[1] == 5);
    CHECK(plan.k[1] == 5);
    const KnapsackInstance realized =
        sample_instance(build_multicriteria(plan), SampleSeed{22, 0});
    CHECK(brute_force_pareto(realized).count() == 9);
  }
  SUBCASE("(d=3, n_q=2, phi=6): count (1 + C(3,2))^2 = 16 >= (2^3/3)^2") {
    const ConstructionPlan plan = multicriteria_plan_for(3, Rational(6), 2);
    const KnapsackInstance realized =
        sample_instance(build_multicriteria(plan), SampleSeed{23, 0});
    const std::int64_t count = brute_force_pareto(realized).count();
    CHECK(count == 16);
    CHECK(static_cast<double>(count) >= std::pow(8.0 / 3.0, 2.0));
    CHECK(verify_all_pareto_multi(plan, SampleSeed{23, 0}));
  }
}

TEST_CASE("interval separation holds on realized bicriteria instances") {
  for (std::int64_t n : {10, 14, 20}) {
    for (const Rational phi : {Rational(3), Rational(5), Rational(10)}) {
      const ConstructionPlan plan = plan_bicriteria(n, phi);
      for (std::uint64_t t = 0; t < 20; ++t) {
        CHECK(verify_interval_separation(plan, SampleSeed{99, t}));
      }
    }
  }
}

TEST_CASE("multicriteria group profit bounds hold on realizations") {
  for (int d : {2, 3, 4}) {
    for (std::int64_t n_q : {1, 2}) {
      const ConstructionPlan plan = multicriteria_plan_for(d, Rational(2 * d), n_q);
      for (std::uint64_t t = 0; t < 20; ++t) {
        CHECK(verify_group_profit_bounds(plan, SampleSeed{123, t}));
      }
    }
  }
}

TEST_CASE("verify_budget checks N <= n with exact integers") {
  CHECK(verify_budget(plan_bicriteria(10, Rational(3))));
  CHECK(verify_budget(plan_multicriteria(32, 2, Rational(4))));
  CHECK(verify_budget(plan_baseline(7)));

  ConstructionPlan bad = plan_bicriteria(10, Rational(3));
  bad.n = bad.objects_built - 1;
  CHECK_FALSE(verify_budget(bad));
}

TEST_CASE("verify kind mismatches are rejected") {
  const ConstructionPlan baseline = plan_baseline(4);
  CHECK_THROWS_AS(verify_all_pareto_multi(baseline, SampleSeed{}), std::invalid_argument);
  CHECK_THROWS_AS(verify_interval_separation(baseline, SampleSeed{}), std::invalid_argument);
  CHECK_THROWS_AS(verify_group_profit_bounds(baseline, SampleSeed{}), std::invalid_argument);
}
