#include "kpareto/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace kpareto {

namespace {

KnapsackInstance uniform_box_prefix(std::int64_t n_p, const Rational& phi) {
  if (n_p < 1) {
    throw std::invalid_argument("doubling check requires n_p >= 1");
  }
  if (phi < 1) {
    throw std::invalid_argument("doubling check requires phi >= 1");
  }
  KnapsackInstance instance;
  instance.d = 1;
  instance.phi = phi;
  const Rational inv_phi = Rational(1) / phi;
  for (std::int64_t i = 1; i <= n_p; ++i) {
    Group group;
    group.objects.push_back(
        KnapsackObject{Rational(BigInt(1) << i), ProfitBox::cube(1, 0, inv_phi), std::nullopt});
    group.choices = {Choice{0}, Choice{1}};
    instance.groups.push_back(std::move(group));
  }
  return instance;
}

}  // namespace

DoublingCheck doubling_counts_with_profit(std::int64_t n_p, const Rational& phi, SampleSeed seed,
                                          double copy_profit) {
  const KnapsackInstance realized = sample_instance(uniform_box_prefix(n_p, phi), seed);

  DoublingCheck check;
  check.base_count = brute_force_pareto(realized).count();

  double profit_sum = 0.0;
  for (const Group& group : realized.groups) {
    profit_sum += (*group.objects.front().profits)[0];
  }
  check.premise_ok = copy_profit > profit_sum;
  if (!check.premise_ok) {
    return check;
  }

  KnapsackInstance extended = realized;
  const Rational q = rational_from_double(copy_profit);
  Group copy_group;
  copy_group.objects.push_back(KnapsackObject{Rational(BigInt(1) << (n_p + 1)),
                                              ProfitBox{{ProfitBox::Interval{q, q}}},
                                              std::vector<double>{copy_profit}});
  copy_group.choices = {Choice{0}, Choice{1}};
  extended.groups.push_back(std::move(copy_group));

  check.extended_count = brute_force_pareto(extended).count();
  return check;
}

DoublingCheck doubling_counts(std::int64_t n_p, const Rational& phi, SampleSeed seed) {
  const KnapsackInstance realized = sample_instance(uniform_box_prefix(n_p, phi), seed);
  double profit_sum = 0.0;
  for (const Group& group : realized.groups) {
    profit_sum += (*group.objects.front().profits)[0];
  }
  return doubling_counts_with_profit(n_p, phi, seed, profit_sum + 1.0);
}

bool verify_doubling(std::int64_t n_p, const Rational& phi, SampleSeed seed) {
  return doubling_counts(n_p, phi, seed).doubled();
}

bool verify_all_pareto_multi(const ConstructionPlan& plan, SampleSeed seed) {
  if (plan.kind != Family::multicriteria) {
    throw std::invalid_argument("verify_all_pareto_multi requires a multicriteria plan");
  }
  const KnapsackInstance realized = sample_instance(build_multicriteria(plan), seed);
  const BigInt expected = pow(BigInt(1) + binomial(plan.d, plan.d_hat),
                              static_cast<unsigned>(plan.n_q));
  return BigInt(brute_force_pareto(realized).count()) == expected;
}

bool verify_interval_separation(const ConstructionPlan& plan, SampleSeed seed, double slack) {
  if (plan.kind != Family::bicriteria) {
    throw std::invalid_argument("verify_interval_separation requires a bicriteria plan");
  }
  const KnapsackInstance realized = sample_instance(build_bicriteria(plan), seed);

  double p_sum = 0.0;
  for (std::int64_t i = 0; i < plan.n_p; ++i) {
    p_sum += (*realized.groups[static_cast<std::size_t>(i)].objects.front().profits)[0];
  }

  double q_prefix = 0.0;
  for (std::int64_t i = 0; i < plan.n_q; ++i) {
    const Group& group = realized.groups[static_cast<std::size_t>(plan.n_p + i)];
    double q_i = 0.0;
    for (const KnapsackObject& object : group.objects) {
      q_i += (*object.profits)[0];
    }
    // The group total must land in Q_i = (m_i - k_i/phi, m_i] (rational
    // bounds) and beat everything before it.
    const Rational& mi = plan.m[static_cast<std::size_t>(i)];
    const Rational ki(plan.k[static_cast<std::size_t>(i)]);
    if (!(q_i > to_double(mi - ki / plan.phi_eff) - slack)) {
      return false;
    }
    if (!(q_i <= to_double(mi) + slack)) {
      return false;
    }
    if (!(q_i > p_sum + q_prefix - slack)) {
      return false;
    }
    q_prefix += q_i;
  }
  return true;
}

bool verify_group_profit_bounds(const ConstructionPlan& plan, SampleSeed seed, double slack) {
  if (plan.kind != Family::multicriteria) {
    throw std::invalid_argument("verify_group_profit_bounds requires a multicriteria plan");
  }
  const KnapsackInstance realized = sample_instance(build_multicriteria(plan), seed);
  const int d = plan.d;

  for (std::int64_t i = 0; i < plan.n_q; ++i) {
    const Group& group = realized.groups[static_cast<std::size_t>(i)];
    const std::int64_t ki = plan.k[static_cast<std::size_t>(i)];
    const Rational& mi = plan.m[static_cast<std::size_t>(i)];
    const double large_floor = to_double(mi - Rational(ki) / plan.phi_eff);
    const double small_ceiling = to_double(Rational(plan.d_hat * ki) / plan.phi_eff);

    for (const Choice& choice : group.choices) {
      if (std::none_of(choice.begin(), choice.end(), [](std::uint8_t b) { return b != 0; })) {
        continue;  // all-zero selector
      }
      std::vector<double> totals(static_cast<std::size_t>(d), 0.0);
      std::vector<char> large(static_cast<std::size_t>(d), 0);
      for (std::size_t o = 0; o < group.objects.size(); ++o) {
        if (!choice[o]) {
          continue;
        }
        // Objects are laid out slot-major: object o belongs to slot o / k_i.
        large[o / static_cast<std::size_t>(ki)] = 1;
        for (int c = 0; c < d; ++c) {
          totals[static_cast<std::size_t>(c)] += (*group.objects[o].profits)[c];
        }
      }
      for (int c = 0; c < d; ++c) {
        if (large[static_cast<std::size_t>(c)]) {
          if (!(totals[static_cast<std::size_t>(c)] > large_floor - slack)) {
            return false;
          }
        } else {
          if (!(totals[static_cast<std::size_t>(c)] <= small_ceiling + slack)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool verify_budget(const ConstructionPlan& plan) {
  std::int64_t split_objects = 0;
  for (std::int64_t ki : plan.k) {
    split_objects += ki;
  }
  std::int64_t expected = 0;
  switch (plan.kind) {
    case Family::baseline:
      expected = plan.n;
      break;
    case Family::bicriteria:
      expected = plan.n_p + split_objects;
      break;
    case Family::multicriteria:
      expected = static_cast<std::int64_t>(plan.d) * split_objects;
      break;
  }
  return plan.objects_built == expected && plan.objects_built <= plan.n;
}

bool verify_box_geometry(const KnapsackInstance& instance, const Rational& phi_eff) {
  const Rational width = Rational(1) / phi_eff;
  for (const Group& group : instance.groups) {
    for (const KnapsackObject& object : group.objects) {
      for (const ProfitBox::Interval& interval : object.box.intervals) {
        if (interval.hi - interval.lo != width) {
          return false;
        }
        if (interval.lo < 0 || interval.hi > 1) {
          return false;
        }
      }
    }
  }
  return true;
}

bool verify_m_formula(int d, const Rational& phi, std::int64_t terms) {
  const auto recurrence = m_sequence_multi(d, phi, terms);
  const auto explicit_form = m_sequence_multi_explicit(d, phi, terms);
  return recurrence == explicit_form;
}

bool verify_weight_separation(const KnapsackInstance& instance) {
  Rational prefix_total = 0;
  for (std::size_t g = 0; g < instance.groups.size(); ++g) {
    const Group& group = instance.groups[g];
    Rational heaviest = 0;
    for (const Choice& choice : group.choices) {
      Rational weight = 0;
      for (std::size_t o = 0; o < group.objects.size(); ++o) {
        if (choice[o]) {
          weight += group.objects[o].weight;
        }
      }
      heaviest = std::max(heaviest, weight);
    }
    if (g > 0 && !(heaviest > prefix_total)) {
      return false;
    }
    prefix_total += heaviest;
  }
  return true;
}

}  // namespace kpareto
