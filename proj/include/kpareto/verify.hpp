#ifndef KPARETO_VERIFY_HPP
#define KPARETO_VERIFY_HPP

#include "kpareto/construction.hpp"
#include "kpareto/engine.hpp"
#include "kpareto/sampler.hpp"

namespace kpareto {

struct DoublingCheck {
  std::int64_t base_count = 0;
  std::int64_t extended_count = 0;
  bool premise_ok = false;  // copy profit strictly exceeds the profit sum

  bool doubled() const { return premise_ok && extended_count == 2 * base_count; }
};

/// Builds objects with weights 2^1..2^n_p and profits uniform in [0, 1/phi],
/// realizes them under `seed`, then appends a copy object with weight
/// 2^(n_p+1) and the fixed profit `copy_profit`. Counts both Pareto sets.
/// When the copy profit does not exceed the realized profit sum the premise
/// fails and the extended instance is not counted.
DoublingCheck doubling_counts_with_profit(std::int64_t n_p, const Rational& phi, SampleSeed seed,
                                          double copy_profit);

/// Same, with the copy profit chosen as (profit sum) + 1.
DoublingCheck doubling_counts(std::int64_t n_p, const Rational& phi, SampleSeed seed);

/// True iff the copy step exactly doubles the Pareto count.
bool verify_doubling(std::int64_t n_p, const Rational& phi, SampleSeed seed);

/// Builds and realizes the multi-criteria instance and checks that every
/// solution is Pareto optimal: count == (1 + C(d, d_hat))^n_q.
bool verify_all_pareto_multi(const ConstructionPlan& plan, SampleSeed seed);

/// Realized bi-criteria separation: each split group's profit total q_i
/// strictly exceeds sum(p_j) + sum_{j<i} q_j. `slack` absorbs float
/// summation error against the exact statement.
bool verify_interval_separation(const ConstructionPlan& plan, SampleSeed seed,
                                double slack = 1e-12);

/// Realized multi-criteria per-group bounds for every Hamming-weight-d_hat
/// choice: large coordinates exceed m_i - k_i/phi, small coordinate totals
/// stay at or below d_hat * k_i / phi.
bool verify_group_profit_bounds(const ConstructionPlan& plan, SampleSeed seed,
                                double slack = 1e-12);

/// N <= n with N recomputed from the plan's k-sequence, exact integers.
bool verify_budget(const ConstructionPlan& plan);

/// Every box side has width exactly 1/phi_eff and lies inside [0, 1].
bool verify_box_geometry(const KnapsackInstance& instance, const Rational& phi_eff);

/// Recurrence and explicit formula agree exactly for i <= terms.
bool verify_m_formula(int d, const Rational& phi, std::int64_t terms);

/// Each group's heaviest choice strictly outweighs all earlier groups'
/// heaviest choices combined (exact rationals).
bool verify_weight_separation(const KnapsackInstance& instance);

}  // namespace kpareto

#endif  // KPARETO_VERIFY_HPP
