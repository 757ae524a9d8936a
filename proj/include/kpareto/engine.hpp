#ifndef KPARETO_ENGINE_HPP
#define KPARETO_ENGINE_HPP

#include "kpareto/model.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace kpareto {

inline constexpr std::uint64_t kDefaultSolutionCap = std::uint64_t{1} << 26;

/// Product of the per-group choice counts.
BigInt solution_space_size(const KnapsackInstance& instance);

/// Visits every solution in lexicographic order over group choice indices.
/// Throws when the solution space exceeds `cap`.
void for_each_solution(const KnapsackInstance& instance, std::uint64_t cap,
                       const std::function<void(const Solution&)>& fn);

std::vector<Solution> enumerate_solutions(const KnapsackInstance& instance,
                                          std::uint64_t cap = kDefaultSolutionCap);

/// Objective value of every (group, choice) pair of a realized instance.
/// Both engines fold these in group order, so their floats agree bitwise.
std::vector<std::vector<ObjectiveVector>> group_choice_values(const KnapsackInstance& instance);

struct ParetoResult {
  std::vector<Solution> solutions;
  std::vector<ObjectiveVector> values;
  std::size_t max_front = 0;  // peak intermediate front size

  std::int64_t count() const { return static_cast<std::int64_t>(solutions.size()); }
};

/// Enumerates all solutions and filters once.
ParetoResult brute_force_pareto(const KnapsackInstance& instance,
                                std::uint64_t cap = kDefaultSolutionCap);

/// Folds groups left to right, keeping after each fold only the non-dominated
/// partial solutions (equal-vector duplicates all retained, so counts are
/// preserved). Produces the identical Pareto solution set as brute force.
ParetoResult merge_pareto(const KnapsackInstance& instance,
                          std::uint64_t cap = kDefaultSolutionCap);

/// Equality of the selected solution sets, ignoring order.
bool same_solution_set(const ParetoResult& a, const ParetoResult& b);

}  // namespace kpareto

#endif  // KPARETO_ENGINE_HPP
