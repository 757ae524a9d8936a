#include "kpareto/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace kpareto {

BigInt solution_space_size(const KnapsackInstance& instance) {
  BigInt total = 1;
  for (const Group& group : instance.groups) {
    total *= static_cast<std::uint64_t>(group.choices.size());
  }
  return total;
}

void for_each_solution(const KnapsackInstance& instance, std::uint64_t cap,
                       const std::function<void(const Solution&)>& fn) {
  if (solution_space_size(instance) > cap) {
    throw std::runtime_error("solution space exceeds the enumeration cap of " +
                             std::to_string(cap) + " solutions");
  }
  const std::size_t k = instance.groups.size();
  Solution s;
  s.pick.assign(k, 0);
  for (const Group& group : instance.groups) {
    if (group.choices.empty()) {
      return;  // empty product
    }
  }
  while (true) {
    fn(s);
    std::size_t g = k;
    while (g > 0) {
      --g;
      if (++s.pick[g] < instance.groups[g].choices.size()) {
        break;
      }
      s.pick[g] = 0;
      if (g == 0) {
        return;
      }
    }
    if (k == 0) {
      return;  // single empty solution already visited
    }
  }
}

std::vector<Solution> enumerate_solutions(const KnapsackInstance& instance, std::uint64_t cap) {
  std::vector<Solution> out;
  for_each_solution(instance, cap, [&](const Solution& s) { out.push_back(s); });
  return out;
}

std::vector<std::vector<ObjectiveVector>> group_choice_values(const KnapsackInstance& instance) {
  std::vector<std::vector<ObjectiveVector>> values;
  values.reserve(instance.groups.size());
  for (const Group& group : instance.groups) {
    std::vector<ObjectiveVector> per_choice;
    per_choice.reserve(group.choices.size());
    for (const Choice& choice : group.choices) {
      ObjectiveVector value = zero_objective(instance.d);
      for (std::size_t o = 0; o < group.objects.size(); ++o) {
        if (!choice[o]) {
          continue;
        }
        const KnapsackObject& object = group.objects[o];
        if (!object.profits) {
          throw std::invalid_argument("instance not sampled");
        }
        value.weight += object.weight;
        for (int j = 0; j < instance.d; ++j) {
          value.profits[j] += (*object.profits)[j];
        }
      }
      per_choice.push_back(std::move(value));
    }
    values.push_back(std::move(per_choice));
  }
  return values;
}

ParetoResult brute_force_pareto(const KnapsackInstance& instance, std::uint64_t cap) {
  const auto choice_values = group_choice_values(instance);
  std::vector<Solution> solutions;
  std::vector<ObjectiveVector> values;
  for_each_solution(instance, cap, [&](const Solution& s) {
    ObjectiveVector value = zero_objective(instance.d);
    for (std::size_t g = 0; g < choice_values.size(); ++g) {
      value = value + choice_values[g][s.pick[g]];
    }
    solutions.push_back(s);
    values.push_back(std::move(value));
  });

  ParetoResult result;
  for (std::size_t idx : pareto_indices(values)) {
    result.solutions.push_back(std::move(solutions[idx]));
    result.values.push_back(std::move(values[idx]));
  }
  result.max_front = result.solutions.size();
  return result;
}

ParetoResult merge_pareto(const KnapsackInstance& instance, std::uint64_t cap) {
  const auto choice_values = group_choice_values(instance);

  std::vector<Solution> partial_solutions{Solution{}};
  std::vector<ObjectiveVector> partial_values{zero_objective(instance.d)};
  std::size_t max_front = 1;

  for (std::size_t g = 0; g < choice_values.size(); ++g) {
    const auto& per_choice = choice_values[g];
    const std::uint64_t expanded =
        static_cast<std::uint64_t>(partial_solutions.size()) * per_choice.size();
    if (expanded > cap) {
      throw std::runtime_error("merge front exceeds the cap of " + std::to_string(cap) +
                               " partial solutions");
    }

    std::vector<Solution> next_solutions;
    std::vector<ObjectiveVector> next_values;
    next_solutions.reserve(expanded);
    next_values.reserve(expanded);
    for (std::size_t p = 0; p < partial_solutions.size(); ++p) {
      for (std::uint32_t c = 0; c < per_choice.size(); ++c) {
        Solution s = partial_solutions[p];
        s.pick.push_back(c);
        next_solutions.push_back(std::move(s));
        next_values.push_back(partial_values[p] + per_choice[c]);
      }
    }

    std::vector<Solution> kept_solutions;
    std::vector<ObjectiveVector> kept_values;
    for (std::size_t idx : pareto_indices(next_values)) {
      kept_solutions.push_back(std::move(next_solutions[idx]));
      kept_values.push_back(std::move(next_values[idx]));
    }
    partial_solutions = std::move(kept_solutions);
    partial_values = std::move(kept_values);
    max_front = std::max(max_front, partial_solutions.size());
  }

  ParetoResult result;
  result.solutions = std::move(partial_solutions);
  result.values = std::move(partial_values);
  result.max_front = max_front;
  return result;
}

bool same_solution_set(const ParetoResult& a, const ParetoResult& b) {
  if (a.solutions.size() != b.solutions.size()) {
    return false;
  }
  std::vector<Solution> lhs = a.solutions;
  std::vector<Solution> rhs = b.solutions;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

}  // namespace kpareto
