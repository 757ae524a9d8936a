#include "kpareto/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace kpareto {

namespace {

void require_same_dim(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("objective vector dimension mismatch");
  }
}

}  // namespace

ObjectiveVector zero_objective(int d) {
  return ObjectiveVector{Rational(0), std::vector<double>(static_cast<std::size_t>(d), 0.0)};
}

ObjectiveVector operator+(const ObjectiveVector& a, const ObjectiveVector& b) {
  require_same_dim(a, b);
  ObjectiveVector out = a;
  out.weight += b.weight;
  for (int j = 0; j < out.dim(); ++j) {
    out.profits[j] += b.profits[j];
  }
  return out;
}

bool same_vector(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.weight == b.weight && a.profits == b.profits;
}

bool dominates(const ObjectiveVector& x, const ObjectiveVector& y) {
  require_same_dim(x, y);
  if (x.weight > y.weight) {
    return false;
  }
  bool strict = x.weight < y.weight;
  for (int j = 0; j < x.dim(); ++j) {
    if (x.profits[j] < y.profits[j]) {
      return false;
    }
    strict = strict || x.profits[j] > y.profits[j];
  }
  return strict;
}

ProfitBox ProfitBox::cube(int d, const Rational& lo, const Rational& hi) {
  ProfitBox box;
  box.intervals.assign(static_cast<std::size_t>(d), Interval{lo, hi});
  return box;
}

std::size_t KnapsackInstance::object_count() const {
  std::size_t total = 0;
  for (const Group& group : groups) {
    total += group.objects.size();
  }
  return total;
}

bool KnapsackInstance::realized() const {
  for (const Group& group : groups) {
    for (const KnapsackObject& object : group.objects) {
      if (!object.profits) {
        return false;
      }
    }
  }
  return true;
}

void KnapsackInstance::validate() const {
  if (d < 1) {
    throw std::invalid_argument("instance dimension d must be >= 1");
  }
  if (phi < 1) {
    throw std::invalid_argument("instance phi must be >= 1");
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Group& group = groups[g];
    const std::string where = "group " + std::to_string(g);
    for (const KnapsackObject& object : group.objects) {
      if (object.weight <= 0) {
        throw std::invalid_argument(where + ": object weight must be positive");
      }
      if (object.box.dim() != d) {
        throw std::invalid_argument(where + ": profit box dimension mismatch");
      }
      for (const ProfitBox::Interval& interval : object.box.intervals) {
        if (interval.lo > interval.hi) {
          throw std::invalid_argument(where + ": box interval has lo > hi");
        }
      }
      if (object.profits) {
        if (static_cast<int>(object.profits->size()) != d) {
          throw std::invalid_argument(where + ": realized profit dimension mismatch");
        }
        for (double p : *object.profits) {
          if (!std::isfinite(p)) {
            throw std::invalid_argument(where + ": realized profit is not finite");
          }
        }
      }
    }
    if (group.choices.empty()) {
      throw std::invalid_argument(where + ": group has no choices");
    }
    std::set<Choice> seen;
    for (const Choice& choice : group.choices) {
      if (choice.size() != group.objects.size()) {
        throw std::invalid_argument(where + ": choice length does not match object count");
      }
      if (!seen.insert(choice).second) {
        throw std::invalid_argument(where + ": duplicate choice");
      }
    }
  }
}

ObjectiveVector solution_value(const KnapsackInstance& instance, const Solution& s) {
  if (s.pick.size() != instance.groups.size()) {
    throw std::invalid_argument("solution does not match instance group count");
  }
  ObjectiveVector total = zero_objective(instance.d);
  for (std::size_t g = 0; g < instance.groups.size(); ++g) {
    const Group& group = instance.groups[g];
    if (s.pick[g] >= group.choices.size()) {
      throw std::invalid_argument("choice index out of range in group " + std::to_string(g));
    }
    const Choice& choice = group.choices[s.pick[g]];
    ObjectiveVector part = zero_objective(instance.d);
    for (std::size_t o = 0; o < group.objects.size(); ++o) {
      if (!choice[o]) {
        continue;
      }
      const KnapsackObject& object = group.objects[o];
      if (!object.profits) {
        throw std::invalid_argument("instance not sampled");
      }
      part.weight += object.weight;
      for (int j = 0; j < instance.d; ++j) {
        part.profits[j] += (*object.profits)[j];
      }
    }
    total.weight += part.weight;
    for (int j = 0; j < instance.d; ++j) {
      total.profits[j] += part.profits[j];
    }
  }
  return total;
}

std::vector<std::size_t> pareto_indices(const std::vector<ObjectiveVector>& values) {
  const std::size_t n = values.size();
  if (n == 0) {
    return {};
  }
  const int d = values.front().dim();
  for (const ObjectiveVector& v : values) {
    if (v.dim() != d) {
      throw std::invalid_argument("objective vector dimension mismatch");
    }
  }

  // Order so every potential dominator of a point precedes it: weight
  // ascending, profits lexicographically descending on weight ties. Equal
  // vectors cannot dominate each other, so ties within the order are safe.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a].weight != values[b].weight) {
      return values[a].weight < values[b].weight;
    }
    return values[a].profits > values[b].profits;
  });

  std::vector<std::size_t> kept;
  std::vector<char> keep(n, 0);
  kept.reserve(64);
  for (std::size_t idx : order) {
    bool dominated = false;
    if (d == 1) {
      // The last kept point always carries the maximum profit seen so far.
      dominated = !kept.empty() && dominates(values[kept.back()], values[idx]);
    } else {
      for (std::size_t j : kept) {
        if (dominates(values[j], values[idx])) {
          dominated = true;
          break;
        }
      }
    }
    if (!dominated) {
      kept.push_back(idx);
      keep[idx] = 1;
    }
  }

  std::vector<std::size_t> result;
  result.reserve(kept.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) {
      result.push_back(i);
    }
  }
  return result;
}

std::vector<std::pair<Solution, ObjectiveVector>> pareto_filter(
    const std::vector<std::pair<Solution, ObjectiveVector>>& points) {
  std::vector<ObjectiveVector> values;
  values.reserve(points.size());
  for (const auto& [solution, value] : points) {
    values.push_back(value);
  }
  std::vector<std::pair<Solution, ObjectiveVector>> out;
  for (std::size_t idx : pareto_indices(values)) {
    out.push_back(points[idx]);
  }
  return out;
}

}  // namespace kpareto
