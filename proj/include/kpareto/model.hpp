#ifndef KPARETO_MODEL_HPP
#define KPARETO_MODEL_HPP

#include "kpareto/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kpareto {

/// One weight (minimized, exact rational) plus d profits (maximized, double).
struct ObjectiveVector {
  Rational weight;
  std::vector<double> profits;

  int dim() const { return static_cast<int>(profits.size()); }
};

ObjectiveVector zero_objective(int d);
ObjectiveVector operator+(const ObjectiveVector& a, const ObjectiveVector& b);
bool same_vector(const ObjectiveVector& a, const ObjectiveVector& b);

/// True iff x is at least as good as y in every objective (weight minimized,
/// every profit maximized) and strictly better in at least one. Equal vectors
/// dominate in neither direction.
bool dominates(const ObjectiveVector& x, const ObjectiveVector& y);

/// Axis-aligned box of per-dimension sampling intervals with exact rational
/// endpoints. Builders produce sides of width exactly 1/phi inside [0, 1];
/// the model itself only requires lo <= hi.
struct ProfitBox {
  struct Interval {
    Rational lo;
    Rational hi;
  };
  std::vector<Interval> intervals;

  int dim() const { return static_cast<int>(intervals.size()); }
  static ProfitBox cube(int d, const Rational& lo, const Rational& hi);
};

struct KnapsackObject {
  Rational weight;
  ProfitBox box;
  std::optional<std::vector<double>> profits;  // set once sampled
};

/// Subset of a group's objects, one 0/1 flag per object in group order.
using Choice = std::vector<std::uint8_t>;

/// Objects that are selected jointly: exactly one of `choices` is taken.
struct Group {
  std::vector<KnapsackObject> objects;
  std::vector<Choice> choices;
};

/// One choice index per group.
struct Solution {
  std::vector<std::uint32_t> pick;

  bool operator==(const Solution&) const = default;
  bool operator<(const Solution& other) const { return pick < other.pick; }
};

/// Grouped multi-profit knapsack instance; the feasible set is the product of
/// the per-group choice lists.
struct KnapsackInstance {
  int d = 1;
  Rational phi = 1;
  std::vector<Group> groups;

  std::size_t object_count() const;
  bool realized() const;

  /// Throws std::invalid_argument describing the first structural problem.
  void validate() const;
};

/// Exact rational weight sum and componentwise double profit sum of the
/// selected objects. Profits accumulate per group (object order), then across
/// groups in group order; engines use the same accumulation order so results
/// are bit-identical.
ObjectiveVector solution_value(const KnapsackInstance& instance, const Solution& s);

/// Indices (in input order) of entries dominated by no other entry. Entries
/// with identical vectors are all retained.
std::vector<std::size_t> pareto_indices(const std::vector<ObjectiveVector>& values);

std::vector<std::pair<Solution, ObjectiveVector>> pareto_filter(
    const std::vector<std::pair<Solution, ObjectiveVector>>& points);

}  // namespace kpareto

#endif  // KPARETO_MODEL_HPP
