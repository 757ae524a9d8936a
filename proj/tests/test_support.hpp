// Shared test helpers: randomized grouped instances for engine equivalence
// checks.

#ifndef KPARETO_TESTS_TEST_SUPPORT_HPP
#define KPARETO_TESTS_TEST_SUPPORT_HPP

#include "kpareto/model.hpp"
#include "kpareto/sampler.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace kpareto::testing {

/// Random grouped instance: up to `max_objects` objects in groups of size
/// 1..3, up to 4 distinct random choices per group, random rational weights
/// and boxes inside [0, 1]. Solution space stays at or below 4^7 = 16384.
inline KnapsackInstance make_random_instance(std::mt19937_64& rng, int max_objects, int max_d) {
  std::uniform_int_distribution<int> d_dist(1, max_d);
  std::uniform_int_distribution<int> group_size_dist(1, 3);
  std::uniform_int_distribution<int> weight_num_dist(1, 16);
  std::uniform_int_distribution<int> weight_den_dist(1, 4);
  std::uniform_int_distribution<int> grid_dist(0, 16);

  KnapsackInstance instance;
  instance.d = d_dist(rng);
  instance.phi = 1;

  int remaining = std::uniform_int_distribution<int>(1, max_objects)(rng);
  while (remaining > 0) {
    const int size = std::min(group_size_dist(rng), remaining);
    remaining -= size;

    Group group;
    for (int o = 0; o < size; ++o) {
      KnapsackObject object;
      object.weight = Rational(weight_num_dist(rng), weight_den_dist(rng));
      for (int j = 0; j < instance.d; ++j) {
        int a = grid_dist(rng);
        int b = grid_dist(rng);
        if (a > b) {
          std::swap(a, b);
        }
        object.box.intervals.push_back({Rational(a, 16), Rational(b, 16)});
      }
      group.objects.push_back(std::move(object));
    }

    const int max_choices = std::min(4, 1 << size);
    const int choice_count = std::uniform_int_distribution<int>(1, max_choices)(rng);
    std::set<Choice> choices;
    std::uniform_int_distribution<int> bit_dist(0, (1 << size) - 1);
    while (static_cast<int>(choices.size()) < choice_count) {
      const int bits = bit_dist(rng);
      Choice choice(static_cast<std::size_t>(size), 0);
      for (int o = 0; o < size; ++o) {
        choice[static_cast<std::size_t>(o)] = (bits >> o) & 1;
      }
      choices.insert(std::move(choice));
    }
    group.choices.assign(choices.begin(), choices.end());
    instance.groups.push_back(std::move(group));
  }
  instance.validate();
  return instance;
}

}  // namespace kpareto::testing

#endif  // KPARETO_TESTS_TEST_SUPPORT_HPP
