#include "kpareto/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace kpareto {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double sample_unit(std::uint64_t master, std::uint64_t trial, std::uint64_t object_index,
                   std::uint64_t dim) {
  std::uint64_t key = splitmix64(master);
  key = splitmix64(key ^ trial);
  key = splitmix64(key ^ object_index);
  key = splitmix64(key ^ dim);
  return static_cast<double>(key >> 11) * 0x1.0p-53;
}

KnapsackInstance sample_instance(const KnapsackInstance& instance, SampleSeed seed) {
  KnapsackInstance out = instance;
  std::uint64_t object_index = 0;
  for (Group& group : out.groups) {
    for (KnapsackObject& object : group.objects) {
      std::vector<double> profits(static_cast<std::size_t>(out.d));
      for (int j = 0; j < out.d; ++j) {
        const ProfitBox::Interval& interval = object.box.intervals[static_cast<std::size_t>(j)];
        if (interval.lo == interval.hi) {
          profits[static_cast<std::size_t>(j)] = to_double(interval.lo);
          continue;
        }
        // Round the endpoints inward so the realized value is inside the
        // rational interval under exact comparison.
        const double lo = to_double_round_up(interval.lo);
        const double hi = to_double_round_down(interval.hi);
        if (lo > hi) {
          // Interval narrower than one ulp: no interior double exists.
          profits[static_cast<std::size_t>(j)] = to_double(interval.lo);
          continue;
        }
        const double u =
            sample_unit(seed.master, seed.trial, object_index, static_cast<std::uint64_t>(j));
        const double v = lo + u * (hi - lo);
        profits[static_cast<std::size_t>(j)] = std::clamp(v, lo, hi);
      }
      object.profits = std::move(profits);
      ++object_index;
    }
  }
  return out;
}

}  // namespace kpareto
