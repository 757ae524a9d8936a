#ifndef KPARETO_SAMPLER_HPP
#define KPARETO_SAMPLER_HPP

#include "kpareto/model.hpp"

#include <cstdint>

namespace kpareto {

/// Identifies one trial's random stream; combined with the object index and
/// profit dimension it pins down every drawn coordinate.
struct SampleSeed {
  std::uint64_t master = 0;
  std::uint64_t trial = 0;
};

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Stable across versions:
/// experiment reproducibility depends on these exact constants.
std::uint64_t splitmix64(std::uint64_t x);

/// Uniform draw in [0, 1) for one profit coordinate. The stream key is
///   splitmix64(splitmix64(splitmix64(splitmix64(master) ^ trial) ^ object) ^ dim)
/// and the top 53 bits of the key form the mantissa. Stateless, so distinct
/// trials can be sampled concurrently.
double sample_unit(std::uint64_t master, std::uint64_t trial, std::uint64_t object_index,
                   std::uint64_t dim);

/// Copy of `instance` with every object's profits realized uniformly in its
/// box (half-open construction intervals are sampled as closed; the boundary
/// event has probability zero). Object indices count across groups in
/// instance order, so instances sharing a structural prefix realize identical
/// profits on that prefix under the same seed.
KnapsackInstance sample_instance(const KnapsackInstance& instance, SampleSeed seed);

}  // namespace kpareto

#endif  // KPARETO_SAMPLER_HPP
