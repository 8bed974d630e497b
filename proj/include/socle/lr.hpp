#pragma once

#include <cstdint>
#include <map>

#include "socle/partition.hpp"

namespace socle {

using LrMap = std::map<Partition, std::uint64_t>;

// c^lambda_{mu nu}: LR skew tableaux of shape lambda/mu and content nu. Memoized.
// Values are tableau counts produced by enumeration, so they cannot exceed 64 bits.
std::uint64_t lr(const Partition& lambda, const Partition& mu, const Partition& nu);

// lambda -> c^lambda_{mu nu}, nonzero entries only.
const LrMap& productExpand(const Partition& mu, const Partition& nu);
// gamma -> c^lambda_{sigma gamma}, nonzero entries only.
const LrMap& skewExpand(const Partition& lambda, const Partition& sigma);

// Uncached enumeration, exposed for tests.
std::uint64_t lrEnumerate(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace socle
