#pragma once

#include "socle/extended_nat.hpp"
#include "socle/partition.hpp"

namespace socle {

// m^k_{lambda, sigma}: number of interlacing chains of length k from lambda down to sigma.
// For k = inf the value is 0, 1 (lambda = sigma) or inf.
ExtendedNat gtMult(const Partition& lambda, const Partition& sigma, const ExtendedNat& k);
BigInt gtMultFinite(const Partition& lambda, const Partition& sigma, int k);

}  // namespace socle
