#include "socle/gt.hpp"

#include "socle/lr.hpp"

namespace socle {

BigInt gtMultFinite(const Partition& lambda, const Partition& sigma, int k) {
    if (!lambda.contains(sigma)) return 0;
    if (k == 0) return lambda == sigma ? 1 : 0;
    BigInt total = 0;
    for (const auto& [gamma, c] : skewExpand(lambda, sigma)) total += BigInt(c) * ssytCount(gamma, k);
    return total;
}

ExtendedNat gtMult(const Partition& lambda, const Partition& sigma, const ExtendedNat& k) {
    if (!k.isInfinite()) return ExtendedNat(gtMultFinite(lambda, sigma, static_cast<int>(k.value())));
    if (lambda == sigma) return 1;
    int probe = lambda.size() - sigma.size();
    if (probe <= 0 || gtMultFinite(lambda, sigma, probe) == 0) return 0;
    return ExtendedNat::infinity();
}

}  // namespace socle
