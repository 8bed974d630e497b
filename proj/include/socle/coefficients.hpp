#pragma once

#include <map>
#include <utility>
#include <vector>

#include "socle/extended_nat.hpp"
#include "socle/finite_rank.hpp"
#include "socle/partition.hpp"

namespace socle {

// Weight (lambda, mu) of a mixed tensor module.
struct Bipartition {
    Partition pos;
    Partition neg;
    int degree() const { return pos.size() + neg.size(); }
    bool trivial() const { return pos.empty() && neg.empty(); }
    Bipartition dual() const { return {neg, pos}; }
    std::string str() const { return "(" + pos.str() + "," + neg.str() + ")"; }
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

using PartMap = std::map<Partition, BigInt>;
using BiMap = std::map<Bipartition, BigInt>;
using SplitMap = std::map<std::pair<Bipartition, Bipartition>, BigInt>;

class UnsupportedRank : public std::runtime_error {
public:
    UnsupportedRank() : std::runtime_error("non-stable rank unsupported at this size") {}
};

// gamma -> (alpha, beta) with c^gamma_{alpha beta}.
const std::map<std::pair<Partition, Partition>, BigInt>& coproduct(const Partition& gamma);

// Restriction gl(n+m) -> gl(n) + gl(m): (alpha, beta) -> c^{(lambda,mu)}_{alpha, beta}.
const SplitMap& blockSplit(const Bipartition& lm);
BigInt smallC(const Bipartition& lm, const Bipartition& alpha, const Bipartition& beta);

// Tensor product of mixed tensor modules: (lambda', mu') -> d^{(lambda',mu')}_{alpha, beta}.
const BiMap& mixedTensor(const Bipartition& alpha, const Bipartition& beta);
BigInt smallD(const Bipartition& lm, const Bipartition& alpha, const Bipartition& beta);

// Iterated coefficients, k = betas.size() >= 2.
BigInt bigC(const Bipartition& lm, const std::vector<Bipartition>& betas);
BigInt bigD(const Bipartition& lm, const std::vector<Bipartition>& betas);

// Signature (k,0,0) restriction: sigma -> sum over betas of C^{lm}_{betas} D^{sigma}_{betas}.
const BiMap& diagonalRestriction(const Bipartition& lm, int k);
// Signature (k,l,0) restriction, dual blocks twisted.
const BiMap& diagExpand(const Bipartition& lm, int k, int l);
BigInt diagMult(const Bipartition& lm, int k, int l, const Bipartition& target);

// Dimension of the rank-a module with the given label; a = inf gives inf unless trivial.
ExtendedNat dimV(Family family, const ExtendedNat& a, const Bipartition& hw);

// V^a_{lambda,0} (x) V^a_{0,mu} over gl(a), as (lambda', mu') -> multiplicity.
const BiMap& tildeCGlExpand(const ExtendedNat& a, const Bipartition& lm);
BigInt tildeCGl(const ExtendedNat& a, const Bipartition& lm, const Bipartition& target);
// V^a_{lambda,0} restricted to sp(a) or so(a), as lambda' -> multiplicity.
const PartMap& tildeCClassicalExpand(Family family, const ExtendedNat& a, const Partition& lambda);
BigInt tildeCClassical(Family family, const ExtendedNat& a, const Partition& lambda, const Partition& target);

// K^{(r+1)}_{p,q} (GL) and K^{(r+1)}_d (SP, SO).
ExtendedNat kCoeffGl(int p, int q, int r, const ExtendedNat& a);
ExtendedNat kCoeffClassical(Family family, int d, int r, const ExtendedNat& a);
// Isotypic parts: the same sums with the outer partitions fixed and dim H dropped.
ExtendedNat kIsotypicGl(const Bipartition& ab, int r, const ExtendedNat& a);
ExtendedNat kIsotypicClassical(Family family, const Partition& alpha, int r, const ExtendedNat& a);

enum class TBranch { Finite, Stable };

// T^{lambda,mu}_{lambda',mu',lambda'',mu''}; k, l, r are read off the sizes.
ExtendedNat tCoeffGl(const ExtendedNat& a, const Bipartition& lm, const Bipartition& mid,
                     const Bipartition& low, TBranch branch);
ExtendedNat tCoeffClassical(Family family, const ExtendedNat& a, const Partition& lambda,
                            const Partition& mid, const Partition& low, TBranch branch);
bool tBranchApplies(const ExtendedNat& a, int degreeBound, TBranch branch);

// sum_delta c^lambda_{alpha, 2 delta} (evenRows) or c^lambda_{alpha, (2 delta)^T}, as alpha -> value.
const PartMap& evenSkew(const Partition& lambda, bool evenRows);

// a^lambda_{mu nu}: sp(n+m) -> sp(n) + sp(m) (so likewise), as (mu, nu) -> value.
const std::map<std::pair<Partition, Partition>, BigInt>& classicalSplit(Family family, const Partition& lambda);
BigInt abPairA(Family family, const Partition& lambda, const Partition& mu, const Partition& nu);
// b^lambda_{mu nu}: tensor product of classical tensor modules, as lambda -> value.
const PartMap& classicalTensor(const Partition& mu, const Partition& nu);
BigInt abPairB(const Partition& lambda, const Partition& mu, const Partition& nu);
BigInt chainA(Family family, const Partition& lambda, const std::vector<Partition>& mus);
BigInt chainB(const Partition& lambda, const std::vector<Partition>& mus);

// Type III coefficient maps; k is the number of copies of V' as in the corresponding tables.
const PartMap& typeIIISame(Family family, const Partition& lambda, int k);
const PartMap& classicalInGl(Family sub, const Bipartition& lm, int k);
const BiMap& glInClassical(Family ambient, const Partition& lambda, int k);
const PartMap& classicalCross(Family ambient, const Partition& lambda, int k);

}  // namespace socle
