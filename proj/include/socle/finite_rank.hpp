#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "socle/partition.hpp"

namespace socle {

enum class Family { GL, SL, SP, SO };

std::string familyName(Family f);
Family parseFamily(const std::string& name);

// gl(n): rank n; sp(a): a even; so(a): a >= 3.
struct Algebra {
    Family family;
    int rank;
    int cartanRank() const;
};

// (lambda, mu) for GL; lambda alone (mu empty) for SP and SO.
struct HighestWeight {
    Partition lambda;
    Partition mu;
    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
    friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;
};

using Weight = std::vector<int>;
using Character = std::map<Weight, std::int64_t>;

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleTooLarge : public OracleError {
public:
    OracleTooLarge() : OracleError("oracle too large") {}
};

// Largest module dimension the oracle will expand; SOCLE_ORACLE_DIM_BOUND overrides 20000.
std::int64_t oracleDimBound();

void validateAlgebra(const Algebra& alg);
bool weightInRange(const Algebra& alg, const HighestWeight& hw);
Weight toWeight(const Algebra& alg, const HighestWeight& hw);
HighestWeight fromWeight(const Algebra& alg, const Weight& w);

BigInt weylDim(const Algebra& alg, const HighestWeight& hw);
// Same as weylDim but 0 when the weight does not fit the rank. For so(2n) and a
// partition with n rows this is the dimension of the o(2n)-module, the sum of the
// two associated irreducibles.
BigInt dimensionOrZero(const Algebra& alg, const HighestWeight& hw);

Character irrChar(const Algebra& alg, const HighestWeight& hw);
std::map<HighestWeight, std::int64_t> decompose(const Algebra& alg, const Character& ch);
std::map<Weight, std::int64_t> decomposeWeights(const Algebra& alg, const Character& ch);
// Partition labels of the constituents; for so(2n), the pair of irreducibles with
// last coordinate +x and -x is counted once, under the label with +x.
std::map<Partition, std::int64_t> decomposeLabels(const Algebra& alg, const Character& ch);

Character tensor(const Character& a, const Character& b);
std::int64_t mass(const Character& ch);

// gl(bigRank) -> gl(smallRank) with bigRank = (k + l) * smallRank + z.
Character restrictDiagonal(int bigRank, const HighestWeight& hw, int k, int l, int z, int smallRank);
// Same-family restriction along V = copies * V' (+ trivial), summing Cartan blocks.
Character restrictBlocks(const Algebra& big, const HighestWeight& hw, int copies, const Algebra& small);

// Folding of gl(a)-weights onto sp(a) or so(a).
enum class Pairing { Mirrored, Shifted };
Character foldToSubtype(const Character& glChar, int a, Family target, Pairing pairing = Pairing::Mirrored);
Character restrictToSubtype(int a, const HighestWeight& hw, Family target,
                            Pairing pairing = Pairing::Mirrored);
// sp(2n) or so(2n), so(2n+1) restricted to the Levi gl(n) of V = W + W*.
Character restrictToLevi(const Algebra& big, const HighestWeight& hw);

}  // namespace socle
