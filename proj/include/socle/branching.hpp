#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "socle/coefficients.hpp"
#include "socle/extended_nat.hpp"
#include "socle/finite_rank.hpp"
#include "socle/partition.hpp"

namespace socle {

// V_{lambda,mu} for GL, V_<lambda> for SP, V_[lambda] for SO (mu empty).
struct SimpleModule {
    Family family = Family::GL;
    Partition lambda;
    Partition mu;
    int degree() const { return lambda.size() + mu.size(); }
    bool trivial() const { return lambda.empty() && mu.empty(); }
    Bipartition weight() const { return {lambda, mu}; }
    std::string str() const;
    friend bool operator==(const SimpleModule&, const SimpleModule&) = default;
};

// Degree descending, then lambda and mu descending.
struct ModuleOrder {
    bool operator()(const SimpleModule& x, const SimpleModule& y) const;
};

using Layer = std::map<SimpleModule, ExtendedNat, ModuleOrder>;
using SocleLayers = std::vector<Layer>;

struct EmbeddingSpec {
    Family ambient = Family::GL;
    Family sub = Family::GL;
    int k = 1;
    int l = 0;
    ExtendedNat a1 = 0;
    ExtendedNat a2 = 0;
    ExtendedNat b = 0;
    ExtendedNat c1 = 0;
    ExtendedNat d = 0;
};

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void validate(const EmbeddingSpec& spec);
void validate(const SimpleModule& module);
std::pair<EmbeddingSpec, SimpleModule> normalizeSl(EmbeddingSpec spec, SimpleModule module);

// Type I: N_a, N_c pair trivially; N_b, N_d are nonsplit trivial quotients.
// For SP and SO only a and b are read.
SocleLayers layersTypeI(Family family, const ExtendedNat& a, const ExtendedNat& b, const ExtendedNat& c,
                        const ExtendedNat& d, const SimpleModule& module);
// Type II with a nondegenerately paired complement of dimension a.
SocleLayers layersTypeII(Family family, const ExtendedNat& a, const SimpleModule& module);
// Type II computed from the two-sided min bounds, kept for comparison.
SocleLayers layersTypeIIByBounds(Family family, const ExtendedNat& a, const SimpleModule& module);
// Traceless tensors V^{p,q} under a type II embedding with complement of dimension a.
SocleLayers layersTensorTypeII(int p, int q, const ExtendedNat& a);
// Type III: diagonal embedding with k copies of V' (and l of V'_* for GL in GL).
SocleLayers layersTypeIII(Family ambient, Family sub, int k, int l, const SimpleModule& module);
SocleLayers layersGeneral(const EmbeddingSpec& spec, const SimpleModule& module);

Layer totalMultiplicities(const SocleLayers& layers);
// Removes zero entries and trailing empty layers.
void trim(SocleLayers& layers);

}  // namespace socle
