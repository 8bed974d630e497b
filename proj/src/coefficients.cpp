#include "socle/coefficients.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "memo.hpp"
#include "socle/gt.hpp"
#include "socle/lr.hpp"

namespace socle {

namespace {

std::string key(const Partition& p) {
    std::string s;
    for (int x : p.parts()) s += std::to_string(x) + ",";
    return s + "|";
}
std::string key(const Bipartition& b) { return key(b.pos) + key(b.neg) + ";"; }
std::string key(const ExtendedNat& a) { return a.str() + "#"; }
std::string key(Family f) { return familyName(f) + "#"; }
std::string key(int k) { return std::to_string(k) + "#"; }

template <class... Args>
std::string keyOf(const Args&... args) {
    return (key(args) + ...);
}

template <class Map>
BigInt lookup(const Map& m, const typename Map::key_type& k) {
    auto it = m.find(k);
    return it == m.end() ? BigInt(0) : it->second;
}

template <class Map>
void prune(Map& m) {
    std::erase_if(m, [](const auto& e) { return e.second == 0; });
}

bool isSp(Family f) { return f == Family::SP; }

Family otherClassical(Family f) { return f == Family::SP ? Family::SO : Family::SP; }

// Transpose-aware doubling used by the restriction gl -> sp (columns) and gl -> so (rows).
Partition evenShape(const Partition& gamma, bool evenRows) {
    return evenRows ? doubled(gamma) : doubledConjugate(gamma);
}

// O(a) label with the first column replaced by a - rows (tensoring with det).
Partition associate(const Partition& mu, int a) {
    std::vector<int> cols = conjugate(mu).parts();
    if (cols.empty()) cols.push_back(0);
    cols[0] = a - cols[0];
    if (cols.size() > 1 && cols[0] < cols[1]) throw std::logic_error("no associated label");
    return conjugate(Partition(cols));
}

struct Modified {
    int sign;
    Partition label;
};

// Specializes the universal orthogonal character of sigma to O(a): remove the boundary
// strip of length 2 rows - a ending at the foot of the first column, then twist by det.
std::optional<Modified> modifyOrthogonal(const Partition& sigma, int a) {
    int rows = sigma.rows();
    if (2 * rows <= a) return Modified{1, sigma};
    int h = 2 * rows - a;
    for (int i = 1; i <= rows; ++i) {
        if (sigma[i - 1] + rows - i != h) continue;
        std::vector<int> parts(sigma.parts().begin(), sigma.parts().begin() + (i - 1));
        for (int j = i; j < rows; ++j) parts.push_back(sigma[j] - 1);
        Partition rest(parts);
        if (2 * rest.rows() > a) throw std::logic_error("orthogonal modification did not terminate");
        int sign = sigma[i - 1] % 2 ? 1 : -1;
        return Modified{sign, associate(rest, a)};
    }
    return std::nullopt;
}

}  // namespace

const std::map<std::pair<Partition, Partition>, BigInt>& coproduct(const Partition& gamma) {
    static Memo<std::string, std::map<std::pair<Partition, Partition>, BigInt>> memo;
    return memo.getOrCompute(keyOf(gamma), [&] {
        std::map<std::pair<Partition, Partition>, BigInt> out;
        for (int j = 0; j <= gamma.size(); ++j)
            for (const auto& alpha : subPartitions(gamma, j))
                for (const auto& [beta, c] : skewExpand(gamma, alpha)) out[{alpha, beta}] += c;
        return out;
    });
}

const SplitMap& blockSplit(const Bipartition& lm) {
    static Memo<std::string, SplitMap> memo;
    return memo.getOrCompute(keyOf(lm), [&] {
        SplitMap out;
        int g = std::min(lm.pos.size(), lm.neg.size());
        for (int s = 0; s <= g; ++s)
            for (const auto& delta : subPartitions(lm.pos, s)) {
                if (!lm.neg.contains(delta)) continue;
                for (const auto& [gp, c1] : skewExpand(lm.pos, delta))
                    for (const auto& [gm, c2] : skewExpand(lm.neg, delta))
                        for (const auto& [ab1, c3] : coproduct(gp))
                            for (const auto& [ab2, c4] : coproduct(gm)) {
                                Bipartition alpha{ab1.first, ab2.first};
                                Bipartition beta{ab1.second, ab2.second};
                                out[{alpha, beta}] += BigInt(c1) * c2 * c3 * c4;
                            }
            }
        prune(out);
        return out;
    });
}

BigInt smallC(const Bipartition& lm, const Bipartition& alpha, const Bipartition& beta) {
    return lookup(blockSplit(lm), {alpha, beta});
}

const BiMap& mixedTensor(const Bipartition& alpha, const Bipartition& beta) {
    static Memo<std::string, BiMap> memo;
    return memo.getOrCompute(keyOf(alpha, beta), [&] {
        BiMap out;
        int g1max = std::min(alpha.pos.size(), beta.neg.size());
        int g2max = std::min(alpha.neg.size(), beta.pos.size());
        for (int s1 = 0; s1 <= g1max; ++s1)
            for (const auto& g1 : subPartitions(alpha.pos, s1)) {
                if (!beta.neg.contains(g1)) continue;
                for (const auto& [a1, x1] : skewExpand(alpha.pos, g1))
                    for (const auto& [b2, x2] : skewExpand(beta.neg, g1))
                        for (int s2 = 0; s2 <= g2max; ++s2)
                            for (const auto& g2 : subPartitions(alpha.neg, s2)) {
                                if (!beta.pos.contains(g2)) continue;
                                for (const auto& [b1, x3] : skewExpand(alpha.neg, g2))
                                    for (const auto& [a2, x4] : skewExpand(beta.pos, g2)) {
                                        BigInt w = BigInt(x1) * x2 * x3 * x4;
                                        for (const auto& [lp, y1] : productExpand(a2, a1))
                                            for (const auto& [mp, y2] : productExpand(b2, b1))
                                                out[{lp, mp}] += w * y1 * y2;
                                    }
                            }
            }
        prune(out);
        return out;
    });
}

BigInt smallD(const Bipartition& lm, const Bipartition& alpha, const Bipartition& beta) {
    return lookup(mixedTensor(alpha, beta), lm);
}

BigInt bigC(const Bipartition& lm, const std::vector<Bipartition>& betas) {
    if (betas.size() < 2) throw std::invalid_argument("bigC needs at least two blocks");
    if (betas.size() == 2) return smallC(lm, betas[0], betas[1]);
    std::vector<Bipartition> rest(betas.begin() + 1, betas.end());
    BigInt total = 0;
    for (const auto& [ab, c] : blockSplit(lm))
        if (ab.second == betas[0]) total += c * bigC(ab.first, rest);
    return total;
}

namespace {

BiMap tensorChain(const std::vector<Bipartition>& betas) {
    BiMap cur{{betas[0], 1}};
    for (std::size_t i = 1; i < betas.size(); ++i) {
        BiMap next;
        for (const auto& [x, m] : cur)
            for (const auto& [y, c] : mixedTensor(x, betas[i])) next[y] += m * c;
        cur = std::move(next);
    }
    return cur;
}

// beta tuples with their C^{lm}_{beta_1..beta_k}, k >= 2.
std::map<std::vector<Bipartition>, BigInt> cTuples(const Bipartition& lm, int k) {
    std::map<std::vector<Bipartition>, BigInt> out;
    for (const auto& [ab, c] : blockSplit(lm)) {
        if (k == 2) {
            out[{ab.first, ab.second}] += c;
            continue;
        }
        for (const auto& [rest, c2] : cTuples(ab.first, k - 1)) {
            std::vector<Bipartition> t{ab.second};
            t.insert(t.end(), rest.begin(), rest.end());
            out[t] += c * c2;
        }
    }
    return out;
}

}  // namespace

BigInt bigD(const Bipartition& lm, const std::vector<Bipartition>& betas) {
    if (betas.size() < 2) throw std::invalid_argument("bigD needs at least two blocks");
    return lookup(tensorChain(betas), lm);
}

const BiMap& diagonalRestriction(const Bipartition& lm, int k) {
    static Memo<std::string, BiMap> memo;
    return memo.getOrCompute(keyOf(lm, k), [&] {
        BiMap out;
        if (k < 0) throw std::invalid_argument("negative block count");
        if (k == 0) {
            if (lm.trivial()) out[lm] = 1;
            return out;
        }
        if (k == 1) {
            out[lm] = 1;
            return out;
        }
        for (const auto& [betas, c] : cTuples(lm, k))
            for (const auto& [sigma, d] : tensorChain(betas)) out[sigma] += c * d;
        prune(out);
        return out;
    });
}

const BiMap& diagExpand(const Bipartition& lm, int k, int l) {
    static Memo<std::string, BiMap> memo;
    return memo.getOrCompute(keyOf(lm, k, l), [&] {
        if (k < 0 || l < 0 || k + l < 1) throw std::invalid_argument("diagonal embedding needs k + l >= 1");
        if (l == 0) return diagonalRestriction(lm, k);
        BiMap out;
        if (k == 0) {
            for (const auto& [tau, c] : diagonalRestriction(lm.dual(), l)) out[tau.dual()] += c;
            return out;
        }
        for (const auto& [gd, c] : blockSplit(lm))
            for (const auto& [sigma, x] : diagonalRestriction(gd.first, k))
                for (const auto& [tau, y] : diagonalRestriction(gd.second, l))
                    for (const auto& [target, z] : mixedTensor(sigma, tau.dual())) out[target] += c * x * y * z;
        prune(out);
        return out;
    });
}

BigInt diagMult(const Bipartition& lm, int k, int l, const Bipartition& target) {
    return lookup(diagExpand(lm, k, l), target);
}

ExtendedNat dimV(Family family, const ExtendedNat& a, const Bipartition& hw) {
    if (a.isInfinite()) return hw.trivial() ? ExtendedNat(1) : ExtendedNat::infinity();
    int n = static_cast<int>(a.value());
    if (n == 0) return hw.trivial() ? 1 : 0;
    if (family == Family::SL) family = Family::GL;
    if (family != Family::GL && !hw.neg.empty()) throw std::invalid_argument("classical label with a mu part");
    if (family == Family::SP && n % 2) throw std::invalid_argument("sp needs an even rank");
    if (family == Family::SO && n <= 2) {
        const Partition& l = hw.pos;
        if (l.empty()) return 1;
        if (n == 1) return l == Partition{1} ? 1 : 0;
        if (l.rows() == 1) return 2;
        return l == Partition{1, 1} ? 1 : 0;
    }
    if (family == Family::SO) {
        Partition cols = conjugate(hw.pos);
        if (cols[0] + cols[1] > n) return 0;
        if (2 * hw.pos.rows() > n) return ExtendedNat(dimensionOrZero({family, n}, {associate(hw.pos, n), {}}));
    }
    return ExtendedNat(dimensionOrZero({family, n}, {hw.pos, hw.neg}));
}

const BiMap& tildeCGlExpand(const ExtendedNat& a, const Bipartition& lm) {
    static Memo<std::string, BiMap> memo;
    return memo.getOrCompute(keyOf(a, lm), [&] {
        BiMap out;
        bool stable = a.isInfinite() || a.value() > lm.degree();
        if (!stable) {
            int n = static_cast<int>(a.value());
            if (n == 0) {
                if (lm.trivial()) out[lm] = 1;
                return out;
            }
            if (lm.pos.rows() > n || lm.neg.rows() > n) return out;
            Algebra alg{Family::GL, n};
            try {
                auto ch = tensor(irrChar(alg, {lm.pos, {}}), irrChar(alg, {{}, lm.neg}));
                for (const auto& [hw, m] : decompose(alg, ch)) out[{hw.lambda, hw.mu}] += m;
            } catch (const OracleTooLarge&) {
                throw UnsupportedRank();
            }
            return out;
        }
        int g = std::min(lm.pos.size(), lm.neg.size());
        for (int s = 0; s <= g; ++s)
            for (const auto& gamma : subPartitions(lm.pos, s)) {
                if (!lm.neg.contains(gamma)) continue;
                for (const auto& [lp, x] : skewExpand(lm.pos, gamma))
                    for (const auto& [mp, y] : skewExpand(lm.neg, gamma)) out[{lp, mp}] += BigInt(x) * y;
            }
        prune(out);
        return out;
    });
}

BigInt tildeCGl(const ExtendedNat& a, const Bipartition& lm, const Bipartition& target) {
    return lookup(tildeCGlExpand(a, lm), target);
}

const PartMap& evenSkew(const Partition& lambda, bool evenRows) {
    static Memo<std::string, PartMap> memo;
    return memo.getOrCompute(keyOf(lambda, evenRows ? 1 : 0), [&] {
        PartMap out;
        for (int j = 0; 2 * j <= lambda.size(); ++j)
            for (const auto& gamma : enumeratePartitions(j)) {
                Partition beta = evenShape(gamma, evenRows);
                if (!lambda.contains(beta)) continue;
                for (const auto& [alpha, c] : skewExpand(lambda, beta)) out[alpha] += c;
            }
        prune(out);
        return out;
    });
}

const PartMap& tildeCClassicalExpand(Family family, const ExtendedNat& a, const Partition& lambda) {
    static Memo<std::string, PartMap> memo;
    if (family != Family::SP && family != Family::SO) throw std::invalid_argument("family must be sp or so");
    return memo.getOrCompute(keyOf(family, a, lambda), [&] {
        PartMap out;
        if (!a.isInfinite()) {
            int n = static_cast<int>(a.value());
            if (family == Family::SP && n % 2) throw std::invalid_argument("sp needs an even rank");
            if (n == 0) {
                if (lambda.empty()) out[lambda] = 1;
                return out;
            }
            if (lambda.rows() > n) return out;
            bool stable = family == Family::SP ? 2 * lambda.rows() <= n : 2 * lambda.rows() < n;
            if (!stable) {
                if (family == Family::SO && n == 1) {
                    out[lambda.size() % 2 ? Partition{1} : Partition{}] = 1;
                    return out;
                }
                if (family == Family::SO && n == 2) {
                    int m = lambda[0] - lambda[1];
                    for (int j = 0; 2 * j <= m; ++j) {
                        int top = m - 2 * j;
                        if (top > 0) out[Partition{top}] += 1;
                        else out[lambda[1] % 2 ? Partition{1, 1} : Partition{}] += 1;
                    }
                    return out;
                }
                if (family == Family::SO) {
                    for (const auto& [sigma, c] : evenSkew(lambda, true))
                        if (auto m = modifyOrthogonal(sigma, n)) out[m->label] += m->sign * c;
                    prune(out);
                    for (const auto& [label, c] : out)
                        if (c < 0) throw std::logic_error("negative orthogonal restriction coefficient");
                    return out;
                }
                try {
                    auto ch = foldToSubtype(irrChar({Family::GL, n}, {lambda, {}}), n, family);
                    for (const auto& [p, m] : decomposeLabels({family, n}, ch)) out[p] += m;
                } catch (const OracleTooLarge&) {
                    throw UnsupportedRank();
                }
                return out;
            }
        }
        out = evenSkew(lambda, family == Family::SO);
        return out;
    });
}

BigInt tildeCClassical(Family family, const ExtendedNat& a, const Partition& lambda, const Partition& target) {
    return lookup(tildeCClassicalExpand(family, a, lambda), target);
}

ExtendedNat kIsotypicGl(const Bipartition& ab, int r, const ExtendedNat& a) {
    ExtendedNat total = 0;
    for (const auto& [t, c] : tildeCGlExpand(a, ab))
        if (t.pos.size() == ab.pos.size() - r) total += ExtendedNat(c) * dimV(Family::GL, a, t);
    return total;
}

ExtendedNat kIsotypicClassical(Family family, const Partition& alpha, int r, const ExtendedNat& a) {
    ExtendedNat total = 0;
    for (const auto& [t, c] : tildeCClassicalExpand(family, a, alpha))
        if (t.size() == alpha.size() - 2 * r) total += ExtendedNat(c) * dimV(family, a, {t, {}});
    return total;
}

ExtendedNat kCoeffGl(int p, int q, int r, const ExtendedNat& a) {
    if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("negative K index");
    if (r > std::min(p, q)) return 0;
    if (a.isInfinite()) {
        if (r > 0) throw std::domain_error("K^(r+1) with r >= 1 needs finite a");
        return p + q == 0 ? ExtendedNat(1) : ExtendedNat::infinity();
    }
    ExtendedNat total = 0;
    for (const auto& l : enumeratePartitions(p))
        for (const auto& m : enumeratePartitions(q))
            total += kIsotypicGl({l, m}, r, a) * ExtendedNat(symDim(l) * symDim(m));
    return total;
}

ExtendedNat kCoeffClassical(Family family, int d, int r, const ExtendedNat& a) {
    if (d < 0 || r < 0) throw std::invalid_argument("negative K index");
    if (2 * r > d) return 0;
    if (a.isInfinite()) {
        if (r > 0) throw std::domain_error("K^(r+1) with r >= 1 needs finite a");
        return d == 0 ? ExtendedNat(1) : ExtendedNat::infinity();
    }
    ExtendedNat total = 0;
    for (const auto& l : enumeratePartitions(d))
        total += kIsotypicClassical(family, l, r, a) * ExtendedNat(symDim(l));
    return total;
}

bool tBranchApplies(const ExtendedNat& a, int degreeBound, TBranch branch) {
    if (branch == TBranch::Finite) return !a.isInfinite();
    return a.isInfinite() || a.value() > degreeBound - 2;
}

ExtendedNat tCoeffGl(const ExtendedNat& a, const Bipartition& lm, const Bipartition& mid,
                     const Bipartition& low, TBranch branch) {
    int p = lm.pos.size(), q = lm.neg.size();
    int k = p - mid.pos.size(), l = q - mid.neg.size();
    int r = mid.pos.size() - low.pos.size();
    if (k < 0 || l < 0 || r < 0 || mid.neg.size() - low.neg.size() != r) return 0;
    if (!tBranchApplies(a, p + q, branch)) throw std::domain_error("T branch precondition fails");
    BigInt contractions = 0;
    const auto& sp = skewExpand(mid.pos, low.pos);
    const auto& sm = skewExpand(mid.neg, low.neg);
    for (const auto& [gamma, x] : sp) {
        auto it = sm.find(gamma);
        if (it != sm.end()) contractions += BigInt(x) * it->second;
    }
    ExtendedNat first = gtMult(lm.pos, mid.pos, a) * gtMult(lm.neg, mid.neg, a) * ExtendedNat(contractions);
    ExtendedNat dims(symDim(low.pos) * symDim(low.neg));
    ExtendedNat bound;
    if (branch == TBranch::Finite)
        bound = ExtendedNat(binomial(p, k + r) * binomial(q, l + r)) * kCoeffGl(k + r, l + r, r, a) * dims;
    else
        bound = ExtendedNat(factorial(r) * binomial(p, r) * binomial(q, r) * binomial(p - r, k) *
                            binomial(q - r, l)) *
                kCoeffGl(k, l, 0, a) * dims;
    return min(first, bound);
}

ExtendedNat tCoeffClassical(Family family, const ExtendedNat& a, const Partition& lambda,
                            const Partition& mid, const Partition& low, TBranch branch) {
    int d = lambda.size();
    int s = d - mid.size();
    int twoR = mid.size() - low.size();
    if (s < 0 || twoR < 0 || twoR % 2) return 0;
    int r = twoR / 2;
    if (!tBranchApplies(a, 2 * d, branch)) throw std::domain_error("T branch precondition fails");
    BigInt contractions = 0;
    for (const auto& gamma : enumeratePartitions(r))
        contractions += lr(mid, low, evenShape(gamma, family == Family::SO));
    ExtendedNat first = gtMult(lambda, mid, a) * ExtendedNat(contractions);
    ExtendedNat dims(symDim(low));
    ExtendedNat bound;
    if (branch == TBranch::Finite)
        bound = ExtendedNat(binomial(d, s + 2 * r)) * kCoeffClassical(family, s + 2 * r, r, a) * dims;
    else
        bound = ExtendedNat(factorial(r) * binomial(d, r) * binomial(d, r) * binomial(d - 2 * r, s)) *
                kCoeffClassical(family, s, 0, a) * dims;
    return min(first, bound);
}

const std::map<std::pair<Partition, Partition>, BigInt>& classicalSplit(Family family, const Partition& lambda) {
    static Memo<std::string, std::map<std::pair<Partition, Partition>, BigInt>> memo;
    return memo.getOrCompute(keyOf(family, lambda), [&] {
        std::map<std::pair<Partition, Partition>, BigInt> out;
        for (const auto& [gamma, x] : evenSkew(lambda, family == Family::SO))
            for (const auto& [mn, y] : coproduct(gamma)) out[mn] += x * y;
        prune(out);
        return out;
    });
}

BigInt abPairA(Family family, const Partition& lambda, const Partition& mu, const Partition& nu) {
    return lookup(classicalSplit(family, lambda), {mu, nu});
}

const PartMap& classicalTensor(const Partition& mu, const Partition& nu) {
    static Memo<std::string, PartMap> memo;
    return memo.getOrCompute(keyOf(mu, nu), [&] {
        PartMap out;
        for (int s = 0; s <= std::min(mu.size(), nu.size()); ++s)
            for (const auto& gamma : subPartitions(mu, s)) {
                if (!nu.contains(gamma)) continue;
                for (const auto& [alpha, x] : skewExpand(mu, gamma))
                    for (const auto& [beta, y] : skewExpand(nu, gamma))
                        for (const auto& [lam, z] : productExpand(alpha, beta)) out[lam] += BigInt(x) * y * z;
            }
        prune(out);
        return out;
    });
}

BigInt abPairB(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return lookup(classicalTensor(mu, nu), lambda);
}

BigInt chainA(Family family, const Partition& lambda, const std::vector<Partition>& mus) {
    if (mus.size() < 2) throw std::invalid_argument("chainA needs at least two blocks");
    if (mus.size() == 2) return abPairA(family, lambda, mus[0], mus[1]);
    std::vector<Partition> rest(mus.begin() + 1, mus.end());
    BigInt total = 0;
    for (const auto& [mn, c] : classicalSplit(family, lambda))
        if (mn.second == mus[0]) total += c * chainA(family, mn.first, rest);
    return total;
}

namespace {

PartMap classicalTensorChain(const std::vector<Partition>& mus) {
    PartMap cur{{mus[0], 1}};
    for (std::size_t i = 1; i < mus.size(); ++i) {
        PartMap next;
        for (const auto& [x, m] : cur)
            for (const auto& [y, c] : classicalTensor(x, mus[i])) next[y] += m * c;
        cur = std::move(next);
    }
    return cur;
}

std::map<std::vector<Partition>, BigInt> aTuples(Family family, const Partition& lambda, int k) {
    std::map<std::vector<Partition>, BigInt> out;
    for (const auto& [mn, c] : classicalSplit(family, lambda)) {
        if (k == 2) {
            out[{mn.first, mn.second}] += c;
            continue;
        }
        for (const auto& [rest, c2] : aTuples(family, mn.first, k - 1)) {
            std::vector<Partition> t{mn.second};
            t.insert(t.end(), rest.begin(), rest.end());
            out[t] += c * c2;
        }
    }
    return out;
}

}  // namespace

BigInt chainB(const Partition& lambda, const std::vector<Partition>& mus) {
    if (mus.size() < 2) throw std::invalid_argument("chainB needs at least two blocks");
    return lookup(classicalTensorChain(mus), lambda);
}

const PartMap& typeIIISame(Family family, const Partition& lambda, int k) {
    static Memo<std::string, PartMap> memo;
    return memo.getOrCompute(keyOf(family, lambda, k), [&] {
        if (k < 1) throw std::invalid_argument("copies must be >= 1");
        PartMap out;
        if (k == 1) {
            out[lambda] = 1;
            return out;
        }
        for (const auto& [mus, a] : aTuples(family, lambda, k))
            for (const auto& [target, b] : classicalTensorChain(mus)) out[target] += a * b;
        prune(out);
        return out;
    });
}

const PartMap& classicalInGl(Family sub, const Bipartition& lm, int k) {
    static Memo<std::string, PartMap> memo;
    return memo.getOrCompute(keyOf(sub, lm, k), [&] {
        if (k < 1) throw std::invalid_argument("copies must be >= 1");
        PartMap out;
        if (k == 1) {
            bool rows = sub == Family::SO;
            for (const auto& [alpha, x] : evenSkew(lm.pos, rows))
                for (const auto& [beta, y] : evenSkew(lm.neg, rows))
                    for (const auto& [sigma, z] : productExpand(alpha, beta)) out[sigma] += x * y * z;
        } else {
            for (const auto& [mid, c] : diagonalRestriction(lm, k))
                for (const auto& [sigma, x] : classicalInGl(sub, mid, 1)) out[sigma] += c * x;
        }
        prune(out);
        return out;
    });
}

const BiMap& glInClassical(Family ambient, const Partition& lambda, int k) {
    static Memo<std::string, BiMap> memo;
    return memo.getOrCompute(keyOf(ambient, lambda, k), [&] {
        if (k < 1) throw std::invalid_argument("copies must be >= 1");
        BiMap out;
        if (k == 1) {
            for (const auto& [gamma, x] : evenSkew(lambda, isSp(ambient)))
                for (const auto& [ab, y] : coproduct(gamma)) out[{ab.first, ab.second}] += x * y;
        } else {
            for (const auto& [mid, c] : glInClassical(ambient, lambda, 1))
                for (const auto& [target, x] : diagonalRestriction(mid, k)) out[target] += c * x;
        }
        prune(out);
        return out;
    });
}

const PartMap& classicalCross(Family ambient, const Partition& lambda, int k) {
    static Memo<std::string, PartMap> memo;
    return memo.getOrCompute(keyOf(ambient, lambda, k), [&] {
        PartMap out;
        for (const auto& [mid, c] : glInClassical(ambient, lambda, k))
            for (const auto& [target, x] : classicalInGl(otherClassical(ambient), mid, 1)) out[target] += c * x;
        prune(out);
        return out;
    });
}

}  // namespace socle
