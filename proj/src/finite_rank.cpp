#include "socle/finite_rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>

#include "memo.hpp"

namespace socle {

namespace {

enum class RootType { A, B, C, D };

RootType rootType(const Algebra& alg) {
    switch (alg.family) {
        case Family::GL:
        case Family::SL: return RootType::A;
        case Family::SP: return RootType::C;
        case Family::SO: return alg.rank % 2 ? RootType::B : RootType::D;
    }
    return RootType::A;
}

std::vector<Weight> positiveRoots(RootType t, int n) {
    std::vector<Weight> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Weight r(n, 0);
            r[i] = 1;
            r[j] = -1;
            roots.push_back(r);
            if (t != RootType::A) {
                r[j] = 1;
                roots.push_back(r);
            }
        }
    if (t == RootType::B || t == RootType::C)
        for (int i = 0; i < n; ++i) {
            Weight r(n, 0);
            r[i] = t == RootType::B ? 1 : 2;
            roots.push_back(r);
        }
    return roots;
}

// Twice the half-sum of positive roots.
Weight twoRho(RootType t, int n) {
    Weight r(n, 0);
    for (const auto& a : positiveRoots(t, n))
        for (int i = 0; i < n; ++i) r[i] += a[i];
    return r;
}

long long dot(const Weight& a, const Weight& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

Weight dominantRep(RootType t, Weight w) {
    if (t == RootType::A) {
        std::sort(w.begin(), w.end(), std::greater<>());
        return w;
    }
    int negatives = 0;
    bool zero = false;
    for (int& x : w) {
        if (x < 0) ++negatives;
        if (x == 0) zero = true;
        x = std::abs(x);
    }
    std::sort(w.begin(), w.end(), std::greater<>());
    if (t == RootType::D && !zero && negatives % 2 == 1) w.back() = -w.back();
    return w;
}

// Whether lambda - mu is a nonnegative integer combination of simple roots.
bool belowInRootCone(RootType t, const Weight& lambda, const Weight& mu) {
    int n = static_cast<int>(lambda.size());
    std::vector<long long> s(n);
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += lambda[i] - mu[i];
        s[i] = acc;
    }
    switch (t) {
        case RootType::A:
            if (s[n - 1] != 0) return false;
            for (int i = 0; i < n; ++i)
                if (s[i] < 0) return false;
            return true;
        case RootType::B:
            for (int i = 0; i < n; ++i)
                if (s[i] < 0) return false;
            return true;
        case RootType::C:
            for (int i = 0; i < n; ++i)
                if (s[i] < 0) return false;
            return s[n - 1] % 2 == 0;
        case RootType::D: {
            for (int i = 0; i + 2 < n; ++i)
                if (s[i] < 0) return false;
            long long last = lambda[n - 1] - mu[n - 1];
            if (s[n - 1] % 2 != 0 || s[n - 1] < 0) return false;
            return n < 2 || s[n - 2] - last >= 0;
        }
    }
    return false;
}

void orbitRec(RootType t, const Weight& dom, Weight& cur, std::vector<bool>& used, int pos,
              std::vector<Weight>& out) {
    int n = static_cast<int>(dom.size());
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    int prev = -1;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        if (prev >= 0 && std::abs(dom[i]) == std::abs(dom[prev])) continue;
        prev = i;
        used[i] = true;
        int v = std::abs(dom[i]);
        cur[pos] = v;
        orbitRec(t, dom, cur, used, pos + 1, out);
        if (t != RootType::A && v != 0) {
            cur[pos] = -v;
            orbitRec(t, dom, cur, used, pos + 1, out);
        }
        used[i] = false;
    }
}

std::vector<Weight> orbit(RootType t, const Weight& dom) {
    std::vector<Weight> out;
    Weight cur(dom.size());
    std::vector<bool> used(dom.size(), false);
    if (t == RootType::A) {
        Weight w = dom;
        std::sort(w.begin(), w.end());
        do out.push_back(w);
        while (std::next_permutation(w.begin(), w.end()));
        return out;
    }
    Weight absSorted = dom;
    for (int& x : absSorted) x = std::abs(x);
    std::sort(absSorted.begin(), absSorted.end(), std::greater<>());
    orbitRec(t, absSorted, cur, used, 0, out);
    if (t == RootType::D) {
        bool zero = std::find(dom.begin(), dom.end(), 0) != dom.end();
        if (!zero) {
            int parity = dom.back() < 0 ? 1 : 0;
            std::erase_if(out, [&](const Weight& w) {
                int neg = 0;
                for (int x : w) neg += x < 0;
                return neg % 2 != parity;
            });
        }
    }
    return out;
}

struct Dominants {
    std::vector<Weight> weights;  // decreasing height
    std::map<Weight, std::int64_t> mult;
};

Dominants freudenthal(RootType t, const Weight& lambda) {
    int n = static_cast<int>(lambda.size());
    auto roots = positiveRoots(t, n);
    Weight p = twoRho(t, n);
    std::set<Weight> found{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight v = queue.front();
        queue.pop_front();
        for (const auto& a : roots) {
            Weight w = v;
            for (int i = 0; i < n; ++i) w[i] -= a[i];
            Weight d = dominantRep(t, w);
            if (found.count(d) || !belowInRootCone(t, lambda, d)) continue;
            found.insert(d);
            queue.push_back(d);
        }
    }
    Dominants out;
    out.weights.assign(found.begin(), found.end());
    std::sort(out.weights.begin(), out.weights.end(), [&](const Weight& x, const Weight& y) {
        long long hx = dot(x, p), hy = dot(y, p);
        return hx != hy ? hx > hy : x > y;
    });
    Weight lp(n);
    for (int i = 0; i < n; ++i) lp[i] = 2 * lambda[i] + p[i];
    long long top = dot(lp, lp);
    for (const auto& mu : out.weights) {
        if (mu == lambda) {
            out.mult[mu] = 1;
            continue;
        }
        long long num = 0;
        for (const auto& a : roots) {
            for (int k = 1;; ++k) {
                Weight w = mu;
                for (int i = 0; i < n; ++i) w[i] += k * a[i];
                auto it = out.mult.find(dominantRep(t, w));
                if (it == out.mult.end()) break;
                Weight w2(n);
                for (int i = 0; i < n; ++i) w2[i] = 2 * w[i];
                num += it->second * dot(w2, a);
            }
        }
        Weight mp(n);
        for (int i = 0; i < n; ++i) mp[i] = 2 * mu[i] + p[i];
        long long den = top - dot(mp, mp);
        long long m = 4 * num / den;
        if (4 * num % den != 0) throw OracleError("freudenthal recursion produced a non-integer");
        out.mult[mu] = m;
    }
    return out;
}

std::string charKey(RootType t, const Weight& w) {
    std::string k(1, static_cast<char>('A' + static_cast<int>(t)));
    for (int x : w) k += std::to_string(x) + ",";
    return k;
}

Memo<std::string, Character>& charMemo() {
    static Memo<std::string, Character> m;
    return m;
}

BigInt weylDimVector(RootType t, const Weight& w) {
    int n = static_cast<int>(w.size());
    Weight p = twoRho(t, n);
    BigInt num = 1, den = 1;
    for (const auto& a : positiveRoots(t, n)) {
        long long x = 0, y = 0;
        for (int i = 0; i < n; ++i) {
            x += static_cast<long long>(2 * w[i] + p[i]) * a[i];
            y += static_cast<long long>(p[i]) * a[i];
        }
        num *= x;
        den *= y;
    }
    return num / den;
}

Character characterOfDominant(RootType t, const Weight& w) {
    return charMemo().getOrCompute(charKey(t, w), [&] {
        if (weylDimVector(t, w) > oracleDimBound()) throw OracleTooLarge();
        Character ch;
        if (w.empty()) {
            ch[w] = 1;
            return ch;
        }
        auto dom = freudenthal(t, w);
        for (const auto& [mu, m] : dom.mult)
            for (auto& x : orbit(t, mu)) ch[x] = m;
        return ch;
    });
}

Character mapWeights(const Character& ch, const std::function<Weight(const Weight&)>& f) {
    Character out;
    for (const auto& [w, m] : ch) out[f(w)] += m;
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

}  // namespace

std::string familyName(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::SL: return "sl";
        case Family::SP: return "sp";
        case Family::SO: return "so";
    }
    return "?";
}

Family parseFamily(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "gl") return Family::GL;
    if (s == "sl") return Family::SL;
    if (s == "sp") return Family::SP;
    if (s == "so") return Family::SO;
    throw std::invalid_argument("unknown family: " + name);
}

int Algebra::cartanRank() const {
    return family == Family::GL || family == Family::SL ? rank : rank / 2;
}

std::int64_t oracleDimBound() {
    if (const char* env = std::getenv("SOCLE_ORACLE_DIM_BOUND")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 20000;
}

void validateAlgebra(const Algebra& alg) {
    switch (alg.family) {
        case Family::GL:
        case Family::SL:
            if (alg.rank < 1) throw OracleError("gl rank must be >= 1");
            break;
        case Family::SP:
            if (alg.rank < 2 || alg.rank % 2) throw OracleError("sp rank must be even and >= 2");
            break;
        case Family::SO:
            if (alg.rank < 3) throw OracleError("so rank must be >= 3");
            break;
    }
}

bool weightInRange(const Algebra& alg, const HighestWeight& hw) {
    if (alg.family == Family::GL || alg.family == Family::SL)
        return hw.lambda.rows() + hw.mu.rows() <= alg.rank;
    if (!hw.mu.empty()) return false;
    if (alg.family == Family::SO && alg.rank % 2 == 0) return 2 * hw.lambda.rows() < alg.rank;
    return hw.lambda.rows() <= alg.cartanRank();
}

Weight toWeight(const Algebra& alg, const HighestWeight& hw) {
    validateAlgebra(alg);
    if (!weightInRange(alg, hw)) throw OracleError("weight out of range");
    int n = alg.cartanRank();
    Weight w(n, 0);
    for (int i = 0; i < hw.lambda.rows(); ++i) w[i] = hw.lambda[i];
    for (int i = 0; i < hw.mu.rows(); ++i) w[n - 1 - i] = -hw.mu[i];
    return w;
}

HighestWeight fromWeight(const Algebra& alg, const Weight& w) {
    HighestWeight hw;
    std::vector<int> pos, neg;
    for (int x : w)
        if (x > 0) pos.push_back(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (*it < 0) neg.push_back(-*it);
    hw.lambda = Partition(pos);
    hw.mu = Partition(neg);
    if (alg.family != Family::GL && alg.family != Family::SL && !neg.empty())
        throw OracleError("weight out of range");
    if (!weightInRange(alg, hw)) throw OracleError("weight out of range");
    return hw;
}

BigInt weylDim(const Algebra& alg, const HighestWeight& hw) {
    return weylDimVector(rootType(alg), toWeight(alg, hw));
}

BigInt dimensionOrZero(const Algebra& alg, const HighestWeight& hw) {
    validateAlgebra(alg);
    if (alg.family == Family::SO && alg.rank % 2 == 0 && hw.mu.empty() &&
        hw.lambda.rows() == alg.cartanRank()) {
        Weight w(hw.lambda.parts());
        return 2 * weylDimVector(RootType::D, w);
    }
    if (!weightInRange(alg, hw)) return 0;
    return weylDim(alg, hw);
}

Character irrChar(const Algebra& alg, const HighestWeight& hw) {
    return characterOfDominant(rootType(alg), toWeight(alg, hw));
}

std::map<Weight, std::int64_t> decomposeWeights(const Algebra& alg, const Character& ch) {
    validateAlgebra(alg);
    RootType t = rootType(alg);
    int n = alg.cartanRank();
    Weight p = twoRho(t, n);
    Character rest = ch;
    std::erase_if(rest, [](const auto& e) { return e.second == 0; });
    std::map<Weight, std::int64_t> out;
    while (!rest.empty()) {
        const Weight* best = nullptr;
        long long bestH = 0;
        for (const auto& [w, m] : rest) {
            if (static_cast<int>(w.size()) != n) throw OracleError("rank mismatch");
            long long h = dot(w, p);
            if (!best || h > bestH || (h == bestH && w > *best)) {
                best = &w;
                bestH = h;
            }
        }
        Weight top = *best;
        std::int64_t m = rest[top];
        if (m < 0 || dominantRep(t, top) != top) throw OracleError("not a character");
        out[top] += m;
        for (const auto& [w, k] : characterOfDominant(t, top)) {
            auto& slot = rest[w];
            slot -= m * k;
            if (slot == 0) rest.erase(w);
        }
    }
    return out;
}

std::map<HighestWeight, std::int64_t> decompose(const Algebra& alg, const Character& ch) {
    std::map<HighestWeight, std::int64_t> out;
    for (const auto& [w, m] : decomposeWeights(alg, ch)) out[fromWeight(alg, w)] += m;
    return out;
}

std::map<Partition, std::int64_t> decomposeLabels(const Algebra& alg, const Character& ch) {
    if (alg.family != Family::SP && alg.family != Family::SO) throw OracleError("labels need sp or so");
    std::map<Partition, std::int64_t> out;
    for (const auto& [w, m] : decomposeWeights(alg, ch)) {
        if (!w.empty() && w.back() < 0) continue;
        out[Partition(w)] += m;
    }
    return out;
}

Character tensor(const Character& a, const Character& b) {
    Character out;
    for (const auto& [x, m] : a)
        for (const auto& [y, k] : b) {
            Weight w = x;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += y[i];
            out[w] += m * k;
        }
    return out;
}

std::int64_t mass(const Character& ch) {
    std::int64_t s = 0;
    for (const auto& [w, m] : ch) s += m;
    return s;
}

Character restrictDiagonal(int bigRank, const HighestWeight& hw, int k, int l, int z, int smallRank) {
    if (k < 0 || l < 0 || z < 0 || smallRank < 1 || bigRank != (k + l) * smallRank + z)
        throw OracleError("rank mismatch");
    Character ch = irrChar({Family::GL, bigRank}, hw);
    return mapWeights(ch, [&](const Weight& w) {
        Weight v(smallRank, 0);
        for (int b = 0; b < k + l; ++b)
            for (int i = 0; i < smallRank; ++i) v[i] += (b < k ? 1 : -1) * w[b * smallRank + i];
        return v;
    });
}

Character restrictBlocks(const Algebra& big, const HighestWeight& hw, int copies, const Algebra& small) {
    validateAlgebra(small);
    if (big.family != small.family || copies < 1 || copies * small.cartanRank() > big.cartanRank() ||
        copies * small.rank > big.rank)
        throw OracleError("rank mismatch");
    Character ch = irrChar(big, hw);
    int s = small.cartanRank();
    return mapWeights(ch, [&](const Weight& w) {
        Weight v(s, 0);
        for (int b = 0; b < copies; ++b)
            for (int i = 0; i < s; ++i) v[i] += w[b * s + i];
        return v;
    });
}

Character foldToSubtype(const Character& glChar, int a, Family target, Pairing pairing) {
    if (target == Family::SP && a % 2) throw OracleError("sp needs an even rank");
    if (target != Family::SP && target != Family::SO) throw OracleError("target must be sp or so");
    int h = a / 2;
    return mapWeights(glChar, [&](const Weight& y) {
        if (static_cast<int>(y.size()) != a) throw OracleError("rank mismatch");
        Weight x(h, 0);
        for (int i = 0; i < h; ++i)
            x[i] = pairing == Pairing::Mirrored ? y[i] - y[a - 1 - i] : y[i] - y[a - h + i];
        return x;
    });
}

Character restrictToSubtype(int a, const HighestWeight& hw, Family target, Pairing pairing) {
    validateAlgebra({target, a});
    return foldToSubtype(irrChar({Family::GL, a}, hw), a, target, pairing);
}

Character restrictToLevi(const Algebra& big, const HighestWeight& hw) {
    if (big.family != Family::SP && big.family != Family::SO) throw OracleError("levi needs sp or so");
    return irrChar(big, hw);
}

}  // namespace socle
