#include "socle/verify.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "socle/branching.hpp"
#include "socle/coefficients.hpp"
#include "socle/gt.hpp"
#include "socle/lr.hpp"

namespace socle {

namespace {

using Check = std::function<void(SuiteReport&, const VerifyOptions&)>;

void expect(SuiteReport& rep, bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok && rep.failures.size() < 50) rep.failures.push_back(what);
}

std::vector<Partition> partitionsUpTo(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for (auto& p : enumeratePartitions(m)) out.push_back(std::move(p));
    return out;
}

std::vector<SimpleModule> modulesUpTo(Family f, int degree) {
    std::vector<SimpleModule> out;
    if (f != Family::GL) {
        for (const auto& l : partitionsUpTo(degree)) out.push_back({f, l, {}});
        return out;
    }
    for (int n = 0; n <= degree; ++n)
        for (int p = 0; p <= n; ++p)
            for (const auto& l : enumeratePartitions(p))
                for (const auto& m : enumeratePartitions(n - p)) out.push_back({f, l, m});
    return out;
}

Partition randomPartition(std::mt19937& rng, int n) {
    auto all = enumeratePartitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

// Brute-force count of interlacing chains lambda = nu_0, ..., nu_k = sigma.
std::uint64_t chainCount(const Partition& lambda, const Partition& sigma, int k) {
    if (k == 0) return lambda == sigma ? 1 : 0;
    if (!lambda.contains(sigma)) return 0;
    std::uint64_t total = 0;
    for (int n = sigma.size(); n <= lambda.size(); ++n)
        for (const auto& nu : subPartitions(lambda, n))
            if (interlaces(nu, lambda)) total += chainCount(nu, sigma, k - 1);
    return total;
}

std::string show(const Layer& layer) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [m, x] : layer) {
        os << (first ? "" : ", ") << m.str() << ":" << x.str();
        first = false;
    }
    os << "}";
    return os.str();
}

std::string show(const SocleLayers& layers) {
    std::string s = "[";
    for (std::size_t i = 0; i < layers.size(); ++i) s += (i ? ", " : "") + show(layers[i]);
    return s + "]";
}

Layer fromOracle(Family f, const Algebra& alg, const Character& ch) {
    Layer out;
    if (f == Family::GL) {
        for (const auto& [hw, m] : decompose(alg, ch)) out[{f, hw.lambda, hw.mu}] += ExtendedNat(BigInt(m));
    } else {
        for (const auto& [p, m] : decomposeLabels(alg, ch)) out[{f, p, {}}] += ExtendedNat(BigInt(m));
    }
    return out;
}

void compareTotals(SuiteReport& rep, const std::string& label, const SocleLayers& layers, const Layer& oracle) {
    Layer totals = totalMultiplicities(layers);
    expect(rep, totals == oracle, label + ": layers " + show(layers) + " oracle " + show(oracle));
}

// lr: symmetry, dimension identity, associativity.
void suiteLr(SuiteReport& rep, const VerifyOptions& o) {
    for (const auto& lambda : partitionsUpTo(o.size))
        for (int m = 0; m <= lambda.size(); ++m)
            for (const auto& mu : enumeratePartitions(m))
                for (const auto& nu : enumeratePartitions(lambda.size() - m))
                    expect(rep, lr(lambda, mu, nu) == lr(lambda, nu, mu),
                           "symmetry " + lambda.str() + " " + mu.str() + " " + nu.str());
    for (int total = 0; total <= o.size; ++total)
        for (int m = 0; m <= total; ++m)
            for (const auto& mu : enumeratePartitions(m))
                for (const auto& nu : enumeratePartitions(total - m)) {
                    BigInt lhs = 0;
                    for (const auto& [lambda, c] : productExpand(mu, nu)) lhs += BigInt(c) * symDim(lambda);
                    BigInt rhs = binomial(total, m) * symDim(mu) * symDim(nu);
                    expect(rep, lhs == rhs, "dimension identity " + mu.str() + " " + nu.str());
                }
    std::mt19937 rng(o.seed);
    int bound = o.size + 2;
    for (int s = 0; s < o.samples; ++s) {
        std::uniform_int_distribution<int> sz(0, bound);
        int a = sz(rng);
        int b = std::uniform_int_distribution<int>(0, bound - a)(rng);
        int c = std::uniform_int_distribution<int>(0, bound - a - b)(rng);
        Partition x = randomPartition(rng, a), y = randomPartition(rng, b), z = randomPartition(rng, c);
        std::map<Partition, BigInt> left, right;
        for (const auto& [k, c1] : productExpand(x, y))
            for (const auto& [l, c2] : productExpand(k, z)) left[l] += BigInt(c1) * c2;
        for (const auto& [k, c1] : productExpand(y, z))
            for (const auto& [l, c2] : productExpand(x, k)) right[l] += BigInt(c1) * c2;
        expect(rep, left == right, "associativity " + x.str() + " " + y.str() + " " + z.str());
    }
}

// gt: one-step interlacing, composition, chain counts.
void suiteGt(SuiteReport& rep, const VerifyOptions& o) {
    for (const auto& lambda : partitionsUpTo(o.size))
        for (int n = 0; n <= lambda.size(); ++n)
            for (const auto& sigma : enumeratePartitions(n)) {
                bool one = gtMultFinite(lambda, sigma, 1) == 1;
                expect(rep, one == interlaces(sigma, lambda), "m1 vs interlacing " + lambda.str() + " " + sigma.str());
                if (!lambda.contains(sigma)) continue;
                for (int j = 0; j <= 3; ++j)
                    for (int k = 0; k <= 3; ++k) {
                        BigInt sum = 0;
                        for (int t = n; t <= lambda.size(); ++t)
                            for (const auto& tau : subPartitions(lambda, t))
                                sum += gtMultFinite(lambda, tau, j) * gtMultFinite(tau, sigma, k);
                        expect(rep, sum == gtMultFinite(lambda, sigma, j + k),
                               "composition " + lambda.str() + " " + sigma.str());
                    }
                for (int k = 0; k <= 4; ++k)
                    expect(rep, gtMultFinite(lambda, sigma, k) == chainCount(lambda, sigma, k),
                           "chain count " + lambda.str() + " " + sigma.str() + " k=" + std::to_string(k));
            }
}

// The dimension identity of the mixed tensor decomposition.
void suiteIdentity(SuiteReport& rep, const VerifyOptions& o) {
    for (int p = 0; p <= o.pq; ++p)
        for (int q = 0; q <= o.pq; ++q)
            for (int r = 0; r <= std::min(p, q); ++r)
                for (const auto& lp : enumeratePartitions(p - r))
                    for (const auto& mp : enumeratePartitions(q - r)) {
                        BigInt lhs = binomial(p, r) * binomial(q, r) * factorial(r) * symDim(lp) * symDim(mp);
                        BigInt rhs = 0;
                        for (const auto& gamma : enumeratePartitions(r)) {
                            for (const auto& [lambda, x] : productExpand(lp, gamma))
                                for (const auto& [mu, y] : productExpand(mp, gamma))
                                    rhs += BigInt(x) * y * symDim(lambda) * symDim(mu);
                        }
                        expect(rep, lhs == rhs,
                               "identity p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                   " r=" + std::to_string(r) + " " + lp.str() + " " + mp.str());
                    }
}

// sum_r K^{(r+1)} = a^{p+q}, and a^d for sp and so.
void suiteSchurWeyl(SuiteReport& rep, const VerifyOptions&) {
    for (int a = 0; a <= 4; ++a)
        for (int n = 0; n <= 5; ++n) {
            BigInt power = 1;
            for (int i = 0; i < n; ++i) power *= a;
            for (int p = 0; p <= n; ++p) {
                ExtendedNat sum = 0;
                for (int r = 0; r <= std::min(p, n - p); ++r) sum += kCoeffGl(p, n - p, r, a);
                expect(rep, sum == ExtendedNat(power),
                       "gl a=" + std::to_string(a) + " p=" + std::to_string(p) + " q=" + std::to_string(n - p));
            }
            for (Family f : {Family::SP, Family::SO}) {
                if (f == Family::SP && a % 2) continue;
                ExtendedNat sum = 0;
                for (int r = 0; 2 * r <= n; ++r) sum += kCoeffClassical(f, n, r, a);
                expect(rep, sum == ExtendedNat(power),
                       familyName(f) + " a=" + std::to_string(a) + " d=" + std::to_string(n));
            }
        }
}

Algebra soAlg(int n) { return {Family::SO, n}; }

void suiteTypeI(SuiteReport& rep, const VerifyOptions&) {
    const int n = 5;
    for (int b : {1, 2})
        for (const auto& m : modulesUpTo(Family::GL, 4)) {
            Character ch = restrictDiagonal(n + b, {m.lambda, m.mu}, 1, 0, b, n);
            compareTotals(rep, "gl b=d=" + std::to_string(b) + " " + m.str(),
                          layersTypeI(Family::GL, 0, b, 0, b, m), fromOracle(Family::GL, {Family::GL, n}, ch));
        }
    for (const auto& m : modulesUpTo(Family::SP, 4)) {
        Character ch = restrictBlocks({Family::SP, 10}, {m.lambda, {}}, 1, {Family::SP, 8});
        compareTotals(rep, "sp b=2 " + m.str(), layersTypeI(Family::SP, 0, 2, 0, 2, m),
                      fromOracle(Family::SP, {Family::SP, 8}, ch));
    }
    for (int b : {1, 2})
        for (const auto& m : modulesUpTo(Family::SO, 4)) {
            Character ch = restrictBlocks(soAlg(9 + b), {m.lambda, {}}, 1, soAlg(9));
            compareTotals(rep, "so b=" + std::to_string(b) + " " + m.str(), layersTypeI(Family::SO, 0, b, 0, b, m),
                          fromOracle(Family::SO, soAlg(9), ch));
        }
}

void suiteTypeII(SuiteReport& rep, const VerifyOptions&) {
    const int n = 4;
    for (const auto& m : modulesUpTo(Family::GL, 3)) {
        Character ch = restrictDiagonal(n + 2, {m.lambda, m.mu}, 1, 0, 2, n);
        compareTotals(rep, "gl a2=2 " + m.str(), layersTypeII(Family::GL, 2, m),
                      fromOracle(Family::GL, {Family::GL, n}, ch));
    }
    for (const auto& m : modulesUpTo(Family::SP, 3)) {
        Character ch = restrictBlocks({Family::SP, 8}, {m.lambda, {}}, 1, {Family::SP, 6});
        compareTotals(rep, "sp a2=2 " + m.str(), layersTypeII(Family::SP, 2, m),
                      fromOracle(Family::SP, {Family::SP, 6}, ch));
    }
    for (int a : {1, 2, 3})
        for (const auto& m : modulesUpTo(Family::SO, 3)) {
            Character ch = restrictBlocks(soAlg(7 + a), {m.lambda, {}}, 1, soAlg(7));
            compareTotals(rep, "so a2=" + std::to_string(a) + " " + m.str(), layersTypeII(Family::SO, a, m),
                          fromOracle(Family::SO, soAlg(7), ch));
        }
    SimpleModule adj{Family::GL, {1}, {1}};
    SocleLayers expected(2);
    expected[0][adj] = 1;
    expected[0][{Family::GL, {1}, {}}] = 2;
    expected[0][{Family::GL, {}, {1}}] = 2;
    expected[0][{Family::GL, {}, {}}] = 3;
    expected[1][{Family::GL, {}, {}}] = 1;
    SocleLayers got = layersTypeII(Family::GL, 2, adj);
    expect(rep, got == expected, "worked example " + show(got));
}

void suiteTypeIII(SuiteReport& rep, const VerifyOptions&) {
    const int n = 3;
    for (const auto& m : modulesUpTo(Family::GL, 3)) {
        HighestWeight hw{m.lambda, m.mu};
        compareTotals(rep, "gl in gl (2,0) " + m.str(), layersTypeIII(Family::GL, Family::GL, 2, 0, m),
                      fromOracle(Family::GL, {Family::GL, n}, restrictDiagonal(2 * n, hw, 2, 0, 0, n)));
        compareTotals(rep, "gl in gl (1,1) " + m.str(), layersTypeIII(Family::GL, Family::GL, 1, 1, m),
                      fromOracle(Family::GL, {Family::GL, n}, restrictDiagonal(2 * n, hw, 1, 1, 0, n)));
        compareTotals(rep, "sp in gl " + m.str(), layersTypeIII(Family::GL, Family::SP, 1, 0, m),
                      fromOracle(Family::SP, {Family::SP, 6}, restrictToSubtype(6, hw, Family::SP)));
        compareTotals(rep, "so in gl " + m.str(), layersTypeIII(Family::GL, Family::SO, 1, 0, m),
                      fromOracle(Family::SO, soAlg(7), restrictToSubtype(7, hw, Family::SO)));
    }
    for (const auto& m : modulesUpTo(Family::GL, 2)) {
        HighestWeight hw{m.lambda, m.mu};
        Character ch = foldToSubtype(restrictDiagonal(12, hw, 2, 0, 0, 6), 6, Family::SP);
        compareTotals(rep, "sp in gl k=2 " + m.str(), layersTypeIII(Family::GL, Family::SP, 2, 0, m),
                      fromOracle(Family::SP, {Family::SP, 6}, ch));
    }
    for (const auto& m : modulesUpTo(Family::SP, 2)) {
        HighestWeight hw{m.lambda, {}};
        compareTotals(rep, "sp in sp k=2 " + m.str(), layersTypeIII(Family::SP, Family::SP, 2, 0, m),
                      fromOracle(Family::SP, {Family::SP, 4},
                                 restrictBlocks({Family::SP, 8}, hw, 2, {Family::SP, 4})));
        compareTotals(rep, "gl in sp " + m.str(), layersTypeIII(Family::SP, Family::GL, 1, 1, m),
                      fromOracle(Family::GL, {Family::GL, 3}, restrictToLevi({Family::SP, 6}, hw)));
        compareTotals(rep, "so in sp " + m.str(), layersTypeIII(Family::SP, Family::SO, 2, 0, m),
                      fromOracle(Family::SO, soAlg(5),
                                 foldToSubtype(restrictToLevi({Family::SP, 10}, hw), 5, Family::SO)));
    }
    for (const auto& m : modulesUpTo(Family::SO, 2)) {
        HighestWeight hw{m.lambda, {}};
        compareTotals(rep, "so in so k=2 " + m.str(), layersTypeIII(Family::SO, Family::SO, 2, 0, m),
                      fromOracle(Family::SO, soAlg(5), restrictBlocks(soAlg(10), hw, 2, soAlg(5))));
        compareTotals(rep, "gl in so " + m.str(), layersTypeIII(Family::SO, Family::GL, 1, 1, m),
                      fromOracle(Family::GL, {Family::GL, 3}, restrictToLevi(soAlg(6), hw)));
        compareTotals(rep, "sp in so " + m.str(), layersTypeIII(Family::SO, Family::SP, 2, 0, m),
                      fromOracle(Family::SP, {Family::SP, 4},
                                 foldToSubtype(restrictToLevi(soAlg(8), hw), 4, Family::SP)));
    }
}

struct Pair {
    Family ambient, sub;
    int k, l;
};

std::vector<Pair> allPairs() {
    return {{Family::GL, Family::GL, 1, 0}, {Family::GL, Family::SP, 1, 0}, {Family::GL, Family::SO, 1, 0},
            {Family::SP, Family::GL, 1, 1}, {Family::SP, Family::SP, 1, 0}, {Family::SP, Family::SO, 2, 0},
            {Family::SO, Family::GL, 1, 1}, {Family::SO, Family::SP, 2, 0}, {Family::SO, Family::SO, 1, 0}};
}

void suiteCompose(SuiteReport& rep, const VerifyOptions&) {
    const ExtendedNat inf = ExtendedNat::infinity();
    for (const auto& pr : allPairs())
        for (const auto& m : modulesUpTo(pr.ambient, 3)) {
            std::string tag = familyName(pr.ambient) + ">" + familyName(pr.sub) + " " + m.str();
            EmbeddingSpec base{pr.ambient, pr.sub, pr.k, pr.l, 0, 0, 0, 0, 0};
            expect(rep, layersGeneral(base, m) == layersTypeIII(pr.ambient, pr.sub, pr.k, pr.l, m),
                   "type III only " + tag);
            if (pr.sub == pr.ambient && pr.k == 1 && pr.l == 0) {
                SocleLayers id{{{m, 1}}};
                expect(rep, layersGeneral(base, m) == id, "identity " + tag);
            }
            if (pr.sub != pr.ambient) continue;
            std::vector<std::array<ExtendedNat, 4>> typeI;
            if (pr.ambient == Family::GL)
                typeI = {{0, 2, 0, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}, {inf, 0, 0, 1}, {0, inf, 2, inf}};
            else
                typeI = {{0, 1, 0, 1}, {0, 2, 0, 2}, {1, 1, 1, 1}, {inf, inf, inf, inf}};
            for (const auto& t : typeI) {
                EmbeddingSpec s = base;
                s.a1 = t[0];
                s.b = t[1];
                s.c1 = t[2];
                s.d = t[3];
                expect(rep, layersGeneral(s, m) == layersTypeI(pr.ambient, t[0], t[1], t[2], t[3], m),
                       "type I only " + tag + " a1=" + t[0].str() + " b=" + t[1].str());
            }
            std::vector<ExtendedNat> typeII = pr.ambient == Family::SP ? std::vector<ExtendedNat>{2, 4, inf}
                                                                       : std::vector<ExtendedNat>{1, 2, 3, inf};
            for (const auto& a2 : typeII) {
                EmbeddingSpec s = base;
                s.a2 = a2;
                expect(rep, layersGeneral(s, m) == layersTypeII(pr.ambient, a2, m),
                       "type II only " + tag + " a2=" + a2.str());
            }
        }
}

// The finite-a and stable branches of T agree when both apply.
void suiteTBranch(SuiteReport& rep, const VerifyOptions& o) {
    int bound = std::min(o.pq, 4);
    for (const auto& m : modulesUpTo(Family::GL, bound)) {
        int pq = m.degree();
        for (int a = std::max(0, pq - 1); a <= 6; ++a)
            for (int ml = m.lambda.size(); ml >= 0; --ml)
                for (const auto& midL : subPartitions(m.lambda, ml))
                    for (int mm = m.mu.size(); mm >= 0; --mm)
                        for (const auto& midM : subPartitions(m.mu, mm))
                            for (int r = 0; r <= std::min(ml, mm); ++r)
                                for (const auto& lowL : subPartitions(midL, ml - r))
                                    for (const auto& lowM : subPartitions(midM, mm - r)) {
                                        Bipartition mid{midL, midM}, low{lowL, lowM};
                                        ExtendedNat f = tCoeffGl(a, m.weight(), mid, low, TBranch::Finite);
                                        ExtendedNat s = tCoeffGl(a, m.weight(), mid, low, TBranch::Stable);
                                        expect(rep, f == s,
                                               "T a=" + std::to_string(a) + " " + m.str() + " " + mid.str() + " " +
                                                   low.str() + ": " + f.str() + " vs " + s.str());
                                    }
    }
}

// m^inf classification against finite probes; semiring laws.
void suiteInfinity(SuiteReport& rep, const VerifyOptions& o) {
    const ExtendedNat inf = ExtendedNat::infinity();
    for (const auto& lambda : partitionsUpTo(std::min(o.size, 5)))
        for (int n = 0; n <= lambda.size(); ++n)
            for (const auto& sigma : enumeratePartitions(n)) {
                int top = lambda.size() - sigma.size() + 1;
                std::uint64_t last = chainCount(lambda, sigma, top);
                std::uint64_t prev = chainCount(lambda, sigma, top - 1);
                ExtendedNat probe = last > prev ? inf : ExtendedNat(static_cast<long long>(last));
                expect(rep, gtMult(lambda, sigma, inf) == probe, "m^inf " + lambda.str() + " " + sigma.str());
            }
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> val(0, 25);
    auto sample = [&] { return val(rng) >= 21 ? inf : ExtendedNat(val(rng)); };
    int count = std::max(o.samples, 1000);
    for (int i = 0; i < count; ++i) {
        ExtendedNat x = sample(), y = sample(), z = sample();
        std::string tag = x.str() + "," + y.str() + "," + z.str();
        expect(rep, x + y == y + x, "add commutes " + tag);
        expect(rep, (x + y) + z == x + (y + z), "add associates " + tag);
        expect(rep, x * y == y * x, "mul commutes " + tag);
        expect(rep, (x * y) * z == x * (y * z), "mul associates " + tag);
        expect(rep, x * (y + z) == x * y + x * z, "distributes " + tag);
        expect(rep, x + 0 == x && x * 1 == x && (x * 0).isZero(), "units " + tag);
        expect(rep, min(x, y) == min(y, x) && min(x, y) <= x, "min " + tag);
        expect(rep, x <= inf, "inf is top " + tag);
    }
}

const std::map<std::string, Check>& registry() {
    static const std::map<std::string, Check> r{
        {"lr", suiteLr},
        {"gt", suiteGt},
        {"identity", suiteIdentity},
        {"schur-weyl", suiteSchurWeyl},
        {"oracle-typeI", suiteTypeI},
        {"oracle-typeII", suiteTypeII},
        {"oracle-typeIII", suiteTypeIII},
        {"compose", suiteCompose},
        {"t-branch", suiteTBranch},
        {"infinity", suiteInfinity},
    };
    return r;
}

}  // namespace

std::vector<std::string> suiteNames() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
}

SuiteReport runSuite(const std::string& name, const VerifyOptions& options) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    auto start = std::chrono::steady_clock::now();
    try {
        it->second(rep, options);
    } catch (const std::exception& e) {
        ++rep.checks;
        rep.failures.push_back(std::string("exception: ") + e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace socle
