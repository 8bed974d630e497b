#include "socle/branching.hpp"

#include "socle/gt.hpp"
#include "socle/lr.hpp"

namespace socle {

namespace {

bool classical(Family f) { return f == Family::SP || f == Family::SO; }

void add(SocleLayers& out, std::size_t r, const SimpleModule& m, const ExtendedNat& mult) {
    if (mult.isZero()) return;
    if (out.size() <= r) out.resize(r + 1);
    out[r][m] += mult;
}

SimpleModule make(Family f, const Partition& lambda, const Partition& mu = {}) { return {f, lambda, mu}; }

// All sigma contained in lambda, any size.
std::vector<Partition> allSubs(const Partition& lambda) {
    std::vector<Partition> out;
    for (int n = lambda.size(); n >= 0; --n)
        for (auto& p : subPartitions(lambda, n)) out.push_back(std::move(p));
    return out;
}

// sigma -> (m^a m^b)(lambda, sigma) graded by the b-drop |lambda''| - |sigma|.
std::vector<std::map<Partition, ExtendedNat>> gtTwoStep(const Partition& lambda, const ExtendedNat& a,
                                                        const ExtendedNat& b) {
    std::vector<std::map<Partition, ExtendedNat>> out;
    for (const auto& mid : allSubs(lambda)) {
        ExtendedNat ma = gtMult(lambda, mid, a);
        if (ma.isZero()) continue;
        for (const auto& low : allSubs(mid)) {
            ExtendedNat mb = gtMult(mid, low, b);
            if (mb.isZero()) continue;
            std::size_t r = mid.size() - low.size();
            if (out.size() <= r) out.resize(r + 1);
            out[r][low] += ma * mb;
        }
    }
    return out;
}

}  // namespace

std::string SimpleModule::str() const {
    switch (family) {
        case Family::SP: return "<" + lambda.str() + ">";
        case Family::SO: return "[" + lambda.str() + "]";
        default: return "(" + lambda.str() + "," + mu.str() + ")";
    }
}

bool ModuleOrder::operator()(const SimpleModule& x, const SimpleModule& y) const {
    if (x.degree() != y.degree()) return x.degree() > y.degree();
    if (x.lambda != y.lambda) return x.lambda > y.lambda;
    if (x.mu != y.mu) return x.mu > y.mu;
    return x.family < y.family;
}

void validate(const SimpleModule& module) {
    if (classical(module.family) && !module.mu.empty())
        throw InvalidSpec("sp and so modules carry a single partition");
}

void validate(const EmbeddingSpec& s) {
    Family amb = s.ambient == Family::SL ? Family::GL : s.ambient;
    Family sub = s.sub == Family::SL ? Family::GL : s.sub;
    if (s.k < 0 || s.l < 0) throw InvalidSpec("k and l must be nonnegative");
    if (s.k + s.l < 1) throw InvalidSpec("k + l must be at least 1");
    if (amb == Family::GL && classical(sub) && s.l != 0)
        throw InvalidSpec("sp or so inside gl takes V = V_* = kV'; set l = 0");
    if (classical(amb) && sub == Family::GL && s.l != s.k)
        throw InvalidSpec("gl inside sp or so needs l = k");
    if (classical(amb) && sub == amb && s.l != 0) throw InvalidSpec("same-family sp or so embedding needs l = 0");
    if (classical(amb) && classical(sub) && sub != amb) {
        if (s.l != 0) throw InvalidSpec("sp/so cross embedding needs l = 0");
        if (s.k % 2) throw InvalidSpec("sp/so cross embedding needs an even number of copies");
    }
    if (classical(amb)) {
        if (s.c1 != s.a1 || s.d != s.b) throw InvalidSpec("sp and so ambients need c1 = a1 and d = b");
        if (!s.a1.isZero() && s.b.isZero()) throw InvalidSpec("a1 > 0 requires b > 0");
    } else {
        if (!s.a1.isZero() && s.d.isZero()) throw InvalidSpec("a1 > 0 requires d > 0");
        if (!s.c1.isZero() && s.b.isZero()) throw InvalidSpec("c1 > 0 requires b > 0");
    }
    if (amb == Family::SP && !s.a2.isInfinite() && s.a2.value() % 2 != 0)
        throw InvalidSpec("sp ambient needs an even a2");
}

std::pair<EmbeddingSpec, SimpleModule> normalizeSl(EmbeddingSpec spec, SimpleModule module) {
    if (spec.ambient == Family::SL) spec.ambient = Family::GL;
    if (spec.sub == Family::SL) spec.sub = Family::GL;
    if (module.family == Family::SL) module.family = Family::GL;
    return {spec, module};
}

void trim(SocleLayers& layers) {
    for (auto& layer : layers) std::erase_if(layer, [](const auto& e) { return e.second.isZero(); });
    while (!layers.empty() && layers.back().empty()) layers.pop_back();
}

Layer totalMultiplicities(const SocleLayers& layers) {
    Layer out;
    for (const auto& layer : layers)
        for (const auto& [m, x] : layer) out[m] += x;
    return out;
}

SocleLayers layersTypeI(Family family, const ExtendedNat& a, const ExtendedNat& b, const ExtendedNat& c,
                        const ExtendedNat& d, const SimpleModule& module) {
    validate(module);
    SocleLayers out;
    auto left = gtTwoStep(module.lambda, a, b);
    if (classical(family)) {
        for (std::size_t r = 0; r < left.size(); ++r)
            for (const auto& [l, x] : left[r]) add(out, r, make(family, l), x);
        return out;
    }
    auto right = gtTwoStep(module.mu, c, d);
    for (std::size_t r1 = 0; r1 < left.size(); ++r1)
        for (const auto& [l, x] : left[r1])
            for (std::size_t r2 = 0; r2 < right.size(); ++r2)
                for (const auto& [m, y] : right[r2]) add(out, r1 + r2, make(family, l, m), x * y);
    trim(out);
    return out;
}

SocleLayers layersTypeII(Family family, const ExtendedNat& a, const SimpleModule& module) {
    validate(module);
    SocleLayers out;
    if (classical(family)) {
        for (const auto& low : allSubs(module.lambda))
            for (const auto& [alpha, c] : skewExpand(module.lambda, low))
                for (int r = 0; 2 * r <= alpha.size(); ++r)
                    add(out, r, make(family, low),
                        ExtendedNat(BigInt(c)) * kIsotypicClassical(family, alpha, r, a));
        trim(out);
        return out;
    }
    for (const auto& lowL : allSubs(module.lambda))
        for (const auto& lowM : allSubs(module.mu))
            for (const auto& [alpha, x] : skewExpand(module.lambda, lowL))
                for (const auto& [beta, y] : skewExpand(module.mu, lowM))
                    for (int r = 0; r <= std::min(alpha.size(), beta.size()); ++r)
                        add(out, r, make(family, lowL, lowM),
                            ExtendedNat(BigInt(x) * y) * kIsotypicGl({alpha, beta}, r, a));
    trim(out);
    return out;
}

SocleLayers layersTypeIIByBounds(Family family, const ExtendedNat& a, const SimpleModule& module) {
    validate(module);
    TBranch branch = a.isInfinite() ? TBranch::Stable : TBranch::Finite;
    SocleLayers out;
    if (classical(family)) {
        for (const auto& mid : allSubs(module.lambda))
            for (const auto& low : allSubs(mid)) {
                int drop = mid.size() - low.size();
                if (drop % 2) continue;
                add(out, drop / 2, make(family, low), tCoeffClassical(family, a, module.lambda, mid, low, branch));
            }
        trim(out);
        return out;
    }
    for (const auto& midL : allSubs(module.lambda))
        for (const auto& midM : allSubs(module.mu))
            for (const auto& lowL : allSubs(midL))
                for (const auto& lowM : allSubs(midM)) {
                    int r = midL.size() - lowL.size();
                    if (midM.size() - lowM.size() != r) continue;
                    add(out, r, make(family, lowL, lowM),
                        tCoeffGl(a, module.weight(), {midL, midM}, {lowL, lowM}, branch));
                }
    trim(out);
    return out;
}

SocleLayers layersTensorTypeII(int p, int q, const ExtendedNat& a) {
    if (p < 0 || q < 0) throw std::invalid_argument("negative tensor degree");
    // Dimension of layer r of (N_a)^{k,l}; for infinite N only the fully contracted layer is finite.
    auto dimN = [&](int k, int l, int r) -> ExtendedNat {
        if (!a.isInfinite()) return kCoeffGl(k, l, r, a);
        if (k == r && l == r) return ExtendedNat(factorial(r));
        return ExtendedNat::infinity();
    };
    SocleLayers out;
    for (int k = 0; k <= p; ++k)
        for (int l = 0; l <= q; ++l)
            for (int r = 0; r <= std::min(k, l); ++r) {
                ExtendedNat w = ExtendedNat(binomial(p, k) * binomial(q, l)) * dimN(k, l, r);
                if (w.isZero()) continue;
                for (const auto& lam : enumeratePartitions(p - k))
                    for (const auto& mu : enumeratePartitions(q - l))
                        add(out, r, make(Family::GL, lam, mu), w * ExtendedNat(symDim(lam) * symDim(mu)));
            }
    trim(out);
    return out;
}

SocleLayers layersTypeIII(Family ambient, Family sub, int k, int l, const SimpleModule& module) {
    validate(module);
    SocleLayers out;
    int deg = module.degree();
    auto place = [&](const SimpleModule& target, const BigInt& mult) {
        int drop = deg - target.degree();
        if (drop < 0 || drop % 2) throw std::logic_error("type III changed degree parity");
        add(out, drop / 2, target, ExtendedNat(mult));
    };
    if (ambient == Family::GL && sub == Family::GL) {
        for (const auto& [t, c] : diagExpand(module.weight(), k, l)) place(make(sub, t.pos, t.neg), c);
    } else if (ambient == Family::GL) {
        for (const auto& [t, c] : classicalInGl(sub, module.weight(), k)) place(make(sub, t), c);
    } else if (sub == Family::GL) {
        for (const auto& [t, c] : glInClassical(ambient, module.lambda, k)) place(make(sub, t.pos, t.neg), c);
    } else if (sub == ambient) {
        for (const auto& [t, c] : typeIIISame(ambient, module.lambda, k)) place(make(sub, t), c);
    } else {
        if (k % 2) throw InvalidSpec("sp/so cross embedding needs an even number of copies");
        for (const auto& [t, c] : classicalCross(ambient, module.lambda, k / 2)) place(make(sub, t), c);
    }
    trim(out);
    return out;
}

SocleLayers layersGeneral(const EmbeddingSpec& rawSpec, const SimpleModule& rawModule) {
    auto [spec, module] = normalizeSl(rawSpec, rawModule);
    validate(spec);
    validate(module);
    if (module.family != spec.ambient) throw InvalidSpec("module family differs from the ambient family");
    SocleLayers out;
    auto first = layersTypeI(spec.ambient, spec.a1, spec.b, spec.c1, spec.d, module);
    for (std::size_t i = 0; i < first.size(); ++i)
        for (const auto& [m1, x1] : first[i]) {
            auto second = layersTypeII(spec.ambient, spec.a2, m1);
            for (std::size_t j = 0; j < second.size(); ++j)
                for (const auto& [m2, x2] : second[j]) {
                    auto third = layersTypeIII(spec.ambient, spec.sub, spec.k, spec.l, m2);
                    for (std::size_t h = 0; h < third.size(); ++h)
                        for (const auto& [m3, x3] : third[h]) add(out, i + j + h, m3, x1 * x2 * x3);
                }
        }
    trim(out);
    return out;
}

}  // namespace socle
