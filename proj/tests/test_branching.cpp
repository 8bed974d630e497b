#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "socle/branching.hpp"
#include "socle/finite_rank.hpp"

using namespace socle;

namespace {

const ExtendedNat inf = ExtendedNat::infinity();

SimpleModule gl(Partition l, Partition m = {}) { return {Family::GL, std::move(l), std::move(m)}; }
SimpleModule sp(Partition l) { return {Family::SP, std::move(l), {}}; }
SimpleModule so(Partition l) { return {Family::SO, std::move(l), {}}; }

std::vector<SimpleModule> modules(Family f, int maxDegree) {
    std::vector<SimpleModule> out;
    for (int p = 0; p <= maxDegree; ++p) {
        if (f != Family::GL) {
            for (const auto& l : enumeratePartitions(p)) out.push_back({f, l, {}});
            continue;
        }
        for (int q = 0; p + q <= maxDegree; ++q)
            for (const auto& l : enumeratePartitions(p))
                for (const auto& m : enumeratePartitions(q)) out.push_back(gl(l, m));
    }
    return out;
}

SocleLayers single(const SimpleModule& m) { return {Layer{{m, 1}}}; }

}  // namespace

TEST_CASE("type I examples") {
    CHECK(layersTypeI(Family::GL, 0, 0, 0, 0, gl({2, 1}, {1})) == single(gl({2, 1}, {1})));
    CHECK(layersTypeI(Family::GL, 0, 2, 0, 0, gl({2})) ==
          SocleLayers{{{gl({2}), 1}}, {{gl({1}), 2}}, {{gl({}), 3}}});
    CHECK(layersTypeI(Family::GL, 0, 1, 0, 1, gl({1})) == SocleLayers{{{gl({1}), 1}}, {{gl({}), 1}}});
    CHECK(totalMultiplicities(layersTypeI(Family::GL, 0, 2, 0, 0, gl({2}))) ==
          Layer{{gl({2}), 1}, {gl({1}), 2}, {gl({}), 3}});
}

TEST_CASE("type II examples") {
    CHECK(layersTypeII(Family::GL, 0, gl({1}, {1})) == single(gl({1}, {1})));
    CHECK(layersTypeII(Family::GL, 2, gl({1}, {1})) ==
          SocleLayers{{{gl({1}, {1}), 1}, {gl({1}), 2}, {gl({}, {1}), 2}, {gl({}), 3}}, {{gl({}), 1}}});
    CHECK(layersTypeII(Family::GL, 3, gl({1})) == SocleLayers{{{gl({1}), 1}, {gl({}), 3}}});
    CHECK(layersTypeII(Family::GL, inf, gl({1}, {1})) ==
          SocleLayers{{{gl({1}, {1}), 1}, {gl({1}), inf}, {gl({}, {1}), inf}, {gl({}), inf}}, {{gl({}), 1}}});
}

TEST_CASE("traceless tensors under type II") {
    CHECK(layersTensorTypeII(1, 0, 1) == SocleLayers{{{gl({1}), 1}, {gl({}), 1}}});
    CHECK(layersTensorTypeII(0, 0, 5) == single(gl({})));
    CHECK(layersTensorTypeII(1, 1, 2) ==
          SocleLayers{{{gl({1}, {1}), 1}, {gl({1}), 2}, {gl({}, {1}), 2}, {gl({}), 3}}, {{gl({}), 1}}});
}

TEST_CASE("traceless tensors decompose into simple modules") {
    for (int a = 1; a <= 3; ++a)
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                SocleLayers expected;
                for (const auto& l : enumeratePartitions(p))
                    for (const auto& m : enumeratePartitions(q)) {
                        ExtendedNat w(symDim(l) * symDim(m));
                        auto part = layersTypeII(Family::GL, a, gl(l, m));
                        if (expected.size() < part.size()) expected.resize(part.size());
                        for (std::size_t r = 0; r < part.size(); ++r)
                            for (const auto& [mod, x] : part[r]) expected[r][mod] += w * x;
                    }
                CHECK(layersTensorTypeII(p, q, a) == expected);
            }
}

TEST_CASE("type III examples") {
    CHECK(layersTypeIII(Family::GL, Family::GL, 1, 0, gl({2}, {1})) == single(gl({2}, {1})));
    CHECK(layersTypeIII(Family::GL, Family::SP, 1, 0, gl({1}, {1})) == SocleLayers{{{sp({2}), 1}, {sp({1, 1}), 1}}});
    CHECK(layersTypeIII(Family::GL, Family::GL, 1, 1, gl({1})) == SocleLayers{{{gl({1}), 1}, {gl({}, {1}), 1}}});
    CHECK(layersTypeIII(Family::SP, Family::SP, 1, 0, sp({2, 1})) == single(sp({2, 1})));
    CHECK(layersTypeIII(Family::SO, Family::SO, 1, 0, so({1, 1})) == single(so({1, 1})));
    CHECK(layersTypeIII(Family::GL, Family::GL, 1, 1, gl({1}, {1})) ==
          SocleLayers{{{gl({1}, {1}), 2}, {gl({2}), 1}, {gl({1, 1}), 1}, {gl({}, {2}), 1}, {gl({}, {1, 1}), 1}},
                      {{gl({}), 1}}});
}

TEST_CASE("identity embeddings give one layer") {
    for (Family f : {Family::GL, Family::SP, Family::SO}) {
        EmbeddingSpec spec;
        spec.ambient = spec.sub = f;
        for (const auto& m : modules(f, 3)) CHECK(layersGeneral(spec, m) == single(m));
    }
}

TEST_CASE("layer grading and Loewy length bounds") {
    for (Family f : {Family::GL, Family::SP, Family::SO})
        for (const auto& m : modules(f, 3)) {
            int deg = m.degree();
            auto one = layersTypeI(f, 1, 2, 1, 2, m);
            CHECK(static_cast<int>(one.size()) <= deg + 1);
            for (std::size_t r = 0; r < one.size(); ++r)
                for (const auto& [x, c] : one[r]) CHECK(x.degree() <= deg - static_cast<int>(r));

            auto two = layersTypeII(f, 2, m);
            int maxLayers = f == Family::GL ? std::min(m.lambda.size(), m.mu.size()) + 1 : m.lambda.size() / 2 + 1;
            CHECK(static_cast<int>(two.size()) <= maxLayers);
            for (std::size_t r = 0; r < two.size(); ++r)
                for (const auto& [x, c] : two[r]) {
                    CHECK(x.lambda.size() <= m.lambda.size() - static_cast<int>(r) * (f == Family::GL ? 1 : 2));
                    if (f == Family::GL) CHECK(x.mu.size() <= m.mu.size() - static_cast<int>(r));
                }

            Family sub = f == Family::GL ? Family::SO : Family::GL;
            auto three = layersTypeIII(f, sub, 1, f == Family::GL ? 0 : 1, m);
            CHECK(static_cast<int>(three.size()) <= deg / 2 + 1);
            for (std::size_t r = 0; r < three.size(); ++r)
                for (const auto& [x, c] : three[r]) CHECK(x.degree() == deg - 2 * static_cast<int>(r));
        }
}

TEST_CASE("bounds formula agrees with the isotypic one at infinite rank") {
    for (const auto& m : modules(Family::GL, 4)) CHECK(layersTypeIIByBounds(Family::GL, inf, m) == layersTypeII(Family::GL, inf, m));
    for (const auto& m : modules(Family::GL, 3)) CHECK(layersTypeIIByBounds(Family::GL, 0, m) == single(m));
}

TEST_CASE("composite sp inside gl matches a finite-rank restriction") {
    // gl(7) -> gl(6) + trivial -> sp(6), the natural module picking up one trivial piece.
    EmbeddingSpec spec;
    spec.sub = Family::SP;
    spec.b = 1;
    spec.d = 1;
    for (const auto& m : modules(Family::GL, 2)) {
        Layer totals = totalMultiplicities(layersGeneral(spec, m));
        Character down = restrictDiagonal(7, {m.lambda, m.mu}, 1, 0, 1, 6);
        auto expected = decomposeLabels({Family::SP, 6}, foldToSubtype(down, 6, Family::SP));
        std::map<Partition, std::int64_t> got;
        for (const auto& [x, c] : totals) got[x.lambda] += static_cast<std::int64_t>(c.value());
        CHECK(got == expected);
    }
}

TEST_CASE("general embeddings convolve the stages") {
    EmbeddingSpec spec;
    spec.b = 2;
    CHECK(layersGeneral(spec, gl({2})) == layersTypeI(Family::GL, 0, 2, 0, 0, gl({2})));
    EmbeddingSpec two;
    two.a2 = 2;
    CHECK(layersGeneral(two, gl({1}, {1})) == layersTypeII(Family::GL, 2, gl({1}, {1})));
    EmbeddingSpec sl;
    sl.ambient = sl.sub = Family::SL;
    sl.b = 2;
    CHECK(layersGeneral(sl, {Family::SL, {2}, {}}) == layersTypeI(Family::GL, 0, 2, 0, 0, gl({2})));
    EmbeddingSpec infinite;
    infinite.b = inf;
    Layer totals = totalMultiplicities(layersGeneral(infinite, gl({1})));
    CHECK(totals.at(gl({})).isInfinite());
    CHECK(totals.at(gl({1})) == ExtendedNat(1));
}

TEST_CASE("validation") {
    auto bad = [](auto edit) {
        EmbeddingSpec s;
        edit(s);
        return s;
    };
    CHECK_THROWS_AS(validate(bad([](EmbeddingSpec& s) { s.k = 0; })), InvalidSpec);
    CHECK_THROWS_AS(validate(bad([](EmbeddingSpec& s) { s.a1 = 1; })), InvalidSpec);
    CHECK_THROWS_AS(validate(bad([](EmbeddingSpec& s) { s.c1 = 1; })), InvalidSpec);
    CHECK_THROWS_AS(validate(bad([](EmbeddingSpec& s) { s.sub = Family::SP; s.l = 1; })), InvalidSpec);
    CHECK_THROWS_AS(validate(bad([](EmbeddingSpec& s) { s.ambient = Family::SP; s.a2 = 3; s.sub = Family::SP; })), InvalidSpec);
    CHECK_THROWS_AS(validate(bad([](EmbeddingSpec& s) { s.ambient = Family::SO; s.sub = Family::SP; })), InvalidSpec);
    CHECK_THROWS_AS(validate(bad([](EmbeddingSpec& s) { s.ambient = Family::SO; s.sub = Family::GL; })), InvalidSpec);
    CHECK_NOTHROW(validate(bad([](EmbeddingSpec& s) { s.ambient = Family::SO; s.sub = Family::GL; s.l = 1; })));
    CHECK_NOTHROW(validate(bad([](EmbeddingSpec& s) { s.a1 = 1; s.d = 1; })));
    CHECK_THROWS_AS(validate(SimpleModule{Family::SP, {1}, {1}}), InvalidSpec);
    EmbeddingSpec spec;
    CHECK_THROWS_AS(layersGeneral(spec, sp({1})), InvalidSpec);
}

TEST_CASE("normalizeSl relabels families") {
    EmbeddingSpec s;
    s.ambient = Family::SL;
    s.sub = Family::SL;
    auto [t, m] = normalizeSl(s, {Family::SL, {1}, {}});
    CHECK(t.ambient == Family::GL);
    CHECK(t.sub == Family::GL);
    CHECK(m.family == Family::GL);
    EmbeddingSpec u;
    u.ambient = Family::SP;
    u.sub = Family::SL;
    CHECK(normalizeSl(u, sp({1})).first.sub == Family::GL);
}

TEST_CASE("repeated calls return identical layers") {
    EmbeddingSpec spec;
    spec.sub = Family::SO;
    spec.a2 = 3;
    spec.b = 1;
    spec.d = 1;
    auto first = layersGeneral(spec, gl({2}, {1}));
    for (int i = 0; i < 3; ++i) CHECK(layersGeneral(spec, gl({2}, {1})) == first);
}
