#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "socle/finite_rank.hpp"

using namespace socle;

namespace {

using Decomp = std::map<HighestWeight, std::int64_t>;

HighestWeight hw(Partition lambda, Partition mu = {}) { return {std::move(lambda), std::move(mu)}; }

}  // namespace

TEST_CASE("Weyl dimensions") {
    CHECK(weylDim({Family::GL, 3}, hw({1})) == 3);
    CHECK(weylDim({Family::GL, 2}, hw({1}, {1})) == 3);
    CHECK(weylDim({Family::SP, 4}, hw({1, 1})) == 5);
    CHECK(weylDim({Family::SO, 3}, hw({1})) == 3);
    CHECK(weylDim({Family::SO, 5}, hw({1, 1})) == 10);
    CHECK(weylDim({Family::SO, 8}, hw({1, 1})) == 28);
    CHECK_THROWS_AS(weylDim({Family::GL, 1}, hw({1, 1})), OracleError);
    CHECK_THROWS_AS(validateAlgebra({Family::SP, 3}), OracleError);
}

TEST_CASE("GL dimensions count semistandard tableaux") {
    for (int n = 1; n <= 4; ++n)
        for (int s = 0; s <= 5; ++s)
            for (const auto& lambda : oracle::partitions(s))
                if (static_cast<int>(lambda.size()) <= n)
                    CHECK(weylDim({Family::GL, n}, hw(Partition(lambda))) == oracle::skewSsytCount(lambda, {}, n));
}

TEST_CASE("characters: small cases and mass") {
    CHECK(irrChar({Family::GL, 2}, hw({1})) == Character{{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(irrChar({Family::GL, 2}, hw({1}, {1})) == Character{{{1, -1}, 1}, {{0, 0}, 1}, {{-1, 1}, 1}});
    CHECK(irrChar({Family::SP, 2}, hw({2})) == Character{{{2}, 1}, {{0}, 1}, {{-2}, 1}});
    for (Algebra alg : {Algebra{Family::GL, 3}, Algebra{Family::SP, 4}, Algebra{Family::SO, 5}, Algebra{Family::SO, 6}})
        for (int s = 0; s <= 3; ++s)
            for (const auto& lambda : enumeratePartitions(s)) {
                if (!weightInRange(alg, hw(lambda))) continue;
                Character ch = irrChar(alg, hw(lambda));
                CHECK(mass(ch) == static_cast<std::int64_t>(weylDim(alg, hw(lambda))));
                CHECK(decompose(alg, ch) == Decomp{{hw(lambda), 1}});
            }
}

TEST_CASE("tensor products") {
    Algebra gl2{Family::GL, 2};
    CHECK(decompose(gl2, tensor(irrChar(gl2, hw({1})), irrChar(gl2, hw({1})))) ==
          Decomp{{hw({2}), 1}, {hw({1, 1}), 1}});
    CHECK(decompose(gl2, tensor(irrChar(gl2, hw({1})), irrChar(gl2, hw({}, {1})))) ==
          Decomp{{hw({1}, {1}), 1}, {hw({}), 1}});
    Algebra gl4{Family::GL, 4};
    for (const auto& mu : enumeratePartitions(2))
        for (const auto& nu : enumeratePartitions(2)) {
            Decomp got = decompose(gl4, tensor(irrChar(gl4, hw(mu)), irrChar(gl4, hw(nu))));
            Decomp expected;
            for (const auto& [lambda, c] : oracle::lrProduct(mu.parts(), nu.parts()))
                if (lambda.size() <= 4) expected[hw(Partition(lambda))] = c;
            CHECK(got == expected);
        }
}

TEST_CASE("diagonal restriction") {
    Algebra gl1{Family::GL, 1};
    CHECK(decompose(gl1, restrictDiagonal(2, hw({1}), 1, 0, 1, 1)) == Decomp{{hw({1}), 1}, {hw({}), 1}});
    CHECK(decompose(gl1, restrictDiagonal(2, hw({2}), 2, 0, 0, 1)) == Decomp{{hw({2}), 3}});
    Algebra gl3{Family::GL, 3};
    for (const auto& lambda : enumeratePartitions(2))
        CHECK(decompose(gl3, restrictDiagonal(3, hw(lambda), 1, 0, 0, 3)) == Decomp{{hw(lambda), 1}});
    CHECK_THROWS_AS(restrictDiagonal(5, hw({1}), 1, 1, 0, 2), OracleError);
}

TEST_CASE("restriction to sp and so") {
    Algebra sp2{Family::SP, 2};
    CHECK(decompose(sp2, restrictToSubtype(2, hw({1}), Family::SP)) == Decomp{{hw({1}), 1}});
    // S^2 of the natural sp(2)-module is the adjoint and nothing else.
    CHECK(decompose(sp2, restrictToSubtype(2, hw({2}), Family::SP)) == Decomp{{hw({2}), 1}});
    CHECK(decomposeLabels({Family::SO, 3}, restrictToSubtype(3, hw({1, 1}), Family::SO)) ==
          std::map<Partition, std::int64_t>{{{1}, 1}});
    CHECK(decomposeLabels({Family::SP, 4}, restrictToSubtype(4, hw({1}, {1}), Family::SP)) ==
          std::map<Partition, std::int64_t>{{{2}, 1}, {{1, 1}, 1}});
    CHECK_THROWS_AS(restrictToSubtype(3, hw({1}), Family::SP), OracleError);
}

TEST_CASE("restriction along a Levi subalgebra") {
    // sp(4) natural restricted to gl(2) is W + W*.
    Algebra gl2{Family::GL, 2};
    CHECK(decompose(gl2, restrictToLevi({Family::SP, 4}, hw({1}))) == Decomp{{hw({1}), 1}, {hw({}, {1}), 1}});
    CHECK(decompose(gl2, restrictToLevi({Family::SO, 5}, hw({1}))) ==
          Decomp{{hw({1}), 1}, {hw({}, {1}), 1}, {hw({}), 1}});
}

TEST_CASE("oracle size cap") {
    CHECK(oracleDimBound() > 0);
    CHECK_THROWS_AS(irrChar({Family::GL, 12}, hw({4, 3, 2, 1}, {3, 2, 1})), OracleTooLarge);
}
