#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle_helpers.hpp"
#include "prym/intfactor.hpp"
#include "prym/sturm.hpp"
#include "prym/unipoly.hpp"

using namespace prym;
using prym::testing::random_poly;
using prym::testing::stable_grid_roots;
using prym::testing::sylvester_resultant;

namespace {

const UniPoly kSexticF{-295, -236, 60, 54, 48, -12, 1};
const UniPoly kQuadraticG{12, 8, 1};

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    UniPoly p{1, 2, 3};
    UniPoly q{-1, 1};
    CHECK((p * q).degree() == 3);
    CHECK((p + q).coeff(0) == Rat(0));
    CHECK(p(Rat(2)) == Rat(17));
    auto [quo, rem] = divrem(p * q + UniPoly{5}, q);
    CHECK(quo == p);
    CHECK(rem == UniPoly{5});
    CHECK(p.shift(Rat(1))(Rat(0)) == p(Rat(1)));
    CHECK(p.shift(Rat(-3))(Rat(5)) == p(Rat(2)));
    CHECK(p.scale(Rat(2))(Rat(3)) == p(Rat(6)));
    CHECK(UniPoly({1, 2, 3}).reverse() == UniPoly{3, 2, 1});
}

TEST_CASE("resultant of linear forms") {
    CHECK(resultant(UniPoly{-1, 1}, UniPoly{1, 1}) == Rat(2));
}

TEST_CASE("resultant antisymmetry law on random inputs") {
    auto rng = prym::testing::test_rng();
    for (int trial = 0; trial < 60; ++trial) {
        int da = 1 + static_cast<int>(rng() % 4);
        int db = 1 + static_cast<int>(rng() % 4);
        UniPoly a = random_poly(rng, da), b = random_poly(rng, db);
        Rat lhs = resultant(a, b);
        Rat rhs = resultant(b, a);
        if ((da * db) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resultant agrees with Sylvester determinant oracle") {
    auto rng = prym::testing::test_rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int da = 1 + static_cast<int>(rng() % 5);
        int db = 1 + static_cast<int>(rng() % 5);
        UniPoly a = random_poly(rng, da), b = random_poly(rng, db);
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
    CHECK(resultant(kSexticF, kSexticF.derivative()) ==
          sylvester_resultant(kSexticF, kSexticF.derivative()));
}

TEST_CASE("resultant vanishes exactly on common roots") {
    auto rng = prym::testing::test_rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly common{static_cast<long>(rng() % 7) - 3, 1};
        UniPoly a = random_poly(rng, 2) * common;
        UniPoly b = random_poly(rng, 3) * common;
        CHECK(resultant(a, b) == Rat(0));
        UniPoly c = random_poly(rng, 2);
        if (gcd_poly(c, b).degree() == 0) CHECK(resultant(c, b) != Rat(0));
    }
}

TEST_CASE("discriminant support of the sextic times quadratic input") {
    // disc(f*g) = disc(f) disc(g) res(f,g)^2, all exact
    Rat df = discriminant(kSexticF);
    Rat dg = discriminant(kQuadraticG);
    Rat r = resultant(kSexticF, kQuadraticG);
    Rat dfg = discriminant(kSexticF * kQuadraticG);
    CHECK(dfg == df * dg * r * r);
    CHECK(r == Rat(Int("1201") * Int("193793")));

    auto fac = factor_integer(df.get_num());
    std::set<Int> support;
    for (auto& [p, e] : fac) support.insert(p);
    CHECK(support == std::set<Int>{2, 5, 7, 59, 653, Int("17283342701")});
}

TEST_CASE("integer factorization examples") {
    CHECK(factor_integer(Int(1)).empty());
    Factorization f = factor_integer(Int("1201") * Int("193793"));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::make_pair(Int(1201), 1));
    CHECK(f[1] == std::make_pair(Int(193793), 1));
    // trial-division oracle: both factors are below the trial bound
    CHECK(Int(193793) < Int(1'000'000));
}

TEST_CASE("factorization re-multiplies to the input") {
    auto rng = prym::testing::test_rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Int n = Int(static_cast<unsigned long>(rng() % 1000000 + 2)) *
                Int(static_cast<unsigned long>(rng() % 1000000 + 2));
        auto f = factor_integer(n);
        CHECK(factorization_product(f) == n);
        for (auto& [p, e] : f) CHECK(is_prime(p));
    }
}

TEST_CASE("parallel trial division matches serial reference") {
    const auto& primes = prime_table(100000);
    Int n = Int("987654321234567891") * 97 * 89 * 2;
    CHECK(trial_divisors_parallel(n, primes) == trial_divisors_serial(n, primes));
}

TEST_CASE("sturm isolation counts") {
    auto ivs = sturm_isolate_real_roots(kSexticF);
    CHECK(ivs.size() == 2);  // two real roots of the sextic
    CHECK(sturm_isolate_real_roots(UniPoly{1, 0, 1}).empty());
    auto two = sturm_isolate_real_roots(UniPoly{12, 8, 1});
    REQUIRE(two.size() == 2);
    CHECK(two[0].lo < Rat(-6));
    CHECK(Rat(-6) < two[0].hi);
    CHECK(two[1].lo < Rat(-2));
    CHECK(Rat(-2) < two[1].hi);
}

TEST_CASE("sturm isolation intervals are disjoint, refinable, and root-free at endpoints") {
    auto ivs = sturm_isolate_real_roots(kSexticF);
    for (size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);
    for (auto& iv : ivs) {
        CHECK(sign(iv.poly(iv.lo)) != 0);
        CHECK(sign(iv.poly(iv.hi)) != 0);
        refine_interval(iv, Rat(1, 1024));
        CHECK(iv.width() < Rat(1, 1024));
        CHECK(sign(iv.poly(iv.lo)) * sign(iv.poly(iv.hi)) < 0);
    }
    // gamma_1 ~ -0.98, gamma_2 ~ 1.70
    CHECK(ivs[0].lo < Rat(-49, 50));
    CHECK(ivs[1].hi > Rat(17, 10));
}

TEST_CASE("sturm root count matches dense grid oracle on random squarefree polys") {
    auto rng = prym::testing::test_rng(31);
    int done = 0;
    while (done < 60) {
        UniPoly p = random_poly(rng, 2 + static_cast<int>(rng() % 7));
        if (!is_squarefree(p)) continue;
        CHECK(count_real_roots(p) == stable_grid_roots(p));
        ++done;
    }
}

TEST_CASE("non-squarefree input is rejected") {
    UniPoly sq = UniPoly{1, 1} * UniPoly{1, 1};
    CHECK_THROWS_AS(sturm_isolate_real_roots(sq), Error);
}
