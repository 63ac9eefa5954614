#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qgi/cyclotomic.hpp"
#include "qgi/errors.hpp"
#include "qgi/numtheory.hpp"

using namespace qgi;

TEST_CASE("number theory basics") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), InputError);
    for (long n = 1; n <= 200; ++n) CHECK(mobius(n) == oracle::mobius_recursive(n));

    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (long n = 1; n <= 100; ++n) {
        long count = 0;
        for (long k = 1; k <= n; ++k)
            if (gcd_long(k, n) == 1) ++count;
        CHECK(euler_phi(n) == count);
    }

    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<long>{1});
    CHECK(is_prime(2));
    CHECK(is_prime(331));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(7861));  // 7 * 1123
    CHECK(power_mod(3, 4, 5) == 1);
    CHECK(power_mod(2, 0, 7) == 1);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
    for (int e = 1; e <= 80; ++e)
        CHECK(static_cast<long>(cyclotomic_polynomial(e).size()) == euler_phi(e) + 1);
    // first index with a coefficient outside {-1, 0, 1}
    CHECK(cyclotomic_polynomial(105)[7] == -2);
}

TEST_CASE("root powers") {
    for (int e : {1, 2, 3, 4, 6, 8, 12, 24}) {
        CHECK(Cyclotomic::root_power(e, 0) == Cyclotomic::from_integer(e, 1));
        CHECK(Cyclotomic::root_power(e, e) == Cyclotomic::from_integer(e, 1));
        CHECK(Cyclotomic::root_power(e, -1) == Cyclotomic::root_power(e, e - 1));
        for (int a = 0; a < e; ++a)
            for (int b = 0; b < e; ++b)
                CHECK(Cyclotomic::root_power(e, a) * Cyclotomic::root_power(e, b) ==
                      Cyclotomic::root_power(e, a + b));
        if (e > 1) {
            Cyclotomic sum(e);
            for (int j = 0; j < e; ++j) sum += Cyclotomic::root_power(e, j);
            CHECK(sum.is_zero());
        }
    }
    CHECK(Cyclotomic::root_power(2, 1) == Cyclotomic::from_integer(2, -1));
    CHECK(Cyclotomic::root_power(4, 2) == Cyclotomic::from_integer(4, -1));
}

TEST_CASE("primitive root power sums give the Moebius function") {
    for (int e = 1; e <= 60; ++e) {
        Cyclotomic sum(e);
        for (int j = 1; j <= e; ++j)
            if (gcd_long(j, e) == 1) sum += Cyclotomic::root_power(e, j);
        CHECK(sum == Cyclotomic::from_integer(e, mobius(e)));
    }
}

TEST_CASE("from_root_powers") {
    std::mt19937 rng(12345);
    for (int e : {1, 4, 9, 12, 30}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Int> mult(e);
            Cyclotomic direct(e);
            for (int j = 0; j < e; ++j) {
                long m = static_cast<long>(rng() % 7) - 3;
                mult[j] = m;
                direct += Cyclotomic::from_integer(e, m) * Cyclotomic::root_power(e, j);
            }
            CHECK(Cyclotomic::from_root_powers(e, mult) == direct);
        }
        std::vector<Int> wrong(e + 1);
        CHECK_THROWS_AS(Cyclotomic::from_root_powers(e, wrong), InputError);
    }
}

TEST_CASE("ring arithmetic") {
    int e = 12;
    Cyclotomic z = Cyclotomic::root_power(e, 1);
    Cyclotomic one = Cyclotomic::from_integer(e, 1);
    CHECK((one + z) * (one - z) == one - z * z);
    CHECK((z - z).is_zero());
    CHECK(-z + z == Cyclotomic(e));
    CHECK_THROWS_AS(Cyclotomic::from_integer(4, 1) + Cyclotomic::from_integer(3, 1), InputError);
    CHECK_THROWS_AS(Cyclotomic(0), InputError);
}

TEST_CASE("galois action") {
    std::mt19937 rng(98765);
    for (int e : {1, 2, 5, 8, 12, 30}) {
        std::vector<long> units;
        for (long k = 1; k <= e; ++k)
            if (gcd_long(k, e) == 1) units.push_back(k);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Int> mult(e);
            for (int j = 0; j < e; ++j) mult[j] = static_cast<long>(rng() % 9) - 4;
            Cyclotomic v = Cyclotomic::from_root_powers(e, mult);
            long a = units[rng() % units.size()];
            long b = units[rng() % units.size()];
            CHECK(galois_apply(galois_apply(v, b), a) == galois_apply(v, a * b % e));
            CHECK(galois_apply(v, 1) == v);
        }
        CHECK(galois_apply(Cyclotomic::root_power(e, 1), units.back()) ==
              Cyclotomic::root_power(e, units.back()));
    }
    CHECK_THROWS_AS(galois_apply(Cyclotomic::root_power(12, 1), 4), InputError);
}

TEST_CASE("rational extraction") {
    CHECK(as_integer(Cyclotomic::from_integer(12, 7)) == Int(7));
    CHECK(as_rational(Cyclotomic::from_integer(5, -2)) == Rational(-2));
    CHECK_FALSE(as_integer(Cyclotomic::root_power(12, 1)).has_value());
    // zeta_4^2 = -1 is rational even though it is a proper root power
    CHECK(as_integer(Cyclotomic::root_power(4, 2)) == Int(-1));
}

TEST_CASE("cmp is a total order compatible with equality") {
    std::vector<Cyclotomic> vals;
    for (int j = 0; j < 12; ++j) vals.push_back(Cyclotomic::root_power(12, j));
    for (const auto& a : vals)
        for (const auto& b : vals) {
            CHECK((a.cmp(b) == 0) == (a == b));
            CHECK(a.cmp(b) == -b.cmp(a));
        }
}
