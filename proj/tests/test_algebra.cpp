#include <doctest.h>

#include <random>
#include <vector>

#include "qgi/algebra.hpp"
#include "qgi/errors.hpp"
#include "qgi/group.hpp"
#include "qgi/subgroups.hpp"

using namespace qgi;

namespace {

AlgebraElement random_element(const GroupTable& g, std::mt19937& rng) {
    AlgebraElement a(g);
    for (int x = 0; x < g.n; ++x) {
        long num = static_cast<long>(rng() % 7) - 3;
        long den = 1 + rng() % 3;
        a[x] = make_rational(num, den);
    }
    return a;
}

}  // namespace

TEST_CASE("basis products follow the multiplication table") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("S3"));
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            CHECK(AlgebraElement::basis(g, x) * AlgebraElement::basis(g, y) ==
                  AlgebraElement::basis(g, g.mul[x][y]));
}

TEST_CASE("ring axioms on random elements") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("D4"));
    std::mt19937 rng(424242);
    AlgebraElement one = AlgebraElement::identity(g);
    for (int trial = 0; trial < 15; ++trial) {
        AlgebraElement a = random_element(g, rng);
        AlgebraElement b = random_element(g, rng);
        AlgebraElement c = random_element(g, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(one * a == a);
        CHECK(a * one == a);
        Rational s = make_rational(3, 2);
        CHECK(s * (a + b) == s * a + s * b);
        CHECK(a - a == AlgebraElement(g));
    }
}

TEST_CASE("products across distinct tables are rejected") {
    GroupTable g1 = enumerate_group(GroupSpec::parse_name("S3"));
    GroupTable g2 = enumerate_group(GroupSpec::parse_name("C6"));
    AlgebraElement a = AlgebraElement::basis(g1, 1);
    AlgebraElement b = AlgebraElement::basis(g2, 1);
    CHECK_THROWS_AS(a * b, InputError);
    CHECK_THROWS_AS(a += b, InputError);
}

TEST_CASE("conjugation") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("S4"));
    std::mt19937 rng(777);
    for (int x = 0; x < g.n; ++x)
        for (int z = 0; z < g.n; ++z) {
            int moved = g.mul[g.mul[g.inv[x]][z]][x];
            CHECK(conjugate(AlgebraElement::basis(g, z), x) == AlgebraElement::basis(g, moved));
        }
    for (int trial = 0; trial < 8; ++trial) {
        AlgebraElement a = random_element(g, rng);
        AlgebraElement b = random_element(g, rng);
        int x = 1 + rng() % (g.n - 1);
        CHECK(conjugate(a + b, x) == conjugate(a, x) + conjugate(b, x));
        CHECK(conjugate(a * b, x) == conjugate(a, x) * conjugate(b, x));
        CHECK(conjugate(conjugate(a, x), g.inv[x]) == a);
        CHECK(conjugate(a, 0) == a);
    }
}

TEST_CASE("subgroup averages") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("S3"));
    Subgroup a3;
    Subgroup reflection;
    for (int x = 0; x < g.n; ++x) {
        if (g.elem_order[x] == 3) a3 = cyclic_subgroup(g, x);
        if (g.elem_order[x] == 2 && reflection.order() == 0) reflection = cyclic_subgroup(g, x);
    }
    REQUIRE(a3.order() == 3);
    REQUIRE(reflection.order() == 2);

    AlgebraElement avg3 = subgroup_average(g, a3);
    AlgebraElement avg2 = subgroup_average(g, reflection);
    CHECK(is_idempotent(avg3));
    CHECK(is_idempotent(avg2));
    CHECK(is_central(avg3));        // A3 is normal
    CHECK_FALSE(is_central(avg2));  // a reflection subgroup is not

    for (int x : a3.elems) CHECK(avg3[x] == make_rational(1, 3));
    CHECK(avg3[reflection.elems[1]] == 0);

    // averaging over the whole group absorbs every basis element
    Subgroup whole = subgroup_closure(g, g.generators);
    REQUIRE(whole.order() == g.n);
    AlgebraElement avg_g = subgroup_average(g, whole);
    for (int x = 0; x < g.n; ++x) CHECK(AlgebraElement::basis(g, x) * avg_g == avg_g);
}

TEST_CASE("epsilon") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("S3"));
    Subgroup trivial = cyclic_subgroup(g, 0);
    Subgroup whole = subgroup_closure(g, g.generators);
    Subgroup a3;
    for (int x = 0; x < g.n; ++x)
        if (g.elem_order[x] == 3) a3 = cyclic_subgroup(g, x);

    CHECK(epsilon(g, a3, a3) == subgroup_average(g, a3));
    CHECK(epsilon(g, whole, whole) == subgroup_average(g, whole));

    // the only minimal normal subgroup of S3 is A3
    AlgebraElement expect = AlgebraElement::identity(g) - subgroup_average(g, a3);
    CHECK(epsilon(g, whole, trivial) == expect);
    CHECK(is_idempotent(epsilon(g, whole, trivial)));

    GroupTable c4 = enumerate_group(GroupSpec::parse_name("C4"));
    Subgroup c2 = cyclic_subgroup(c4, 2);
    Subgroup c4full = cyclic_subgroup(c4, 1);
    REQUIRE(c2.order() == 2);
    AlgebraElement e42 = epsilon(c4, c4full, c2);
    CHECK(e42 == subgroup_average(c4, c2) - subgroup_average(c4, c4full));
    CHECK(is_idempotent(e42));

    // epsilon requires the smaller subgroup to be normal in the larger
    Subgroup refl;
    for (int x = 0; x < g.n; ++x)
        if (g.elem_order[x] == 2 && refl.order() == 0) refl = cyclic_subgroup(g, x);
    CHECK_THROWS_AS(epsilon(g, whole, refl), InputError);
}

TEST_CASE("conjugate orbit sum over reflection subgroups of S3") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("S3"));
    Subgroup refl;
    for (int x = 0; x < g.n; ++x)
        if (g.elem_order[x] == 2 && refl.order() == 0) refl = cyclic_subgroup(g, x);
    AlgebraElement s = conjugate_orbit_sum(g, refl, refl);
    // three conjugate subgroups, each contributing (1 + t)/2
    CHECK(s[0] == make_rational(3, 2));
    for (int x = 1; x < g.n; ++x) {
        if (g.elem_order[x] == 2)
            CHECK(s[x] == make_rational(1, 2));
        else
            CHECK(s[x] == 0);
    }
    // the orbit sum of a non-normal subgroup average need not be idempotent
    CHECK_FALSE(is_idempotent(s));
    CHECK(is_central(s));

    // a normal subgroup has a single conjugate
    Subgroup a3;
    for (int x = 0; x < g.n; ++x)
        if (g.elem_order[x] == 3) a3 = cyclic_subgroup(g, x);
    CHECK(conjugate_orbit_sum(g, a3, a3) == subgroup_average(g, a3));
}

TEST_CASE("centrality") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("S4"));
    ConjClassData cc = conjugacy_classes(g);
    for (int j = 0; j < cc.num_classes; ++j) {
        AlgebraElement sum(g);
        for (int x : cc.members[j]) sum += AlgebraElement::basis(g, x);
        CHECK(is_central(sum));
        if (cc.class_size[j] > 1) CHECK_FALSE(is_central(AlgebraElement::basis(g, cc.representative[j])));
    }
    GroupTable ab = enumerate_group(GroupSpec::parse_name("C2xC4"));
    for (int x = 0; x < ab.n; ++x) CHECK(is_central(AlgebraElement::basis(ab, x)));
}

TEST_CASE("cmp is a total order refining equality") {
    GroupTable g = enumerate_group(GroupSpec::parse_name("C6"));
    std::vector<AlgebraElement> vals;
    for (int x = 0; x < g.n; ++x) vals.push_back(AlgebraElement::basis(g, x));
    vals.push_back(subgroup_average(g, cyclic_subgroup(g, 1)));
    for (const auto& a : vals)
        for (const auto& b : vals) {
            CHECK((a.cmp(b) == 0) == (a == b));
            CHECK(a.cmp(b) == -b.cmp(a));
        }
}
