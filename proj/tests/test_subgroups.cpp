#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qgi/errors.hpp"
#include "qgi/subgroups.hpp"

using namespace qgi;

namespace {
GroupTable named(const std::string& token) {
    return enumerate_group(GroupSpec::parse_name(token));
}
}  // namespace

TEST_CASE("cyclic subgroups") {
    GroupTable g = named("S3");
    for (int x = 0; x < g.n; ++x) {
        Subgroup h = cyclic_subgroup(g, x);
        CHECK(h.order() == g.elem_order[x]);
        CHECK(h.is_cyclic);
        CHECK(is_subgroup(g, h));
        CHECK(h.contains(x));
        // the stored generator is the smallest element generating the same set
        CHECK(cyclic_subgroup(g, h.generator).elems == h.elems);
        for (int y : h.elems) {
            if (y == h.generator) break;
            CHECK(cyclic_subgroup(g, y).elems != h.elems);
        }
    }
}

TEST_CASE("closure matches brute force") {
    GroupTable g = named("S4");
    std::vector<std::vector<int>> gen_sets{{}, {1}, {1, 2}, {3, 5}, {7}, {1, 2, 3}};
    for (const auto& gens : gen_sets) {
        Subgroup h = subgroup_closure(g, gens);
        CHECK(h.elems == oracle::closure_bruteforce(g, gens));
        CHECK(is_subgroup(g, h));
    }
    CHECK(subgroup_closure(g, {}).order() == 1);
    CHECK(subgroup_closure(g, g.generators).order() == g.n);
}

TEST_CASE("is_subgroup rejects non subgroups") {
    GroupTable g = named("S3");
    Subgroup bad;
    bad.elems = {0, 1, 2};  // identity and two transpositions
    CHECK_FALSE(is_subgroup(g, bad));
    Subgroup no_id;
    no_id.elems = {1, 2};
    CHECK_FALSE(is_subgroup(g, no_id));
}

TEST_CASE("normality") {
    GroupTable g = named("S3");
    Subgroup whole = subgroup_closure(g, g.generators);
    Subgroup a3 = cyclic_subgroup(g, [&] {
        for (int x = 0; x < g.n; ++x)
            if (g.elem_order[x] == 3) return x;
        return -1;
    }());
    Subgroup c2 = cyclic_subgroup(g, [&] {
        for (int x = 1; x < g.n; ++x)
            if (g.elem_order[x] == 2) return x;
        return -1;
    }());
    CHECK(is_normal_in(g, whole, a3));
    CHECK_FALSE(is_normal_in(g, whole, c2));
    CHECK(is_normal_in(g, a3, a3));
    CHECK(is_normal_in(g, c2, c2));
}

TEST_CASE("conjugate subgroups and normalizers") {
    GroupTable g = named("S4");
    for (int seed : {1, 2, 5}) {
        Subgroup h = cyclic_subgroup(g, seed);
        for (int x = 0; x < g.n; ++x) {
            Subgroup c = conjugate_subgroup(g, h, x);
            std::set<int> expect;
            for (int a : h.elems) expect.insert(g.mul[g.mul[g.inv[x]][a]][x]);
            CHECK(c.elems == std::vector<int>(expect.begin(), expect.end()));
            CHECK(c.order() == h.order());
            CHECK(c.is_cyclic);
        }
        // counting fixed points of the conjugation action
        int fixed = 0;
        for (int x = 0; x < g.n; ++x)
            if (conjugate_subgroup(g, h, x).elems == h.elems) ++fixed;
        CHECK(normalizer_order(g, h) == fixed);
    }
    GroupTable s3 = named("S3");
    for (int x = 1; x < s3.n; ++x) {
        int expect = s3.elem_order[x] == 2 ? 2 : 6;  // <t> self normalizing, A3 normal
        CHECK(normalizer_order(s3, cyclic_subgroup(s3, x)) == expect);
    }
}

TEST_CASE("cyclic subgroup classes of S3") {
    GroupTable g = named("S3");
    ConjClassData cc = conjugacy_classes(g);
    CyclicClassData cyc = cyclic_subgroup_classes(g, cc);
    REQUIRE(cyc.class_count() == 3);
    CHECK(cyc.classes[0].rep.order() == 1);
    CHECK(cyc.classes[1].rep.order() == 2);
    CHECK(cyc.classes[2].rep.order() == 3);
    CHECK(cyc.classes[1].conjugates.size() == 3);
    CHECK(cyc.classes[2].conjugates.size() == 1);
    CHECK(cyc.classes[1].normalizer_order == 2);
    CHECK(cyc.classes[2].normalizer_order == 6);
    // trivial subgroup: every cyclic subgroup is an overgroup
    CHECK(cyc.classes[0].overgroups.size() == cyc.all_cyclic.size());
    // <(0 1)>: only itself
    CHECK(cyc.classes[1].overgroups.size() == 1);
}

TEST_CASE("cyclic class counts") {
    auto count = [](const char* t) {
        GroupTable g = enumerate_group(GroupSpec::parse_name(t));
        ConjClassData cc = conjugacy_classes(g);
        return cyclic_subgroup_classes(g, cc).class_count();
    };
    CHECK(count("C4") == 3);
    CHECK(count("Q8") == 5);
    CHECK(count("S4") == 5);
    CHECK(count("A5") == 4);
    CHECK(count("C24") == 8);  // one per divisor
}

TEST_CASE("class invariants") {
    for (const char* t : {"S4", "Q8", "D6", "A5", "E27"}) {
        GroupTable g = named(t);
        ConjClassData cc = conjugacy_classes(g);
        CyclicClassData cyc = cyclic_subgroup_classes(g, cc);

        std::set<std::vector<int>> all;
        for (const Subgroup& h : cyc.all_cyclic) all.insert(h.elems);
        for (int x = 0; x < g.n; ++x) CHECK(all.count(cyclic_subgroup(g, x).elems) == 1);

        size_t covered = 0;
        for (size_t i = 0; i < cyc.classes.size(); ++i) {
            const CyclicClass& cls = cyc.classes[i];
            covered += cls.conjugates.size();
            CHECK(static_cast<int>(cls.conjugates.size()) * cls.normalizer_order == g.n);
            CHECK(normalizer_order(g, cls.rep) == cls.normalizer_order);
            for (const Subgroup& c : cls.conjugates) {
                CHECK(cyc.class_of(c) == static_cast<int>(i));
                CHECK(cls.rep.elems <= c.elems);
            }

            // transversal tiles the group by right cosets
            std::vector<char> hit(g.n, 0);
            CHECK(static_cast<int>(cls.transversal.size()) * cls.rep.order() == g.n);
            for (int x : cls.transversal)
                for (int a : cls.rep.elems) {
                    int y = g.mul[a][x];
                    CHECK(!hit[y]);
                    hit[y] = 1;
                }

            // overgroups: exactly the cyclic subgroups containing rep
            std::set<std::vector<int>> over;
            for (const Subgroup& o : cls.overgroups) {
                CHECK(std::includes(o.elems.begin(), o.elems.end(), cls.rep.elems.begin(),
                                    cls.rep.elems.end()));
                over.insert(o.elems);
            }
            for (const Subgroup& h : cyc.all_cyclic)
                if (std::includes(h.elems.begin(), h.elems.end(), cls.rep.elems.begin(),
                                  cls.rep.elems.end()))
                    CHECK(over.count(h.elems) == 1);
        }
        CHECK(covered == all.size());
    }
}

TEST_CASE("minimal normal subgroups") {
    GroupTable g = named("S3");
    Subgroup whole = subgroup_closure(g, g.generators);
    Subgroup triv = subgroup_closure(g, {});
    auto mins = minimal_normal_subgroups(g, whole, triv);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].order() == 3);  // A3

    Subgroup t = cyclic_subgroup(g, [&] {
        for (int x = 1; x < g.n; ++x)
            if (g.elem_order[x] == 2) return x;
        return -1;
    }());
    CHECK_THROWS_AS(minimal_normal_subgroups(g, whole, t), InputError);
    CHECK(minimal_normal_subgroups(g, whole, whole).empty());

    GroupTable q8 = named("Q8");
    Subgroup q8whole = subgroup_closure(q8, q8.generators);
    Subgroup q8triv = subgroup_closure(q8, {});
    auto q8mins = minimal_normal_subgroups(q8, q8whole, q8triv);
    REQUIRE(q8mins.size() == 1);  // the central involution is the unique minimal subgroup
    CHECK(q8mins[0].order() == 2);

    GroupTable c6 = named("C6");
    Subgroup c6whole = subgroup_closure(c6, c6.generators);
    Subgroup c6triv = subgroup_closure(c6, {});
    auto c6mins = minimal_normal_subgroups(c6, c6whole, c6triv);
    REQUIRE(c6mins.size() == 2);  // C2 and C3
    CHECK(c6mins[0].order() * c6mins[1].order() == 6);

    // within a chain: C2 < C4 has a unique minimal overstep, C4 itself
    GroupTable c4 = named("C4");
    Subgroup c4whole = subgroup_closure(c4, c4.generators);
    Subgroup c2 = cyclic_subgroup(c4, 2);
    auto step = minimal_normal_subgroups(c4, c4whole, c2);
    REQUIRE(step.size() == 1);
    CHECK(step[0].order() == 4);
}
