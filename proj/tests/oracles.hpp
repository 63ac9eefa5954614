#pragma once

// Brute-force reference implementations, deliberately written against the
// defining formulas rather than the library's algorithms.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "qgi/group.hpp"
#include "qgi/rational.hpp"
#include "qgi/subgroups.hpp"

namespace oracle {

inline std::set<std::set<int>> conjugacy_partition(const qgi::GroupTable& g) {
    std::set<std::set<int>> parts;
    for (int x = 0; x < g.n; ++x) {
        std::set<int> orbit;
        for (int y = 0; y < g.n; ++y) orbit.insert(g.mul[g.mul[g.inv[y]][x]][y]);
        parts.insert(orbit);
    }
    return parts;
}

// mu(1) = 1 and sum over all divisors = 0; recursion over proper divisors.
inline int mobius_recursive(long n) {
    static std::map<long, int> memo{{1, 1}};
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    int s = 0;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) s += mobius_recursive(d);
    return memo[n] = -s;
}

// Products of all current pairs until the set stabilizes.
inline std::vector<int> closure_bruteforce(const qgi::GroupTable& g,
                                           const std::vector<int>& gens) {
    std::set<int> s(gens.begin(), gens.end());
    s.insert(0);
    while (true) {
        std::set<int> next = s;
        for (int a : s)
            for (int b : s) next.insert(g.mul[a][b]);
        if (next == s) break;
        s = std::move(next);
    }
    return {s.begin(), s.end()};
}

// (1/|C|) * #{y in G : y^-1 g y in C} for a representative g of class j.
inline qgi::Int induced_value(const qgi::GroupTable& g, const qgi::ConjClassData& cc,
                              const qgi::Subgroup& c, int j) {
    int rep = cc.representative[j];
    long count = 0;
    for (int y = 0; y < g.n; ++y)
        if (c.contains(g.mul[g.mul[g.inv[y]][rep]][y])) ++count;
    if (count % c.order() != 0) throw std::logic_error("induced value not integral");
    return qgi::Int(count / c.order());
}

}  // namespace oracle
