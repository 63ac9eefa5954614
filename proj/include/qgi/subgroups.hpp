#pragma once

#include <vector>

#include "qgi/group.hpp"

namespace qgi {

struct Subgroup {
    std::vector<int> elems;  // sorted element indices, always contains 0
    bool is_cyclic = false;
    int generator = -1;  // minimal-index generator when cyclic

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;

    bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

// <x>
Subgroup cyclic_subgroup(const GroupTable& g, int x);

// BFS closure of a generating set (identity always included).
Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& gens);

bool is_subgroup(const GroupTable& g, const Subgroup& h);
bool is_normal_in(const GroupTable& g, const Subgroup& h, const Subgroup& k);  // k normal in h

Subgroup conjugate_subgroup(const GroupTable& g, const Subgroup& h, int x);  // x^-1 h x

// Count of x in G with x^-1 h x = h.
int normalizer_order(const GroupTable& g, const Subgroup& h);

/// One conjugacy class of cyclic subgroups.
struct CyclicClass {
    Subgroup rep;                      // lexicographically minimal element set in the class
    std::vector<Subgroup> conjugates;  // all distinct conjugates, sorted
    int normalizer_order = 0;          // |N_G(rep)|
    std::vector<int> transversal;      // right coset representatives of rep in G
    std::vector<Subgroup> overgroups;  // every cyclic C* of G with C* >= rep, sorted
};

struct CyclicClassData {
    std::vector<CyclicClass> classes;     // sorted by (order, element set)
    std::vector<Subgroup> all_cyclic;     // every cyclic subgroup of G, sorted

    int class_count() const { return static_cast<int>(classes.size()); }
    // Index of the class containing a given cyclic subgroup (-1 if absent).
    int class_of(const Subgroup& h) const;
};

CyclicClassData cyclic_subgroup_classes(const GroupTable& g, const ConjClassData& cc);

// All M with k < M <= h, M normal in h, minimal above k. Requires k normal
// in h (throws InputError otherwise). Sorted by element set.
std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g, const Subgroup& h,
                                               const Subgroup& k);

}  // namespace qgi
