#include "qgi/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qgi/errors.hpp"

namespace qgi {

namespace {

// Sets the cyclicity flag and the canonical (minimal-index) generator for a
// sorted element set already known to be a subgroup.
Subgroup make_subgroup(const GroupTable& g, std::vector<int> elems) {
    Subgroup h;
    h.elems = std::move(elems);
    int size = h.order();
    for (int x : h.elems)
        if (g.elem_order[x] == size) {
            h.is_cyclic = true;
            h.generator = x;
            break;
        }
    return h;
}

std::vector<char> member_mask(const GroupTable& g, const Subgroup& h) {
    std::vector<char> in(g.n, 0);
    for (int x : h.elems) in[x] = 1;
    return in;
}

}  // namespace

bool Subgroup::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

Subgroup cyclic_subgroup(const GroupTable& g, int x) {
    std::vector<int> elems{0};
    int y = x;
    while (y != 0) {
        elems.push_back(y);
        y = g.mul[y][x];
    }
    std::sort(elems.begin(), elems.end());
    return make_subgroup(g, std::move(elems));
}

Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& gens) {
    std::vector<char> in(g.n, 0);
    in[0] = 1;
    std::vector<int> frontier{0};
    for (size_t i = 0; i < frontier.size(); ++i)
        for (int s : gens) {
            int t = g.mul[frontier[i]][s];
            if (!in[t]) {
                in[t] = 1;
                frontier.push_back(t);
            }
        }
    std::sort(frontier.begin(), frontier.end());
    return make_subgroup(g, std::move(frontier));
}

bool is_subgroup(const GroupTable& g, const Subgroup& h) {
    if (h.elems.empty() || h.elems.front() != 0) return false;
    auto in = member_mask(g, h);
    for (int a : h.elems)
        for (int b : h.elems)
            if (!in[g.mul[a][b]]) return false;
    return true;
}

bool is_normal_in(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
    auto in = member_mask(g, k);
    for (int x : k.elems)
        if (!h.contains(x)) return false;
    for (int x : h.elems) {
        int xi = g.inv[x];
        for (int a : k.elems)
            if (!in[g.mul[g.mul[xi][a]][x]]) return false;
    }
    return true;
}

Subgroup conjugate_subgroup(const GroupTable& g, const Subgroup& h, int x) {
    int xi = g.inv[x];
    std::vector<int> elems;
    elems.reserve(h.elems.size());
    for (int a : h.elems) elems.push_back(g.mul[g.mul[xi][a]][x]);
    std::sort(elems.begin(), elems.end());
    return make_subgroup(g, std::move(elems));
}

int normalizer_order(const GroupTable& g, const Subgroup& h) {
    auto in = member_mask(g, h);
    int count = 0;
    for (int x = 0; x < g.n; ++x) {
        int xi = g.inv[x];
        bool fixes = true;
        for (int a : h.elems)
            if (!in[g.mul[g.mul[xi][a]][x]]) {
                fixes = false;
                break;
            }
        if (fixes) ++count;
    }
    return count;
}

int CyclicClassData::class_of(const Subgroup& h) const {
    for (size_t c = 0; c < classes.size(); ++c) {
        const auto& conj = classes[c].conjugates;
        auto it = std::lower_bound(conj.begin(), conj.end(), h,
                                   [](const Subgroup& a, const Subgroup& b) {
                                       return a.elems < b.elems;
                                   });
        if (it != conj.end() && it->elems == h.elems) return static_cast<int>(c);
    }
    return -1;
}

CyclicClassData cyclic_subgroup_classes(const GroupTable& g, const ConjClassData& cc) {
    (void)cc;
    CyclicClassData out;

    std::set<std::vector<int>> seen;
    for (int x = 0; x < g.n; ++x) {
        Subgroup h = cyclic_subgroup(g, x);
        if (seen.insert(h.elems).second) out.all_cyclic.push_back(std::move(h));
    }
    std::sort(out.all_cyclic.begin(), out.all_cyclic.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  if (a.order() != b.order()) return a.order() < b.order();
                  return a.elems < b.elems;
              });

    std::set<std::vector<int>> assigned;
    for (const Subgroup& h : out.all_cyclic) {
        if (assigned.count(h.elems)) continue;
        CyclicClass cls;
        std::set<std::vector<int>> orbit;
        for (int x = 0; x < g.n; ++x) {
            Subgroup c = conjugate_subgroup(g, h, x);
            if (orbit.insert(c.elems).second) cls.conjugates.push_back(std::move(c));
        }
        std::sort(cls.conjugates.begin(), cls.conjugates.end(),
                  [](const Subgroup& a, const Subgroup& b) { return a.elems < b.elems; });
        // the scan order makes h the minimal member of its class
        cls.rep = h;
        for (const Subgroup& c : cls.conjugates) assigned.insert(c.elems);

        cls.normalizer_order = normalizer_order(g, cls.rep);

        std::vector<char> covered(g.n, 0);
        for (int x = 0; x < g.n; ++x) {
            if (covered[x]) continue;
            cls.transversal.push_back(x);
            for (int a : cls.rep.elems) covered[g.mul[a][x]] = 1;
        }

        for (const Subgroup& c : out.all_cyclic) {
            bool over = std::includes(c.elems.begin(), c.elems.end(), cls.rep.elems.begin(),
                                      cls.rep.elems.end());
            if (over) cls.overgroups.push_back(c);
        }

        out.classes.push_back(std::move(cls));
    }
    return out;
}

namespace {

// Closure of the h-conjugates of the seed; normal in h by construction.
Subgroup normal_closure_in(const GroupTable& g, const Subgroup& h, const std::vector<int>& seed) {
    std::vector<int> gens;
    for (int s : seed)
        for (int x : h.elems) gens.push_back(g.mul[g.mul[g.inv[x]][s]][x]);
    return subgroup_closure(g, gens);
}

}  // namespace

std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g, const Subgroup& h,
                                               const Subgroup& k) {
    if (!is_normal_in(g, h, k)) throw InputError("minimal_normal_subgroups: k not normal in h");
    if (h.elems == k.elems) return {};

    std::set<std::vector<int>> seen;
    std::vector<Subgroup> candidates;
    for (int x : h.elems) {
        if (k.contains(x)) continue;
        std::vector<int> seed = k.elems;
        seed.push_back(x);
        Subgroup m = normal_closure_in(g, h, seed);
        if (seen.insert(m.elems).second) candidates.push_back(std::move(m));
    }

    std::vector<Subgroup> minimal;
    for (const Subgroup& m : candidates) {
        bool is_min = true;
        for (const Subgroup& other : candidates) {
            if (other.elems == m.elems) continue;
            if (std::includes(m.elems.begin(), m.elems.end(), other.elems.begin(),
                              other.elems.end())) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.elems < b.elems; });
    return minimal;
}

}  // namespace qgi
