#include "qgi/idempotents.hpp"

#include <algorithm>

#include "qgi/errors.hpp"
#include "qgi/numtheory.hpp"

namespace qgi {

ArtinDecomposition artin_coefficients(const GroupTable& g, const ConjClassData& cc,
                                      const CyclicClassData& cyc,
                                      const std::vector<Int>& psi) {
    if (static_cast<int>(psi.size()) != cc.num_classes)
        throw InputError("psi must have one value per conjugacy class");
    for (int c = 0; c < cc.num_classes; ++c) {
        int o = g.elem_order[cc.representative[c]];
        for (int k = 2; k < o; ++k)
            if (gcd_long(k, o) == 1 && psi[cc.power_class(g, c, k)] != psi[c])
                throw InputError("psi is not constant on power-coprime classes");
    }

    ArtinDecomposition out;
    out.psi = psi;
    out.d.reserve(cyc.classes.size());
    for (const CyclicClass& cls : cyc.classes) {
        Int sum = 0;
        for (const Subgroup& over : cls.overgroups) {
            int index = over.order() / cls.rep.order();
            sum += mobius(index) * psi[cc.class_of[over.generator]];
        }
        // [G:N]/[G:C] = |C|/|N|
        out.d.push_back(make_rational(sum * cls.rep.order(), cls.normalizer_order));
    }

    std::vector<Rational> recon(cc.num_classes);
    for (size_t i = 0; i < cyc.classes.size(); ++i) {
        if (out.d[i] == 0) continue;
        std::vector<Int> ind = induced_trivial(g, cc, cyc.classes[i].rep);
        for (int c = 0; c < cc.num_classes; ++c) recon[c] += out.d[i] * ind[c];
    }
    for (int c = 0; c < cc.num_classes; ++c)
        if (recon[c] != psi[c])
            throw DefectError("induced-character decomposition does not reconstruct psi");
    return out;
}

std::vector<Rational> b_coefficients(const GroupTable& g, const ConjClassData& cc,
                                     const CyclicClassData& cyc, const RationalClass& rc) {
    return artin_coefficients(g, cc, cyc, rc.psi).d;
}

AlgebraElement rational_idempotent_classical(const GroupTable& g, const ConjClassData& cc,
                                             const RationalClass& rc) {
    AlgebraElement a(g);
    for (int x = 0; x < g.n; ++x)
        a[x] = make_rational(rc.degree * rc.psi[cc.class_of[g.inv[x]]], g.n);
    return a;
}

namespace {

AlgebraElement cyclic_route_element(const GroupTable& g, const CyclicClassData& cyc,
                                    const RationalClass& rc, const std::vector<Rational>& b,
                                    CyclicRoute route) {
    AlgebraElement a(g);
    for (size_t i = 0; i < cyc.classes.size(); ++i) {
        if (b[i] == 0) continue;
        const CyclicClass& cls = cyc.classes[i];
        if (route == CyclicRoute::kOrbitSum) {
            long index = g.n / cls.normalizer_order;
            Rational w = b[i] * Rational(rc.degree) * make_rational(1, index);
            a += w * conjugate_orbit_sum(g, cls.rep, cls.rep);
        } else {
            long index = g.n / cls.rep.order();
            Rational w = b[i] * Rational(rc.degree) * make_rational(1, index);
            AlgebraElement avg = subgroup_average(g, cls.rep);
            AlgebraElement sum(g);
            for (int x : cls.transversal) sum += conjugate(avg, x);
            a += w * sum;
        }
    }
    return a;
}

}  // namespace

AlgebraElement rational_idempotent_cyclic(const GroupTable& g, const ConjClassData& cc,
                                          const CyclicClassData& cyc, const RationalClass& rc,
                                          CyclicRoute route) {
    return cyclic_route_element(g, cyc, rc, b_coefficients(g, cc, cyc, rc), route);
}

DecompositionReport full_decomposition(const GroupTable& g, const ConjClassData& cc,
                                       const CharacterTable& t, const CyclicClassData& cyc,
                                       VerifyLevel level) {
    DecompositionReport rep;
    rep.level = level;

    std::vector<RationalClass> orbits = galois_orbits(g, cc, t);
    for (size_t i = 0; i < orbits.size(); ++i) {
        const RationalClass& rc = orbits[i];
        IdempotentRecord rec{static_cast<int>(i),
                             rc.degree,
                             rc.orbit_size,
                             b_coefficients(g, cc, cyc, rc),
                             AlgebraElement(g),
                             Int(rc.orbit_size) * rc.degree * rc.degree,
                             false,
                             false,
                             false};
        rec.element = cyclic_route_element(g, cyc, rc, rec.b, CyclicRoute::kOrbitSum);
        rec.idempotent = is_idempotent(rec.element);
        rec.central = is_central(rec.element);
        if (level == VerifyLevel::kFull) {
            AlgebraElement classical = rational_idempotent_classical(g, cc, rc);
            AlgebraElement transversal =
                cyclic_route_element(g, cyc, rc, rec.b, CyclicRoute::kTransversal);
            rec.routes_agree = rec.element == classical && transversal == classical;
        }
        rep.records.push_back(std::move(rec));
    }

    std::sort(rep.records.begin(), rep.records.end(),
              [](const IdempotentRecord& a, const IdempotentRecord& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  if (a.dimension != b.dimension) return a.dimension < b.dimension;
                  return a.element.cmp(b.element) < 0;
              });

    AlgebraElement total(g);
    rep.all_idempotent = true;
    rep.all_central = true;
    rep.dimensions_ok = true;
    rep.routes_agree = true;
    for (const IdempotentRecord& rec : rep.records) {
        total += rec.element;
        rep.all_idempotent = rep.all_idempotent && rec.idempotent;
        rep.all_central = rep.all_central && rec.central;
        rep.routes_agree = rep.routes_agree && rec.routes_agree;
        rep.dimensions_ok =
            rep.dimensions_ok && Rational(rec.dimension) == Rational(g.n) * rec.element[0];
    }
    rep.sum_to_one = total == AlgebraElement::identity(g);

    rep.pairwise_orthogonal = true;
    if (level == VerifyLevel::kFull) {
        AlgebraElement zero(g);
        for (size_t i = 0; i < rep.records.size() && rep.pairwise_orthogonal; ++i)
            for (size_t j = i + 1; j < rep.records.size(); ++j)
                if (!(rep.records[i].element * rep.records[j].element == zero)) {
                    rep.pairwise_orthogonal = false;
                    break;
                }
    }

    if (!rep.all_idempotent)
        rep.failure = "idempotent";
    else if (!rep.sum_to_one)
        rep.failure = "sum_to_one";
    else if (!rep.all_central)
        rep.failure = "central";
    else if (!rep.dimensions_ok)
        rep.failure = "dimension";
    else if (level == VerifyLevel::kFull && !rep.pairwise_orthogonal)
        rep.failure = "pairwise_orthogonal";
    else if (level == VerifyLevel::kFull && !rep.routes_agree)
        rep.failure = "routes_agree";
    return rep;
}

}  // namespace qgi
