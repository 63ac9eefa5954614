#pragma once

#include <vector>

#include "qgi/group.hpp"
#include "qgi/rational.hpp"
#include "qgi/subgroups.hpp"

namespace qgi {

/// An element of the rational group algebra QG: a dense vector of exact
/// rationals indexed by group element. Immutable-by-convention value type.
class AlgebraElement {
public:
    explicit AlgebraElement(const GroupTable& g) : g_(&g), c_(g.n) {}

    static AlgebraElement basis(const GroupTable& g, int x);
    static AlgebraElement identity(const GroupTable& g) { return basis(g, 0); }

    const GroupTable& group() const { return *g_; }
    int size() const { return static_cast<int>(c_.size()); }

    const Rational& operator[](int x) const { return c_[x]; }
    Rational& operator[](int x) { return c_[x]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& s);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }

    // Convolution product through the Cayley table; throws InputError on
    // group mismatch.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.g_ == b.g_ && a.c_ == b.c_;
    }

    // Deterministic total order (lexicographic on coefficients).
    int cmp(const AlgebraElement& o) const;

private:
    const GroupTable* g_;
    std::vector<Rational> c_;
};

// a^x = x^-1 a x.
AlgebraElement conjugate(const AlgebraElement& a, int x);

// (1/|H|) sum of the elements of H; an idempotent of QG.
AlgebraElement subgroup_average(const GroupTable& g, const Subgroup& h);

// Product over the minimal normal subgroups M of h above k of
// (avg(k) - avg(M)); equals avg(h) when h = k. Requires k normal in h.
AlgebraElement epsilon(const GroupTable& g, const Subgroup& h, const Subgroup& k);

// Sum of the distinct G-conjugates of epsilon(h, k).
AlgebraElement conjugate_orbit_sum(const GroupTable& g, const Subgroup& h, const Subgroup& k);

bool is_idempotent(const AlgebraElement& a);

// Checked on the group's generators; sufficient since conjugation by a
// product factors through the generators.
bool is_central(const AlgebraElement& a);

}  // namespace qgi
