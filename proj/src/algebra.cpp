#include "qgi/algebra.hpp"

#include <algorithm>
#include <set>

#include "qgi/errors.hpp"

namespace qgi {

AlgebraElement AlgebraElement::basis(const GroupTable& g, int x) {
    AlgebraElement a(g);
    a.c_[x] = 1;
    return a;
}

bool AlgebraElement::is_zero() const {
    for (const Rational& v : c_)
        if (v != 0) return false;
    return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (g_ != o.g_) throw InputError("algebra elements belong to different groups");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (g_ != o.g_) throw InputError("algebra elements belong to different groups");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
    for (Rational& v : c_) v *= s;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.g_ != b.g_) throw InputError("algebra elements belong to different groups");
    const GroupTable& g = *a.g_;
    AlgebraElement r(g);
    for (int x = 0; x < g.n; ++x) {
        if (a.c_[x] == 0) continue;
        for (int y = 0; y < g.n; ++y) {
            if (b.c_[y] == 0) continue;
            r.c_[g.mul[x][y]] += a.c_[x] * b.c_[y];
        }
    }
    return r;
}

int AlgebraElement::cmp(const AlgebraElement& o) const {
    for (size_t i = 0; i < c_.size(); ++i) {
        int s = ::cmp(c_[i], o.c_[i]);
        if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
}

AlgebraElement conjugate(const AlgebraElement& a, int x) {
    const GroupTable& g = a.group();
    AlgebraElement r(g);
    int xi = g.inv[x];
    for (int z = 0; z < g.n; ++z) r[z] = a[g.mul[g.mul[x][z]][xi]];
    return r;
}

AlgebraElement subgroup_average(const GroupTable& g, const Subgroup& h) {
    AlgebraElement a(g);
    Rational w = make_rational(1, h.order());
    for (int x : h.elems) a[x] = w;
    return a;
}

AlgebraElement epsilon(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
    if (h.elems == k.elems) return subgroup_average(g, h);
    AlgebraElement result = AlgebraElement::identity(g);
    AlgebraElement base = subgroup_average(g, k);
    for (const Subgroup& m : minimal_normal_subgroups(g, h, k))
        result = result * (base - subgroup_average(g, m));
    return result;
}

AlgebraElement conjugate_orbit_sum(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
    AlgebraElement eps = epsilon(g, h, k);
    std::set<std::vector<Rational>> seen;
    AlgebraElement sum(g);
    for (int x = 0; x < g.n; ++x) {
        AlgebraElement c = conjugate(eps, x);
        if (seen.insert(c.coeffs()).second) sum += c;
    }
    return sum;
}

bool is_idempotent(const AlgebraElement& a) { return a * a == a; }

bool is_central(const AlgebraElement& a) {
    for (int s : a.group().generators)
        if (!(conjugate(a, s) == a)) return false;
    return true;
}

}  // namespace qgi
