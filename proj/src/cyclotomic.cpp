#include "qgi/cyclotomic.hpp"

#include <map>

#include "qgi/errors.hpp"
#include "qgi/numtheory.hpp"

namespace qgi {

namespace {

// Exact division of integer polynomials, divisor monic. Low degree first.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<Int> q(dn - dd + 1);
    for (int k = dn; k >= dd; --k) {
        Int c = num[k];
        if (c == 0) continue;
        q[k - dd] = c;
        for (int t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
    }
    for (const Int& r : num)
        if (r != 0) throw DefectError("cyclotomic division left a remainder");
    return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int e) {
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    if (e < 1) throw InputError("cyclotomic polynomial needs e >= 1");
    std::vector<Int> f(e + 1);
    f[0] = -1;
    f[e] = 1;
    for (long d : divisors(e))
        if (d < e) f = divide_exact(std::move(f), cyclotomic_polynomial(static_cast<int>(d)));
    return cache.emplace(e, std::move(f)).first->second;
}

namespace {

// Reduces an arbitrary-length coefficient vector mod Phi_e to length phi(e).
std::vector<Int> reduce_mod_phi(int e, std::vector<Int> poly) {
    const std::vector<Int>& phi = cyclotomic_polynomial(e);
    int deg = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(poly.size()) - 1; k >= deg; --k) {
        Int c = poly[k];
        if (c == 0) continue;
        poly[k] = 0;
        for (int t = 0; t < deg; ++t) poly[k - deg + t] -= c * phi[t];
    }
    poly.resize(deg);
    return poly;
}

}  // namespace

Cyclotomic::Cyclotomic(int conductor) : e_(conductor) {
    if (conductor < 1) throw InputError("conductor must be >= 1");
    c_.assign(euler_phi(conductor), 0);
}

Cyclotomic Cyclotomic::from_integer(int e, Int v) {
    Cyclotomic r(e);
    r.c_[0] = std::move(v);
    return r;
}

Cyclotomic Cyclotomic::root_power(int e, long j) {
    Cyclotomic r(e);
    j = (j % e + e) % e;
    std::vector<Int> poly(j + 1);
    poly[j] = 1;
    r.c_ = reduce_mod_phi(e, std::move(poly));
    return r;
}

Cyclotomic Cyclotomic::from_root_powers(int e, const std::vector<Int>& mult) {
    if (static_cast<int>(mult.size()) != e)
        throw InputError("root-power vector must have length e");
    Cyclotomic r(e);
    r.c_ = reduce_mod_phi(e, mult);
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const Int& v : c_)
        if (v != 0) return false;
    return true;
}

namespace {

void require_same(int a, int b) {
    if (a != b) throw InputError("cyclotomic conductor mismatch");
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same(e_, o.e_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same(e_, o.e_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    require_same(a.e_, b.e_);
    std::vector<Int> prod(2 * a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyclotomic r(a.e_);
    r.c_ = reduce_mod_phi(a.e_, std::move(prod));
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(e_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

int Cyclotomic::cmp(const Cyclotomic& o) const {
    if (e_ != o.e_) return e_ < o.e_ ? -1 : 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        int s = ::cmp(c_[i], o.c_[i]);
        if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
}

Cyclotomic galois_apply(const Cyclotomic& v, long k) {
    int e = v.conductor();
    k = (k % e + e) % e;
    if (gcd_long(k, e) != 1) throw InputError("galois_apply exponent must be a unit mod e");
    std::vector<Int> mult(e);
    for (size_t j = 0; j < v.coeffs().size(); ++j) mult[j * k % e] += v.coeffs()[j];
    return Cyclotomic::from_root_powers(e, mult);
}

std::optional<Rational> as_rational(const Cyclotomic& v) {
    auto z = as_integer(v);
    if (!z) return std::nullopt;
    return Rational(*z);
}

std::optional<Int> as_integer(const Cyclotomic& v) {
    const auto& c = v.coeffs();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c[0];
}

}  // namespace qgi
