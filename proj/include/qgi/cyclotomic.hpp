#pragma once

#include <optional>
#include <vector>

#include "qgi/rational.hpp"

namespace qgi {

// Coefficients of the e-th cyclotomic polynomial, low degree first, monic,
// degree phi(e). Computed by dividing x^e - 1 by the Phi_d of proper
// divisors d; results are cached per conductor.
const std::vector<Int>& cyclotomic_polynomial(int e);

/// An element of Z[zeta_e] in canonical form: a polynomial in zeta_e of
/// degree < phi(e), reduced mod Phi_e. Canonical form makes equality a
/// coefficient-vector comparison.
class Cyclotomic {
public:
    Cyclotomic() : e_(1), c_(1) {}
    explicit Cyclotomic(int conductor);  // zero of Z[zeta_e]

    static Cyclotomic from_integer(int e, Int v);
    static Cyclotomic root_power(int e, long j);  // zeta_e^j

    // sum_j mult[j] * zeta_e^j, reduced. mult must have length e.
    static Cyclotomic from_root_powers(int e, const std::vector<Int>& mult);

    int conductor() const { return e_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.e_ == b.e_ && a.c_ == b.c_;
    }

    // Lexicographic on coefficient vectors; a deterministic total order used
    // for sorting, with no arithmetic meaning.
    int cmp(const Cyclotomic& o) const;

private:
    int e_;
    std::vector<Int> c_;  // size phi(e_)
};

// Image under the ring automorphism zeta -> zeta^k; requires gcd(k, e) = 1.
Cyclotomic galois_apply(const Cyclotomic& v, long k);

// The constant term as a Rational when all higher coefficients vanish.
std::optional<Rational> as_rational(const Cyclotomic& v);
std::optional<Int> as_integer(const Cyclotomic& v);

}  // namespace qgi
