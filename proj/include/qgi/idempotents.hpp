#pragma once

#include <string>
#include <vector>

#include "qgi/algebra.hpp"
#include "qgi/chartable.hpp"

namespace qgi {

/// Decomposition of an integer-valued class function psi as a rational
/// combination of trivial characters induced from cyclic subgroups:
/// psi = sum_i d[i] * 1_{C_i}^G, one coefficient per cyclic class.
struct ArtinDecomposition {
    std::vector<Int> psi;     // input values per conjugacy class
    std::vector<Rational> d;  // per cyclic subgroup class
};

// Computes d[i] = ([G:N_G(C_i)]/[G:C_i]) * sum over cyclic C* >= C_i of
// mu([C*:C_i]) psi(z*), then verifies the reconstruction identity exactly.
// Requires psi integer-valued with psi(g) = psi(g^k) for gcd(k, o(g)) = 1.
ArtinDecomposition artin_coefficients(const GroupTable& g, const ConjClassData& cc,
                                      const CyclicClassData& cyc,
                                      const std::vector<Int>& psi);

// The same coefficients for a rational class's orbit-sum character.
std::vector<Rational> b_coefficients(const GroupTable& g, const ConjClassData& cc,
                                     const CyclicClassData& cyc, const RationalClass& rc);

// Galois-descent form: (chi(1)/|G|) sum_g psi(g^-1) g. All arithmetic in Q.
AlgebraElement rational_idempotent_classical(const GroupTable& g, const ConjClassData& cc,
                                             const RationalClass& rc);

enum class CyclicRoute {
    kOrbitSum,    // sum_i (b_i chi(1) / [G:N_G(C_i)]) * (sum of distinct conjugates of avg C_i)
    kTransversal  // sum_i (b_i chi(1) / [G:C_i]) * sum over transversal of avg(C_i)^g
};

AlgebraElement rational_idempotent_cyclic(const GroupTable& g, const ConjClassData& cc,
                                          const CyclicClassData& cyc, const RationalClass& rc,
                                          CyclicRoute route);

enum class VerifyLevel { kFast, kFull };

struct IdempotentRecord {
    int rc_index = 0;  // index into the rational class list
    Int degree;
    int orbit_size = 0;
    std::vector<Rational> b;  // per cyclic class (full level only)
    AlgebraElement element;
    Int dimension;  // |G| * identity coefficient = orbit_size * degree^2
    bool idempotent = false;
    bool central = false;
    bool routes_agree = false;  // full level only
};

struct DecompositionReport {
    std::vector<IdempotentRecord> records;  // sorted (degree, dimension, element)
    VerifyLevel level = VerifyLevel::kFast;
    bool sum_to_one = false;
    bool all_idempotent = false;
    bool all_central = false;
    bool pairwise_orthogonal = false;  // full level only
    bool routes_agree = false;         // full level only
    bool dimensions_ok = false;
    std::string failure;  // empty when every requested check passed

    bool ok() const { return failure.empty(); }
};

DecompositionReport full_decomposition(const GroupTable& g, const ConjClassData& cc,
                                       const CharacterTable& t, const CyclicClassData& cyc,
                                       VerifyLevel level = VerifyLevel::kFull);

}  // namespace qgi
