#pragma once

#include <vector>

#include "qgi/cyclotomic.hpp"
#include "qgi/group.hpp"
#include "qgi/subgroups.hpp"

namespace qgi {

/// The irreducible complex character table of a finite group, values in
/// Z[zeta_e] with e = exp(G). Rows are sorted by (degree, value order).
struct CharacterTable {
    int conductor = 1;
    std::vector<std::vector<Cyclotomic>> rows;  // rows[chi][class]
    std::vector<Int> degrees;                   // value at the identity class

    int num_rows() const { return static_cast<int>(rows.size()); }
};

// Dixon's modular method: class matrices over F_p (p = 1 mod e), common
// eigenspace splitting, and lifting of root-of-unity multiplicities.
CharacterTable character_table(const GroupTable& g, const ConjClassData& cc);

// Builds a table from per-class root-of-unity multiplicity vectors (the
// CLI input format) and verifies it before returning.
CharacterTable character_table_from_multiplicities(
    const GroupTable& g, const ConjClassData& cc, int e,
    const std::vector<std::vector<std::vector<long>>>& rows);

// Exact checks: row count, row/column orthogonality, sum of squared
// degrees. Throws DefectError on any violation.
void verify_character_table(const GroupTable& g, const ConjClassData& cc,
                            const CharacterTable& t);

// The trivial character of c induced to G, as integer values per class:
// value at class K is [G:C] * |K n C| / |K|.
std::vector<Int> induced_trivial(const GroupTable& g, const ConjClassData& cc,
                                 const Subgroup& c);

/// A Galois orbit of irreducible characters together with the integer-valued
/// orbit-sum character psi.
struct RationalClass {
    std::vector<int> members;  // row indices, ascending
    int orbit_size = 0;
    Int degree;                // common degree of the members
    std::vector<Int> psi;      // per class; psi = sum of the orbit's rows
};

// Partition of table rows into orbits under zeta -> zeta^k for all units k
// mod e, sorted by minimal member index.
std::vector<RationalClass> galois_orbits(const GroupTable& g, const ConjClassData& cc,
                                         const CharacterTable& t);

}  // namespace qgi
