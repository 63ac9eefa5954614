#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qgi {

constexpr int kDefaultOrderCap = 512;

/// A finite group materialized as an indexed multiplication table.
/// Element 0 is always the identity.
struct GroupTable {
    int n = 0;                          // group order
    std::vector<std::vector<int>> mul;  // mul[x][y] = index of x*y
    std::vector<int> inv;               // inverse per element
    std::vector<int> elem_order;        // multiplicative order per element
    std::vector<int> generators;        // a generating set (element indices)
    std::vector<std::string> labels;    // optional; empty or one per element
    std::string name;                   // display name of the construction

    int identity() const { return 0; }

    // x^k for any integer k (negative exponents go through inv).
    int power(int x, long k) const;

    int exponent() const;  // lcm of element orders

    std::string label(int x) const;  // label when present, else the index
};

struct PermutationSpec {
    int degree = 0;
    std::vector<std::vector<int>> generators;  // each a bijection on 0..degree-1
};

struct CayleySpec {
    std::vector<std::vector<int>> table;  // row x, column y -> x*y; element 0 = identity
};

// Named family, e.g. {"C",{12}}, {"S",{4}}, {"SL2",{3}}, or a direct
// product with `factors` holding the components.
struct NamedSpec {
    std::string family;
    std::vector<long> params;
    std::vector<NamedSpec> factors;  // used when family == "product"

    std::string display() const;
};

struct GroupSpec {
    std::variant<NamedSpec, PermutationSpec, CayleySpec> source;

    // Parses tokens like "C12", "D6", "S4", "A5", "Q8", "Dic3", "SL2_3",
    // "E27" and products joined with 'x' ("C2xC4").
    static GroupSpec parse_name(const std::string& token);

    static GroupSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    std::string display() const;
};

/// Conjugacy class data for a GroupTable. Classes are sorted by their
/// minimal element index, so the identity class is always class 0.
struct ConjClassData {
    int num_classes = 0;
    std::vector<int> class_of;          // element -> class index
    std::vector<int> representative;    // class -> minimal element index
    std::vector<int> class_size;        // class -> size
    std::vector<int> centralizer_size;  // class -> |Cen_G(rep)| = n / size
    std::vector<int> inverse_class;     // class of rep^-1
    std::vector<std::vector<int>> members;  // class -> sorted element list

    // Class of rep(c)^k; well defined because conjugation commutes with powers.
    int power_class(const GroupTable& g, int c, long k) const;
};

// Materializes the group described by `spec`. Enumeration is deterministic:
// BFS closure over generators in input order for permutation/matrix specs,
// fixed formulas for named families, Cayley rows taken as given.
GroupTable enumerate_group(const GroupSpec& spec, int max_order = kDefaultOrderCap);

ConjClassData conjugacy_classes(const GroupTable& g);

// Count of y with xy = yx, by direct scan (independent of ConjClassData).
int centralizer_order(const GroupTable& g, int x);

// Full well-formedness check of a multiplication table: Latin square,
// two-sided identity at 0, inverses, associativity (exhaustive for
// n <= assoc_exhaustive_limit, else 10^4 deterministic sampled triples).
// Throws InputError on violation.
void verify_group_table(const GroupTable& g, int assoc_exhaustive_limit = 256);

// Canonical byte serialization (used for determinism tests and debugging).
std::string serialize_table(const GroupTable& g);

}  // namespace qgi
