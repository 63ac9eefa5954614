#include "qgi/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qgi/errors.hpp"
#include "qgi/numtheory.hpp"

namespace qgi {

namespace {

using Enc = std::vector<int>;

int element_order(const GroupTable& g, int x) {
    int ord = 1;
    int y = x;
    while (y != 0) {
        y = g.mul[y][x];
        ++ord;
    }
    return ord;
}

void finalize(GroupTable& g) {
    g.inv.assign(g.n, -1);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.mul[x][y] == 0 && g.mul[y][x] == 0) {
                g.inv[x] = y;
                break;
            }
    g.elem_order.resize(g.n);
    for (int x = 0; x < g.n; ++x) g.elem_order[x] = element_order(g, x);
}

// Deterministic closure: elements are discovered breadth-first, multiplying
// discovered elements by the generators in input order. Identity is index 0.
GroupTable closure_group(const Enc& id, const std::vector<Enc>& gens,
                         const std::function<Enc(const Enc&, const Enc&)>& op, int max_order,
                         const std::string& name,
                         const std::function<std::string(const Enc&)>& labeler) {
    std::map<Enc, int> index;
    std::vector<Enc> elems{id};
    index[id] = 0;
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const Enc& s : gens) {
            Enc t = op(elems[i], s);
            if (index.emplace(t, static_cast<int>(elems.size())).second) {
                elems.push_back(t);
                if (static_cast<int>(elems.size()) > max_order)
                    throw CapExceeded("group order exceeds cap " + std::to_string(max_order) +
                                      " while enumerating " + name);
            }
        }
    }
    GroupTable g;
    g.n = static_cast<int>(elems.size());
    g.name = name;
    g.mul.assign(g.n, std::vector<int>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) g.mul[i][j] = index.at(op(elems[i], elems[j]));
    finalize(g);
    for (const Enc& s : gens) {
        int k = index.at(s);
        if (k != 0 && std::find(g.generators.begin(), g.generators.end(), k) == g.generators.end())
            g.generators.push_back(k);
    }
    if (labeler) {
        g.labels.reserve(g.n);
        for (const Enc& e : elems) g.labels.push_back(labeler(e));
    }
    return g;
}

// Application order is left to right: (x*y) maps pt to y[x[pt]].
Enc perm_mul(const Enc& x, const Enc& y) {
    Enc r(x.size());
    for (size_t p = 0; p < x.size(); ++p) r[p] = y[x[p]];
    return r;
}

std::string perm_label(const Enc& x) {
    std::string out;
    std::vector<char> seen(x.size(), 0);
    for (size_t p = 0; p < x.size(); ++p) {
        if (seen[p] || x[p] == static_cast<int>(p)) continue;
        out += '(';
        size_t q = p;
        bool first = true;
        while (!seen[q]) {
            seen[q] = 1;
            if (!first) out += ' ';
            out += std::to_string(q);
            first = false;
            q = static_cast<size_t>(x[q]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

GroupTable cyclic_group(long n, int max_order, const std::string& name) {
    if (n < 1) throw InputError("cyclic group needs n >= 1");
    if (n > max_order) throw CapExceeded("order exceeds cap: " + name);
    GroupTable g;
    g.n = static_cast<int>(n);
    g.name = name;
    g.mul.assign(g.n, std::vector<int>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) g.mul[i][j] = (i + j) % g.n;
    finalize(g);
    if (n > 1) g.generators = {1};
    for (int i = 0; i < g.n; ++i)
        g.labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    return g;
}

// Order 2n, presentation <r, s | r^n, s^2, (rs)^2>; r^i at index i, r^i s at n+i.
GroupTable dihedral_group(long n, int max_order, const std::string& name) {
    if (n < 1) throw InputError("dihedral group needs n >= 1");
    if (2 * n > max_order) throw CapExceeded("order exceeds cap: " + name);
    int m = static_cast<int>(n);
    GroupTable g;
    g.n = 2 * m;
    g.name = name;
    g.mul.assign(g.n, std::vector<int>(g.n));
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c) {
            g.mul[a][c] = (a + c) % m;
            g.mul[a][m + c] = m + (a + c) % m;
            g.mul[m + a][c] = m + ((a - c) % m + m) % m;
            g.mul[m + a][m + c] = ((a - c) % m + m) % m;
        }
    finalize(g);
    if (m > 1) g.generators.push_back(1);
    g.generators.push_back(m);
    for (int a = 0; a < m; ++a)
        g.labels.push_back(a == 0 ? "e" : (a == 1 ? "r" : "r^" + std::to_string(a)));
    for (int a = 0; a < m; ++a)
        g.labels.push_back(a == 0 ? "s" : (a == 1 ? "r*s" : "r^" + std::to_string(a) + "*s"));
    return g;
}

// Order 4n, <a, b | a^{2n}, b^2 = a^n, b^-1 a b = a^-1>; a^i at i, a^i b at 2n+i.
GroupTable dicyclic_group(long n, int max_order, const std::string& name) {
    if (n < 1) throw InputError("dicyclic group needs n >= 1");
    if (4 * n > max_order) throw CapExceeded("order exceeds cap: " + name);
    int m = 2 * static_cast<int>(n);
    GroupTable g;
    g.n = 2 * m;
    g.name = name;
    g.mul.assign(g.n, std::vector<int>(g.n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            g.mul[i][j] = (i + j) % m;
            g.mul[i][m + j] = m + (i + j) % m;
            g.mul[m + i][j] = m + ((i - j) % m + m) % m;
            g.mul[m + i][m + j] = ((i - j + static_cast<int>(n)) % m + m) % m;
        }
    finalize(g);
    g.generators = {1, m};
    for (int i = 0; i < m; ++i)
        g.labels.push_back(i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i)));
    for (int i = 0; i < m; ++i)
        g.labels.push_back(i == 0 ? "b" : (i == 1 ? "a*b" : "a^" + std::to_string(i) + "*b"));
    return g;
}

GroupTable symmetric_group(long n, int max_order, const std::string& name) {
    if (n < 1) throw InputError("symmetric group needs n >= 1");
    if (n == 1) {
        GroupTable g = cyclic_group(1, max_order, name);
        g.labels = {"()"};
        return g;
    }
    int d = static_cast<int>(n);
    Enc id(d);
    std::iota(id.begin(), id.end(), 0);
    Enc t = id;
    std::swap(t[0], t[1]);
    Enc c(d);
    for (int i = 0; i < d; ++i) c[i] = (i + 1) % d;
    std::vector<Enc> gens{t};
    if (c != t) gens.push_back(c);
    return closure_group(id, gens, perm_mul, max_order, name, perm_label);
}

GroupTable alternating_group(long n, int max_order, const std::string& name) {
    if (n < 1) throw InputError("alternating group needs n >= 1");
    if (n <= 2) {
        GroupTable g = cyclic_group(1, max_order, name);
        g.labels = {"()"};
        return g;
    }
    int d = static_cast<int>(n);
    Enc id(d);
    std::iota(id.begin(), id.end(), 0);
    Enc t = id;
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    Enc c(d);
    if (d % 2 == 1) {
        for (int i = 0; i < d; ++i) c[i] = (i + 1) % d;
    } else {
        // even degree: the full cycle is odd, rotate points 1..d-1 instead
        c[0] = 0;
        for (int i = 1; i < d; ++i) c[i] = i % (d - 1) + 1;
    }
    std::vector<Enc> gens{t};
    if (c != t) gens.push_back(c);
    return closure_group(id, gens, perm_mul, max_order, name, perm_label);
}

GroupTable sl2_group(long p, int max_order, const std::string& name) {
    if (p < 2 || !is_prime(p)) throw InputError("SL2 needs a prime modulus");
    int q = static_cast<int>(p);
    auto mat_mul = [q](const Enc& x, const Enc& y) {
        return Enc{(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
                   (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
    };
    auto mat_label = [](const Enc& x) {
        return "[[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "],[" +
               std::to_string(x[2]) + "," + std::to_string(x[3]) + "]]";
    };
    Enc id{1, 0, 0, 1};
    std::vector<Enc> gens{{1, 1, 0, 1}, {1, 0, 1, 1}};
    return closure_group(id, gens, mat_mul, max_order, name, mat_label);
}

// Heisenberg group mod 3: triples (a,b,c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'). Extraspecial of order 27,
// exponent 3.
GroupTable extraspecial27(int max_order, const std::string& name) {
    if (27 > max_order) throw CapExceeded("order exceeds cap: " + name);
    GroupTable g;
    g.n = 27;
    g.name = name;
    g.mul.assign(27, std::vector<int>(27));
    for (int x = 0; x < 27; ++x)
        for (int y = 0; y < 27; ++y) {
            int a = x / 9, b = x / 3 % 3, c = x % 3;
            int a2 = y / 9, b2 = y / 3 % 3, c2 = y % 3;
            g.mul[x][y] = (a + a2) % 3 * 9 + (b + b2) % 3 * 3 + (c + c2 + a * b2) % 3;
        }
    finalize(g);
    g.generators = {9, 3};
    for (int x = 0; x < 27; ++x)
        g.labels.push_back("(" + std::to_string(x / 9) + "," + std::to_string(x / 3 % 3) + "," +
                           std::to_string(x % 3) + ")");
    return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, int max_order,
                          const std::string& name) {
    long n = static_cast<long>(a.n) * b.n;
    if (n > max_order) throw CapExceeded("order exceeds cap: " + name);
    GroupTable g;
    g.n = static_cast<int>(n);
    g.name = name;
    g.mul.assign(g.n, std::vector<int>(g.n));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j)
            for (int k = 0; k < a.n; ++k)
                for (int l = 0; l < b.n; ++l)
                    g.mul[i * b.n + j][k * b.n + l] = a.mul[i][k] * b.n + b.mul[j][l];
    finalize(g);
    for (int s : a.generators) g.generators.push_back(s * b.n);
    for (int s : b.generators) g.generators.push_back(s);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j) g.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    return g;
}

GroupTable build_named(const NamedSpec& s, int max_order) {
    const std::string name = s.display();
    if (s.family == "product") {
        if (s.factors.size() < 2) throw InputError("product needs at least two factors");
        GroupTable g = build_named(s.factors[0], max_order);
        for (size_t i = 1; i < s.factors.size(); ++i) {
            GroupTable h = build_named(s.factors[i], max_order);
            g = direct_product(g, h, max_order,
                               i + 1 == s.factors.size() ? name : g.name + "x" + h.name);
        }
        g.name = name;
        return g;
    }
    if (s.params.size() != 1) throw InputError("family " + s.family + " needs one parameter");
    long p = s.params[0];
    if (s.family == "C") return cyclic_group(p, max_order, name);
    if (s.family == "D") return dihedral_group(p, max_order, name);
    if (s.family == "Dic") return dicyclic_group(p, max_order, name);
    if (s.family == "Q") {
        if (p < 8 || (p & (p - 1)) != 0)
            throw InputError("Q needs a power of two >= 8, got " + std::to_string(p));
        return dicyclic_group(p / 4, max_order, name);
    }
    if (s.family == "S") return symmetric_group(p, max_order, name);
    if (s.family == "A") return alternating_group(p, max_order, name);
    if (s.family == "SL2") return sl2_group(p, max_order, name);
    if (s.family == "E") {
        if (p != 27) throw InputError("only E27 is supported");
        return extraspecial27(max_order, name);
    }
    throw InputError("unknown group family: " + s.family);
}

NamedSpec parse_one_named(const std::string& tok) {
    if (tok.rfind("SL2_", 0) == 0) {
        try {
            return NamedSpec{"SL2", {std::stol(tok.substr(4))}, {}};
        } catch (const std::exception&) {
            throw InputError("bad group token: " + tok);
        }
    }
    size_t i = 0;
    while (i < tok.size() && std::isalpha(static_cast<unsigned char>(tok[i]))) ++i;
    std::string fam = tok.substr(0, i);
    std::string num = tok.substr(i);
    static const std::vector<std::string> known{"C", "D", "S", "A", "Q", "Dic", "E"};
    if (fam.empty() || num.empty() ||
        std::find(known.begin(), known.end(), fam) == known.end() ||
        num.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad group token: " + tok);
    return NamedSpec{fam, {std::stol(num)}, {}};
}

}  // namespace

int GroupTable::power(int x, long k) const {
    if (k < 0) {
        x = inv[x];
        k = -k;
    }
    int r = 0;
    int b = x;
    while (k > 0) {
        if (k & 1) r = mul[r][b];
        b = mul[b][b];
        k >>= 1;
    }
    return r;
}

int GroupTable::exponent() const {
    long e = 1;
    for (int x = 0; x < n; ++x) e = lcm_long(e, elem_order[x]);
    return static_cast<int>(e);
}

std::string GroupTable::label(int x) const {
    if (labels.empty()) return std::to_string(x);
    return labels[x];
}

std::string NamedSpec::display() const {
    if (family == "product") {
        std::string out;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "x";
            out += factors[i].display();
        }
        return out;
    }
    if (family == "SL2") return "SL2_" + std::to_string(params.empty() ? 0 : params[0]);
    std::string out = family;
    for (long p : params) out += std::to_string(p);
    return out;
}

GroupSpec GroupSpec::parse_name(const std::string& token) {
    if (token.empty()) throw InputError("empty group name");
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = token.find('x', start);
        if (pos == std::string::npos) {
            parts.push_back(token.substr(start));
            break;
        }
        parts.push_back(token.substr(start, pos - start));
        start = pos + 1;
    }
    if (parts.size() == 1) return GroupSpec{parse_one_named(parts[0])};
    NamedSpec prod{"product", {}, {}};
    for (const auto& p : parts) prod.factors.push_back(parse_one_named(p));
    return GroupSpec{prod};
}

namespace {

NamedSpec named_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw InputError("named spec needs a \"family\" string");
    NamedSpec s;
    s.family = j["family"].get<std::string>();
    if (j.contains("params")) {
        if (!j["params"].is_array()) throw InputError("\"params\" must be an array");
        for (const auto& v : j["params"]) {
            if (!v.is_number_integer()) throw InputError("\"params\" entries must be integers");
            s.params.push_back(v.get<long>());
        }
    }
    if (j.contains("factors")) {
        if (!j["factors"].is_array()) throw InputError("\"factors\" must be an array");
        for (const auto& f : j["factors"]) s.factors.push_back(named_from_json(f));
    }
    return s;
}

nlohmann::json named_to_json(const NamedSpec& s) {
    nlohmann::json j;
    j["family"] = s.family;
    if (!s.params.empty()) j["params"] = s.params;
    if (!s.factors.empty()) {
        j["factors"] = nlohmann::json::array();
        for (const auto& f : s.factors) j["factors"].push_back(named_to_json(f));
    }
    return j;
}

std::vector<std::vector<int>> int_matrix(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<int>> m;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw InputError(std::string(what) + " entries must be integers");
            r.push_back(v.get<int>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

GroupSpec GroupSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("group spec must be a JSON object");
    int keys = static_cast<int>(j.contains("named")) + j.contains("permutation") +
               j.contains("cayley");
    if (keys != 1)
        throw InputError("group spec needs exactly one of \"named\", \"permutation\", \"cayley\"");
    if (j.contains("named")) return GroupSpec{named_from_json(j["named"])};
    if (j.contains("permutation")) {
        const auto& p = j["permutation"];
        if (!p.is_object() || !p.contains("degree") || !p["degree"].is_number_integer())
            throw InputError("permutation spec needs an integer \"degree\"");
        PermutationSpec s;
        s.degree = p["degree"].get<int>();
        if (p.contains("generators")) s.generators = int_matrix(p["generators"], "generators");
        return GroupSpec{s};
    }
    const auto& c = j["cayley"];
    if (!c.is_object() || !c.contains("table"))
        throw InputError("cayley spec needs a \"table\"");
    return GroupSpec{CayleySpec{int_matrix(c["table"], "table")}};
}

nlohmann::json GroupSpec::to_json() const {
    nlohmann::json j;
    if (const auto* n = std::get_if<NamedSpec>(&source)) {
        j["named"] = named_to_json(*n);
    } else if (const auto* p = std::get_if<PermutationSpec>(&source)) {
        j["permutation"]["degree"] = p->degree;
        j["permutation"]["generators"] = p->generators;
    } else {
        j["cayley"]["table"] = std::get<CayleySpec>(source).table;
    }
    return j;
}

std::string GroupSpec::display() const {
    if (const auto* n = std::get_if<NamedSpec>(&source)) return n->display();
    if (const auto* p = std::get_if<PermutationSpec>(&source))
        return "permutation(degree=" + std::to_string(p->degree) + ")";
    return "cayley(n=" + std::to_string(std::get<CayleySpec>(source).table.size()) + ")";
}

GroupTable enumerate_group(const GroupSpec& spec, int max_order) {
    if (max_order < 1) throw InputError("order cap must be >= 1");
    if (const auto* n = std::get_if<NamedSpec>(&spec.source)) {
        GroupTable g = build_named(*n, max_order);
        verify_group_table(g);
        return g;
    }
    if (const auto* p = std::get_if<PermutationSpec>(&spec.source)) {
        if (p->degree < 1) throw InputError("permutation degree must be >= 1");
        Enc id(p->degree);
        std::iota(id.begin(), id.end(), 0);
        std::vector<Enc> gens;
        for (const auto& perm : p->generators) {
            if (static_cast<int>(perm.size()) != p->degree)
                throw InputError("generator length must equal the degree");
            std::vector<char> hit(p->degree, 0);
            for (int v : perm) {
                if (v < 0 || v >= p->degree || hit[v]) throw InputError("generator is not a bijection");
                hit[v] = 1;
            }
            gens.push_back(perm);
        }
        GroupTable g = closure_group(id, gens, perm_mul, max_order, spec.display(), perm_label);
        verify_group_table(g);
        return g;
    }
    const auto& table = std::get<CayleySpec>(spec.source).table;
    if (table.empty()) throw InputError("cayley table must be nonempty");
    if (static_cast<int>(table.size()) > max_order)
        throw CapExceeded("order exceeds cap " + std::to_string(max_order));
    GroupTable g;
    g.n = static_cast<int>(table.size());
    g.name = spec.display();
    g.mul = table;
    verify_group_table(g);
    finalize(g);
    // greedy minimal generating set, smallest new element first
    std::vector<char> reached(g.n, 0);
    reached[0] = 1;
    int covered = 1;
    while (covered < g.n) {
        int pick = 0;
        while (reached[pick]) ++pick;
        g.generators.push_back(pick);
        // closure of the current generating set
        std::vector<int> frontier{0};
        std::fill(reached.begin(), reached.end(), 0);
        reached[0] = 1;
        covered = 1;
        for (size_t i = 0; i < frontier.size(); ++i)
            for (int s : g.generators) {
                int t = g.mul[frontier[i]][s];
                if (!reached[t]) {
                    reached[t] = 1;
                    ++covered;
                    frontier.push_back(t);
                }
            }
    }
    return g;
}

ConjClassData conjugacy_classes(const GroupTable& g) {
    ConjClassData cc;
    cc.class_of.assign(g.n, -1);
    for (int x = 0; x < g.n; ++x) {
        if (cc.class_of[x] != -1) continue;
        int c = cc.num_classes++;
        std::vector<int> members;
        for (int y = 0; y < g.n; ++y) {
            int z = g.mul[g.mul[g.inv[y]][x]][y];
            if (cc.class_of[z] == -1) {
                cc.class_of[z] = c;
                members.push_back(z);
            }
        }
        std::sort(members.begin(), members.end());
        cc.representative.push_back(members.front());
        cc.class_size.push_back(static_cast<int>(members.size()));
        cc.centralizer_size.push_back(g.n / static_cast<int>(members.size()));
        cc.members.push_back(std::move(members));
    }
    cc.inverse_class.resize(cc.num_classes);
    for (int c = 0; c < cc.num_classes; ++c)
        cc.inverse_class[c] = cc.class_of[g.inv[cc.representative[c]]];
    return cc;
}

int ConjClassData::power_class(const GroupTable& g, int c, long k) const {
    return class_of[g.power(representative[c], k)];
}

int centralizer_order(const GroupTable& g, int x) {
    int count = 0;
    for (int y = 0; y < g.n; ++y)
        if (g.mul[x][y] == g.mul[y][x]) ++count;
    return count;
}

void verify_group_table(const GroupTable& g, int assoc_exhaustive_limit) {
    int n = g.n;
    if (n < 1 || static_cast<int>(g.mul.size()) != n)
        throw InputError("table size does not match order");
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(g.mul[x].size()) != n) throw InputError("table is not square");
        for (int y = 0; y < n; ++y)
            if (g.mul[x][y] < 0 || g.mul[x][y] >= n)
                throw InputError("table entry out of range");
    }
    for (int x = 0; x < n; ++x) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int y = 0; y < n; ++y) {
            if (row[g.mul[x][y]]++) throw InputError("row is not a permutation");
            if (col[g.mul[y][x]]++) throw InputError("column is not a permutation");
        }
        if (g.mul[0][x] != x || g.mul[x][0] != x)
            throw InputError("element 0 is not a two-sided identity");
    }
    for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int y = 0; y < n && !found; ++y)
            found = g.mul[x][y] == 0 && g.mul[y][x] == 0;
        if (!found) throw InputError("element lacks a two-sided inverse");
    }
    auto assoc = [&](int x, int y, int z) {
        if (g.mul[g.mul[x][y]][z] != g.mul[x][g.mul[y][z]])
            throw InputError("table is not associative");
    };
    if (n <= assoc_exhaustive_limit) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) assoc(x, y, z);
    } else {
        unsigned long long state = 0x9e3779b97f4a7c15ull;  // fixed seed, deterministic triples
        auto next = [&state, n] {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return static_cast<int>((state >> 33) % static_cast<unsigned>(n));
        };
        for (int i = 0; i < 10000; ++i) {
            int x = next(), y = next(), z = next();
            assoc(x, y, z);
        }
    }
}

std::string serialize_table(const GroupTable& g) {
    std::ostringstream os;
    os << g.name << '\n' << g.n << '\n';
    for (int x = 0; x < g.n; ++x) {
        for (int y = 0; y < g.n; ++y) {
            if (y) os << ' ';
            os << g.mul[x][y];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace qgi
