#include "qgi/chartable.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "qgi/errors.hpp"
#include "qgi/numtheory.hpp"

namespace qgi {

namespace {

// Arithmetic mod a prime small enough that products fit in long long.
struct Fp {
    long p;

    long add(long a, long b) const { return (a + b) % p; }
    long sub(long a, long b) const { return ((a - b) % p + p) % p; }
    long mul(long a, long b) const {
        return static_cast<long>(static_cast<long long>(a) * b % p);
    }
    long pow(long a, long k) const { return power_mod(a, k, p); }
    long inv(long a) const {
        if (a % p == 0) throw DefectError("division by zero mod p");
        return pow(a, p - 2);
    }
    long neg(long a) const { return (p - a % p) % p; }
};

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

// p = 1 mod e so F_p contains e-th roots of unity; the size bound makes
// eigenvalue data and multiplicities lift uniquely to the integers.
long dixon_prime(int n, int e, int max_class) {
    long root = 1;
    while (root * root < n) ++root;
    long bound = 2 * root * max_class;
    long p = e + 1;
    while (p <= bound || (p - 1) % e != 0 || !is_prime(p)) ++p;
    return p;
}

// Smallest primitive e-th root of unity mod p; canonical for reproducible
// multiplicity lifting.
long primitive_root_of_unity(const Fp& f, int e) {
    if (e == 1) return 1;
    std::vector<long> prime_factors;
    long m = e;
    for (long q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long z = 2; z < f.p; ++z) {
        if (f.pow(z, e) != 1) continue;
        bool primitive = true;
        for (long q : prime_factors)
            if (f.pow(z, e / q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return z;
    }
    throw DefectError("no primitive root of unity mod p");
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Mat& m, const Fp& f) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[rank], m[sel]);
        long scale = f.inv(m[rank][c]);
        for (int j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], scale);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            long factor = m[r][c];
            for (int j = c; j < cols; ++j)
                m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
        }
        pivots.push_back(c);
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

// Nullspace basis in the standard form (one vector per free column,
// ascending), rows of the result.
Mat nullspace(Mat m, const Fp& f) {
    int d = static_cast<int>(m.size());
    std::vector<int> pivots = rref(m, f);
    std::vector<char> is_pivot(d, 0);
    for (int c : pivots) is_pivot[c] = 1;
    Mat basis;
    for (int c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        Vec x(d, 0);
        x[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(m[r][c]);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Matrix of the action of M on the row space of B (B in rref). Throws if
// the space is not invariant.
Mat restriction(const Mat& m, const Mat& b, const std::vector<int>& pivots, const Fp& f) {
    int d = static_cast<int>(b.size());
    int s = static_cast<int>(b[0].size());
    Mat r(d, Vec(d, 0));
    for (int v = 0; v < d; ++v) {
        Vec w(s, 0);
        for (int j = 0; j < s; ++j) {
            long acc = 0;
            for (int k = 0; k < s; ++k)
                if (b[v][k] != 0) acc = f.add(acc, f.mul(m[j][k], b[v][k]));
            w[j] = acc;
        }
        Vec coords(d);
        for (int t = 0; t < d; ++t) coords[t] = w[pivots[t]];
        for (int j = 0; j < s; ++j) {
            long acc = 0;
            for (int t = 0; t < d; ++t)
                if (coords[t] != 0) acc = f.add(acc, f.mul(coords[t], b[t][j]));
            if (acc != w[j]) throw DefectError("class matrix does not preserve the subspace");
        }
        for (int t = 0; t < d; ++t) r[t][v] = coords[t];
    }
    return r;
}

// Similarity reduction to upper Hessenberg form.
void hessenberg(Mat& h, const Fp& f) {
    int d = static_cast<int>(h.size());
    for (int c = 0; c + 2 < d; ++c) {
        int sel = -1;
        for (int r = c + 1; r < d; ++r)
            if (h[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != c + 1) {
            std::swap(h[sel], h[c + 1]);
            for (int r = 0; r < d; ++r) std::swap(h[r][sel], h[r][c + 1]);
        }
        long piv = f.inv(h[c + 1][c]);
        for (int r = c + 2; r < d; ++r) {
            if (h[r][c] == 0) continue;
            long factor = f.mul(h[r][c], piv);
            for (int j = 0; j < d; ++j) h[r][j] = f.sub(h[r][j], f.mul(factor, h[c + 1][j]));
            for (int j = 0; j < d; ++j) h[j][c + 1] = f.add(h[j][c + 1], f.mul(factor, h[j][r]));
        }
    }
}

// Characteristic polynomial of a Hessenberg matrix by the leading-minor
// recurrence. Coefficients low degree first, monic.
Vec hessenberg_charpoly(const Mat& h, const Fp& f) {
    int d = static_cast<int>(h.size());
    std::vector<Vec> ps;
    ps.push_back({1});
    for (int k = 1; k <= d; ++k) {
        Vec pk(k + 1, 0);
        const Vec& prev = ps[k - 1];
        for (int i = 0; i < k; ++i) {
            pk[i + 1] = f.add(pk[i + 1], prev[i]);
            pk[i] = f.sub(pk[i], f.mul(h[k - 1][k - 1], prev[i]));
        }
        long prod = 1;
        for (int i = k - 2; i >= 0; --i) {
            prod = f.mul(prod, h[i + 1][i]);
            long c = f.mul(h[i][k - 1], prod);
            if (c == 0) continue;
            for (size_t t = 0; t < ps[i].size(); ++t) pk[t] = f.sub(pk[t], f.mul(c, ps[i][t]));
        }
        ps.push_back(std::move(pk));
    }
    return ps[d];
}

// All roots in F_p, ascending, each listed once.
Vec poly_roots(const Vec& f, const Fp& fp) {
    Vec roots;
    for (long x = 0; x < fp.p; ++x) {
        long acc = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            acc = fp.add(fp.mul(acc, x), f[i]);
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

// Class matrix M_i over F_p: entry (j, k) counts x in class i with
// x^-1 g_k in class j; the central-character vectors are its eigenvectors.
Mat class_matrix(const GroupTable& g, const ConjClassData& cc, int i) {
    int s = cc.num_classes;
    Mat m(s, Vec(s, 0));
    for (int k = 0; k < s; ++k) {
        int gk = cc.representative[k];
        for (int x : cc.members[i]) ++m[cc.class_of[g.mul[g.inv[x]][gk]]][k];
    }
    return m;
}

struct LiftedRow {
    Int degree;
    std::vector<Cyclotomic> values;
};

bool row_less(const LiftedRow& a, const LiftedRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (size_t j = 0; j < a.values.size(); ++j) {
        int s = a.values[j].cmp(b.values[j]);
        if (s != 0) return s < 0;
    }
    return false;
}

void sort_rows(std::vector<LiftedRow>& rows, CharacterTable& t) {
    std::sort(rows.begin(), rows.end(), row_less);
    for (auto& r : rows) {
        t.degrees.push_back(std::move(r.degree));
        t.rows.push_back(std::move(r.values));
    }
}

}  // namespace

CharacterTable character_table(const GroupTable& g, const ConjClassData& cc) {
    int s = cc.num_classes;
    int e = g.exponent();
    int max_class = *std::max_element(cc.class_size.begin(), cc.class_size.end());
    Fp f{dixon_prime(g.n, e, max_class)};
    long z = primitive_root_of_unity(f, e);

    // split the common eigenspaces of the class matrices until all are lines
    std::vector<Mat> spaces;
    std::vector<std::vector<int>> space_pivots;
    {
        Mat full(s, Vec(s, 0));
        std::vector<int> piv(s);
        for (int i = 0; i < s; ++i) {
            full[i][i] = 1;
            piv[i] = i;
        }
        spaces.push_back(std::move(full));
        space_pivots.push_back(std::move(piv));
    }
    for (int i = 1; i < s; ++i) {
        bool all_lines = true;
        for (const Mat& b : spaces)
            if (b.size() > 1) all_lines = false;
        if (all_lines) break;
        Mat m = class_matrix(g, cc, i);
        std::vector<Mat> next;
        std::vector<std::vector<int>> next_pivots;
        for (size_t v = 0; v < spaces.size(); ++v) {
            if (spaces[v].size() == 1) {
                next.push_back(std::move(spaces[v]));
                next_pivots.push_back(std::move(space_pivots[v]));
                continue;
            }
            Mat r = restriction(m, spaces[v], space_pivots[v], f);
            int d = static_cast<int>(r.size());
            Mat h = r;
            hessenberg(h, f);
            Vec roots = poly_roots(hessenberg_charpoly(h, f), f);
            if (roots.size() == 1) {
                next.push_back(std::move(spaces[v]));
                next_pivots.push_back(std::move(space_pivots[v]));
                continue;
            }
            int found = 0;
            for (long lam : roots) {
                Mat shifted = r;
                for (int t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lam);
                Mat null = nullspace(std::move(shifted), f);
                Mat lifted;
                for (const Vec& x : null) {
                    Vec row(spaces[v][0].size(), 0);
                    for (int t = 0; t < d; ++t) {
                        if (x[t] == 0) continue;
                        for (size_t j = 0; j < row.size(); ++j)
                            row[j] = f.add(row[j], f.mul(x[t], spaces[v][t][j]));
                    }
                    lifted.push_back(std::move(row));
                }
                found += static_cast<int>(lifted.size());
                std::vector<int> piv = rref(lifted, f);
                next.push_back(std::move(lifted));
                next_pivots.push_back(std::move(piv));
            }
            if (found != d) throw DefectError("eigenspace dimensions do not fill the space");
        }
        spaces = std::move(next);
        space_pivots = std::move(next_pivots);
    }
    for (const Mat& b : spaces)
        if (b.size() != 1) throw DefectError("common eigenspaces did not reduce to lines");

    long degree_limit = 1;
    while (degree_limit * degree_limit < g.n) ++degree_limit;

    std::vector<LiftedRow> rows;
    for (const Mat& b : spaces) {
        Vec v = b[0];
        if (v[0] == 0) throw DefectError("central character vanishes on the identity class");
        long scale = f.inv(v[0]);
        for (long& x : v) x = f.mul(x, scale);

        // |G| / sum_j v_j v_{jbar} / |C_j| = chi(1)^2 mod p
        long t = 0;
        for (int j = 0; j < s; ++j)
            t = f.add(t, f.mul(f.mul(v[j], v[cc.inverse_class[j]]), f.inv(cc.class_size[j])));
        long dsq = f.mul(g.n % f.p, f.inv(t));
        long degree = 0;
        for (long d = 1; d <= degree_limit; ++d)
            if (f.mul(d, d) == dsq) {
                if (degree != 0) throw DefectError("ambiguous character degree");
                degree = d;
            }
        if (degree == 0) throw DefectError("no character degree matches");

        Vec val(s);
        for (int j = 0; j < s; ++j)
            val[j] = f.mul(f.mul(degree % f.p, v[j]), f.inv(cc.class_size[j]));

        LiftedRow row;
        row.degree = degree;
        for (int j = 0; j < s; ++j) {
            int o = g.elem_order[cc.representative[j]];
            long zeta = f.pow(z, e / o);
            long oinv = f.inv(o);
            std::vector<Int> mult(e, 0);
            long total = 0;
            for (int l = 0; l < o; ++l) {
                long acc = 0;
                for (int tt = 0; tt < o; ++tt) {
                    long exp = (o - static_cast<long>(l) * tt % o) % o;
                    acc = f.add(acc, f.mul(val[cc.power_class(g, j, tt)], f.pow(zeta, exp)));
                }
                long ml = f.mul(oinv, acc);
                if (ml > degree) throw DefectError("root multiplicity exceeds the degree");
                total += ml;
                mult[static_cast<size_t>(l) * (e / o)] += ml;
            }
            if (total != degree) throw DefectError("root multiplicities do not sum to the degree");
            row.values.push_back(Cyclotomic::from_root_powers(e, mult));
        }
        rows.push_back(std::move(row));
    }

    CharacterTable t;
    t.conductor = e;
    sort_rows(rows, t);

    Int sq = 0;
    for (const Int& d : t.degrees) sq += d * d;
    if (sq != g.n) throw DefectError("squared degrees do not sum to the group order");
    return t;
}

CharacterTable character_table_from_multiplicities(
    const GroupTable& g, const ConjClassData& cc, int e,
    const std::vector<std::vector<std::vector<long>>>& rows) {
    if (e != g.exponent())
        throw InputError("character table conductor must equal the group exponent");
    if (static_cast<int>(rows.size()) != cc.num_classes)
        throw InputError("character table must have one row per conjugacy class");
    std::vector<LiftedRow> lifted;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cc.num_classes)
            throw InputError("character table row has the wrong length");
        LiftedRow lr;
        for (const auto& mult : row) {
            if (static_cast<int>(mult.size()) != e)
                throw InputError("multiplicity vectors must have length e");
            std::vector<Int> m(mult.begin(), mult.end());
            lr.values.push_back(Cyclotomic::from_root_powers(e, m));
        }
        auto deg = as_integer(lr.values[0]);
        if (!deg || *deg < 1)
            throw InputError("character degree must be a positive integer");
        lr.degree = *deg;
        lifted.push_back(std::move(lr));
    }
    CharacterTable t;
    t.conductor = e;
    sort_rows(lifted, t);
    try {
        verify_character_table(g, cc, t);
    } catch (const DefectError& err) {
        throw InputError(std::string("supplied character table fails verification: ") +
                         err.what());
    }
    return t;
}

void verify_character_table(const GroupTable& g, const ConjClassData& cc,
                            const CharacterTable& t) {
    int s = cc.num_classes;
    int e = t.conductor;
    if (e != g.exponent()) throw DefectError("table conductor differs from the group exponent");
    if (t.num_rows() != s) throw DefectError("row count differs from the class count");
    if (static_cast<int>(t.degrees.size()) != s) throw DefectError("degree list has wrong size");

    Int sq = 0;
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(t.rows[i].size()) != s)
            throw DefectError("table row has the wrong length");
        if (t.degrees[i] < 1) throw DefectError("character degree must be positive");
        if (!(t.rows[i][0] == Cyclotomic::from_integer(e, t.degrees[i])))
            throw DefectError("identity-class value differs from the degree");
        sq += t.degrees[i] * t.degrees[i];
    }
    if (sq != g.n) throw DefectError("squared degrees do not sum to the group order");

    for (int a = 0; a < s; ++a)
        for (int b = a; b < s; ++b) {
            Cyclotomic acc(e);
            for (int j = 0; j < s; ++j)
                acc += Cyclotomic::from_integer(e, cc.class_size[j]) * t.rows[a][j] *
                       t.rows[b][cc.inverse_class[j]];
            Int expect = a == b ? Int(g.n) : Int(0);
            if (!(acc == Cyclotomic::from_integer(e, expect)))
                throw DefectError("row orthogonality fails");
        }

    for (int j = 0; j < s; ++j)
        for (int k = j; k < s; ++k) {
            Cyclotomic acc(e);
            for (int i = 0; i < s; ++i) acc += t.rows[i][j] * t.rows[i][cc.inverse_class[k]];
            Int expect = j == k ? Int(cc.centralizer_size[j]) : Int(0);
            if (!(acc == Cyclotomic::from_integer(e, expect)))
                throw DefectError("column orthogonality fails");
        }
}

std::vector<Int> induced_trivial(const GroupTable& g, const ConjClassData& cc,
                                 const Subgroup& c) {
    std::vector<Int> out(cc.num_classes);
    Int index = g.n / c.order();
    for (int j = 0; j < cc.num_classes; ++j) {
        long hit = 0;
        for (int x : cc.members[j])
            if (c.contains(x)) ++hit;
        Int num = index * hit;
        if (num % cc.class_size[j] != 0)
            throw DefectError("induced character value is not an integer");
        out[j] = num / cc.class_size[j];
#ifndef NDEBUG
        long count = 0;
        int rep = cc.representative[j];
        for (int y = 0; y < g.n; ++y)
            if (c.contains(g.mul[g.mul[g.inv[y]][rep]][y])) ++count;
        if (out[j] * c.order() != count)
            throw DefectError("induced character closed form disagrees with the defining sum");
#endif
    }
    return out;
}

std::vector<RationalClass> galois_orbits(const GroupTable& g, const ConjClassData& cc,
                                         const CharacterTable& t) {
    (void)g;
    int s = t.num_rows();
    int e = t.conductor;
    std::map<std::vector<std::vector<Int>>, int> row_index;
    auto key_of = [&](const std::vector<Cyclotomic>& row) {
        std::vector<std::vector<Int>> key;
        key.reserve(row.size());
        for (const Cyclotomic& v : row) key.push_back(v.coeffs());
        return key;
    };
    for (int i = 0; i < s; ++i) row_index[key_of(t.rows[i])] = i;

    std::vector<int> parent(s);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };

    for (int i = 0; i < s; ++i)
        for (long k = 1; k < e || k == 1; ++k) {
            if (gcd_long(k, e) != 1) continue;
            std::vector<Cyclotomic> image;
            image.reserve(s);
            for (int j = 0; j < s; ++j) image.push_back(galois_apply(t.rows[i][j], k));
            auto it = row_index.find(key_of(image));
            if (it == row_index.end())
                throw DefectError("table is not closed under the Galois action");
            parent[find(i)] = find(it->second);
            if (e == 1) break;
        }

    std::vector<RationalClass> orbits;
    std::map<int, int> root_to_orbit;
    for (int i = 0; i < s; ++i) {
        int r = find(i);
        auto it = root_to_orbit.find(r);
        if (it == root_to_orbit.end()) {
            root_to_orbit[r] = static_cast<int>(orbits.size());
            orbits.push_back({});
            it = root_to_orbit.find(r);
        }
        orbits[it->second].members.push_back(i);
    }
    std::sort(orbits.begin(), orbits.end(), [](const RationalClass& a, const RationalClass& b) {
        return a.members.front() < b.members.front();
    });

    for (RationalClass& rc : orbits) {
        rc.orbit_size = static_cast<int>(rc.members.size());
        rc.degree = t.degrees[rc.members.front()];
        for (int m : rc.members)
            if (t.degrees[m] != rc.degree)
                throw DefectError("orbit members have different degrees");
        rc.psi.resize(s);
        for (int j = 0; j < cc.num_classes; ++j) {
            Cyclotomic acc(e);
            for (int m : rc.members) acc += t.rows[m][j];
            auto z = as_integer(acc);
            if (!z) throw DefectError("orbit sum is not integer valued");
            rc.psi[j] = *z;
        }
    }
    return orbits;
}

}  // namespace qgi
