#include "qgi/report.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qgi/errors.hpp"

namespace qgi {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

CharacterTable parse_chartable_json(const GroupTable& g, const ConjClassData& cc,
                                    const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("e") || !j["e"].is_number_integer() ||
        !j.contains("rows") || !j["rows"].is_array())
        throw InputError("character table input needs integer \"e\" and array \"rows\"");
    int e = j["e"].get<int>();
    std::vector<std::vector<std::vector<long>>> rows;
    for (const auto& row : j["rows"]) {
        if (!row.is_array()) throw InputError("character table rows must be arrays");
        std::vector<std::vector<long>> r;
        for (const auto& value : row) {
            if (!value.is_array())
                throw InputError("character table values must be multiplicity arrays");
            std::vector<long> mult;
            for (const auto& m : value) {
                if (!m.is_number_integer())
                    throw InputError("multiplicities must be integers");
                mult.push_back(m.get<long>());
            }
            r.push_back(std::move(mult));
        }
        rows.push_back(std::move(r));
    }
    return character_table_from_multiplicities(g, cc, e, rows);
}

PipelineResult run_pipeline(const GroupSpec& spec, const PipelineOptions& opt) {
    PipelineResult r;
    r.spec = spec;

    auto t0 = Clock::now();
    r.g = enumerate_group(spec, opt.max_order);
    r.timings_ms.emplace_back("enumerate", ms_since(t0));

    t0 = Clock::now();
    r.cc = conjugacy_classes(r.g);
    r.timings_ms.emplace_back("conjugacy_classes", ms_since(t0));

    t0 = Clock::now();
    r.cyc = cyclic_subgroup_classes(r.g, r.cc);
    r.timings_ms.emplace_back("cyclic_classes", ms_since(t0));

    t0 = Clock::now();
    if (opt.chartable)
        r.table = parse_chartable_json(r.g, r.cc, *opt.chartable);
    else
        r.table = character_table(r.g, r.cc);
    r.timings_ms.emplace_back("character_table", ms_since(t0));

    t0 = Clock::now();
    r.orbits = galois_orbits(r.g, r.cc, r.table);
    r.dec = full_decomposition(r.g, r.cc, r.table, r.cyc, opt.level);
    r.timings_ms.emplace_back("decomposition", ms_since(t0));
    return r;
}

namespace {

nlohmann::json element_json(const AlgebraElement& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x = 0; x < a.size(); ++x) arr.push_back(rational_str(a[x]));
    return arr;
}

nlohmann::json table_json(const CharacterTable& t) {
    nlohmann::json j;
    j["e"] = t.conductor;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const Cyclotomic& v : row) {
            std::vector<long> mult(t.conductor, 0);
            for (size_t i = 0; i < v.coeffs().size(); ++i) mult[i] = to_long(v.coeffs()[i]);
            r.push_back(mult);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace

nlohmann::json report_json(const PipelineResult& r, const PipelineOptions& opt) {
    nlohmann::json j;
    j["schema"] = 1;
    j["group"]["spec"] = r.spec.to_json();
    j["group"]["order"] = r.g.n;
    j["group"]["exponent"] = r.g.exponent();
    j["group"]["num_classes"] = r.cc.num_classes;
    j["group"]["num_cyclic_classes"] = r.cyc.class_count();

    nlohmann::json cyc = nlohmann::json::array();
    for (const CyclicClass& cls : r.cyc.classes) {
        nlohmann::json c;
        c["order"] = cls.rep.order();
        c["generator"] = cls.rep.generator;
        c["elements"] = cls.rep.elems;
        c["normalizer_order"] = cls.normalizer_order;
        c["num_conjugates"] = cls.conjugates.size();
        cyc.push_back(std::move(c));
    }
    j["cyclic_classes"] = std::move(cyc);

    if (opt.level == VerifyLevel::kFull) j["character_table"] = table_json(r.table);

    nlohmann::json rcs = nlohmann::json::array();
    for (const RationalClass& rc : r.orbits) {
        nlohmann::json o;
        o["members"] = rc.members;
        o["orbit_size"] = rc.orbit_size;
        o["degree"] = to_long(rc.degree);
        nlohmann::json psi = nlohmann::json::array();
        for (const Int& v : rc.psi) psi.push_back(to_long(v));
        o["psi"] = std::move(psi);
        rcs.push_back(std::move(o));
    }
    j["rational_classes"] = std::move(rcs);

    bool full = r.dec.level == VerifyLevel::kFull;
    nlohmann::json idem = nlohmann::json::array();
    for (const IdempotentRecord& rec : r.dec.records) {
        nlohmann::json o;
        o["rational_class"] = rec.rc_index;
        o["degree"] = to_long(rec.degree);
        o["orbit_size"] = rec.orbit_size;
        o["dimension"] = to_long(rec.dimension);
        nlohmann::json b;
        for (size_t i = 0; i < rec.b.size(); ++i) b[std::to_string(i)] = rational_str(rec.b[i]);
        o["b"] = std::move(b);
        o["element"] = element_json(rec.element);
        nlohmann::json checks;
        checks["idempotent"] = rec.idempotent;
        checks["central"] = rec.central;
        checks["dimension"] =
            Rational(rec.dimension) == Rational(r.g.n) * rec.element[0];
        if (full)
            checks["routes_agree"] = rec.routes_agree;
        else
            checks["routes_agree"] = nullptr;
        o["checks"] = std::move(checks);
        idem.push_back(std::move(o));
    }
    j["idempotents"] = std::move(idem);

    j["verification"]["sum_to_one"] = r.dec.sum_to_one;
    if (full) {
        j["verification"]["pairwise_orthogonal"] = r.dec.pairwise_orthogonal;
        j["verification"]["routes_agree"] = r.dec.routes_agree;
    } else {
        j["verification"]["pairwise_orthogonal"] = nullptr;
        j["verification"]["routes_agree"] = nullptr;
    }

    j["timings_ms"] = nlohmann::json::object();
    if (opt.timings)
        for (const auto& [stage, ms] : r.timings_ms) j["timings_ms"][stage] = ms;
    return j;
}

std::string report_json_text(const PipelineResult& r, const PipelineOptions& opt) {
    return report_json(r, opt).dump(2) + "\n";
}

namespace {

std::string element_str(const AlgebraElement& a) {
    const GroupTable& g = a.group();
    std::string out;
    for (int x = 0; x < g.n; ++x) {
        if (a[x] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rational_str(a[x]) + "*" + g.label(x);
    }
    return out.empty() ? "0" : out;
}

const char* yn(bool v) { return v ? "pass" : "FAIL"; }

}  // namespace

std::string report_text(const PipelineResult& r, const PipelineOptions& opt) {
    std::ostringstream os;
    bool full = r.dec.level == VerifyLevel::kFull;
    os << "group " << r.spec.display() << ": order " << r.g.n << ", exponent "
       << r.g.exponent() << ", " << r.cc.num_classes << " conjugacy classes\n";
    os << "cyclic subgroup classes: " << r.cyc.class_count() << "\n";
    for (size_t i = 0; i < r.cyc.classes.size(); ++i) {
        const CyclicClass& c = r.cyc.classes[i];
        os << "  [" << i << "] order " << c.rep.order() << ", generator "
           << r.g.label(c.rep.generator) << ", " << c.conjugates.size()
           << " conjugate(s), normalizer order " << c.normalizer_order << "\n";
    }
    os << "rational classes: " << r.orbits.size() << "\n";
    for (size_t i = 0; i < r.orbits.size(); ++i) {
        const RationalClass& rc = r.orbits[i];
        os << "  [" << i << "] degree " << rc.degree << ", orbit size " << rc.orbit_size
           << ", characters {";
        for (size_t k = 0; k < rc.members.size(); ++k)
            os << (k ? "," : "") << rc.members[k];
        os << "}\n";
    }
    os << "\nprimitive central idempotents of QG (" << r.dec.records.size() << "):\n";
    for (size_t i = 0; i < r.dec.records.size(); ++i) {
        const IdempotentRecord& rec = r.dec.records[i];
        os << "e[" << i << "]: degree " << rec.degree << ", orbit size " << rec.orbit_size
           << ", component dimension " << rec.dimension << "\n";
        os << "  b =";
        for (size_t k = 0; k < rec.b.size(); ++k)
            os << (k ? ", " : " ") << "[" << k << "] " << rational_str(rec.b[k]);
        os << "\n";
        os << "  element = " << element_str(rec.element) << "\n";
        os << "  idempotent " << yn(rec.idempotent) << ", central " << yn(rec.central);
        if (full) os << ", route equality " << yn(rec.routes_agree);
        os << "\n";
    }
    os << "\nverification: sum to one " << yn(r.dec.sum_to_one);
    if (full)
        os << ", pairwise orthogonal " << yn(r.dec.pairwise_orthogonal) << ", routes agree "
           << yn(r.dec.routes_agree);
    os << "\n";
    if (opt.timings) {
        os << "timings:";
        for (const auto& [stage, ms] : r.timings_ms) os << " " << stage << " " << ms << "ms";
        os << "\n";
    }
    return os.str();
}

}  // namespace qgi
