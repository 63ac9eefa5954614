#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgi/idempotents.hpp"

namespace qgi {

struct PipelineOptions {
    int max_order = kDefaultOrderCap;
    VerifyLevel level = VerifyLevel::kFull;
    // Optional externally supplied character table (multiplicity format,
    // already parsed); verified before use.
    std::optional<nlohmann::json> chartable;
    bool timings = false;
};

struct PipelineResult {
    GroupSpec spec;
    GroupTable g;
    ConjClassData cc;
    CyclicClassData cyc;
    CharacterTable table;
    std::vector<RationalClass> orbits;
    DecompositionReport dec;
    std::vector<std::pair<std::string, double>> timings_ms;  // stage -> elapsed
};

PipelineResult run_pipeline(const GroupSpec& spec, const PipelineOptions& opt);

// Machine-readable report. Keys are emitted in nlohmann's sorted order so
// that parse + re-serialize round-trips byte-identically.
nlohmann::json report_json(const PipelineResult& r, const PipelineOptions& opt);
std::string report_json_text(const PipelineResult& r, const PipelineOptions& opt);

std::string report_text(const PipelineResult& r, const PipelineOptions& opt);

// Parses the {"e":..., "rows":[[...]]} character-table input format.
CharacterTable parse_chartable_json(const GroupTable& g, const ConjClassData& cc,
                                    const nlohmann::json& j);

}  // namespace qgi
