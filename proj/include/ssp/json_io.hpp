#pragma once

#include "ssp/curve.hpp"
#include "ssp/enumerate.hpp"

#include "json.hpp"

#include <optional>

namespace ssp {

using Json = nlohmann::json;

/// {"p": 17, "k": 2, "modulus": [-61, 0, 1]} — modulus omitted for k = 1.
Json field_to_json(const FieldPtr& F);
FieldPtr field_from_json(const Json& j);

/// Ascending coefficient vectors; integers accepted on load. With `zeta`
/// set, {"pow": n} entries resolve to zeta^n.
Json elem_to_json(const FieldElem& e);
FieldElem elem_from_json(const Json& j, const FieldPtr& F, const FieldElem* zeta = nullptr);

/// Dense ascending array, or a sparse {"exponent": coefficient} object.
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j, const FieldPtr& F, const FieldElem* zeta = nullptr);

/// {"field": ..., "g": 4, "c": ..., "f": ...}
Json curve_to_json(const HyperellipticCurve& C);
HyperellipticCurve curve_from_json(const Json& j);

Json report_to_json(const EnumerationReport& rep);

/// Reproducibility header embedded in every emitted report.
struct RunManifest {
    std::string command;
    Json params;
    u64 seed = 0;
    std::string started_at;
    std::string finished_at;
    std::string version;
    Json input_hashes; // path -> fnv64 hex
};
Json manifest_to_json(const RunManifest& m);
u64 fnv1a_file(const std::string& path);
std::string now_iso8601();

/// One transcribed classification list (curves over a fixed field).
struct CurveList {
    std::string id;
    FieldPtr field;
    unsigned g = 4;
    std::vector<HyperellipticCurve> curves;
    std::optional<FieldElem> zeta;
    Json meta;
};

struct ReferenceData {
    std::map<std::string, CurveList> lists;
    Json expectations;
};

/// Loads data/representatives.json and data/expectations.json from `dir`.
ReferenceData load_reference_data(const std::string& dir);

} // namespace ssp
