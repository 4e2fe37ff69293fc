#include "ssp/json_io.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ssp {

Json field_to_json(const FieldPtr& F) {
    Json j;
    j["p"] = F->p();
    j["k"] = F->k();
    if (F->k() > 1) {
        std::vector<i64> m;
        for (u64 v : F->modulus()) m.push_back(static_cast<i64>(v));
        j["modulus"] = m;
    }
    return j;
}

FieldPtr field_from_json(const Json& j) {
    u64 p = j.at("p").get<u64>();
    unsigned k = j.value("k", 1u);
    std::optional<std::vector<i64>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) modulus = j["modulus"].get<std::vector<i64>>();
    return FieldCtx::make(p, k, modulus);
}

Json elem_to_json(const FieldElem& e) {
    std::vector<i64> v;
    for (u64 c : e.coeffs()) v.push_back(static_cast<i64>(c));
    return Json(v);
}

FieldElem elem_from_json(const Json& j, const FieldPtr& F, const FieldElem* zeta) {
    if (j.is_number_integer()) return F->from_int(j.get<i64>());
    if (j.is_array()) return F->from_coeffs(j.get<std::vector<i64>>());
    if (j.is_object() && j.contains("pow")) {
        if (!zeta) throw std::invalid_argument("element uses a generator power but no generator is set");
        return pow(*zeta, j["pow"].get<u64>());
    }
    throw std::invalid_argument("unrecognized field element encoding");
}

Json poly_to_json(const Poly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(elem_to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j, const FieldPtr& F, const FieldElem* zeta) {
    if (j.is_array()) {
        std::vector<FieldElem> c;
        for (const auto& e : j) c.push_back(elem_from_json(e, F, zeta));
        return Poly(F, std::move(c));
    }
    if (j.is_object()) {
        size_t deg = 0;
        for (auto it = j.begin(); it != j.end(); ++it)
            deg = std::max(deg, static_cast<size_t>(std::stoul(it.key())));
        std::vector<FieldElem> c(deg + 1, F->zero());
        for (auto it = j.begin(); it != j.end(); ++it)
            c[std::stoul(it.key())] = elem_from_json(it.value(), F, zeta);
        return Poly(F, std::move(c));
    }
    throw std::invalid_argument("unrecognized polynomial encoding");
}

Json curve_to_json(const HyperellipticCurve& C) {
    Json j;
    j["field"] = field_to_json(C.ctx);
    j["g"] = C.g;
    j["c"] = elem_to_json(C.c);
    j["f"] = poly_to_json(C.f);
    return j;
}

HyperellipticCurve curve_from_json(const Json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    unsigned g = j.at("g").get<unsigned>();
    FieldElem c = j.contains("c") ? elem_from_json(j["c"], F) : F->one();
    Poly f = poly_from_json(j.at("f"), F);
    return HyperellipticCurve::make(F, g, c, f, true);
}

Json report_to_json(const EnumerationReport& rep) {
    Json j;
    j["g"] = rep.g;
    j["p"] = rep.p;
    j["k"] = rep.k;
    j["s1"] = rep.s1;
    j["s2"] = rep.s2;
    j["backend"] = rep.backend;
    j["workers"] = rep.workers;
    j["model_complete"] = rep.model_complete;
    Json curves = Json::array();
    for (const auto& f : rep.curves) curves.push_back(poly_to_json(f));
    j["curves"] = curves;
    j["curve_count"] = rep.curves.size();
    j["stats"] = {{"tuples_total", rep.tuples_total},
                  {"tuples_done", rep.tuples_done},
                  {"tuples_resumed", rep.tuples_resumed},
                  {"groebner_solved", rep.groebner_solved},
                  {"groebner_failed", rep.groebner_failed},
                  {"fallback_used", rep.fallback_used},
                  {"inconsistent", rep.inconsistent},
                  {"candidates_scanned", rep.candidates_scanned},
                  {"squarefree_rejected", rep.squarefree_rejected}};
    j["wall_seconds"] = rep.wall_seconds;
    return j;
}

Json manifest_to_json(const RunManifest& m) {
    return Json{{"command", m.command}, {"params", m.params},   {"seed", m.seed},
                {"started_at", m.started_at}, {"finished_at", m.finished_at},
                {"version", m.version},      {"input_hashes", m.input_hashes}};
}

u64 fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return 0;
    u64 h = 1469598103934665603ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount()) {
        for (std::streamsize i = 0; i < in.gcount(); ++i)
            h = (h ^ static_cast<unsigned char>(buf[i])) * 1099511628211ull;
    }
    return h;
}

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

ReferenceData load_reference_data(const std::string& dir) {
    ReferenceData data;
    std::ifstream rin(dir + "/representatives.json");
    if (!rin) throw std::runtime_error("cannot open " + dir + "/representatives.json");
    Json reps = Json::parse(rin);
    std::map<std::string, FieldPtr> fields;
    std::map<std::string, std::optional<FieldElem>> zetas;
    for (auto it = reps.at("fields").begin(); it != reps.at("fields").end(); ++it) {
        FieldPtr F = field_from_json(it.value());
        fields[it.key()] = F;
        if (it.value().contains("zeta"))
            zetas[it.key()] = F->from_coeffs(it.value()["zeta"].get<std::vector<i64>>());
        else
            zetas[it.key()] = std::nullopt;
    }
    for (auto it = reps.at("lists").begin(); it != reps.at("lists").end(); ++it) {
        const Json& jl = it.value();
        CurveList list;
        list.id = it.key();
        std::string fname = jl.at("field").get<std::string>();
        list.field = fields.at(fname);
        list.zeta = zetas.at(fname);
        list.g = jl.value("g", 4u);
        const FieldElem* z = list.zeta ? &*list.zeta : nullptr;
        for (const auto& jc : jl.at("curves")) {
            Poly f = poly_from_json(jc.at("f"), list.field, z);
            FieldElem c = jc.contains("c") ? elem_from_json(jc["c"], list.field, z) : list.field->one();
            list.curves.push_back(HyperellipticCurve::make(list.field, list.g, c, f));
        }
        list.meta = jl.value("meta", Json::object());
        data.lists.emplace(list.id, std::move(list));
    }
    std::ifstream ein(dir + "/expectations.json");
    if (!ein) throw std::runtime_error("cannot open " + dir + "/expectations.json");
    data.expectations = Json::parse(ein);
    return data;
}

} // namespace ssp
