#include "ssp/aut.hpp"
#include "ssp/enumerate.hpp"
#include "ssp/galois.hpp"
#include "ssp/isom.hpp"
#include "ssp/json_io.hpp"
#include "ssp/points.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <set>

using namespace ssp;

namespace {

constexpr const char* kVersion = "1.0.0";

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

struct Output {
    std::string path; // empty = stdout
    RunManifest manifest;

    void emit(Json body) const {
        body["manifest"] = manifest_to_json(manifest);
        if (path.empty()) {
            std::cout << body.dump(2) << "\n";
        } else {
            std::ofstream out(path);
            out << body.dump(2) << "\n";
            std::cout << "wrote " << path << "\n";
        }
    }
};

RunManifest start_manifest(const std::string& command, Json params, u64 seed,
                           const std::vector<std::string>& inputs) {
    RunManifest m;
    m.command = command;
    m.params = std::move(params);
    m.seed = seed;
    m.version = kVersion;
    m.started_at = now_iso8601();
    m.input_hashes = Json::object();
    for (const auto& p : inputs) {
        std::ostringstream os;
        os << std::hex << fnv1a_file(p);
        m.input_hashes[p] = os.str();
    }
    return m;
}

HyperellipticCurve load_curve(const std::string& path) { return curve_from_json(load_json(path)); }

FieldPtr load_field(const std::string& path) { return field_from_json(load_json(path)); }

// classify output schema: {"field":..., "g":..., "curves":[...], "classes":[...]}
struct ClassFile {
    FieldPtr field;
    unsigned g = 4;
    std::vector<HyperellipticCurve> curves;
    std::vector<IsomClass> classes;
};

ClassFile read_class_file(const std::string& path) {
    Json j = load_json(path);
    ClassFile cf;
    cf.field = field_from_json(j.at("field"));
    cf.g = j.at("g").get<unsigned>();
    for (const auto& jc : j.at("curves")) {
        Poly f = poly_from_json(jc.at("f"), cf.field);
        FieldElem c = jc.contains("c") ? elem_from_json(jc["c"], cf.field) : cf.field->one();
        cf.curves.push_back(HyperellipticCurve::make(cf.field, cf.g, c, f, true));
    }
    if (j.contains("classes")) {
        for (const auto& jc : j["classes"]) {
            IsomClass cl;
            cl.representative = jc.at("representative").get<size_t>();
            cl.members = jc.at("members").get<std::vector<size_t>>();
            cf.classes.push_back(std::move(cl));
        }
    }
    return cf;
}

Json classes_to_json(const ClassFile& cf) {
    Json j;
    j["field"] = field_to_json(cf.field);
    j["g"] = cf.g;
    Json curves = Json::array();
    for (const auto& C : cf.curves) {
        Json jc;
        jc["c"] = elem_to_json(C.c);
        jc["f"] = poly_to_json(C.f);
        curves.push_back(jc);
    }
    j["curves"] = curves;
    Json cls = Json::array();
    for (const auto& c : cf.classes)
        cls.push_back(Json{{"representative", c.representative}, {"members", c.members}});
    j["classes"] = cls;
    j["class_count"] = cf.classes.size();
    return j;
}

std::vector<size_t> generating_set(const AutGroup& G) {
    std::vector<size_t> gens;
    std::set<size_t> span{G.identity()};
    for (size_t i = 0; i < G.order() && span.size() < G.order(); ++i) {
        if (span.count(i)) continue;
        gens.push_back(i);
        span.insert(i);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<size_t> cur(span.begin(), span.end());
            for (size_t a : cur)
                for (size_t b : cur)
                    if (span.insert(G.mul(a, b)).second) grew = true;
        }
    }
    return gens;
}

Json aut_group_json(const AutGroup& G) {
    Json j;
    j["order"] = G.order();
    j["label"] = identify_group(G);
    j["field"] = field_to_json(G.field());
    Json gens = Json::array();
    for (size_t gi : generating_set(G)) {
        const AutElem& e = G.elements()[gi];
        gens.push_back(Json{{"h", Json::array({elem_to_json(e.h.a), elem_to_json(e.h.b),
                                               elem_to_json(e.h.c), elem_to_json(e.h.d)})},
                            {"lambda", elem_to_json(e.lambda)}});
    }
    j["generators"] = gens;
    j["element_orders"] = G.element_orders();
    return j;
}

// ---- verify-listed ------------------------------------------------------

Json verify_list(const ReferenceData& data, const CurveList& list, bool cross_validate, u64 seed,
                 bool& all_ok) {
    Json out;
    out["list"] = list.id;
    out["field"] = field_to_json(list.field);
    out["count"] = list.curves.size();

    bool ok = true;
    Json percurve = Json::array();
    for (size_t i = 0; i < list.curves.size(); ++i) {
        bool ss = is_superspecial(list.curves[i]);
        bool sf = is_squarefree(list.curves[i].f);
        if (!ss || !sf) ok = false;
        percurve.push_back(Json{{"index", i + 1}, {"superspecial", ss}, {"squarefree", sf}});
    }
    out["curves"] = percurve;

    size_t iso_pairs = 0, pairs = 0, gb_disagreements = 0, gb_failures = 0;
    for (size_t i = 0; i < list.curves.size(); ++i) {
        for (size_t j = i + 1; j < list.curves.size(); ++j) {
            ++pairs;
            bool iso = is_isomorphic(list.curves[i], list.curves[j], list.field, seed).has_value();
            if (iso) ++iso_pairs;
            if (cross_validate && list.field->k() == 1) {
                auto gb = is_isomorphic_groebner(list.curves[i], list.curves[j], list.field);
                if (!gb.ok)
                    ++gb_failures;
                else if (gb.witness.has_value() != iso)
                    ++gb_disagreements;
            }
        }
    }
    out["pairs_tested"] = pairs;
    out["isomorphic_pairs"] = iso_pairs;
    if (iso_pairs) ok = false;
    if (cross_validate && list.field->k() == 1) {
        out["groebner_cross_validation"] =
            Json{{"failures", gb_failures}, {"disagreements", gb_disagreements}};
        if (gb_failures || gb_disagreements) ok = false;
    }

    const Json& table = data.expectations.at("aut_table");
    for (auto it = table.begin(); it != table.end(); ++it) {
        if (it.value().at("list") != list.id) continue;
        Json auts = Json::array();
        for (const auto& cls : it.value().at("closure_classes")) {
            for (auto fit = cls.at("forms").begin(); fit != cls.at("forms").end(); ++fit) {
                size_t idx = std::stoul(fit.key());
                auto G = compute_aut(list.curves[idx - 1], list.field, seed);
                std::string label = identify_group(G);
                std::string want_label = fit.value()[0].get<std::string>();
                size_t want_order = fit.value()[1].get<size_t>();
                bool match = G.order() == want_order && label == want_label;
                if (!match) ok = false;
                auts.push_back(Json{{"index", idx},
                                    {"order", G.order()},
                                    {"label", label},
                                    {"expected_order", want_order},
                                    {"expected_label", want_label},
                                    {"match", match}});
            }
        }
        out["aut_orders"] = auts;
    }

    for (auto it = data.expectations.at("targets").begin();
         it != data.expectations.at("targets").end(); ++it) {
        if (it.value().value("kind", "") != "extremal" || it.value().at("list") != list.id) continue;
        u64 p = it.value().at("p").get<u64>();
        std::set<size_t> want_max, want_min;
        for (auto v : it.value().at("maximal")) want_max.insert(v.get<size_t>());
        for (auto v : it.value().at("minimal")) want_min.insert(v.get<size_t>());
        Json ext = Json::array();
        bool ematch = true;
        for (size_t i = 0; i < list.curves.size(); ++i) {
            auto e = classify_extremal(list.curves[i], p);
            Extremality want = want_max.count(i + 1)   ? Extremality::maximal
                               : want_min.count(i + 1) ? Extremality::minimal
                                                       : Extremality::neither;
            if (e != want) ematch = false;
            ext.push_back(Json{{"index", i + 1},
                               {"classification", extremality_name(e)},
                               {"expected", extremality_name(want)}});
        }
        out["extremal"] = ext;
        out["extremal_match"] = ematch;
        if (!ematch) ok = false;
    }

    out["ok"] = ok;
    if (!ok) all_ok = false;
    return out;
}

// ---- galois-check -------------------------------------------------------

Json galois_check(const ClassFile& closure, const ClassFile& forms, u64 seed, bool& all_ok) {
    if (closure.curves.size() != forms.curves.size())
        throw std::invalid_argument("galois-check: the two files must classify the same curve list");
    Json out;
    Json per = Json::array();
    size_t orbit_total = 0;
    bool ok = true;
    for (const auto& cls : closure.classes) {
        const auto& rep = closure.curves[cls.representative];
        auto A = compute_aut_closure(rep, seed);
        auto dec = sigma_conjugacy(A, forms.field);
        orbit_total += dec.orbits.size();

        std::vector<size_t> form_orders;
        size_t form_count = 0;
        std::set<size_t> members(cls.members.begin(), cls.members.end());
        for (const auto& fcls : forms.classes) {
            if (!members.count(fcls.members[0])) continue;
            ++form_count;
            auto G = compute_aut(forms.curves[fcls.representative], forms.field, seed);
            form_orders.push_back(G.order());
        }
        bool eq5 = check_form_count(dec, form_count);
        bool eq7 = check_orbit_stabilizer(dec, form_orders);
        if (!eq5 || !eq7) ok = false;
        per.push_back(Json{{"closure_representative", cls.representative},
                           {"closure_aut_order", A.order()},
                           {"closure_aut_label", identify_group(A)},
                           {"orbits", dec.orbits.size()},
                           {"stabilizer_orders", dec.stabilizer_orders()},
                           {"form_count", form_count},
                           {"form_aut_orders", form_orders},
                           {"form_count_matches_orbits", eq5},
                           {"orbit_stabilizer_matches", eq7}});
    }
    bool eq6 = orbit_total == forms.classes.size();
    if (!eq6) ok = false;
    out["classes"] = per;
    out["orbit_total"] = orbit_total;
    out["rational_class_total"] = forms.classes.size();
    out["orbit_sum_matches"] = eq6;
    out["ok"] = ok;
    if (!ok) all_ok = false;
    return out;
}

// ---- reproduce ----------------------------------------------------------

Json reproduce_target(const std::string& target, const ReferenceData& data, unsigned workers, u64 seed,
                      bool full_enumeration, bool& all_ok) {
    const Json& spec = data.expectations.at("targets").at(target);
    const std::string kind = spec.at("kind").get<std::string>();
    Json out;
    out["target"] = target;
    out["kind"] = kind;

    if (kind == "nonexistence") {
        if (!spec.value("desk_feasible", true)) {
            out["status"] = "skipped";
            out["note"] = spec.value("note", "");
            out["ok"] = true;
            return out;
        }
        bool ok = true;
        Json runs = Json::array();
        for (const auto& jf : spec.at("fields")) {
            EnumParams params;
            params.g = spec.at("g").get<unsigned>();
            params.ctx = field_from_json(jf);
            params.backend = EnumBackend::exhaustive;
            params.workers = workers;
            params.seed = seed;
            auto rep = enumerate_superspecial(params);
            bool match = rep.curves.size() == spec.at("expected_curves").get<size_t>();
            if (!match) ok = false;
            Json jr = report_to_json(rep);
            jr["match"] = match;
            runs.push_back(jr);
        }
        out["runs"] = runs;
        out["ok"] = ok;
        if (!ok) all_ok = false;
        return out;
    }

    if (kind == "list") {
        const auto& list = data.lists.at(spec.at("list").get<std::string>());
        bool dummy = true;
        Json v = verify_list(data, list, false, seed, dummy);
        bool count_ok = list.curves.size() == spec.at("count").get<size_t>();
        out["verification"] = v;
        out["count_expected"] = spec.at("count");
        out["count_ok"] = count_ok;
        bool ok = v["ok"].get<bool>() && count_ok;
        out["ok"] = ok;
        if (!ok) all_ok = false;
        return out;
    }

    if (kind == "extremal") {
        const auto& list = data.lists.at(spec.at("list").get<std::string>());
        u64 p = spec.at("p").get<u64>();
        std::set<size_t> want_max, want_min;
        for (auto v : spec.at("maximal")) want_max.insert(v.get<size_t>());
        for (auto v : spec.at("minimal")) want_min.insert(v.get<size_t>());
        bool ok = true;
        Json rows = Json::array();
        FieldPtr L = list.field->k() == 2 ? list.field : FieldCtx::make(p, 2);
        for (size_t i = 0; i < list.curves.size(); ++i) {
            auto e = classify_extremal(list.curves[i], p);
            Extremality want = want_max.count(i + 1)   ? Extremality::maximal
                               : want_min.count(i + 1) ? Extremality::minimal
                                                       : Extremality::neither;
            u64 cnt = count_points(list.curves[i], L);
            if (e != want) ok = false;
            rows.push_back(Json{{"index", i + 1},
                                {"count", cnt},
                                {"classification", extremality_name(e)},
                                {"expected", extremality_name(want)}});
        }
        out["rows"] = rows;
        out["ok"] = ok;
        if (!ok) all_ok = false;
        return out;
    }

    if (kind == "classification") {
        bool ok = true;
        Json per = Json::array();
        std::vector<HyperellipticCurve> all_curves;
        const auto& lists = spec.at("fq_lists");
        for (size_t li = 0; li < lists.size(); ++li) {
            const auto& list = data.lists.at(lists[li].get<std::string>());
            auto classes = classify(list.curves, list.field, false, seed);
            size_t expect = spec.at("fq_counts")[li].get<size_t>();
            bool match = classes.size() == expect && classes.size() == list.curves.size();
            Json entry{{"list", lists[li]}, {"classes", classes.size()}, {"expected", expect}};
            if (full_enumeration && list.field->k() == 1) {
                EnumParams params;
                params.g = list.g;
                params.ctx = list.field;
                params.backend = EnumBackend::hybrid;
                params.workers = workers;
                params.seed = seed;
                auto rep = enumerate_superspecial(params);
                std::vector<HyperellipticCurve> curves;
                for (const auto& f : rep.curves) {
                    curves.push_back(HyperellipticCurve::make(list.field, list.g, list.field->one(), f));
                    curves.push_back(
                        HyperellipticCurve::make(list.field, list.g, find_nonsquare(list.field), f));
                }
                auto full_classes = classify(curves, list.field, false, seed);
                entry["full_enumeration_polynomials"] = rep.curves.size();
                entry["full_enumeration_classes"] = full_classes.size();
                match = match && full_classes.size() == expect;
            }
            entry["match"] = match;
            if (!match) ok = false;
            per.push_back(entry);
            for (const auto& C : list.curves) all_curves.push_back(C);
        }
        FieldPtr K = common_field(all_curves);
        auto closure_classes = classify(all_curves, K, true, seed);
        size_t expect_closure = spec.at("closure_classes").get<size_t>();
        bool cmatch = closure_classes.size() == expect_closure;
        if (!cmatch) ok = false;
        out["fq"] = per;
        out["closure_classes"] = closure_classes.size();
        out["closure_expected"] = expect_closure;
        out["closure_match"] = cmatch;
        if (spec.contains("discrepancy")) {
            Json d = spec["discrepancy"];
            d["computation_supports"] = spec.at("fq_counts").back();
            out["discrepancy"] = d;
        }
        out["ok"] = ok;
        if (!ok) all_ok = false;
        return out;
    }

    throw std::invalid_argument("unknown target kind: " + kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"superspecial hyperelliptic curve toolkit"};
    app.require_subcommand(1);

    unsigned workers = 0;
    u64 seed = 0;
    u64 budget = 500000;
    std::string out_path;
    std::string checkpoint;
    app.add_option("--workers", workers, "worker threads (0 = all)");
    app.add_option("--seed", seed, "seed for randomized splitting");
    app.add_option("--budget", budget, "polynomial-system solver budget (pair count)");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--checkpoint", checkpoint, "checkpoint file for long runs");

    auto* cmd_enum = app.add_subcommand("enumerate", "search the normal-form family for superspecial curves");
    unsigned eg = 4, ek = 1, es1 = 0, es2 = 0;
    u64 ep = 17;
    std::string ebackend = "hybrid";
    std::vector<i64> emodulus;
    cmd_enum->add_option("--g", eg, "genus")->required();
    cmd_enum->add_option("--p", ep, "characteristic")->required();
    cmd_enum->add_option("--k", ek, "extension degree");
    cmd_enum->add_option("--modulus", emodulus, "field modulus, ascending coefficients");
    cmd_enum->add_option("--s1", es1, "slots treated symbolically in the big power");
    cmd_enum->add_option("--s2", es2, "slots left to the solver");
    cmd_enum->add_option("--backend", ebackend, "groebner | exhaustive | hybrid");

    auto* cmd_ss = app.add_subcommand("is-superspecial", "test a curve file");
    std::string ss_curve;
    cmd_ss->add_option("--curve", ss_curve, "curve JSON")->required();

    auto* cmd_cm = app.add_subcommand("cartier-manin", "print the matrix of a curve file");
    std::string cm_curve;
    cmd_cm->add_option("--curve", cm_curve, "curve JSON")->required();

    auto* cmd_isom = app.add_subcommand("isom-test", "decide isomorphism of two curves");
    std::string i_c1, i_c2, i_field;
    bool i_closure = false;
    std::string i_engine = "root";
    cmd_isom->add_option("--c1", i_c1)->required();
    cmd_isom->add_option("--c2", i_c2)->required();
    cmd_isom->add_option("--field", i_field, "decision field JSON (defaults to a common field)");
    cmd_isom->add_flag("--closure", i_closure, "decide over the algebraic closure");
    cmd_isom->add_option("--engine", i_engine, "root | groebner");

    auto* cmd_cls = app.add_subcommand("classify", "partition curves into isomorphism classes");
    std::string cls_in, cls_field;
    bool cls_closure = false;
    cmd_cls->add_option("--in", cls_in, "enumeration report or curve-list JSON")->required();
    cmd_cls->add_option("--field", cls_field, "decision field (defaults to the curves' field)");
    cmd_cls->add_flag("--closure", cls_closure);

    auto* cmd_aut = app.add_subcommand("aut-group", "automorphism group of a curve");
    std::string a_curve, a_field;
    bool a_closure = false;
    cmd_aut->add_option("--curve", a_curve)->required();
    cmd_aut->add_option("--field", a_field, "field of definition for the group");
    cmd_aut->add_flag("--closure", a_closure);

    auto* cmd_pc = app.add_subcommand("point-count", "rational points on the smooth model");
    std::string pc_curve, pc_field;
    cmd_pc->add_option("--curve", pc_curve)->required();
    cmd_pc->add_option("--field", pc_field)->required();

    auto* cmd_ext = app.add_subcommand("classify-extremal", "extremality over the quadratic extension");
    std::string ext_in;
    u64 ext_p = 0;
    cmd_ext->add_option("--in", ext_in, "classify JSON")->required();
    cmd_ext->add_option("--p", ext_p, "characteristic")->required();

    auto* cmd_gal = app.add_subcommand("galois-check", "twisted-conjugacy consistency checks");
    std::string g_closure_file, g_forms_file;
    cmd_gal->add_option("--classes", g_closure_file, "closure classify JSON")->required();
    cmd_gal->add_option("--forms", g_forms_file, "rational classify JSON")->required();

    auto* cmd_solve = app.add_subcommand("solve-system", "solve a multivariate system over F_q");
    std::string sv_in;
    bool sv_no_fe = false;
    cmd_solve->add_option("--in", sv_in, "system JSON")->required();
    cmd_solve->add_flag("--no-field-equations", sv_no_fe);

    auto* cmd_rep = app.add_subcommand("reproduce", "re-derive a recorded result end to end");
    std::string rep_target, rep_data = "data";
    bool rep_full = false;
    cmd_rep->add_option("target", rep_target, "e.g. thm1, thm2, prop3.4, cor3.10")->required();
    cmd_rep->add_option("--data", rep_data, "reference data directory");
    cmd_rep->add_flag("--full-enumeration", rep_full, "run the full search instead of list checks");

    auto* cmd_ver = app.add_subcommand("verify-listed", "check the transcribed curve lists");
    std::string ver_list = "all", ver_data = "data";
    bool ver_cross = false;
    cmd_ver->add_option("--list", ver_list, "list id or 'all'");
    cmd_ver->add_option("--data", ver_data, "reference data directory");
    cmd_ver->add_flag("--cross-validate", ver_cross, "run the polynomial-system backend on all pairs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_enum->parsed()) {
            EnumParams params;
            params.g = eg;
            params.ctx =
                FieldCtx::make(ep, ek, emodulus.empty() ? std::nullopt : std::make_optional(emodulus));
            params.s1 = es1;
            params.s2 = es2;
            params.backend = backend_from_name(ebackend);
            params.workers = workers;
            params.seed = seed;
            params.checkpoint_path = checkpoint;
            params.groebner_max_pairs = budget;
            Output out{out_path,
                       start_manifest("enumerate",
                                      Json{{"g", eg}, {"p", ep}, {"k", ek}, {"s1", es1}, {"s2", es2},
                                           {"backend", ebackend}},
                                      seed, {})};
            auto rep = enumerate_superspecial(params);
            out.manifest.finished_at = now_iso8601();
            Json body = report_to_json(rep);
            body["field"] = field_to_json(params.ctx);
            out.emit(body);
            return 0;
        }
        if (cmd_ss->parsed()) {
            auto C = load_curve(ss_curve);
            auto M = cartier_manin(C.f, C.g);
            Output out{out_path,
                       start_manifest("is-superspecial", Json{{"curve", ss_curve}}, seed, {ss_curve})};
            out.manifest.finished_at = now_iso8601();
            out.emit(Json{{"superspecial", M.is_zero()}, {"matrix_rank", M.rank()}});
            std::cout << (M.is_zero() ? "true" : "false") << " (matrix rank " << M.rank() << ")\n";
            return 0;
        }
        if (cmd_cm->parsed()) {
            auto C = load_curve(cm_curve);
            auto M = cartier_manin(C.f, C.g);
            Json rows = Json::array();
            for (unsigned i = 1; i <= M.g; ++i) {
                Json row = Json::array();
                for (unsigned j = 1; j <= M.g; ++j) row.push_back(elem_to_json(M.at(i, j)));
                rows.push_back(row);
            }
            Output out{out_path, start_manifest("cartier-manin", Json{{"curve", cm_curve}}, seed, {cm_curve})};
            out.manifest.finished_at = now_iso8601();
            out.emit(Json{{"matrix", rows}, {"rank", M.rank()}, {"zero", M.is_zero()}});
            return 0;
        }
        if (cmd_isom->parsed()) {
            auto C1 = load_curve(i_c1);
            auto C2 = load_curve(i_c2);
            FieldPtr K = i_field.empty() ? common_field({C1, C2}) : load_field(i_field);
            Json result;
            if (i_engine == "groebner") {
                if (i_closure) throw std::invalid_argument("the groebner engine decides over F_q only");
                VarietyOptions vo;
                vo.groebner.max_pairs = budget;
                auto r = is_isomorphic_groebner(C1, C2, K, vo);
                if (!r.ok) throw std::runtime_error("solver budget exhausted: " + r.failure);
                result["isomorphic"] = r.witness.has_value();
                if (r.witness)
                    result["witness"] =
                        Json{{"field", field_to_json(r.witness->field)},
                             {"h", Json::array({elem_to_json(r.witness->h.a), elem_to_json(r.witness->h.b),
                                                elem_to_json(r.witness->h.c), elem_to_json(r.witness->h.d)})},
                             {"lambda", elem_to_json(r.witness->lambda)}};
            } else {
                auto w = i_closure ? is_isomorphic_closure(C1, C2, seed) : is_isomorphic(C1, C2, K, seed);
                result["isomorphic"] = w.has_value();
                if (w)
                    result["witness"] =
                        Json{{"field", field_to_json(w->field)},
                             {"h", Json::array({elem_to_json(w->h.a), elem_to_json(w->h.b),
                                                elem_to_json(w->h.c), elem_to_json(w->h.d)})},
                             {"lambda", elem_to_json(w->lambda)}};
            }
            Output out{out_path,
                       start_manifest("isom-test",
                                      Json{{"c1", i_c1}, {"c2", i_c2}, {"closure", i_closure}}, seed,
                                      {i_c1, i_c2})};
            out.manifest.finished_at = now_iso8601();
            out.emit(result);
            std::cout << (result["isomorphic"].get<bool>() ? "isomorphic" : "none") << "\n";
            return 0;
        }
        if (cmd_cls->parsed()) {
            Json j = load_json(cls_in);
            ClassFile cf;
            cf.field = field_from_json(j.at("field"));
            cf.g = j.value("g", 4u);
            for (const auto& jc : j.at("curves")) {
                if (jc.is_object()) {
                    Poly f = poly_from_json(jc.at("f"), cf.field);
                    FieldElem c = jc.contains("c") ? elem_from_json(jc["c"], cf.field) : cf.field->one();
                    cf.curves.push_back(HyperellipticCurve::make(cf.field, cf.g, c, f, true));
                } else {
                    cf.curves.push_back(HyperellipticCurve::make(cf.field, cf.g, cf.field->one(),
                                                                 poly_from_json(jc, cf.field), true));
                }
            }
            FieldPtr K = cls_field.empty() ? cf.field : load_field(cls_field);
            cf.classes = classify(cf.curves, K, cls_closure, seed);
            Output out{out_path,
                       start_manifest("classify", Json{{"in", cls_in}, {"closure", cls_closure}}, seed,
                                      {cls_in})};
            out.manifest.finished_at = now_iso8601();
            out.emit(classes_to_json(cf));
            return 0;
        }
        if (cmd_aut->parsed()) {
            auto C = load_curve(a_curve);
            Json result;
            if (a_closure) {
                result = aut_group_json(compute_aut_closure(C, seed));
            } else {
                FieldPtr K = a_field.empty() ? C.ctx : load_field(a_field);
                result = aut_group_json(compute_aut(C, K, seed));
            }
            Output out{out_path,
                       start_manifest("aut-group", Json{{"curve", a_curve}, {"closure", a_closure}}, seed,
                                      {a_curve})};
            out.manifest.finished_at = now_iso8601();
            out.emit(result);
            return 0;
        }
        if (cmd_pc->parsed()) {
            auto C = load_curve(pc_curve);
            auto L = load_field(pc_field);
            u64 cnt = count_points(C, L);
            Output out{out_path,
                       start_manifest("point-count", Json{{"curve", pc_curve}, {"field", pc_field}}, seed,
                                      {pc_curve, pc_field})};
            out.manifest.finished_at = now_iso8601();
            out.emit(Json{{"count", cnt}, {"q", L->q()}, {"weil_ok", within_weil_bound(cnt, C.g, L->q())}});
            return 0;
        }
        if (cmd_ext->parsed()) {
            ClassFile cf = read_class_file(ext_in);
            std::ostringstream csv;
            csv << "class,representative,count,classification\n";
            FieldPtr L = cf.field->k() == 2 ? cf.field : FieldCtx::make(ext_p, 2);
            auto classes = cf.classes;
            if (classes.empty())
                for (size_t i = 0; i < cf.curves.size(); ++i) classes.push_back(IsomClass{i, {i}});
            for (size_t ci = 0; ci < classes.size(); ++ci) {
                const auto& C = cf.curves[classes[ci].representative];
                u64 cnt = count_points(C, L);
                auto e = classify_extremal(C, ext_p);
                csv << ci + 1 << "," << classes[ci].representative + 1 << "," << cnt << ","
                    << extremality_name(e) << "\n";
            }
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << csv.str();
                std::cout << "wrote " << out_path << "\n";
            } else {
                std::cout << csv.str();
            }
            return 0;
        }
        if (cmd_gal->parsed()) {
            ClassFile closure = read_class_file(g_closure_file);
            ClassFile forms = read_class_file(g_forms_file);
            bool all_ok = true;
            Json result = galois_check(closure, forms, seed, all_ok);
            Output out{out_path,
                       start_manifest("galois-check",
                                      Json{{"classes", g_closure_file}, {"forms", g_forms_file}}, seed,
                                      {g_closure_file, g_forms_file})};
            out.manifest.finished_at = now_iso8601();
            out.emit(result);
            std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
            return all_ok ? 0 : 2;
        }
        if (cmd_solve->parsed()) {
            Json j = load_json(sv_in);
            FieldPtr F = field_from_json(j.at("field"));
            unsigned n = j.at("nvars").get<unsigned>();
            std::vector<MPoly> gens;
            for (const auto& jp : j.at("polys")) {
                MPoly P(F, n);
                for (const auto& jt : jp) {
                    Monomial m = jt.at("m").get<Monomial>();
                    P.add_term(m, elem_from_json(jt.at("c"), F));
                }
                gens.push_back(std::move(P));
            }
            if (!sv_no_fe) gens = add_field_equations(std::move(gens), F, n);
            VarietyOptions vo;
            vo.groebner.max_pairs = budget;
            auto V = variety(gens, vo);
            if (!V.ok) throw std::runtime_error("solver failed: " + V.failure);
            Json pts = Json::array();
            for (const auto& pt : V.points) {
                Json p = Json::array();
                for (const auto& e : pt) p.push_back(elem_to_json(e));
                pts.push_back(p);
            }
            Output out{out_path, start_manifest("solve-system", Json{{"in", sv_in}}, seed, {sv_in})};
            out.manifest.finished_at = now_iso8601();
            out.emit(Json{{"solutions", pts}, {"count", V.points.size()}});
            return 0;
        }
        if (cmd_rep->parsed()) {
            auto data = load_reference_data(rep_data);
            bool all_ok = true;
            Json result = reproduce_target(rep_target, data, workers, seed, rep_full, all_ok);
            Output out{out_path, start_manifest("reproduce", Json{{"target", rep_target}}, seed,
                                                {rep_data + "/representatives.json",
                                                 rep_data + "/expectations.json"})};
            out.manifest.finished_at = now_iso8601();
            out.emit(result);
            std::cout << rep_target << ": " << (all_ok ? "PASS" : "FAIL") << "\n";
            return all_ok ? 0 : 2;
        }
        if (cmd_ver->parsed()) {
            auto data = load_reference_data(ver_data);
            bool all_ok = true;
            Json lists = Json::array();
            for (const auto& [id, list] : data.lists) {
                if (ver_list != "all" && ver_list != id) continue;
                lists.push_back(verify_list(data, list, ver_cross, seed, all_ok));
            }
            Output out{out_path, start_manifest("verify-listed", Json{{"list", ver_list}}, seed,
                                                {ver_data + "/representatives.json",
                                                 ver_data + "/expectations.json"})};
            out.manifest.finished_at = now_iso8601();
            out.emit(Json{{"lists", lists}, {"ok", all_ok}});
            std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
            return all_ok ? 0 : 2;
        }
    } catch (const std::exception& e) {
        Json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
