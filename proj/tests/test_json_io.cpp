#include "doctest.h"

#include "ssp/json_io.hpp"

using namespace ssp;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("field and element round trips") {
    auto F = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    auto j = field_to_json(F);
    auto F2 = field_from_json(j);
    CHECK(F2->same_field(*F));

    auto zeta = F->from_coeffs({-8, 1});
    CHECK(elem_from_json(elem_to_json(zeta), F2) == zeta);
    CHECK(elem_from_json(Json(5), F) == F->from_int(5));
    CHECK(elem_from_json(Json::parse("{\"pow\": 2}"), F, &zeta) == zeta * zeta);
    CHECK_THROWS(elem_from_json(Json::parse("{\"pow\": 2}"), F)); // no generator given
}

TEST_CASE("polynomial encodings") {
    auto F = FieldCtx::make(17, 1);
    auto dense = poly_from_json(Json::parse("[1, 0, 3]"), F);
    CHECK(dense == Poly::from_ints(F, {1, 0, 3}));
    auto sparse = poly_from_json(Json::parse("{\"10\": 1, \"1\": 1}"), F);
    CHECK(sparse.degree() == 10);
    CHECK(sparse.coeff(1).is_one());
    CHECK(poly_from_json(poly_to_json(sparse), F) == sparse);
}

TEST_CASE("curve round trip") {
    auto F = FieldCtx::make(17, 1);
    std::vector<i64> c(11, 0);
    c[10] = 1;
    c[1] = 1;
    auto C = HyperellipticCurve::make(F, 4, F->one(), Poly::from_ints(F, c));
    auto C2 = curve_from_json(curve_to_json(C));
    CHECK(C2 == C);
    CHECK(C2.ctx->same_field(*C.ctx));
}

TEST_CASE("reference data loads and is consistent") {
    auto data = load_reference_data("data");
    REQUIRE(data.lists.size() == 5);
    size_t total = 0;
    for (const auto& [id, list] : data.lists) total += list.curves.size();
    CHECK(total == 74);
    // expectations reference existing lists
    for (const auto& [t, spec] : data.expectations.at("targets").items()) {
        if (spec.contains("list")) CHECK(data.lists.count(spec["list"].get<std::string>()) == 1);
    }
    // every aut-table form index is in range
    for (const auto& [ch, tbl] : data.expectations.at("aut_table").items()) {
        const auto& list = data.lists.at(tbl.at("list").get<std::string>());
        for (const auto& cls : tbl.at("closure_classes"))
            for (auto it = cls.at("forms").begin(); it != cls.at("forms").end(); ++it)
                CHECK(std::stoul(it.key()) <= list.curves.size());
    }
}

TEST_SUITE_END();
