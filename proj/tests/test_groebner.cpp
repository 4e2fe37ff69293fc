#include "doctest.h"

#include "ssp/groebner.hpp"

#include <set>

using namespace ssp;

namespace {

MPoly mono(const FieldPtr& F, unsigned n, std::vector<u32> exps, i64 c) {
    MPoly r(F, n);
    r.add_term(exps, F->from_int(c));
    return r;
}

// brute-force solution scan used as the independent reference
std::vector<std::vector<FieldElem>> scan_solutions(const std::vector<MPoly>& gens, const FieldPtr& F,
                                                   unsigned n) {
    std::vector<std::vector<FieldElem>> out;
    u64 q = F->q();
    u64 total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    std::vector<FieldElem> point;
    for (u64 idx = 0; idx < total; ++idx) {
        point.clear();
        u64 t = idx;
        for (unsigned i = 0; i < n; ++i) {
            point.push_back(F->element_from_index(t % q));
            t /= q;
        }
        bool all = true;
        for (const auto& g : gens)
            if (!g.eval(point).is_zero()) { all = false; break; }
        if (all) out.push_back(point);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == b[i]) continue;
            return a[i].lex_less(b[i]);
        }
        return false;
    });
    return out;
}

} // namespace

TEST_SUITE_BEGIN("groebner");

TEST_CASE("normal form basics") {
    auto F5 = FieldCtx::make(5, 1);
    // x^2 + y against {x^2 - y} -> 2y
    auto f = mono(F5, 2, {2, 0}, 1) + mono(F5, 2, {0, 1}, 1);
    auto g = mono(F5, 2, {2, 0}, 1) + mono(F5, 2, {0, 1}, -1);
    auto nf = normal_form(f, {g}, MonomialOrder::degrevlex);
    CHECK(nf == mono(F5, 2, {0, 1}, 2));
    CHECK(normal_form(g, {g}, MonomialOrder::degrevlex).is_zero());
    auto one = MPoly::constant(F5, 2, 1);
    CHECK(normal_form(one, {g}, MonomialOrder::degrevlex) == one);
}

TEST_CASE("buchberger hand examples") {
    auto F5 = FieldCtx::make(5, 1);
    SUBCASE("constant ideal") {
        auto r = buchberger({MPoly::constant(F5, 1, 1)});
        REQUIRE(r.ok);
        REQUIRE(r.basis.size() == 1);
        CHECK(r.basis[0].is_constant());
    }
    SUBCASE("lex elimination") {
        // {x^2-1, xy-1} with x > y gives {x - y, y^2 - 1}
        auto g1 = mono(F5, 2, {2, 0}, 1) + MPoly::constant(F5, 2, -1);
        auto g2 = mono(F5, 2, {1, 1}, 1) + MPoly::constant(F5, 2, -1);
        GroebnerOptions opts;
        opts.order = MonomialOrder::lex;
        auto r = buchberger({g1, g2}, opts);
        REQUIRE(r.ok);
        REQUIRE(r.basis.size() == 2);
        auto expect1 = mono(F5, 2, {0, 2}, 1) + MPoly::constant(F5, 2, -1);
        auto expect2 = mono(F5, 2, {1, 0}, 1) + mono(F5, 2, {0, 1}, -1);
        CHECK(r.basis[0] == expect1);
        CHECK(r.basis[1] == expect2);
    }
}

TEST_CASE("buchberger criterion holds on the computed basis") {
    auto F7 = FieldCtx::make(7, 1);
    std::vector<MPoly> gens = {
        mono(F7, 3, {2, 1, 0}, 1) + mono(F7, 3, {0, 0, 1}, 3),
        mono(F7, 3, {1, 0, 2}, 2) + mono(F7, 3, {0, 1, 0}, 1) + MPoly::constant(F7, 3, 5),
        mono(F7, 3, {0, 3, 0}, 1) + mono(F7, 3, {1, 1, 0}, 6),
    };
    auto r = buchberger(gens);
    REQUIRE(r.ok);
    // every original generator reduces to zero
    for (const auto& g : gens)
        CHECK(normal_form(g, r.basis, MonomialOrder::degrevlex).is_zero());
    // every S-polynomial reduces to zero
    for (size_t i = 0; i < r.basis.size(); ++i) {
        for (size_t j = i + 1; j < r.basis.size(); ++j) {
            auto [mi, ci] = r.basis[i].leading_term(MonomialOrder::degrevlex);
            auto [mj, cj] = r.basis[j].leading_term(MonomialOrder::degrevlex);
            auto l = monomial_lcm(mi, mj);
            MPoly si(F7, 3), sj(F7, 3);
            si.add_term(monomial_quotient(l, mi), ci.inv());
            sj.add_term(monomial_quotient(l, mj), cj.inv());
            MPoly spoly = si * r.basis[i] - sj * r.basis[j];
            CHECK(normal_form(spoly, r.basis, MonomialOrder::degrevlex).is_zero());
        }
    }
}

TEST_CASE("reduced basis is unique across generator orderings") {
    auto F13 = FieldCtx::make(13, 1);
    std::vector<MPoly> gens = {
        mono(F13, 2, {3, 0}, 1) + mono(F13, 2, {1, 1}, 4) + MPoly::constant(F13, 2, 1),
        mono(F13, 2, {0, 2}, 1) + mono(F13, 2, {1, 0}, 7),
        mono(F13, 2, {2, 1}, 5) + mono(F13, 2, {0, 1}, 2),
    };
    auto r1 = buchberger(gens);
    std::reverse(gens.begin(), gens.end());
    auto r2 = buchberger(gens);
    REQUIRE(r1.ok);
    REQUIRE(r2.ok);
    REQUIRE(r1.basis.size() == r2.basis.size());
    for (size_t i = 0; i < r1.basis.size(); ++i) CHECK(r1.basis[i] == r2.basis[i]);
}

TEST_CASE("field equations and varieties") {
    auto F5 = FieldCtx::make(5, 1);
    SUBCASE("zero ideal becomes the whole field") {
        auto gens = add_field_equations({MPoly(F5, 1)}, F5, 1);
        REQUIRE(gens.size() == 1); // just x^5 - x
        auto v = variety(gens);
        REQUIRE(v.ok);
        CHECK(v.points.size() == 5);
    }
    SUBCASE("x^2 = 1 over F_5") {
        auto gens = add_field_equations({mono(F5, 1, {2}, 1) + MPoly::constant(F5, 1, -1)}, F5, 1);
        auto v = variety(gens);
        REQUIRE(v.ok);
        REQUIRE(v.points.size() == 2);
        CHECK(v.points[0][0] == F5->from_int(1));
        CHECK(v.points[1][0] == F5->from_int(4));
    }
    SUBCASE("non-square has no root") {
        auto eps = find_nonsquare(F5);
        auto gens = add_field_equations({mono(F5, 1, {2}, 1) - MPoly::constant(F5, 1, eps)}, F5, 1);
        auto r = buchberger(gens);
        REQUIRE(r.ok);
        REQUIRE(r.basis.size() == 1);
        CHECK(r.basis[0].is_constant());
        auto v = variety(gens);
        REQUIRE(v.ok);
        CHECK(v.points.empty());
    }
    SUBCASE("inconsistent constant ideal") {
        auto v = variety({MPoly::constant(F5, 2, 3)});
        REQUIRE(v.ok);
        CHECK(v.points.empty());
    }
}

TEST_CASE("variety equals exhaustive scan on random systems") {
    for (auto [p, n] : {std::pair<u64, unsigned>{5, 2}, {7, 3}, {3, 3}, {11, 2}}) {
        auto F = FieldCtx::make(p, 1);
        u64 s = p * 131 + n;
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<MPoly> gens;
            unsigned ngens = 1 + (trial % 3);
            for (unsigned gi = 0; gi < ngens; ++gi) {
                MPoly g(F, n);
                unsigned terms = 2 + (s % 4);
                for (unsigned t = 0; t < terms; ++t) {
                    Monomial m(n);
                    for (unsigned v = 0; v < n; ++v) {
                        s = s * 6364136223846793005ull + 1442695040888963407ull;
                        m[v] = static_cast<u32>((s >> 40) % 3);
                    }
                    s = s * 6364136223846793005ull + 1442695040888963407ull;
                    g.add_term(m, F->from_int(static_cast<i64>((s >> 40) % p)));
                }
                gens.push_back(std::move(g));
            }
            auto with_fe = add_field_equations(gens, F, n);
            auto v = variety(with_fe);
            REQUIRE(v.ok);
            auto ref = scan_solutions(gens, F, n);
            REQUIRE(v.points.size() == ref.size());
            for (size_t i = 0; i < ref.size(); ++i)
                for (unsigned j = 0; j < n; ++j) CHECK(v.points[i][j] == ref[i][j]);
        }
    }
}

TEST_CASE("variety over an extension field") {
    auto F9 = FieldCtx::make(3, 2);
    // x^2 = gen has solutions iff gen is a square in F_9
    auto g = F9->gen();
    MPoly eq(F9, 1);
    eq.add_term({2}, F9->one());
    eq = eq - MPoly::constant(F9, 1, g);
    auto v = variety(add_field_equations({eq}, F9, 1));
    REQUIRE(v.ok);
    CHECK(v.points.size() == (is_square(g) ? 2 : 0));
}

TEST_SUITE_END();
