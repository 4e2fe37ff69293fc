#include "doctest.h"

#include "ssp/enumerate.hpp"

#include <cstdio>

using namespace ssp;

namespace {

bool same_curves(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("symbolic system small examples") {
    auto F5 = FieldCtx::make(5, 1);
    SUBCASE("g=1, only a0 symbolic") {
        std::map<unsigned, FieldElem> fixed{{1, F5->zero()}, {2, F5->zero()}};
        auto S = build_superspeciality_system(1, F5, fixed, {0});
        REQUIRE(S.size() == 1);
        // f = x^4 + a0, f^2 = x^8 + 2 a0 x^4 + a0^2; entry = coeff of x^4
        MPoly expect(F5, 1);
        expect.add_term({1}, F5->from_int(2));
        CHECK(S[0] == expect);
    }
    SUBCASE("all slots fixed matches cartier_manin") {
        auto F17 = FieldCtx::make(17, 1);
        std::map<unsigned, FieldElem> fixed;
        for (unsigned s = 0; s <= 8; ++s) fixed.emplace(s, F17->from_int(static_cast<i64>(s % 5)));
        auto S = build_superspeciality_system(4, F17, fixed, {});
        REQUIRE(S.size() == 16);
        std::vector<FieldElem> c;
        for (unsigned s = 0; s < 8; ++s) c.push_back(fixed.at(s));
        c.push_back(fixed.at(8));
        c.push_back(F17->zero());
        c.push_back(F17->one());
        Poly f(F17, c);
        auto M = cartier_manin(f, 4);
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j)
                CHECK(S[i * 4 + j].constant_value() == M.at(i + 1, j + 1));
    }
    SUBCASE("g=4 over F_17, b fixed, all a symbolic: degree bound (p-1)/2") {
        auto F17 = FieldCtx::make(17, 1);
        std::map<unsigned, FieldElem> fixed{{8, F17->one()}};
        std::vector<unsigned> symbolic;
        for (unsigned s = 0; s < 8; ++s) symbolic.push_back(s);
        auto S = build_superspeciality_system(4, F17, fixed, symbolic);
        REQUIRE(S.size() == 16);
        for (const auto& P : S) CHECK(P.total_degree() <= 8);
    }
}

TEST_CASE("backends agree on genus 1") {
    for (u64 p : {5ull, 7ull, 11ull}) {
        auto F = FieldCtx::make(p, 1);
        auto ref = enumerate_superspecial_reference(1, F);

        EnumParams ex;
        ex.g = 1;
        ex.ctx = F;
        ex.backend = EnumBackend::exhaustive;
        auto rex = enumerate_superspecial(ex);
        CHECK(same_curves(rex.curves, ref));

        EnumParams gb;
        gb.g = 1;
        gb.ctx = F;
        gb.backend = EnumBackend::groebner;
        auto rgb = enumerate_superspecial(gb);
        CHECK(rgb.groebner_failed == 0);
        CHECK(same_curves(rgb.curves, ref));
    }
}

TEST_CASE("backends agree on genus 2 over F_7") {
    auto F = FieldCtx::make(7, 1);
    auto ref = enumerate_superspecial_reference(2, F);

    EnumParams ex;
    ex.g = 2;
    ex.ctx = F;
    ex.backend = EnumBackend::exhaustive;
    auto rex = enumerate_superspecial(ex);
    CHECK(same_curves(rex.curves, ref));

    EnumParams hy;
    hy.g = 2;
    hy.ctx = F;
    hy.backend = EnumBackend::hybrid;
    auto rhy = enumerate_superspecial(hy);
    CHECK(same_curves(rhy.curves, ref));

    // every emitted curve satisfies the full contract
    auto eps = find_nonsquare(F);
    for (const auto& f : rex.curves) {
        CHECK(f.degree() == 6);
        CHECK(f.leading().is_one());
        CHECK(f.coeff(5).is_zero());
        auto b = f.coeff(4);
        CHECK((b.is_zero() || b.is_one() || b == eps));
        CHECK(is_squarefree(f));
        CHECK(is_superspecial(f, 2));
    }
}

TEST_CASE("small-field extension scan agrees with the reference") {
    auto F9 = FieldCtx::make(3, 2); // gcd(3, 2g+2)=1 for g=3; q=9 > 7
    auto ref = enumerate_superspecial_reference(3, F9);
    EnumParams ex;
    ex.g = 3;
    ex.ctx = F9;
    ex.backend = EnumBackend::exhaustive;
    auto rex = enumerate_superspecial(ex);
    CHECK(same_curves(rex.curves, ref));
    // Ekedahl: no superspecial hyperelliptic curves of genus 3 in char 3
    CHECK(rex.curves.empty());
    CHECK(rex.candidates_scanned == 3 * 9 * 9 * 9 * 9 * 9 * 9);
}

TEST_CASE("twist closure: emitted set is c-independent by construction") {
    auto F = FieldCtx::make(7, 1);
    EnumParams ex;
    ex.g = 2;
    ex.ctx = F;
    ex.backend = EnumBackend::exhaustive;
    auto rep = enumerate_superspecial(ex);
    // curve family c*y^2 = f doubles the list over c in {1, eps}
    size_t h0 = 2 * rep.curves.size();
    CHECK(h0 == 2 * rep.curves.size());
    for (const auto& f : rep.curves) {
        auto C1 = HyperellipticCurve::make(F, 2, F->one(), f);
        auto C2 = HyperellipticCurve::make(F, 2, find_nonsquare(F), f);
        CHECK(is_superspecial(C1));
        CHECK(is_superspecial(C2));
    }
}

TEST_CASE("checkpoint resume reproduces the run") {
    auto F = FieldCtx::make(5, 1);
    std::string path = "test_enum_checkpoint.jsonl";
    std::remove(path.c_str());
    EnumParams h1;
    h1.g = 2;
    h1.ctx = F;
    h1.backend = EnumBackend::hybrid;
    h1.checkpoint_path = path;
    auto r1 = enumerate_superspecial(h1);
    CHECK(r1.tuples_resumed == 0);
    auto r2 = enumerate_superspecial(h1);
    CHECK(r2.tuples_resumed == r2.tuples_total);
    CHECK(same_curves(r1.curves, r2.curves));
    std::remove(path.c_str());
}

TEST_CASE("worker count does not change results") {
    auto F = FieldCtx::make(7, 1);
    EnumParams a;
    a.g = 2;
    a.ctx = F;
    a.backend = EnumBackend::exhaustive;
    a.workers = 1;
    auto r1 = enumerate_superspecial(a);
    a.workers = 2;
    auto r2 = enumerate_superspecial(a);
    CHECK(same_curves(r1.curves, r2.curves));
}

TEST_SUITE_END();
