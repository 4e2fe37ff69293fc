#include "doctest.h"

#include "ssp/isom.hpp"

using namespace ssp;

namespace {

HyperellipticCurve curve(const FieldPtr& F, unsigned g, const std::vector<i64>& coeffs, i64 c = 1) {
    return HyperellipticCurve::make(F, g, F->from_int(c), Poly::from_ints(F, coeffs), true);
}

// x^10 + x and x^10 + x^7 + 13x^4 + 12x over F_17: known distinct classes
HyperellipticCurve f1_17(const FieldPtr& F17) {
    std::vector<i64> c(11, 0);
    c[10] = 1;
    c[1] = 1;
    return curve(F17, 4, c);
}
HyperellipticCurve f2_17(const FieldPtr& F17) {
    std::vector<i64> c(11, 0);
    c[10] = 1;
    c[7] = 1;
    c[4] = 13;
    c[1] = 12;
    return curve(F17, 4, c);
}

} // namespace

TEST_SUITE_BEGIN("isom");

TEST_CASE("self isomorphism and translated models") {
    auto F17 = FieldCtx::make(17, 1);
    auto C = f2_17(F17);
    auto w = is_isomorphic(C, C, F17);
    REQUIRE(w.has_value());

    // x -> x+1 gives an isomorphic model
    auto shifted = compose(C.f, Poly::from_ints(F17, {1, 1}));
    // renormalize: x->x+1 keeps monic, may introduce x^9 term? it does not for this f shape
    CHECK(shifted.degree() == 10);
    if (shifted.coeff(9).is_zero()) {
        auto C2 = HyperellipticCurve::make(F17, 4, F17->one(), shifted);
        auto w2 = is_isomorphic(C, C2, F17);
        REQUIRE(w2.has_value());
    }
}

TEST_CASE("distinct classes over F_17 stay distinct") {
    auto F17 = FieldCtx::make(17, 1);
    auto A = f1_17(F17), B = f2_17(F17);
    CHECK_FALSE(is_isomorphic(A, B, F17).has_value());
    // but both are superspecial
    CHECK(is_superspecial(A));
    CHECK(is_superspecial(B));
}

TEST_CASE("twist behaviour") {
    auto F17 = FieldCtx::make(17, 1);
    auto C = f1_17(F17);
    auto T = quadratic_twist(C);
    CHECK(T.c == find_nonsquare(F17));
    CHECK(quadratic_twist(T) == C);
    CHECK(is_superspecial(T) == is_superspecial(C));

    // twist is nontrivial over F_17 for this curve iff no witness exists
    // (not asserted in general), but over F_{17^2} the two become isomorphic
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    auto w = is_isomorphic(C, T, F289);
    REQUIRE(w.has_value());
}

TEST_CASE("witness symmetry and transitivity on an orbit") {
    auto F13 = FieldCtx::make(13, 1);
    std::vector<i64> c(7, 0);
    c[6] = 1;
    c[1] = 5;
    c[0] = 3; // x^6 + 5x + 3, genus 2
    auto A = curve(F13, 2, c);
    // act by x -> x+2 (keeps x^5 coefficient zero? check) and verify A ~ image
    auto g = compose(A.f, Poly::from_ints(F13, {2, 1}));
    if (g.coeff(5).is_zero() && is_squarefree(g)) {
        auto Bc = HyperellipticCurve::make(F13, 2, F13->one(), g);
        auto w1 = is_isomorphic(A, Bc, F13);
        auto w2 = is_isomorphic(Bc, A, F13);
        REQUIRE(w1.has_value());
        REQUIRE(w2.has_value());
    }
    auto self = is_isomorphic(A, A, F13);
    REQUIRE(self.has_value());
}

TEST_CASE("groebner backend cross-validates the root backend") {
    auto F11 = FieldCtx::make(11, 1);
    // small genus-1 curves: quartic models
    auto A = curve(F11, 1, {1, 0, 0, 0, 1});  // x^4 + 1
    auto B = curve(F11, 1, {2, 0, 0, 0, 1});  // x^4 + 2
    auto C = curve(F11, 1, {0, 1, 0, 0, 1});  // x^4 + x

    for (auto* lhs : {&A, &B, &C}) {
        for (auto* rhs : {&A, &B, &C}) {
            auto root = is_isomorphic(*lhs, *rhs, F11);
            auto gb = is_isomorphic_groebner(*lhs, *rhs, F11);
            REQUIRE(gb.ok);
            CHECK(root.has_value() == gb.witness.has_value());
        }
    }
    // reflexive solution set contains the identity
    auto gb = is_isomorphic_groebner(A, A, F11);
    REQUIRE(gb.ok);
    REQUIRE(gb.witness.has_value());
}

TEST_CASE("classification of a small list") {
    auto F17 = FieldCtx::make(17, 1);
    auto A = f1_17(F17);
    auto B = f2_17(F17);
    auto At = quadratic_twist(A);
    auto classes = classify({A, B, At}, F17, false);
    // A and its twist may or may not merge over F_17; B stays separate
    bool b_alone = true;
    for (const auto& cl : classes) {
        bool has_b = std::find(cl.members.begin(), cl.members.end(), 1u) != cl.members.end();
        if (has_b && cl.members.size() > 1) b_alone = false;
    }
    CHECK(b_alone);

    auto closure_classes = classify({A, B, At}, F17, true);
    // over the closure the twist merges with A
    REQUIRE(closure_classes.size() == 2);
    CHECK(closure_classes[0].members == std::vector<size_t>{0, 2});
    CHECK(closure_classes[1].members == std::vector<size_t>{1});
}

TEST_CASE("closure isomorphism across different presentations") {
    auto F17 = FieldCtx::make(17, 1);
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    auto A = f1_17(F17);
    auto zeta = F289->from_coeffs({-8, 1});
    // y^2 = x^10 + zeta x is a twist-like variant over F_289
    std::vector<FieldElem> c(11, F289->zero());
    c[10] = F289->one();
    c[1] = zeta;
    auto B = HyperellipticCurve::make(F289, 4, F289->one(), Poly(F289, c));
    CHECK_FALSE(is_isomorphic(curve_over(A, F289), B, F289).has_value());
    auto w = is_isomorphic_closure(A, B);
    REQUIRE(w.has_value());
}

TEST_SUITE_END();
