#include "doctest.h"

#include "ssp/field.hpp"

#include <set>

using namespace ssp;

TEST_SUITE_BEGIN("field");

TEST_CASE("prime field basics") {
    auto F17 = FieldCtx::make(17, 1);
    CHECK(F17->q() == 17);
    auto a = F17->from_int(5), b = F17->from_int(14);
    CHECK((a + b) == F17->from_int(2));
    CHECK((a * b) == F17->from_int(70));
    CHECK((a - b) == F17->from_int(-9));
    CHECK((a / b) * b == a);
    CHECK(pow(a, 16).is_one());
    CHECK_THROWS(FieldCtx::make(15, 1));
    CHECK_THROWS(FieldCtx::make(2, 1));
}

TEST_CASE("explicit moduli for the quadratic presentations") {
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    CHECK(F289->q() == 289);
    auto r = F289->gen(); // sqrt(61)
    CHECK(r * r == F289->from_int(61));
    // zeta = -8 + sqrt(61) serializes as [9, 1]
    auto zeta = F289->from_coeffs({-8, 1});
    CHECK(zeta.coeffs() == std::vector<u64>{9, 1});

    auto F361 = FieldCtx::make(19, 2, std::vector<i64>{-79, 0, 1});
    auto z2 = F361->from_coeffs({-9, -1});
    CHECK(z2.coeffs() == std::vector<u64>{10, 18});
    CHECK_THROWS(FieldCtx::make(17, 2, std::vector<i64>{-64, 0, 1})); // x^2-64 = (x-8)(x+8)
}

TEST_CASE("paper generators are primitive") {
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    CHECK(multiplicative_order(F289->from_coeffs({-8, 1})) == 288);
    auto F361 = FieldCtx::make(19, 2, std::vector<i64>{-79, 0, 1});
    CHECK(multiplicative_order(F361->from_coeffs({-9, -1})) == 360);
}

TEST_CASE("field axioms on random samples") {
    for (auto [p, k] : {std::pair<u64, unsigned>{17, 1}, {5, 3}, {13, 2}}) {
        auto F = FieldCtx::make(p, k);
        u64 q = F->q();
        u64 s = 12345;
        auto rnd = [&]() {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            return F->element_from_index((s >> 16) % q);
        };
        for (int t = 0; t < 50; ++t) {
            auto a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(pow(a, q) == a);
            if (!a.is_zero()) {
                CHECK((a * a.inv()).is_one());
                CHECK(pow(a, q - 1).is_one());
            }
        }
    }
}

TEST_CASE("is_square matches exhaustive square sets") {
    for (auto [p, k] : {std::pair<u64, unsigned>{17, 1}, {11, 1}, {7, 2}, {23, 2}, {13, 2}}) {
        auto F = FieldCtx::make(p, k);
        u64 q = F->q();
        std::set<std::vector<u64>> squares;
        for (u64 i = 1; i < q; ++i) {
            auto t = F->element_from_index(i);
            squares.insert((t * t).coeffs());
        }
        for (u64 i = 1; i < q; ++i) {
            auto a = F->element_from_index(i);
            CHECK(is_square(a) == (squares.count(a.coeffs()) > 0));
        }
        CHECK_THROWS(is_square(F->zero()));
    }
}

TEST_CASE("specific quadratic residues") {
    auto F17 = FieldCtx::make(17, 1);
    CHECK(is_square(F17->from_int(4)));
    CHECK_FALSE(is_square(F17->from_int(10)));
    CHECK(find_nonsquare(F17) == F17->from_int(3));
    auto F11 = FieldCtx::make(11, 1);
    CHECK(find_nonsquare(F11) == F11->from_int(2));
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    auto zeta = F289->from_coeffs({-8, 1});
    CHECK_FALSE(is_square(zeta)); // primitive element has odd parity
    CHECK_FALSE(is_square(find_nonsquare(F289)));
}

TEST_CASE("sqrt is deterministic and correct") {
    auto F17 = FieldCtx::make(17, 1);
    CHECK(sqrt(F17->from_int(4)) == F17->from_int(2));
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    CHECK(sqrt(F289->from_int(61)) == F289->gen()); // gen = [0,1], other root [0,16]

    auto F361 = FieldCtx::make(19, 2, std::vector<i64>{-79, 0, 1});
    u64 s = 777;
    for (int t = 0; t < 40; ++t) {
        s = s * 2862933555777941757ull + 3037000493ull;
        auto a = F361->element_from_index((s >> 20) % 361);
        if (a.is_zero()) continue;
        auto sq = a * a;
        auto r = sqrt(sq);
        CHECK(r * r == sq);
        CHECK(r.lex_less(-r));
    }
}

TEST_CASE("frobenius") {
    auto F17 = FieldCtx::make(17, 1);
    CHECK(frobenius(F17->from_int(9), 5) == F17->from_int(9));
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    auto x = F289->gen();
    CHECK(frobenius(x, 1) == -x); // conjugate of sqrt(61)
    auto z = F289->from_coeffs({3, 12});
    CHECK(frobenius(frobenius(z, 1), 1) == z);
    CHECK(frobenius(z, 1) == pow(z, 17));
}

TEST_CASE("embeddings are ring homomorphisms") {
    auto F17 = FieldCtx::make(17, 1);
    auto F289 = FieldCtx::make(17, 2, std::vector<i64>{-61, 0, 1});
    auto F4 = FieldCtx::make(17, 4);

    CHECK(embed(F17->from_int(5), F289) == F289->from_int(5));

    // arithmetic homomorphism property, exhaustive over F_289 sample
    u64 s = 42;
    for (int t = 0; t < 60; ++t) {
        s = s * 2862933555777941757ull + 3037000493ull;
        auto a = F289->element_from_index((s >> 18) % 289);
        s = s * 2862933555777941757ull + 3037000493ull;
        auto b = F289->element_from_index((s >> 18) % 289);
        CHECK(embed(a * b, F4) == embed(a, F4) * embed(b, F4));
        CHECK(embed(a + b, F4) == embed(a, F4) + embed(b, F4));
    }

    // composed embeddings are embeddings: F17 -> F289 -> F4 is a hom into F4
    auto via = embed(embed(F17->from_int(7), F289), F4);
    CHECK(via == F4->from_int(7));

    // generator of F289 keeps multiplicative order 288 inside F_{17^4}
    auto zeta = F289->from_coeffs({-8, 1});
    CHECK(multiplicative_order(embed(zeta, F4)) == 288);

    // membership and pullback
    FieldElem back;
    CHECK(in_subfield(embed(zeta, F4), F289, &back));
    CHECK(back == zeta);
    CHECK_FALSE(in_subfield(F4->gen(), F289, nullptr));
    CHECK_THROWS(embed(F289->gen(), FieldCtx::make(19, 2)));
}

TEST_CASE("deterministic default moduli") {
    auto A = FieldCtx::make(17, 2);
    auto B = FieldCtx::make(17, 2);
    CHECK(A->modulus() == B->modulus());
    CHECK(A->modulus().back() == 1);
    auto C = FieldCtx::make(5, 4);
    CHECK(C->q() == 625);
    CHECK(C->modulus().size() == 5);
}

TEST_SUITE_END();
