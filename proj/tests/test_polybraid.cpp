#include <catch2/catch_amalgamated.hpp>

#include "hopfcross/polybraid.hpp"

using namespace hopfcross;

TEST_CASE("poly products", "[poly]") {
    GradedVec X = monomial(1);
    CHECK(graded_eq(poly_product(X, X), monomial(2)));
    GradedVec one_plus_x = monomial(0);
    graded_add(one_plus_x, 1, Scalar(1L));
    GradedVec sq = poly_product(one_plus_x, one_plus_x);
    GradedVec expect = monomial(0);
    graded_add(expect, 1, Scalar(2L));
    graded_add(expect, 2, Scalar(1L));
    CHECK(graded_eq(sq, expect));
    CHECK(graded_eq(poly_product(monomial(0), X), X));
}

TEST_CASE("poly coproduct and counit", "[poly]") {
    auto d0 = poly_coproduct(0);
    REQUIRE(d0.size() == 1);
    CHECK(std::get<2>(d0[0]) == Scalar(1L));
    // Delta(X^2) = X^2 (x) 1 + 2 X (x) X + 1 (x) X^2
    auto d2 = poly_coproduct(2);
    REQUIRE(d2.size() == 3);
    CHECK(std::get<2>(d2[1]) == Scalar(2L));
    CHECK(poly_counit(0) == Scalar(1L));
    CHECK(poly_counit(3).is_zero());
}

TEST_CASE("phi pairing", "[poly]") {
    CHECK(phi_pairing(Scalar(2L), 1, 1) == Scalar(2L));
    CHECK(phi_pairing(Scalar(2L), 2, 3).is_zero());
    CHECK(phi_pairing(Scalar(1L), 3, 3) == Scalar(6L));
}

TEST_CASE("closed form sigma", "[poly]") {
    PolySigmaParams P{Scalar(2L), Scalar(3L), Scalar(5L), Scalar(7L)};
    CHECK(closed_form_sigma(P, 1, 2, 2, 2).is_zero()); // off-diagonal degree
    CHECK(closed_form_sigma(P, 0, 0, 0, 0) == Scalar(1L));
    CHECK(closed_form_sigma(P, 1, 0, 1, 0) == Scalar(2L)); // s_p
    CHECK(closed_form_sigma(P, 0, 1, 0, 1) == Scalar(3L)); // s_tau
    CHECK(closed_form_sigma(P, 1, 0, 0, 1) == Scalar(5L)); // s_u
    CHECK(closed_form_sigma(P, 0, 1, 1, 0) == Scalar(7L)); // s_v
    // with only s_p nonzero the first slot carries everything
    PolySigmaParams onlyp{Scalar(2L), Scalar(), Scalar(), Scalar()};
    for (size_t a = 0; a <= 4; ++a) {
        CHECK(closed_form_sigma(onlyp, a, 0, a, 0) == phi_pairing(Scalar(2L), a, a));
        if (a > 0) CHECK(closed_form_sigma(onlyp, a, 0, 0, a).is_zero());
    }
}

TEST_CASE("closed form equals the assembled braiding", "[poly]") {
    std::vector<PolySigmaParams> sets = {
        {Scalar(1L), Scalar(1L), Scalar(1L), Scalar(1L)},
        {Scalar(1L), Scalar(2L), Scalar(3L), Scalar(5L)},
        {Scalar::zeta(3, 1), Scalar(2L), Scalar(1, 2), Scalar(7L)},
        // swapped variants of the second set, exercising the parameter symmetry
        {Scalar(1L), Scalar(2L), Scalar(5L), Scalar(3L)},
        {Scalar(2L), Scalar(1L), Scalar(3L), Scalar(5L)},
    };
    for (const auto& P : sets)
        for (size_t s = 0; s <= 8; ++s)
            for (size_t a = 0; a <= s; ++a)
                for (size_t c = 0; c <= s; ++c)
                    CHECK(closed_form_sigma(P, a, s - a, c, s - c) ==
                          assembled_sigma_poly(P, a, s - a, c, s - c));
}

TEST_CASE("grading: sigma vanishes off the diagonal degree", "[poly]") {
    PolySigmaParams P{Scalar(1L), Scalar(2L), Scalar(3L), Scalar(5L)};
    for (size_t a = 0; a <= 4; ++a)
        for (size_t b = 0; b <= 4; ++b)
            for (size_t c = 0; c <= 4; ++c)
                for (size_t d = 0; d <= 4; ++d)
                    if (a + b != c + d) {
                        CHECK(closed_form_sigma(P, a, b, c, d).is_zero());
                        CHECK(assembled_sigma_poly(P, a, b, c, d).is_zero());
                    }
}

TEST_CASE("bounded braiding axioms", "[poly]") {
    PolySigmaParams P{Scalar(1L), Scalar(2L), Scalar(3L), Scalar(5L)};
    AxiomReport rep = br_axioms_bounded(P, 3);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
    // a perturbed binomial coefficient in Delta(X^2) breaks BR1
    detail::PolyDelta faulty{2, 1};
    AxiomReport bad = br_axioms_bounded(P, 3, faulty);
    CHECK(bad.failed("BR1"));
}
