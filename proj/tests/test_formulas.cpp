#include <doctest.h>

#include "chromsym/formulas.hpp"

using namespace chromsym;

namespace {

// The published 14-term expansion of X_{L_9}.
SymFunc l9_reference() {
    SymFunc f(9, Basis::E);
    f.add_term(Partition({3, 2, 2, 2}), 8);
    f.add_term(Partition({3, 3, 2, 1}), 16);
    f.add_term(Partition({3, 3, 3}), 24);
    f.add_term(Partition({4, 2, 2, 1}), 6);
    f.add_term(Partition({4, 3, 2}), 82);
    f.add_term(Partition({4, 4, 1}), 18);
    f.add_term(Partition({5, 2, 2}), 16);
    f.add_term(Partition({5, 3, 1}), 32);
    f.add_term(Partition({5, 4}), 62);
    f.add_term(Partition({6, 2, 1}), 10);
    f.add_term(Partition({6, 3}), 54);
    f.add_term(Partition({7, 2}), 24);
    f.add_term(Partition({8, 1}), 14);
    f.add_term(Partition({9}), 18);
    return f;
}

}  // namespace

TEST_CASE("complete_csf") {
    CHECK(complete_csf(0) == SymFunc::one(Basis::E));
    CHECK(complete_csf(1) == e_monomial(Partition({1})));
    CHECK(complete_csf(2) == Rational(2) * e_monomial(Partition({2})));
    CHECK(complete_csf(3) == Rational(6) * e_monomial(Partition({3})));
}

TEST_CASE("path_e_coeff") {
    CHECK(path_e_coeff(Partition({3}), 3) == 3);
    CHECK(path_e_coeff(Partition({2, 1}), 3) == 1);
    CHECK(path_e_coeff(Partition({2, 2}), 4) == 2);
    CHECK_THROWS_AS(path_e_coeff(Partition({2, 1}), 4), std::invalid_argument);
}

TEST_CASE("path_csf") {
    CHECK(path_csf(0) == SymFunc::one(Basis::E));
    CHECK(path_csf(1) == e_monomial(Partition({1})));
    CHECK(path_csf(2) == Rational(2) * e_monomial(Partition({2})));

    SymFunc p4 = path_csf(4);
    CHECK(p4.coeff(Partition({2, 2})) == 2);
    CHECK(p4.coeff(Partition({3, 1})) == 2);
    CHECK(p4.coeff(Partition({4})) == 4);
    CHECK(p4.terms().size() == 3);

    for (int n = 1; n <= 9; ++n)
        CHECK(path_csf(n) == convert(chromatic_sym(path(n)), Basis::E));
}

TEST_CASE("lollipop recurrence") {
    for (int n = 0; n <= 5; ++n)
        CHECK(lollipop_recurrence_rhs(2, n) == path_csf(n + 2));

    CHECK(lollipop_recurrence_rhs(3, 0) == complete_csf(3));
    CHECK(lollipop_recurrence_rhs(3, 6) == l9_reference());
    CHECK_THROWS_AS(lollipop_recurrence_rhs(1, 0), std::invalid_argument);
}

TEST_CASE("lollipop closed forms") {
    for (int n = 0; n <= 4; ++n)
        CHECK(lollipop_via_paths(2, n) == path_csf(n + 2));
    CHECK(lollipop_via_paths(3, 0) == complete_csf(3));
    CHECK(lollipop_via_paths(4, 1) == convert(chromatic_sym(lollipop(4, 1)), Basis::E));

    for (int m = 2; m <= 5; ++m)
        CHECK(lollipop_via_completes(m, 0) == complete_csf(m));
    SymFunc l21 = lollipop_via_completes(2, 1);
    CHECK(l21.coeff(Partition({3})) == 3);
    CHECK(l21.coeff(Partition({2, 1})) == 1);
    CHECK(l21 == path_csf(3));
    CHECK(lollipop_via_completes(3, 6) == l9_reference());

    // three routes against the engine on a small grid (full grid in acceptance)
    for (int m = 2; m <= 4; ++m)
        for (int n = 0; n <= 3; ++n) {
            SymFunc engine = convert(chromatic_sym(lollipop(m, n)), Basis::E);
            CHECK(lollipop_recurrence_rhs(m, n) == engine);
            CHECK(lollipop_via_paths(m, n) == engine);
            CHECK(lollipop_via_completes(m, n) == engine);
            CHECK(lollipop_csf(m, n) == engine);
        }
}

TEST_CASE("lollipop chromatic polynomial") {
    CHECK(lollipop_chrom_poly(3, 1, 3) == 12);
    CHECK(lollipop_chrom_poly(3, 1, 3) == chromatic_poly(lollipop(3, 1), 3));
    CHECK(lollipop_chrom_poly(5, 2, 1) == 0);
    CHECK(lollipop_chrom_poly(2, 0, 7) == 42);  // x(x-1) with empty tail
    CHECK_THROWS_AS(lollipop_chrom_poly(1, 1, 3), std::invalid_argument);
}

TEST_CASE("lariat_csf") {
    CHECK(lariat_csf(0) == complete_csf(3));

    SymFunc l4 = lariat_csf(1);
    CHECK(l4.coeff(Partition({4})) == 8);
    CHECK(l4.coeff(Partition({3, 1})) == 4);
    CHECK(l4.terms().size() == 2);

    CHECK(lariat_csf(6) == l9_reference());
    for (int n = 0; n <= 6; ++n)
        CHECK(lariat_csf(n) == convert(chromatic_sym(lollipop(3, n)), Basis::E));
}

TEST_CASE("lariat coefficient claims") {
    LariatClaim c3 = lariat_coefficient_claim(3, 2);
    CHECK(*c3.lambda == Partition({3, 2}));
    CHECK(c3.value == 8);
    CHECK(c3.collision_free);

    LariatClaim c4 = lariat_coefficient_claim(4, 3);
    CHECK(*c4.lambda == Partition({3, 2, 1}));
    CHECK(c4.value == 4);
    CHECK(c4.collision_free);

    LariatClaim c5 = lariat_coefficient_claim(5, 4);
    CHECK(*c5.lambda == Partition({3, 2, 2}));
    CHECK(c5.value == 8);
    CHECK(c5.collision_free);

    // collision regimes are flagged, not asserted
    CHECK_FALSE(lariat_coefficient_claim(3, 1).collision_free);
    CHECK_FALSE(lariat_coefficient_claim(5, 0).lambda.has_value());
    CHECK_THROWS_AS(lariat_coefficient_claim(6, 2), std::invalid_argument);
}
