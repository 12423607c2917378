#include <doctest.h>

#include "chromsym/verify.hpp"

using namespace chromsym;

TEST_CASE("check_k_deletion") {
    CHECK(check_k_deletion(complete(3), {0, 1, 2}).verdict == Verdict::Pass);
    CHECK(check_k_deletion(lollipop(4, 2), {0, 1, 2}).verdict == Verdict::Pass);

    Graph c4(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK(check_k_deletion(c4, {0, 1, 2, 3}).verdict == Verdict::Pass);

    for (int k = 3; k <= 6; ++k)
        for (int j = k; j <= 7; ++j) {
            std::vector<int> cycle(k);
            for (int i = 0; i < k; ++i) cycle[i] = i;
            CHECK(check_k_deletion(complete(j), cycle).verdict == Verdict::Pass);
        }

    CHECK_THROWS_AS(check_k_deletion(path(4), {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("check_triple_deletion") {
    Edge e1 = make_edge(0, 1), e2 = make_edge(1, 2), e3 = make_edge(0, 2);
    CHECK(check_triple_deletion(complete(3), e1, e2, e3).verdict == Verdict::Pass);

    for (int n = 0; n <= 4; ++n)
        CHECK(check_triple_deletion(lollipop(3, n), e1, e2, e3).verdict == Verdict::Pass);

    // ten triangles inside K_5
    int count = 0;
    for (int a = 0; a < 5 && count < 10; ++a)
        for (int b = a + 1; b < 5 && count < 10; ++b)
            for (int c = b + 1; c < 5 && count < 10; ++c) {
                ++count;
                CHECK(check_triple_deletion(complete(5), make_edge(a, b), make_edge(b, c),
                                            make_edge(a, c))
                          .verdict == Verdict::Pass);
            }
    CHECK(count == 10);

    CHECK_THROWS_AS(check_triple_deletion(complete(4), e1, e2, make_edge(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("lollipop distinctness") {
    CHECK(check_lollipop_distinctness(5).verdict == Verdict::Pass);
    CHECK(check_lollipop_distinctness(9).verdict == Verdict::Pass);
    CHECK(lollipop_csf(9, 0) == Rational(factorial(9)) * e_monomial(Partition({9})));
    CHECK_THROWS_AS(check_lollipop_distinctness(2), std::invalid_argument);
}

TEST_CASE("basis certificates") {
    LollipopSet trivial{{{1, 0}}};
    CHECK(basis_certificate(1, trivial).verdict == Verdict::Pass);

    LollipopSet deg2{{{1, 0}, {2, 0}}};
    CHECK(detail::determinant(basis_product_matrix(2, deg2)) == 2);
    CHECK(basis_certificate(2, deg2).verdict == Verdict::Pass);

    // the three standard generator choices up to degree 6
    LollipopSet by_completes, by_paths, by_lariats;
    for (int i = 1; i <= 6; ++i) {
        by_completes.choices.emplace_back(i, 0);
        by_paths.choices.emplace_back(i >= 2 ? 2 : i, i >= 2 ? i - 2 : 0);
        by_lariats.choices.emplace_back(i >= 3 ? 3 : i, i >= 3 ? i - 3 : 0);
    }
    for (int N = 1; N <= 6; ++N) {
        CHECK(basis_certificate(N, by_completes).verdict == Verdict::Pass);
        CHECK(basis_certificate(N, by_paths).verdict == Verdict::Pass);
        CHECK(basis_certificate(N, by_lariats).verdict == Verdict::Pass);
    }

    LollipopSet bad{{{1, 1}}};
    CHECK_THROWS_AS(basis_certificate(1, bad), std::invalid_argument);
}

TEST_CASE("lariat theorem checks") {
    for (int n = 0; n <= 6; ++n) {
        auto reports = check_lariat_theorem(n);
        REQUIRE(reports.size() == 5);
        CHECK(reports[0].verdict == Verdict::Pass);  // support inclusion
        CHECK(reports[1].verdict == Verdict::Pass);  // doubling off part 2
        for (int part = 3; part <= 5; ++part) {
            const CheckReport& r = reports[part - 1];
            bool free = lariat_coefficient_claim(part, n).collision_free;
            CHECK(r.verdict == (free ? Verdict::Pass : Verdict::UnverifiedRegime));
        }
    }

    // the collision case n=1 for part 3: closed form says 4, computed is 0
    auto reports = check_lariat_theorem(1);
    CHECK(reports[2].verdict == Verdict::UnverifiedRegime);
    CHECK(reports[2].witness.find("4") != std::string::npos);
    CHECK(reports[2].witness.find("0") != std::string::npos);
    CHECK(lariat_csf(1).coeff(Partition({2, 2})) == 0);
}

TEST_CASE("counterexample to the sixth conjecture") {
    CheckReport r = counterexample_conjecture6();
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.witness.find("3,2,2,2") != std::string::npos);

    SymFunc l9 = lariat_csf(6);
    CHECK(l9.coeff(Partition({4, 3, 2})) == 82);
    CHECK(l9.coeff(Partition({9})) == 18);
}
