#include <doctest.h>

#include <random>

#include "chromsym/json_io.hpp"

using namespace chromsym;

TEST_CASE("partition serialization") {
    Partition p({3, 2, 2, 2});
    CHECK(partition_to_json(p).dump() == "[3,2,2,2]");
    CHECK(partition_from_json(json::parse("[2,3,2,2]")) == p);  // constructor sorts
    CHECK_THROWS_AS(partition_from_json(json::parse("{}")), std::invalid_argument);
}

TEST_CASE("symfunc round trip") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int n = 0; n <= 7; ++n) {
        SymFunc f(n, Basis::E);
        for (const Partition& lam : partitions_of(n)) {
            int c = coeff(rng);
            if (c != 0) f.add_term(lam, Rational(c, 3));
        }
        CHECK(symfunc_from_json(symfunc_to_json(f)) == f);
    }

    json j = symfunc_to_json(Rational(1, 2) * e_monomial(Partition({2})));
    CHECK(j["basis"] == "e");
    CHECK(j["terms"][0]["coeff"] == "1/2");
}

TEST_CASE("terms serialize in canonical order") {
    SymFunc f(4, Basis::E);
    f.add_term(Partition({1, 1, 1, 1}), 1);
    f.add_term(Partition({4}), 1);
    f.add_term(Partition({2, 2}), 1);
    json terms = symfunc_to_json(f)["terms"];
    CHECK(terms[0]["partition"].dump() == "[4]");
    CHECK(terms[1]["partition"].dump() == "[2,2]");
    CHECK(terms[2]["partition"].dump() == "[1,1,1,1]");
}

TEST_CASE("graph parsing rejects bad edges by name") {
    CHECK(graph_from_json(json::parse(R"({"vertices":3,"edges":[[0,1],[1,2]]})")) == path(3));

    CHECK_THROWS_WITH_AS(graph_from_json(json::parse(R"({"vertices":2,"edges":[[0,1],[1,0]]})")),
                         "duplicate edge [0,1]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(graph_from_json(json::parse(R"({"vertices":2,"edges":[[1,1]]})")),
                         "loop edge [1,1]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(graph_from_json(json::parse(R"({"vertices":2,"edges":[[0,5]]})")),
                         "edge endpoint out of range [0,5]", std::invalid_argument);
}

TEST_CASE("check report serialization") {
    CheckReport r{"demo", "n=1", Verdict::UnverifiedRegime, "both numbers"};
    json j = report_to_json(r);
    CHECK(j["check"] == "demo");
    CHECK(j["verdict"] == "unverified-regime");
    CHECK(j["witness"] == "both numbers");
}
