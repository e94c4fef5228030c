#include <doctest.h>

#include "m1taut/ct.hpp"
#include "m1taut/modular_weights.hpp"

using namespace m1taut;

namespace {
const std::string kDataPath = std::string(M1TAUT_SOURCE_DIR) + "/data/getzler_relation.json";
}

TEST_CASE("cusp form dimensions: the classical staircase") {
    CHECK(dim_cusp_forms(12) == 1);
    CHECK(dim_cusp_forms(10) == 0);
    CHECK(dim_cusp_forms(14) == 0);
    CHECK(dim_cusp_forms(16) == 1);
    CHECK(dim_cusp_forms(24) == 2);
    CHECK(dim_cusp_forms(26) == 1);
    for (int w = 0; w <= 61; w += 2)
        if (w < 4)
            CHECK(dim_cusp_forms(w) == 0);
    for (int w = 1; w <= 61; w += 2)
        CHECK(dim_cusp_forms(w) == 0);
    // dim S_{w+12} = dim S_w + 1 for even w >= 4
    for (int w = 4; w + 12 <= 60; w += 2)
        CHECK(dim_cusp_forms(w + 12) == dim_cusp_forms(w) + 1);
    // direct monomial-count oracle
    for (int w = 4; w <= 60; w += 2) {
        long monomials = 0;
        for (int x = 0; 4 * x <= w; ++x)
            for (int y = 0; 4 * x + 6 * y <= w; ++y)
                if (4 * x + 6 * y == w)
                    ++monomials;
        CHECK(dim_cusp_forms(w) == monomials - 1);
    }
    CHECK_THROWS_AS(dim_cusp_forms(-2), std::invalid_argument);
}

TEST_CASE("h1 of the symmetric-power local systems") {
    CHECK(h1_local_system(1).empty());
    CHECK(h1_local_system(7).empty());
    CHECK(h1_local_system(0).empty());

    WeightTable k10 = h1_local_system(10);
    REQUIRE(k10.size() == 2);
    CHECK(k10.at({1, 11}) == 2);
    CHECK(k10.at({1, 22}) == 1);

    WeightTable k2 = h1_local_system(2);
    REQUIRE(k2.size() == 1);
    CHECK(k2.at({1, 6}) == 1);

    // smooth-source positivity: no entries below the cohomological degree
    for (int k = 0; k <= 20; ++k)
        for (const auto& [qi, d] : h1_local_system(k))
            CHECK(qi.second >= qi.first);
}

TEST_CASE("the weight bound holds for all computed k") {
    for (int k = 0; k <= 40; ++k)
        CHECK(weight_check_lemma(k));
}

TEST_CASE("transfer: examples and input checking") {
    CHECK(transfer_even_low_weight(2, 0, 0) == 1);
    CHECK(transfer_even_low_weight(5, 0, 0) == 1);
    CHECK(transfer_even_low_weight(4, 3, 4) == 1);
    CHECK_THROWS_AS(transfer_even_low_weight(4, 3, 5), std::domain_error);   // odd i
    CHECK_THROWS_AS(transfer_even_low_weight(4, 2, 6), std::domain_error);   // i > q+2
    CHECK_THROWS_AS(transfer_even_low_weight(1, 0, 0), std::domain_error);   // n+1 < 2
}

TEST_CASE("transfer at (5,3,4) reproduces the five-dimensional space") {
    CHECK(transfer_even_low_weight(5, 3, 4) == 5);
}

TEST_CASE("indexing consistency with the weight-row report") {
    for (int nPlus1 = 2; nPlus1 <= 4; ++nPlus1) {
        int n = nPlus1 - 1;
        auto report = ct::weight_row_report(n);
        for (int q = 0; q <= n; q += 2)
            CHECK(transfer_even_low_weight(nPlus1, q, q) == report.at(q).first);
    }
}

TEST_CASE("verify_theorems: vacuous range") {
    TheoremReport rep = verify_theorems(2);
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks)
        CHECK(c.theorem != "1.3");  // needs four markings
    auto j = rep.to_json();
    CHECK(j.is_array());
    CHECK(j[0]["status"] == "pass");
}

TEST_CASE("verify_theorems: all three at four markings") {
    TheoremReport rep = verify_theorems(4, kDataPath);
    CHECK(rep.all_pass());
    bool saw13 = false;
    for (const auto& c : rep.checks)
        if (c.theorem == "1.3")
            saw13 = true;
    CHECK(saw13);
    CHECK_THROWS_AS(verify_theorems(9), std::invalid_argument);
}
