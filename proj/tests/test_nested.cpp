#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schurcone/nested.hpp"
#include "schurcone/schur.hpp"

using namespace schurcone;

namespace {
Partition P(const char* text) { return Partition::parse(text); }
FactorSet F(const char* text) { return FactorSet::parse(text); }

const int kCatalan[] = {1, 1, 2, 5, 14, 42, 132};
}  // namespace

TEST_CASE("factor set grammar and canonical order") {
    const FactorSet A = F("3,2;5,1;4,2;4,2");
    CHECK(A.to_string() == "5,1;4,2;4,2;3,2");
    CHECK(A.weight() == 23);
    CHECK(A.size() == 4);
    CHECK(A.contains(P("4,2")));
    CHECK(A.without(P("4,2")).to_string() == "5,1;4,2;3,2");
    CHECK(FactorSet().to_string() == "");
    CHECK(FactorSet::parse("").empty());
    CHECK_THROWS_AS(FactorSet::parse("3,2;;1"), ParseError);
    CHECK_THROWS_AS(A.without(P("9")), std::invalid_argument);
}

TEST_CASE("phi") {
    CHECK(phi(F("4,2;3,1;3,2;2")) == P("4,3,3,2,2,2,1"));
    CHECK(phi(F("3,2")) == P("3,2"));
    CHECK(phi(F("2;2")) == P("2,2"));
    CHECK(phi(FactorSet()) == Partition());
}

TEST_CASE("nestedness conditions") {
    CHECK(is_nested(F("5,1;4,2;4,2;3,2")));
    CHECK_FALSE(is_nested(F("3,1;2")));   // condition 2
    CHECK_FALSE(is_nested(F("3;2")));     // condition 3
    CHECK_FALSE(is_nested(F("4,2;3,1"))); // condition 1
    CHECK(is_nested(F("2,1;2,1")));       // duplicate copies, strict inequalities
    CHECK_FALSE(is_nested(F("2;2")));
    CHECK(is_nested(F("2,2;2")));         // condition 2 needs distinct two-part factors
    CHECK(is_nested(FactorSet()));
    CHECK_THROWS_AS(is_nested(F("2,1,1")), std::domain_error);

    CHECK(pair_condition(P("4,2"), P("3,1")) == PairCondition::Cond1);
    CHECK(pair_condition(P("3,1"), P("4,2")) == PairCondition::Cond1);
    CHECK(pair_condition(P("5,1"), P("4,2")) == PairCondition::None);
}

TEST_CASE("sp enumeration") {
    CHECK(enumerate_sp(2, 2).size() == 3);
    CHECK(enumerate_sp(0, 2) == std::vector<FactorSet>{FactorSet()});
    CHECK(enumerate_sp(6, 2).size() == 35);

    // Duplicate-free and canonical.
    const auto all = enumerate_sp(7, 2);
    const std::set<FactorSet> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    for (const auto& A : all) {
        CHECK(A.weight() == 7);
        CHECK(A.max_parts() <= 2);
    }
}

TEST_CASE("ssp enumeration matches the nested filter") {
    for (int n = 0; n <= 10; ++n) {
        const auto ssp = enumerate_ssp(n);
        std::set<FactorSet> by_filter;
        for (const auto& A : enumerate_sp(n, 2))
            if (is_nested(A)) by_filter.insert(A);
        CHECK(by_filter == std::set<FactorSet>(ssp.begin(), ssp.end()));

        // Per-lambda enumeration agrees and is never empty.
        for (const auto& lam : partitions_of(n)) {
            std::set<FactorSet> expected;
            for (const auto& A : ssp)
                if (phi(A) == lam) expected.insert(A);
            const auto got = enumerate_ssp_lambda(lam);
            CHECK(std::set<FactorSet>(got.begin(), got.end()) == expected);
            CHECK_FALSE(got.empty());
        }
    }
}

TEST_CASE("paper tables for ssp_lambda") {
    SUBCASE("even table, four rows") {
        const auto sets = enumerate_ssp_lambda(P("5,4,4,3,2,2,2,1"));
        REQUIRE(sets.size() == 4);
        const std::set<FactorSet> got(sets.begin(), sets.end());
        const std::set<FactorSet> want{F("5,1;4,2;4,2;3,2"), F("5,1;4,2;4,3;2,2"),
                                       F("5,1;4,4;3,2;2,2"), F("5,3;4,4;2,1;2,2")};
        CHECK(got == want);
        CHECK(psi(F("5,1;4,2;4,3;2,2")) == PlanePartition2Row{{5, 4, 4, 2}, {3, 2, 2, 1}});
    }
    SUBCASE("odd table, five rows") {
        const auto sets = enumerate_ssp_lambda(P("4,4,3,2,2,2,1,1,1"));
        REQUIRE(sets.size() == 5);
        const std::set<FactorSet> got(sets.begin(), sets.end());
        const std::set<FactorSet> want{
            F("4,2;4,2;3,2;1;1,1"), F("4,2;4,3;2,2;1;1,1"), F("4,4;3,2;2,2;1;1,1"),
            F("4,4;3;2,1;2,1;2,1"), F("4,4;3;2,1;2,2;1,1")};
        CHECK(got == want);
        CHECK(psi(F("4,4;3;2,1;2,2;1,1")) == PlanePartition2Row{{4, 3, 2, 2, 1}, {4, 2, 1, 1, 0}});

        // The stated non-image plane partition never appears.
        const PlanePartition2Row missing{{4, 4, 3, 2, 1}, {2, 2, 1, 1, 0}};
        for (const auto& A : sets) CHECK_FALSE(psi(A) == missing);
    }
}

TEST_CASE("psi images") {
    CHECK(psi(F("5,1;4,2;4,3;2,2")).to_string() == "5,4,4,2/3,2,2,1");
    CHECK_THROWS_AS(psi(F("3,1;2")), std::domain_error);

    // Injective on SSP_lambda; bijective onto two-row plane partitions
    // when lambda is even.
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : partitions_of(n)) {
            const auto sets = enumerate_ssp_lambda(lam);
            std::set<std::string> images;
            int columns = 0;
            for (const auto& A : sets) {
                const auto pp = psi(A);
                columns = static_cast<int>(pp.row1.size());
                images.insert(pp.to_string());
            }
            CHECK(images.size() == sets.size());
            if (lam.length() % 2 == 0 && !sets.empty()) {
                CHECK(images == schurcone::testing::brute_plane_partitions(lam, columns));
            }
        }
}

TEST_CASE("parity of nested sets") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& A : enumerate_ssp(n)) {
            int ones = 0;
            for (const auto& f : A.factors())
                if (f.length() == 1) ++ones;
            CHECK(ones == phi(A).length() % 2);
        }
}

TEST_CASE("catalan counts for distinct parts") {
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> even_parts, odd_parts;
        for (int i = 2 * k; i >= 1; --i) even_parts.push_back(i);
        for (int i = 2 * k - 1; i >= 1; --i) odd_parts.push_back(i);
        CHECK(enumerate_ssp_lambda(Partition(even_parts)).size() ==
              static_cast<size_t>(kCatalan[k]));
        CHECK(enumerate_ssp_lambda(Partition(odd_parts)).size() ==
              static_cast<size_t>(kCatalan[k]));
    }
}

TEST_CASE("up_set and down_set") {
    CHECK(up_set(F("4;2,1;2,2")) == F("5,1;3,2;3,3"));
    CHECK(down_set(F("5,4;3,1;2,1;1,1")) == F("4,3;2;1"));
    CHECK(down_set(up_set(F("4;2,1;2,2"))) == F("4;2,1;2,2"));
    CHECK_THROWS_AS(up_set(F("4,1;2,2")), std::domain_error);
    CHECK_THROWS_AS(up_set(F("4;3;2,2")), std::domain_error);

    // up_set lands in SSP of the raised partition and down_set undoes it.
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (lam.length() % 2 == 0) continue;
            for (const auto& A : enumerate_ssp_lambda(lam)) {
                const FactorSet raised = up_set(A);
                CHECK(phi(raised) == up(lam));
                CHECK(is_nested(raised));
                CHECK(down_set(raised) == A);
            }
        }
}

TEST_CASE("non-nested sets always admit a syzygy") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& A : enumerate_sp(n, 2)) {
            const auto pair = find_violating_pair(A);
            CHECK(pair.has_value() == !is_nested(A));
            if (pair) {
                const auto d = syzygy_decompose(pair->first, pair->second);
                const FactorSet rest = A.without(pair->first).without(pair->second);
                FactorSet left = rest, right = rest;
                for (const auto& f : d.left.factors()) left = left.with(f);
                for (const auto& f : d.right.factors()) right = right.with(f);
                CHECK(schur_product(A) == schur_product(left) + schur_product(right));
            }
        }
}

TEST_CASE("agree_within and inside_out_order") {
    const FactorSet A = F("4,3;2,1"), B = F("4,1;3,2");
    CHECK(agree_within(A, A, P("4,1")));
    CHECK(agree_within(A, B, P("4,3")));
    CHECK_FALSE(agree_within(A, B, P("4,1")));  // (3,2) lies only in B
    CHECK_THROWS_AS(agree_within(A, B, P("3")), std::domain_error);

    CHECK(inside_out_order(F("7,2;6,3;5,4")) ==
          std::vector<Partition>{P("5,4"), P("6,3"), P("7,2")});
    CHECK(inside_out_order(F("4;2,1;6,3")) == std::vector<Partition>{P("2,1"), P("6,3")});
    CHECK_THROWS_AS(inside_out_order(F("2,1;2,1")), std::domain_error);

    // Anything strictly inside rho must come before rho.
    for (int n = 3; n <= 11; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (!lam.has_distinct_parts()) continue;
            for (const auto& A : enumerate_ssp_lambda(lam)) {
                const auto order = inside_out_order(A);
                for (size_t i = 0; i < order.size(); ++i)
                    for (size_t j = i + 1; j < order.size(); ++j) {
                        // order[j] must not be strictly inside order[i]
                        CHECK_FALSE((order[i][0] > order[j][0] && order[j][1] > order[i][1]));
                    }
            }
        }
}
