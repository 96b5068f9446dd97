#include <doctest.h>

#include <set>

#include "schurcone/cone.hpp"
#include "schurcone/schur.hpp"
#include "schurcone/tableau.hpp"

using namespace schurcone;

namespace {

Partition P(const char* text) { return Partition::parse(text); }
FactorSet F(const char* text) { return FactorSet::parse(text); }

SchurVector paper_f6() {
    SchurVector f(6);
    f.add_term(P("2,2,1,1"), 1);
    f.add_term(P("2,2,2"), 1);
    f.add_term(P("3,1,1,1"), 1);
    f.add_term(P("3,2,1"), -1);
    return f;
}

// The thirteen extreme generators of the degree-6 cone of log concavity.
std::set<FactorSet> extreme6() {
    return {F("6"),           F("5,1"),      F("4,2"),        F("3,3"),      F("3,2;1"),
            F("4;1,1"),       F("3;2,1"),    F("3,1;1,1"),    F("2,1;2,1"),  F("2,2;2"),
            F("2,2;1,1"),     F("2;1,1;1,1"), F("1,1;1,1;1,1")};
}

bool witness_reproduces(const FactorSet& A,
                        const std::vector<std::pair<FactorSet, Rational>>& witness) {
    SchurVector sum(A.weight());
    for (const auto& [B, c] : witness) {
        if (B == A) return false;
        if (c <= 0) return false;
        sum += c * schur_product(B);
    }
    return sum == schur_product(A);
}

}  // namespace

TEST_CASE("generator tables") {
    CHECK(generators({6, 1}).size() == 11);

    const auto g22 = generators({2, 2});
    REQUIRE(g22.size() == 3);
    std::set<FactorSet> sets;
    for (const auto& [A, v] : g22) {
        sets.insert(A);
        CHECK(v == schur_product(A));
    }
    CHECK(sets == std::set<FactorSet>{F("2"), F("1,1"), F("1;1")});

    const auto g0 = generators({0, 3});
    REQUIRE(g0.size() == 1);
    CHECK(g0[0].first.empty());
    CHECK(g0[0].second == SchurVector::unit(Partition()));
}

TEST_CASE("extremality at N=6, k=2") {
    CHECK(is_extreme(F("2,1;2,1"), {6, 2}).extreme);

    const auto res = is_extreme(F("3,1;2"), {6, 2});
    REQUIRE_FALSE(res.extreme);
    CHECK(witness_reproduces(F("3,1;2"), res.witness));
    // The paper's decomposition is itself a valid witness.
    CHECK(witness_reproduces(F("3,1;2"),
                             {{F("3,2;1"), Rational(1)}, {F("1,1;4"), Rational(1)}}));

    std::set<FactorSet> extremes;
    for (const auto& [A, v] : generators({6, 2}))
        if (is_extreme(A, {6, 2}).extreme) extremes.insert(A);
    CHECK(extremes == extreme6());
}

TEST_CASE("extremality certificates re-verify") {
    // Exactly one of witness/certificate, and both re-verify exactly.
    for (int n = 0; n <= 8; ++n) {
        const ConeSpec spec{n, 2};
        for (const auto& [A, v] : generators(spec)) {
            const auto res = is_extreme(A, spec);
            if (res.extreme) {
                REQUIRE(res.certificate.has_value());
                CHECK(res.witness.empty());
                const auto& cert = *res.certificate;
                CHECK(cert.margin == 1);
                CHECK(cert.max_other <= 0);
                // Strict check over every generator of SP_N^2.
                const auto check =
                    separates_check(cert.f, A, SeparationMode::global(), {true, 2});
                CHECK(check.ok);
            } else {
                REQUIRE_FALSE(res.certificate.has_value());
                CHECK(witness_reproduces(A, res.witness));
            }
        }
    }
}

TEST_CASE("k = 1 generators are all extreme") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& [A, v] : generators({n, 1})) CHECK(is_extreme(A, {n, 1}).extreme);
}

TEST_CASE("k >= N leaves exactly the single Schur functions extreme") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& [A, v] : generators({n, n}))
            CHECK(is_extreme(A, {n, n}).extreme == (A.size() == 1));
}

TEST_CASE("k = N-1 swaps the column for the near-column product") {
    for (int n = 4; n <= 6; ++n) {
        std::set<FactorSet> extremes;
        for (const auto& [A, v] : generators({n, n - 1}))
            if (is_extreme(A, {n, n - 1}).extreme) extremes.insert(A);

        std::set<FactorSet> expected;
        for (const auto& lam : partitions_of(n))
            if (lam.length() < n) expected.insert(FactorSet({lam}));
        std::vector<int> column(static_cast<size_t>(n - 1), 1);
        expected.insert(FactorSet({Partition(column), P("1")}));
        CHECK(extremes == expected);
    }
}

TEST_CASE("find_separator feasible cases") {
    const FactorSet A = F("2,1;2,1");
    const Partition lam = P("2,2,1,1");
    const auto res = find_separator(A, lam, P("3,2,1"));
    REQUIRE(res.feasible());
    CHECK(res.certificate->margin >= 1);
    CHECK(res.certificate->max_other <= 0);
    CHECK(separates_check(res.certificate->f, A, SeparationMode::interval(lam, P("3,2,1"))).ok);

    CHECK_THROWS_AS(find_separator(A, P("2,2,2"), P("3,2,1")), std::domain_error);
    CHECK_THROWS_AS(find_separator(A, lam, P("2,1,1,1,1")), std::domain_error);
}

TEST_CASE("find_separator negative controls") {
    SUBCASE("three copies of the hook on [lam, lam+]") {
        const FactorSet A = F("2,1;2,1;2,1");
        const Partition lam = phi(A);
        const auto res = find_separator(A, lam, lambda_plus(lam));
        REQUIRE_FALSE(res.feasible());
        // The reported combination matches s_A on the whole interval.
        const auto interval = dominance_interval(lam, lambda_plus(lam));
        for (const auto& mu : interval) {
            Rational sum(0);
            for (const auto& [B, c] : res.infeasibility)
                sum += c * inner_with_product(SchurVector::unit(mu), B);
            CHECK(sum == inner_with_product(SchurVector::unit(mu), A));
        }
    }
    SUBCASE("the dagger interval is too small for 3,1;3,2;2,2") {
        const FactorSet A = F("3,1;3,2;2,2");
        const Partition lam = phi(A);
        CHECK(lam == P("3,3,2,2,2,1"));
        CHECK(lambda_dagger(lam) == P("4,4,2,1,1,1"));
        CHECK_FALSE(find_separator(A, lam, lambda_dagger(lam)).feasible());
    }
}

TEST_CASE("separates_check clauses") {
    const FactorSet A = F("2,1;2,1");

    SUBCASE("worked separator from above and on the interval") {
        CHECK(separates_check(paper_f6(), A, SeparationMode::from_above()).ok);
        CHECK(separates_check(paper_f6(), A,
                              SeparationMode::interval(P("2,2,1,1"), P("3,2,1")))
                  .ok);
        const auto global = separates_check(paper_f6(), A, SeparationMode::global());
        CHECK_FALSE(global.ok);  // fails below lam, hence the lift
    }
    SUBCASE("corollary case: s_lambda separates a singleton from above") {
        const FactorSet single = F("2,1");
        CHECK(separates_check(SchurVector::unit(P("2,1")), single,
                              SeparationMode::from_above())
                  .ok);
    }
    SUBCASE("zero vector never separates") {
        const auto res = separates_check(SchurVector(6), A, SeparationMode::global());
        CHECK_FALSE(res.ok);
        CHECK(res.margin == 0);
    }
    SUBCASE("degree mismatch is a reported violation") {
        const auto res = separates_check(SchurVector(5), A, SeparationMode::global());
        CHECK_FALSE(res.ok);
        REQUIRE(res.violations.size() == 1);
        CHECK(res.violations[0].clause == "degree");
    }
    SUBCASE("support clause on intervals") {
        SchurVector wide(6);
        wide.add_term(P("2,2,1,1"), 1);
        wide.add_term(P("6"), 1);  // outside [lam, 3,2,1]
        const auto res =
            separates_check(wide, A, SeparationMode::interval(P("2,2,1,1"), P("3,2,1")));
        CHECK_FALSE(res.ok);
        bool support_flagged = false;
        for (const auto& v : res.violations) support_flagged |= v.clause == "support";
        CHECK(support_flagged);
    }
    SUBCASE("scaling does not change the verdict") {
        for (const Rational& c : {Rational(2), Rational(1, 7), Rational(10, 3)}) {
            CHECK(separates_check(c * paper_f6(), A, SeparationMode::from_above()).ok ==
                  separates_check(paper_f6(), A, SeparationMode::from_above()).ok);
        }
    }
}

TEST_CASE("lift_separator") {
    const FactorSet A = F("2,1;2,1");

    SUBCASE("already global comes back unchanged") {
        const auto res = is_extreme(A, {6, 2});
        REQUIRE(res.extreme);
        const SchurVector g = lift_separator(res.certificate->f, A);
        CHECK(g == res.certificate->f);
    }
    SUBCASE("the worked separator lifts to a global one") {
        const SchurVector g = lift_separator(paper_f6(), A);
        CHECK(separates_check(g, A, SeparationMode::global()).ok);
    }
    SUBCASE("singleton nested classes lift s_lambda itself") {
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : partitions_of(n)) {
                const auto ssp = enumerate_ssp_lambda(lam);
                if (ssp.size() != 1) continue;
                const SchurVector g = lift_separator(SchurVector::unit(lam), ssp.front());
                CHECK(separates_check(g, ssp.front(), SeparationMode::global()).ok);
            }
    }
    SUBCASE("not a from-above separator") {
        CHECK_THROWS_AS(lift_separator(SchurVector(6), A), std::domain_error);
    }
}

TEST_CASE("lambda_bracket") {
    CHECK(lambda_bracket(P("4,3,2,1"), P("4,1")) == P("5,3,2"));
    CHECK(lambda_bracket(P("4,3,2,1"), P("3,2")) == P("4,4,1,1"));
    CHECK(lambda_bracket(P("4,3,2,1"), 0, 1) == P("5,2,2,1"));
    CHECK_THROWS_AS(lambda_bracket(P("3,3,1"), 0, 1), std::domain_error);
    CHECK_THROWS_AS(lambda_bracket(P("4,3,2,1"), 2, 2), std::domain_error);
    CHECK_THROWS_AS(lambda_bracket(P("4,3,2,1"), P("4,4")), std::domain_error);

    for (int n = 3; n <= 12; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (!lam.has_distinct_parts() || lam.length() < 2) continue;
            for (int i = 0; i < lam.length(); ++i)
                for (int j = i + 1; j < lam.length(); ++j) {
                    const Partition b = lambda_bracket(lam, i, j);
                    CHECK(dominates(b, lam));
                    CHECK(dominates(lambda_plus(lam), b));
                }
        }
}

TEST_CASE("lr replacement lemma") {
    SUBCASE("worked pair on 4,3,2,1") {
        // rho = (2,1) is the qualifying choice here: it lies in A only
        // and nothing can sit strictly inside it.
        const FactorSet A = F("4,3;2,1"), B = F("4,1;3,2");
        CHECK(lr_lemma_check(A, B, P("2,1")));
        const Partition bracket = lambda_bracket(P("4,3,2,1"), P("2,1"));
        CHECK(bracket == P("4,3,3"));
        CHECK(lr_coefficient(A.factors(), bracket) + 1 == lr_coefficient(B.factors(), bracket));
        // Frozen values at lam[(4,1)]: the replacement identity needs
        // the agreement precondition, which fails for rho = (4,1), and
        // there the counts run the other way.
        CHECK(lr_coefficient(F("4,1;3,2").factors(), P("5,3,2")) == 2);
        CHECK(lr_coefficient(F("4,3;2,1").factors(), P("5,3,2")) == 1);
    }
    SUBCASE("adjacent parts force 0 and 1") {
        const FactorSet A = F("3,2;1"), B = F("2,1;3");
        CHECK(lr_lemma_check(A, B, P("3,2")));
        const Partition bracket = lambda_bracket(P("3,2,1"), P("3,2"));
        CHECK(lr_coefficient(A.factors(), bracket) == 0);
        CHECK(lr_coefficient(B.factors(), bracket) == 1);
    }
    SUBCASE("preconditions are enforced") {
        CHECK_THROWS_AS(lr_lemma_check(F("4,1;3,2"), F("4,1;3,2"), P("4,1")), std::domain_error);
        CHECK_THROWS_AS(lr_lemma_check(F("4,1;3,2"), F("4,3;2,1"), P("4,1")), std::domain_error);
        CHECK_THROWS_AS(lr_lemma_check(F("2,1;2,1"), F("2,2;1,1"), P("2,1")), std::domain_error);
    }
    SUBCASE("all qualifying triples up to weight 10") {
        for (int n = 3; n <= 10; ++n)
            for (const auto& lam : partitions_of(n)) {
                if (!lam.has_distinct_parts()) continue;
                const auto ssp = enumerate_ssp_lambda(lam);
                for (const auto& A : ssp)
                    for (const auto& B : ssp) {
                        if (A == B) continue;
                        for (const auto& rho : A.factors()) {
                            if (rho.length() != 2 || B.contains(rho)) continue;
                            if (!agree_within(A, B, rho)) continue;
                            CHECK(lr_lemma_check(A, B, rho));
                        }
                    }
            }
    }
}

TEST_CASE("distinct_parts_separator") {
    SUBCASE("singleton class returns s_lambda") {
        const auto cert = distinct_parts_separator(F("2,1"));
        CHECK(cert.f == SchurVector::unit(P("2,1")));
        CHECK(cert.margin == 1);
    }
    SUBCASE("worked chain on 4,3,2,1") {
        const auto cert = distinct_parts_separator(F("4,3;2,1"));
        CHECK(cert.margin > 0);
        CHECK(cert.max_other <= 0);
        CHECK(separates_check(cert.f, F("4,3;2,1"), cert.mode).ok);
    }
    SUBCASE("every member of SSP over a staircase") {
        for (const auto& A : enumerate_ssp_lambda(P("5,4,3,2,1"))) {
            const auto cert = distinct_parts_separator(A);
            CHECK(separates_check(cert.f, A, cert.mode).ok);
        }
    }
    SUBCASE("repeated parts are rejected") {
        CHECK_THROWS_AS(distinct_parts_separator(F("2,1;2,1")), std::domain_error);
        CHECK_THROWS_AS(distinct_parts_separator(F("3,1;2")), std::domain_error);
    }
}

TEST_CASE("constructive separator agrees with the interval LP") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (!lam.has_distinct_parts()) continue;
            for (const auto& A : enumerate_ssp_lambda(lam)) {
                const auto cert = distinct_parts_separator(A);
                CHECK(separates_check(cert.f, A, cert.mode).ok);
                if (lam.length() >= 2) {
                    const auto lp = find_separator(A, lam, lambda_plus(lam));
                    REQUIRE(lp.feasible());
                    CHECK(separates_check(lp.certificate->f, A, lp.certificate->mode).ok);
                }
            }
        }
}

TEST_CASE("interval separators lift to global certificates") {
    // An interval separator separates from above, so the ideal-growing
    // lift applies directly to find_separator output.
    for (int n = 4; n <= 7; ++n)
        for (const auto& A : enumerate_ssp(n)) {
            const Partition lam = phi(A);
            if (lam.length() < 2) continue;
            const auto res = find_separator(A, lam, lambda_plusplus(lam));
            if (!res.feasible()) continue;
            CHECK(separates_check(res.certificate->f, A, SeparationMode::from_above()).ok);
            const SchurVector g = lift_separator(res.certificate->f, A);
            CHECK(separates_check(g, A, SeparationMode::global()).ok);
        }
}

TEST_CASE("conjecture one holds through N = 8") {
    for (int n = 1; n <= 8; ++n) {
        const auto rep = verify_conjecture1(n);
        CHECK(rep.consistent);
        CHECK(rep.extreme_set == rep.nested_set);
    }
    CHECK(verify_conjecture1(6).extreme_set.size() == 13);
}

TEST_CASE("verify_conjecture1 is deterministic across jobs") {
    const auto serial = verify_conjecture1(6, 1);
    const auto parallel = verify_conjecture1(6, 4);
    CHECK(serial.extreme_set == parallel.extreme_set);
    CHECK(serial.nested_set == parallel.nested_set);
    CHECK(serial.consistent == parallel.consistent);
}

TEST_CASE("strong separation routes through N = 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto rep = verify_strong(n);
        CHECK(rep.all_ok);
        for (const auto& e : rep.entries) {
            CHECK(e.feasible);
            CHECK(e.verified);
            if (e.lam.length() >= 2 && e.lam.length() % 2 == 0)
                CHECK((e.route == "dagger" || e.route == "plusplus"));
            if (e.lam.length() >= 3 && e.lam.length() % 2 == 1) CHECK(e.route == "up-dagger");
        }
    }
    // Direct odd solving agrees with the up-shift route.
    const auto direct = verify_strong(6, true);
    CHECK(direct.all_ok);
}
