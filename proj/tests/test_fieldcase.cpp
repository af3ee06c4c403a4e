#include "doctest.h"
#include "oracles.hpp"
#include "qfdiv/fieldcase.hpp"
#include "qfdiv/quadforms.hpp"
#include "qfdiv/tabulate.hpp"

using namespace qfdiv;

TEST_CASE("build_case")
{
    FieldCase fc = build_case(5, 3, 3);
    CHECK(fc.v == -116);
    CHECK(fc.m == 2);
    CHECK(fc.d == -29);
    CHECK(fc.D == -116);

    fc = build_case(17, 7, 3);
    CHECK(fc.v == -4864);
    CHECK(fc.m == 16);
    CHECK(fc.d == -19);
    CHECK(fc.D == -19);

    // q + m sqrt(d) has norm q^2 - m^2 d = p^n
    CHECK(fc.q * fc.q - fc.m * fc.m * fc.d == 17 * 17 * 17);

    CHECK_THROWS_AS(build_case(11, 37, 3), SizeViolation);
    CHECK_THROWS_AS(build_case(13, 47, 3), SizeViolation);
    CHECK_THROWS_AS(build_case(5, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_case(4, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_case(5, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_case(5, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_case(5, 3, 1), std::invalid_argument);
}

TEST_CASE("check_conditions")
{
    ConditionReport r = check_conditions(build_case(5, 3, 3));
    CHECK_FALSE(r.star_fail);
    CHECK_FALSE(r.cube_path);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.marker.empty());

    r = check_conditions(build_case(3, 5, 3));
    CHECK(r.star_fail);
    CHECK(r.marker == "*");
    CHECK(r.verdict == Verdict::Fail);

    r = check_conditions(build_case(5, 7, 3));
    CHECK_FALSE(r.star_fail);
    CHECK(r.cube_path);
    CHECK(r.pcube_fail_a);
    CHECK_FALSE(r.pcube_fail_b);
    CHECK(r.marker == "**");
    CHECK(r.verdict == Verdict::Fail);

    r = check_conditions(build_case(17, 7, 3));
    CHECK(r.pcube_fail_b);
    CHECK(r.marker == "**");

    // d = -19 = 1 mod 4 but 3 does not divide 5
    r = check_conditions(build_case(5, 13, 5));
    CHECK_FALSE(r.cube_path);
}

TEST_CASE("congruence to +-1 is automatic for |d| <= 2")
{
    CHECK(congruent_to_plus_minus_one(5, -1));
    CHECK(congruent_to_plus_minus_one(7, -2));
    CHECK(congruent_to_plus_minus_one(17, -6));
    CHECK(congruent_to_plus_minus_one(29, -10));
    CHECK_FALSE(congruent_to_plus_minus_one(3, -29));
}

TEST_CASE("verify")
{
    FieldCase fc = build_case(5, 3, 3);
    VerificationResult v = verify(fc, check_conditions(fc));
    CHECK(v.h == 6);
    CHECK(v.divisible);
    REQUIRE(v.order_p);
    CHECK(*v.order_p == 3);
    CHECK(*v.order_matches);

    fc = build_case(5, 7, 3);
    v = verify(fc, check_conditions(fc));
    CHECK(v.h == 1);
    CHECK_FALSE(v.divisible);
    CHECK_FALSE(v.order_p);
    CHECK_FALSE(v.order_matches);

    fc = build_case(19, 53, 3);
    ConditionReport r = check_conditions(fc);
    v = verify(fc, r);
    CHECK(fc.d == -2);
    CHECK(v.h == 1);
    CHECK(r.marker == "*");
    CHECK_FALSE(v.divisible);
}

TEST_CASE("verify flags a passing report on a field with extra units")
{
    FieldCase fc = build_case(3, 5, 3); // d = -2
    ConditionReport forged = check_conditions(fc);
    forged.verdict = Verdict::Pass;
    CHECK_THROWS_AS(verify(fc, forged), std::logic_error);
}

TEST_CASE("unit_case")
{
    auto [fc, r] = unit_case(3, 5);
    CHECK(fc.q == 1);
    CHECK(fc.v == -242);
    CHECK(fc.d == -2);
    CHECK(r.h == 1);
    CHECK_FALSE(r.divisible);

    std::tie(fc, r) = unit_case(5, 3);
    CHECK(fc.v == -124);
    CHECK(fc.d == -31);
    CHECK(r.h == oracle::naive_class_number(-31));
    CHECK(r.h == 3);
    CHECK(r.divisible);

    std::tie(fc, r) = unit_case(3, 3);
    CHECK(fc.v == -26);
    CHECK(fc.d == -26);
    CHECK(r.h == oracle::naive_class_number(-104));
    CHECK(r.h == 6);
    CHECK(r.divisible);
}

TEST_CASE("unit_case_sweep is sorted and complete")
{
    auto rows = unit_case_sweep(300);
    std::vector<std::pair<Int, Int>> pn;
    for (auto const& row : rows)
        pn.emplace_back(row.field.p, row.field.n);
    // 3^3, 3^5, 5^3 are the only odd prime powers p^n <= 300 with odd n >= 3
    CHECK(pn == std::vector<std::pair<Int, Int>>{{3, 3}, {3, 5}, {5, 3}});
    CHECK_FALSE(rows[1].result.divisible);
}

TEST_CASE("star_failure_scan")
{
    StarFailureScan s = star_failure_scan(3, 5, 50);
    CHECK(s.bound_holds());
    for (auto const& f : s.failing)
        CHECK(-f.d <= 4);

    s = star_failure_scan(5, 5, 50);
    CHECK(s.bound_holds());

    s = star_failure_scan(41, 5, 5);
    REQUIRE(s.failing.size() == 1);
    CHECK(s.failing[0].p == 5);
    CHECK(s.failing[0].v == -1444);
    CHECK(s.failing[0].d == -1);

    CHECK_THROWS_AS(star_failure_scan(3, 3, 50), std::invalid_argument);
    CHECK_THROWS_AS(star_failure_scan(3, 9, 50), std::invalid_argument);
    CHECK_THROWS_AS(star_failure_scan(4, 5, 50), std::invalid_argument);
}

TEST_CASE("divisibility, order and unit-group claims over the published ranges")
{
    int passing = 0;
    for (Int n : {3, 5}) {
        for (PaperPair const& pp : paper_pairs(n)) {
            FieldCase fc;
            try {
                fc = build_case(pp.p, pp.q, n);
            } catch (SizeViolation const&) {
                continue;
            }
            ConditionReport r = check_conditions(fc);
            VerificationResult v = verify(fc, r);
            CHECK((r.marker.empty()) == (r.verdict == Verdict::Pass));
            if (r.verdict != Verdict::Pass)
                continue;
            ++passing;
            CHECK(fc.d < -3);
            CHECK(v.h % n == 0);
            CHECK(v.order_p == n);
        }
    }
    CHECK(passing > 0);
}
