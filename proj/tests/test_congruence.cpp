#include <doctest.h>

#include <stdexcept>

#include "cyclo/arith.hpp"
#include "cyclo/congruence.hpp"

using namespace cyclo;

TEST_CASE("reduced form counts agree with classical class numbers") {
    CHECK(reduced_forms_count(-3) == 1);
    CHECK(reduced_forms_count(-4) == 1);
    CHECK(reduced_forms_count(-7) == 1);
    CHECK(reduced_forms_count(-12) == 1);   // (2,2,2) is imprimitive
    CHECK(reduced_forms_count(-23) == 3);
    CHECK(reduced_forms_count(-47) == 5);
    CHECK(reduced_forms_count(-56) == 4);
    CHECK(reduced_forms_count(-71) == 7);
    CHECK(reduced_forms_count(-163) == 1);
    CHECK(reduced_forms_count(-231) == 12);
    CHECK_THROWS_AS(reduced_forms_count(5), std::invalid_argument);
    CHECK_THROWS_AS(reduced_forms_count(0), std::invalid_argument);
    CHECK_THROWS_AS(reduced_forms_count(-5), std::invalid_argument);  // -5 = 3 mod 4
}

TEST_CASE("quad_report frozen values for p = 7, 23, 47") {
    quad_result r7 = quad_report(make_params(7));
    CHECK(r7.alt_sum == -7);
    CHECK(r7.class_number == 1);
    CHECK(r7.oracle_count == 1);
    CHECK(r7.half_sum == -7);
    CHECK(r7.parity_sum == 1);
    CHECK(r7.half_divisible);
    CHECK(r7.parity_nonzero);
    CHECK(r7.parity_divisible);
    CHECK(r7.index_sets_ok);
    CHECK(r7.first_bad_d == 0);

    quad_result r23 = quad_report(make_params(23));
    CHECK(r23.alt_sum == -69);
    CHECK(r23.class_number == 3);
    CHECK(r23.oracle_count == 3);
    CHECK(r23.half_sum == -69);
    CHECK(r23.parity_sum == 3);
    CHECK(r23.index_sets_ok);

    quad_result r47 = quad_report(make_params(47));
    CHECK(r47.alt_sum == -235);
    CHECK(r47.class_number == 5);
    CHECK(r47.oracle_count == 5);
    CHECK(r47.half_sum == -235);
    CHECK(r47.parity_sum == 5);
    CHECK(r47.index_sets_ok);
}

TEST_CASE("quad_report rejects p outside 3 mod 4 or the degenerate p = 3") {
    CHECK_THROWS_AS(quad_report(make_params(3)), std::invalid_argument);
    CHECK_THROWS_AS(quad_report(make_params(13)), std::invalid_argument);
    CHECK_THROWS_AS(quad_report(make_params(29)), std::invalid_argument);
}

TEST_CASE("biquad_report frozen values and the p = 5 boundary") {
    biquad_result r13 = biquad_report(make_params(13));
    CHECK(r13.s_even == -13);
    CHECK(r13.s_odd == -13);
    CHECK(r13.S == 338);
    CHECK(r13.divisible);
    CHECK(r13.s_div_p2 == 2);

    biquad_result r29 = biquad_report(make_params(29));
    CHECK(r29.s_even == 29);
    CHECK(r29.s_odd == -29);
    CHECK(r29.S == 1682);
    CHECK(r29.divisible);
    CHECK(r29.s_div_p2 == 2);

    // the boundary prime genuinely fails divisibility; the report records it
    biquad_result r5 = biquad_report(make_params(5));
    CHECK(r5.S == 10);
    CHECK(!r5.divisible);
    CHECK(r5.s_div_p2 == 0);

    CHECK_THROWS_AS(biquad_report(make_params(7)), std::invalid_argument);
    CHECK_THROWS_AS(biquad_report(make_params(17)), std::invalid_argument);
}

TEST_CASE("psquare_report frozen survivors for p = 37 and p = 157") {
    psquare_result r37 = psquare_report(make_params(37));
    CHECK(r37.candidates.size() == 17);
    u64 pass_p = 0, pass_p2 = 0;
    for (const psquare_candidate& c : r37.candidates) {
        pass_p += c.passes_mod_p;
        pass_p2 += c.passes_mod_p2;
        if (c.passes_mod_p) {
            CHECK(c.m == 2);
            CHECK(c.mu == 32);
            CHECK(c.c2 == 370);  // 10 * 37: vanishes mod p but not mod p^2
        }
    }
    CHECK(pass_p == 1);
    CHECK(pass_p2 == 0);

    psquare_result r157 = psquare_report(make_params(157));
    std::vector<psquare_candidate> survivors;
    for (const psquare_candidate& c : r157.candidates)
        if (c.passes_mod_p) survivors.push_back(c);
    REQUIRE(survivors.size() == 2);
    CHECK(survivors[0].m == 23);
    CHECK(survivors[0].mu == 62);
    CHECK(survivors[0].c2 == 19311);
    CHECK(survivors[1].m == 47);
    CHECK(survivors[1].mu == 66);
    CHECK(survivors[1].c2 == 9577);
    for (const psquare_candidate& c : survivors) CHECK(!c.passes_mod_p2);
}

TEST_CASE("every c2 of a surviving candidate is divisible by p") {
    // c2 restates Q(mu) mod p^2, so p | c2 exactly when c1 = 0
    for (u64 p : {37u, 157u, 353u, 379u}) {
        psquare_result r = psquare_report(make_params(p));
        for (const psquare_candidate& c : r.candidates)
            if (c.passes_mod_p) CHECK(c.c2 % p == 0);
    }
}

TEST_CASE("principality_test frozen verdicts") {
    principality_result r7 = principality_test(make_params(7), 2);
    CHECK(r7.f == 3);
    CHECK(r7.m == 2);
    CHECK(r7.sums == std::vector<u64>{6});
    CHECK(r7.p_principal);

    principality_result r11 = principality_test(make_params(11), 3);
    CHECK(r11.f == 5);
    CHECK(r11.m == 2);
    CHECK(r11.sums == std::vector<u64>{10});
    CHECK(r11.p_principal);

    principality_result r23 = principality_test(make_params(23), 2);
    CHECK(r23.f == 11);
    CHECK(r23.m == 2);
    CHECK(r23.sums == std::vector<u64>{20});
    CHECK(r23.p_principal);

    // 31 is the classical counterexample: evaluation hits zero, so the
    // criterion stays silent instead of certifying principality
    principality_result r31 = principality_test(make_params(31), 2);
    CHECK(r31.f == 5);
    CHECK(r31.m == 6);
    CHECK(r31.sums == std::vector<u64>{17, 0, 28, 0, 8});
    CHECK(!r31.p_principal);

    principality_result r31b = principality_test(make_params(31), 5);
    CHECK(r31b.f == 3);
    CHECK(r31b.m == 10);
    CHECK(r31b.sums == std::vector<u64>{16, 0, 1, 0, 28, 0, 4, 0, 8});
    CHECK(!r31b.p_principal);
}

TEST_CASE("principality_test argument validation") {
    cyclo_params c7 = make_params(7);
    CHECK_THROWS_AS(principality_test(c7, 7), std::invalid_argument);   // q = p
    CHECK_THROWS_AS(principality_test(c7, 6), std::invalid_argument);   // composite
    CHECK_THROWS_AS(principality_test(c7, 29), std::invalid_argument);  // 29 = 1 mod 7
    // q = 2 is a legitimate residue even though h = 2 never enters the scan;
    // 2 generates mod 11, so m = 1 and the criterion is vacuous
    principality_result r = principality_test(make_params(11), 2);
    CHECK(r.f == 10);
    CHECK(r.m == 1);
    CHECK(r.sums.empty());
    CHECK(r.p_principal);
}
