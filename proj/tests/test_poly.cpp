#include <doctest.h>

#include <stdexcept>

#include "cyclo/arith.hpp"
#include "cyclo/poly.hpp"

using namespace cyclo;

TEST_CASE("integer polynomial basics: trim, degree, arithmetic") {
    int_poly z = ip_from({});
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    CHECK(ip_from({0, 0, 0}).is_zero());
    int_poly a = ip_from({1, 0, 2, 0});
    CHECK(a.degree() == 2);
    CHECK(a.coeff(0) == 1);
    CHECK(a.coeff(1) == 0);
    CHECK(a.coeff(2) == 2);
    CHECK(a.coeff(5) == 0);
    CHECK(ip_mul(ip_from({1, 1}), ip_from({-1, 1})) == ip_from({-1, 0, 1}));
    CHECK(ip_sub(ip_from({3, 1}), ip_from({1, 1})) == ip_from({2}));
    CHECK(ip_scale(ip_from({1, -2}), -3) == ip_from({-3, 6}));
    CHECK(ip_mul(a, z).is_zero());
}

TEST_CASE("mod polynomial construction reduces negatives into range") {
    mod_poly a = mp_from(7, {-1, 8, -13});
    CHECK(a.h == 7);
    CHECK(a.c == std::vector<u64>{6, 1, 1});
    CHECK(mp_from(7, {0, 0}).degree() == -1);
    CHECK(mp_xn_plus(5, 3, 1).c == std::vector<u64>{1, 0, 0, 1});
    CHECK(mp_xn_plus(5, 2, -1).c == std::vector<u64>{4, 0, 1});
}

TEST_CASE("mod polynomial ring operations") {
    // (X+1)(X+2) = X^2 + 3X + 2 over F_5
    CHECK(mp_mul(mp_from(5, {1, 1}), mp_from(5, {2, 1})) == mp_from(5, {2, 3, 1}));
    CHECK(mp_add(mp_from(5, {4, 1}), mp_from(5, {1, 4})) == mp_from(5, {0, 0}));
    CHECK(mp_sub(mp_from(5, {1, 1}), mp_from(5, {1, 1})).degree() == -1);
    mod_poly a = mp_from(7, {1, 2, 0, 1});  // X^3 + 2X + 1
    mod_poly b = mp_from(7, {3, 1});        // X + 3
    mod_poly q, r;
    mp_divrem(a, b, &q, &r);
    CHECK(mp_add(mp_mul(q, b), r) == a);
    CHECK(r.degree() < b.degree());
    CHECK(mp_mod(a, b) == r);
    CHECK_THROWS_AS(mp_div_exact(a, b), std::logic_error);
    mod_poly prod = mp_mul(a, b);
    CHECK(mp_div_exact(prod, b) == a);
    CHECK(mp_eval(mp_from(7, {1, 2, 0, 1}), 2) == (8 + 4 + 1) % 7);
    CHECK(mp_derivative(mp_from(7, {5, 1, 0, 2})).c == std::vector<u64>{1, 0, 6});
}

TEST_CASE("modular exponentiation of polynomials matches repeated multiplication") {
    mod_poly f = mp_from(13, {1, 0, 0, 1});  // X^3 + 1
    mod_poly x = mp_from(13, {0, 1});
    mod_poly acc = mp_from(13, {1});
    for (int i = 0; i < 29; ++i) acc = mp_mod(mp_mul(acc, x), f);
    CHECK(mp_powmod(x, 29, f) == acc);
    CHECK(xq_power(f, 1) == mp_powmod(x, 13, f));
    CHECK(xq_power(f, 2) == mp_powmod(x, 13 * 13, f));
}

TEST_CASE("poly_gcd normalizes to monic and handles zero inputs") {
    mod_poly a = mp_mul(mp_from(7, {1, 1}), mp_from(7, {2, 1}));
    mod_poly b = mp_mul(mp_from(7, {1, 1}), mp_from(7, {3, 1}));
    CHECK(poly_gcd(a, b) == mp_from(7, {1, 1}));
    // scaling by units must not change the result
    CHECK(poly_gcd(mp_from(7, {3, 3}), mp_from(7, {5, 5})) == mp_from(7, {1, 1}));
    CHECK(poly_gcd(a, mp_from(7, {})) == mp_monic(a));
    CHECK(poly_gcd(mp_from(7, {}), mp_from(7, {})).degree() == -1);
    CHECK(poly_gcd(a, mp_from(7, {4})) == mp_from(7, {1}));
    CHECK_THROWS_AS(poly_gcd(mp_from(7, {1, 1}), mp_from(5, {1, 1})), std::invalid_argument);
}

TEST_CASE("reduce_mod maps integer polynomials into F_h") {
    int_poly a = ip_from({-1, 14, 6});
    CHECK(reduce_mod(a, 7) == mp_from(7, {6, 0, 6}));
    CHECK(reduce_mod(ip_from({7, 14}), 7).degree() == -1);
}

TEST_CASE("factor_mod on hand-factored inputs in canonical order") {
    // (X+1)^3 over F_3: the h-th-root branch of squarefree decomposition
    factor_list fs = factor_mod(mp_from(3, {1, 3, 3, 1}), 0);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].poly == mp_from(3, {1, 1}));
    CHECK(fs[0].mult == 3);

    // X^2 + 1 over F_5 = (X+2)(X+3); canonical order sorts by constant term
    fs = factor_mod(mp_from(5, {1, 0, 1}), 0);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == mp_from(5, {2, 1}));
    CHECK(fs[1].poly == mp_from(5, {3, 1}));
    CHECK(fs[0].mult == 1);
    CHECK(fs[1].mult == 1);

    // X^2 + 1 is irreducible over F_3
    fs = factor_mod(mp_from(3, {1, 0, 1}), 0);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].poly == mp_from(3, {1, 0, 1}));
    CHECK(fs[0].mult == 1);

    // mixed multiplicities and degrees: (X+1)^2 (X^2+1) over F_3
    mod_poly mixed = mp_mul(mp_mul(mp_from(3, {1, 1}), mp_from(3, {1, 1})), mp_from(3, {1, 0, 1}));
    fs = factor_mod(mixed, 0);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == mp_from(3, {1, 1}));
    CHECK(fs[0].mult == 2);
    CHECK(fs[1].poly == mp_from(3, {1, 0, 1}));
    CHECK(fs[1].mult == 1);

    // constants carry no factors
    CHECK(factor_mod(mp_from(7, {4}), 0).empty());
    CHECK_THROWS_AS(factor_mod(mp_from(7, {}), 0), std::invalid_argument);
}

TEST_CASE("factor_mod output is seed-independent after canonical sorting") {
    splitmix64 rng{987654321};
    for (int trial = 0; trial < 40; ++trial) {
        u64 h = std::vector<u64>{3, 5, 7, 11, 13}[trial % 5];
        int deg = 1 + int(rng.next() % 8);
        std::vector<i64> coeffs(deg + 1);
        for (int i = 0; i < deg; ++i) coeffs[i] = i64(rng.next() % h);
        coeffs[deg] = 1;
        mod_poly a = mp_from(h, coeffs);
        factor_list f0 = factor_mod(a, 1);
        factor_list f1 = factor_mod(a, 99991);
        REQUIRE(f0.size() == f1.size());
        for (size_t i = 0; i < f0.size(); ++i) {
            CHECK(f0[i].poly == f1[i].poly);
            CHECK(f0[i].mult == f1[i].mult);
        }
        // re-multiplication closes the loop
        mod_poly prod = mp_from(h, {1});
        for (const factor& f : f0)
            for (u64 k = 0; k < f.mult; ++k) prod = mp_mul(prod, f.poly);
        CHECK(prod == a);
    }
}

TEST_CASE("poly_eval_mod handles negative coefficients and points") {
    int_poly a = ip_from({-1, 0, 1});  // X^2 - 1
    CHECK(poly_eval_mod(a, 5, 7) == 3);
    CHECK(poly_eval_mod(a, -1, 7) == 0);
    CHECK(poly_eval_mod(a, 1, 7) == 0);
    CHECK(poly_eval_mod(ip_from({-3}), 100, 7) == 4);
    CHECK(poly_eval_mod(ip_from({}), 3, 11) == 0);
    // large modulus: p^2 territory used by the second congruence
    CHECK(poly_eval_mod(ip_from({0, 1}), 491, 491 * 491) == 491);
}

TEST_CASE("poly_mod_xd folds exponents mod d") {
    int_poly a = ip_from({0, 0, 0, 0, 0, 1});  // X^5
    CHECK(poly_mod_xd(a, 2) == ip_from({0, 1}));
    CHECK(poly_mod_xd(a, 6) == a);
    CHECK(poly_mod_xd(a, 1) == ip_from({1}));
    CHECK(poly_mod_xd(ip_from({1, 2, 3, 4}), 2) == ip_from({4, 6}));
}

TEST_CASE("renderers produce the documented shapes") {
    CHECK(to_pretty(mp_from(11, {6, 10, 1})) == "X^2 + 10X + 6");
    CHECK(to_pretty(mp_from(7, {1, 1})) == "X + 1");
    CHECK(to_pretty(mp_from(7, {1})) == "1");
    CHECK(to_pretty(mp_from(7, {})) == "0");
    CHECK(to_pretty(mp_from(7, {0, 3})) == "3X");
    CHECK(to_compact(mp_from(11, {6, 10, 1})) == "X^2+10X+6");
    factor_list fs = {{mp_from(11, {1, 1}), 1}, {mp_from(11, {6, 10, 1}), 1}};
    CHECK(factors_csv(fs) == "(X+1)^1;(X^2+10X+6)^1");
    CHECK(factors_pretty(fs) == "(X + 1)(X^2 + 10X + 6)");
    factor_list sq = {{mp_from(5, {3, 1}), 2}};
    CHECK(factors_csv(sq) == "(X+3)^2");
    CHECK(factors_pretty(sq) == "(X + 3)^2");
    factor_list lone = {{mp_from(5, {3, 1}), 1}};
    CHECK(factors_pretty(lone) == "X + 3");
    CHECK(factors_csv({}) == "");
    CHECK(to_pretty(ip_from({-6, -2, 1})) == "X^2 - 2X - 6");
    CHECK(to_pretty(ip_from({1, 2})) == "2X + 1");
    CHECK(to_pretty(ip_from({0, -1})) == "-X");
    CHECK(to_pretty(ip_from({})) == "0");
}

TEST_CASE("canonical factor comparator orders by degree then coefficients") {
    CHECK(factor_poly_less(mp_from(7, {5, 1}), mp_from(7, {0, 0, 1})));
    CHECK(factor_poly_less(mp_from(7, {2, 1}), mp_from(7, {3, 1})));
    CHECK(!factor_poly_less(mp_from(7, {3, 1}), mp_from(7, {3, 1})));
}
