#include <doctest.h>

#include <stdexcept>

#include "cyclo/arith.hpp"

using namespace cyclo;

TEST_CASE("mulmod and powmod survive 64-bit extremes") {
    u64 big = 18446744073709551557ull;  // largest 64-bit prime
    CHECK(mulmod(big - 1, big - 1, big) == 1);  // (-1)^2
    CHECK(powmod(2, big - 1, big) == 1);        // Fermat
    CHECK(powmod(0, 0, 7) == 1);
    CHECK(powmod(5, 0, 7) == 1);
    CHECK(powmod(5, 1, 7) == 5);
    CHECK(powmod(2, 10, 1000000007) == 1024);
}

TEST_CASE("is_prime is exact on known primes, composites, and pseudoprimes") {
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(!is_prime(4));
    CHECK(is_prime(499));
    CHECK(!is_prime(561));   // Carmichael
    CHECK(!is_prime(29341)); // Carmichael
    CHECK(is_prime(2305843009213693951ull));   // 2^61 - 1
    CHECK(!is_prime(2305843009213693953ull));  // 2^61 + 1 = 3 * ...
    CHECK(is_prime(18446744073709551557ull));
    CHECK(!is_prime(18446744073709551555ull));
    // strong pseudoprime to several bases, caught by the fixed witness set
    CHECK(!is_prime(3215031751ull));
}

TEST_CASE("order_mod matches hand values and rejects multiples of p") {
    CHECK(order_mod(2, 7) == 3);
    CHECK(order_mod(3, 7) == 6);
    CHECK(order_mod(1, 7) == 1);
    CHECK(order_mod(-1, 7) == 2);
    CHECK(order_mod(2, 23) == 11);
    CHECK(order_mod(2, 31) == 5);
    CHECK(order_mod(5, 31) == 3);
    CHECK_THROWS_AS(order_mod(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(order_mod(14, 7), std::invalid_argument);
}

TEST_CASE("smallest primitive roots agree with the classical table") {
    CHECK(smallest_primitive_root(3) == 2);
    CHECK(smallest_primitive_root(5) == 2);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(23) == 5);
    CHECK(smallest_primitive_root(31) == 3);
    CHECK(smallest_primitive_root(41) == 6);
    CHECK(smallest_primitive_root(43) == 3);
    CHECK(smallest_primitive_root(191) == 19);
    CHECK(smallest_primitive_root(409) == 21);
    CHECK(smallest_primitive_root(457) == 13);
}

TEST_CASE("primes_in_range is inclusive on both ends") {
    CHECK(primes_in_range(10, 30) == std::vector<u64>{11, 13, 17, 19, 23, 29});
    CHECK(primes_in_range(23, 23) == std::vector<u64>{23});
    CHECK(primes_in_range(24, 28) == std::vector<u64>{});
    CHECK(primes_in_range(30, 10) == std::vector<u64>{});
    CHECK(primes_in_range(0, 2) == std::vector<u64>{2});
}

TEST_CASE("make_params builds the power table with negative-index wraparound") {
    cyclo_params c = make_params(7);
    CHECK(c.p == 7);
    CHECK(c.v == 3);
    CHECK(c.vpow == std::vector<u64>{1, 3, 2, 6, 4, 5});
    CHECK(c.at(0) == 1);
    CHECK(c.at(-1) == 5);   // 3^5 = 5 mod 7
    CHECK(c.at(-6) == 1);
    CHECK(c.at(7) == 3);
    CHECK(c.at(-13) == 5);
    CHECK_THROWS_AS(make_params(9), std::invalid_argument);
    CHECK_THROWS_AS(make_params(2), std::invalid_argument);
    CHECK_THROWS_AS(make_params(1), std::invalid_argument);
    CHECK_THROWS_AS(make_params(0), std::invalid_argument);
}

TEST_CASE("ind_v inverts the power table") {
    cyclo_params c = make_params(7);
    CHECK(ind_v(c, 1) == 0);
    CHECK(ind_v(c, 3) == 1);
    CHECK(ind_v(c, 6) == 3);
    for (u64 d = 1; d < 7; ++d) CHECK(c.at(i64(ind_v(c, d))) == d);
    CHECK_THROWS_AS(ind_v(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(ind_v(c, 7), std::invalid_argument);
}
