#include <doctest.h>

#include <random>

#include "frankl/arith.hpp"
#include "test_util.hpp"

using namespace frankl;
using namespace frankl::testutil;

TEST_SUITE_BEGIN("arith");

TEST_CASE("nth_prime first values") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(2) == 3);
}

TEST_CASE("nth_prime agrees with a trial-division oracle") {
  // Independent oracle: walk 2..30 and count primes by trial division.
  std::vector<std::uint64_t> oracle;
  for (std::uint64_t v = 2; v <= 30; ++v) {
    if (trial_division_prime(v)) oracle.push_back(v);
  }
  REQUIRE(oracle.size() >= 10);
  CHECK(oracle[9] == 29);
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(nth_prime(static_cast<PrimeIndex>(i + 1)) == oracle[i]);
  }
}

TEST_CASE("nth_prime respects the sieve cap") {
  CHECK_THROWS_AS(nth_prime(0), Error);
  std::size_t old_cap = sieve_cap();
  set_sieve_cap(100);
  CHECK_THROWS_AS(nth_prime(101), Error);
  CHECK_THROWS_AS(prime_index_of(1000003), Error);
  set_sieve_cap(old_cap);
  CHECK(nth_prime(100) == 541);
}

TEST_CASE("factorize canonical examples") {
  CHECK(factorize(18) == ExponentVector::from_entries({{1, 1}, {2, 2}}));
  CHECK(factorize(1) == ExponentVector{});
  CHECK(factorize(16) == ExponentVector::from_entries({{1, 4}}));
  CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("to_decimal examples") {
  CHECK(to_decimal(ExponentVector{}) == "1");
  CHECK(to_decimal(ExponentVector::from_entries({{1, 1}, {2, 2}})) == "18");
  CHECK(to_decimal(ExponentVector::from_entries(
            {{1, 1}, {2, 1}, {3, 1}, {4, 1}})) == "210");
  // Past 64 bits: 2^80.
  CHECK(to_decimal(ExponentVector::from_entries({{1, 80}})) ==
        "1208925819614629174706176");
}

TEST_CASE("decimal round trip over 1..100000") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    ExponentVector v = factorize(n);
    CHECK(to_decimal(v) == std::to_string(n));
    CHECK(parse_number(to_decimal(v)) == v);
  }
}

TEST_CASE("lcm and gcd examples") {
  CHECK(lcm(factorize(4), factorize(6)) == factorize(12));
  CHECK(gcd(factorize(24), factorize(36)) == factorize(12));
  CHECK(gcd(factorize(17), factorize(1)) == factorize(1));
  CHECK(lcm(factorize(17), factorize(1)) == factorize(17));

  ExponentVector l = factorize(1), g = factorize(6);
  for (std::uint64_t v : {6, 10, 14, 30, 42, 70, 210}) {
    l = lcm(l, factorize(v));
    g = gcd(g, factorize(v));
  }
  CHECK(to_decimal(l) == "210");
  CHECK(to_decimal(g) == "2");
}

TEST_CASE("divides examples") {
  CHECK(divides(factorize(12), factorize(24)));
  CHECK(divides(factorize(5), factorize(30)));
  CHECK_FALSE(divides(factorize(5), factorize(6)));
  CHECK(divides(factorize(1), factorize(997)));
}

TEST_CASE("sigma_ppe examples") {
  CHECK(sigma_ppe(factorize(1)) == 0);
  CHECK(sigma_ppe(factorize(24)) == 4);
  CHECK(sigma_ppe(factorize(210)) == 4);
}

TEST_CASE("lattice identities on random pairs") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 2000; ++iter) {
    ExponentVector a = factorize(1 + draw(rng, 5000));
    ExponentVector b = factorize(1 + draw(rng, 5000));
    ExponentVector c = factorize(1 + draw(rng, 5000));

    CHECK(lcm(a, b) == lcm(b, a));
    CHECK(gcd(a, b) == gcd(b, a));
    CHECK(lcm(a, lcm(b, c)) == lcm(lcm(a, b), c));
    CHECK(gcd(a, gcd(b, c)) == gcd(gcd(a, b), c));
    CHECK(lcm(a, a) == a);
    CHECK(gcd(a, a) == a);
    // Per-index max + min = sum.
    CHECK(sigma_ppe(lcm(a, b)) + sigma_ppe(gcd(a, b)) ==
          sigma_ppe(a) + sigma_ppe(b));
    // Divisibility characterizations.
    CHECK(divides(a, b) == (lcm(a, b) == b));
    CHECK(divides(a, b) == (gcd(a, b) == a));
  }
}

TEST_CASE("parse_number accepts both text forms") {
  CHECK(parse_number("24") == factorize(24));
  CHECK(parse_number("2^3*3") == factorize(24));
  CHECK(parse_number("2 ^ 3 * 3") == factorize(24));
  CHECK(parse_number("1") == ExponentVector{});
  CHECK(parse_number("13") == factorize(13));
  CHECK(to_factored(factorize(24)) == "2^3*3");
  CHECK(to_factored(factorize(1)) == "1");
  CHECK(parse_number(to_factored(factorize(360))) == factorize(360));
}

TEST_CASE("parse_number rejects malformed input") {
  CHECK_THROWS_AS(parse_number(""), Error);
  CHECK_THROWS_AS(parse_number("0"), Error);
  CHECK_THROWS_AS(parse_number("-3"), Error);
  CHECK_THROWS_AS(parse_number("4^2"), Error);   // base not prime
  CHECK_THROWS_AS(parse_number("2^0"), Error);
  CHECK_THROWS_AS(parse_number("2*2"), Error);   // repeated prime
  CHECK_THROWS_AS(parse_number("2^"), Error);
  CHECK_THROWS_AS(parse_number("99999999999999999999999"), Error);
  CHECK_THROWS_AS(parse_number("2^999999"), Error);  // exponent cap
}

TEST_CASE("prime power labels and parsing") {
  CHECK(PrimePower{1, 1}.label() == "2");
  CHECK(PrimePower{1, 4}.label() == "2^4");
  CHECK(PrimePower{2, 2}.label() == "3^2");
  CHECK(parse_prime_power("3^2") == PrimePower{2, 2});
  CHECK(prime_power_from_value(factorize(9)) == PrimePower{2, 2});
  CHECK_THROWS_AS(prime_power_from_value(factorize(6)), Error);
  CHECK_THROWS_AS(prime_power_from_value(factorize(1)), Error);
}

TEST_CASE("divide_exact and complement") {
  CHECK(divide_exact(factorize(24), factorize(6)) == factorize(4));
  CHECK_THROWS_AS(divide_exact(factorize(6), factorize(4)), Error);
  CHECK(exponent_complement(factorize(24), factorize(1)) == factorize(24));
  CHECK(exponent_complement(factorize(24), factorize(12)) == factorize(2));
}

TEST_CASE("numeric order is the integer order") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 500; ++iter) {
    std::uint64_t x = 1 + draw(rng, 100000);
    std::uint64_t y = 1 + draw(rng, 100000);
    CHECK(numeric_less(factorize(x), factorize(y)) == (x < y));
  }
  // Lengths differ: 97 < 1001.
  CHECK(numeric_less(factorize(97), factorize(1001)));
}

TEST_SUITE_END();
