#include <doctest.h>

#include <algorithm>
#include <random>

#include "frankl/bridge.hpp"
#include "frankl/search.hpp"
#include "test_util.hpp"

using namespace frankl;
using namespace frankl::testutil;

namespace {

PrimePowerSet pps(std::initializer_list<std::uint64_t> values) {
  std::vector<PrimePower> powers;
  for (std::uint64_t v : values) {
    powers.push_back(prime_power_from_value(factorize(v)));
  }
  return PrimePowerSet::from_powers(std::move(powers));
}

std::vector<std::string> power_labels(const PrimePowerSet& s) {
  std::vector<std::string> out;
  for (const auto& p : s.powers()) out.push_back(p.label());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("bridge");

TEST_CASE("f of the worked integers") {
  CHECK(power_labels(f_map(factorize(18))) ==
        std::vector<std::string>{"2", "3", "3^2"});
  CHECK(power_labels(f_map(factorize(16))) ==
        std::vector<std::string>{"2", "2^2", "2^3", "2^4"});
  CHECK(f_map(factorize(1)).empty());
  CHECK(f_map(factorize(18)).size() == sigma_ppe(factorize(18)));
}

TEST_CASE("g of valid chain sets") {
  CHECK(to_decimal(g_map(pps({2, 3, 9}))) == "18");
  CHECK(to_decimal(g_map(pps({2, 4, 8, 16}))) == "16");
  CHECK(to_decimal(g_map(PrimePowerSet{})) == "1");
}

TEST_CASE("g rejects chain violations and names the gap") {
  // {2, 9}: 3^2 without 3.
  CHECK_THROWS_WITH_AS(g_map(pps({2, 9})),
                       doctest::Contains("missing 3"), Error);
  // {2, 3, 27}: 3^3 without 3^2.
  CHECK_THROWS_WITH_AS(g_map(pps({2, 3, 27})),
                       doctest::Contains("missing 3^2"), Error);
  for (auto bad : {pps({16}), pps({2, 16}), pps({4, 16}), pps({8, 16}),
                   pps({2, 4, 16}), pps({4, 8, 16})}) {
    CHECK(chain_gap(bad).has_value());
    CHECK_THROWS_AS(g_map(bad), Error);
  }
  CHECK_FALSE(chain_gap(pps({2, 4, 8, 16})).has_value());
}

TEST_CASE("f and g invert each other over 1..100000") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    ExponentVector v = factorize(n);
    PrimePowerSet image = f_map(v);
    CHECK_FALSE(chain_gap(image).has_value());
    CHECK(g_map(image) == v);
  }
}

TEST_CASE("lcm/gcd turn into union/intersection") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 2000; ++iter) {
    ExponentVector a = factorize(1 + draw(rng, 100000));
    ExponentVector b = factorize(1 + draw(rng, 100000));
    CHECK(f_map(lcm(a, b)) == set_union(f_map(a), f_map(b)));
    CHECK(f_map(gcd(a, b)) == set_intersection(f_map(a), f_map(b)));
    CHECK(divides(a, b) == is_subset(f_map(a), f_map(b)));
  }
  // m-ary folds.
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<ExponentVector> vs;
    for (int k = 0; k < 5; ++k) vs.push_back(factorize(1 + draw(rng, 5000)));
    ExponentVector l = vs[0], g = vs[0];
    PrimePowerSet lu = f_map(vs[0]), gi = f_map(vs[0]);
    for (const auto& v : vs) {
      l = lcm(l, v);
      g = gcd(g, v);
      lu = set_union(lu, f_map(v));
      gi = set_intersection(gi, f_map(v));
    }
    CHECK(f_map(l) == lu);
    CHECK(f_map(g) == gi);
  }
}

TEST_CASE("primes are exactly the singleton images") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    bool is_prime = trial_division_prime(n);
    CHECK((f_map(factorize(n)).size() == 1) == is_prime);
  }
}

TEST_CASE("closedness corresponds through f on random closures") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomNumSetParams params;
    params.seed = seed;
    params.draws = 4;
    params.max_prime_index = 3;
    params.max_exponent = 2;
    params.gcd_closed = (seed % 2 == 0);
    NumberSet n = random_closed_numset(params);
    if (params.gcd_closed) {
      // f(N) is intersection-closed iff N is GCD-closed.
      NumberSet as_lcm = lcm_closure(n);
      SetFamily f_of_lcm = numset_to_family(as_lcm);
      CHECK(is_union_closed(f_of_lcm));
      CHECK(is_gcd_closed(as_lcm) == is_intersection_closed(f_of_lcm));
    } else {
      SetFamily image = numset_to_family(n);
      CHECK(is_union_closed(image));
      CHECK(is_gcd_closed(n) == is_intersection_closed(image));
    }
  }
}

TEST_CASE("family_to_numset on the worked family") {
  NumberSet image = family_to_numset(frankl8());
  CHECK(decimals(image) == strings({1, 2, 6, 7, 14, 30, 42, 210}));
  CHECK(is_lcm_closed(image));
  CHECK(image.size() == 8);
}

TEST_CASE("family_to_numset small cases and errors") {
  CHECK(decimals(family_to_numset(make_family(1, {{}}))) == strings({1}));
  CHECK(decimals(family_to_numset(make_family(2, {{1}, {2}, {1, 2}}))) ==
        strings({2, 3, 6}));
  CHECK_THROWS_AS(family_to_numset(make_family(2, {{1}, {2}})), Error);
  CHECK_THROWS_AS(family_to_numset(SetFamily{}), Error);
}

TEST_CASE("numset_to_family on the worked set") {
  SetFamily image = numset_to_family(make_set({1, 2, 3, 4, 6, 8, 12, 24}));
  CHECK(image.universe().labels() ==
        std::vector<std::string>{"2", "2^2", "2^3", "3"});
  SetFamily expected(Universe({"2", "2^2", "2^3", "3"}),
                     {
                         0b0000,  // 1
                         0b0001,  // 2
                         0b1000,  // 3
                         0b0011,  // 4
                         0b1001,  // 6
                         0b0111,  // 8
                         0b1011,  // 12
                         0b1111,  // 24
                     });
  CHECK(image == expected);
  CHECK(is_union_closed(image));
}

TEST_CASE("numset_to_family small cases and errors") {
  SetFamily one = numset_to_family(make_set({1}));
  CHECK(one.universe().size() == 0);
  CHECK(one.size() == 1);
  CHECK(decimals(family_to_numset(one)) == strings({1}));

  SetFamily simple = numset_to_family(make_set({2, 3, 6}));
  CHECK(simple == SetFamily(Universe({"2", "3"}), {0b01, 0b10, 0b11}));
  CHECK_THROWS_AS(numset_to_family(make_set({2, 3})), Error);
}

TEST_CASE("abundance transports through the bridge") {
  std::mt19937_64 rng(5551212);
  for (int iter = 0; iter < 100; ++iter) {
    // Random union-closed family over up to 5 elements.
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= 5; ++i) labels.push_back(std::to_string(i));
    std::vector<MemberBits> seeds;
    std::size_t k = 1 + draw(rng, 4);
    for (std::size_t j = 0; j < k; ++j) seeds.push_back(draw(rng, 32));
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    SetFamily s = union_closure(SetFamily(Universe(labels), seeds));

    NumberSet n = family_to_numset(s);
    auto family_report = abundant_elements(s);
    auto numset_report = abundant_divisors(n);
    CHECK(family_report.conjecture == numset_report.conjecture1);
    // Element-by-element: position i pairs with the i-th prime.
    for (const auto& [label, count] : family_report.element_counts) {
      PrimeIndex i = static_cast<PrimeIndex>(std::stoul(label));
      std::size_t divisor_count = 0;
      for (const auto& m : n.members()) {
        if (divides(PrimePower{i, 1}, m)) ++divisor_count;
      }
      CHECK(count == divisor_count);
    }

    // Round trip is set-isomorphic: same signature.
    SetFamily back = numset_to_family(n);
    CHECK(family_signature(back) == family_signature(s));
  }
}

TEST_SUITE_END();
