#include <doctest.h>

#include "frankl/io.hpp"
#include "test_util.hpp"

using namespace frankl;
using namespace frankl::testutil;

TEST_SUITE_BEGIN("io");

TEST_CASE("number sets parse from strings, objects, and round trip") {
  NumberSet n = number_set_from_json(Json::parse(R"(["1","2","2^2*3"])"));
  CHECK(decimals(n) == strings({1, 2, 12}));

  Json emitted = number_set_to_json(n);
  CHECK(number_set_from_json(emitted) == n);
  CHECK(emitted["members"][2]["factored"] == "2^2*3");
  CHECK(emitted["members"][2]["decimal"] == "12");
  CHECK(emitted["size"] == 3);

  CHECK_THROWS_AS(number_set_from_json(Json::parse(R"({"nope": []})")), Error);
  CHECK_THROWS_AS(number_set_from_json(Json::parse(R"(["0"])")), Error);
  CHECK_THROWS_AS(number_set_from_json(Json::parse("3.5")), Error);
}

TEST_CASE("families parse and round trip") {
  Json j = Json::parse(
      R"({"universe": ["1","2","3","4"],
          "members": [[], ["1"], ["1","2"], ["1","2","3"], ["4"],
                      ["1","4"], ["1","2","4"], ["1","2","3","4"]]})");
  SetFamily s = set_family_from_json(j);
  CHECK(s == frankl8());
  CHECK(set_family_from_json(set_family_to_json(s)) == s);

  CHECK_THROWS_AS(set_family_from_json(Json::parse(R"({"members": [[]]})")),
                  Error);
  CHECK_THROWS_AS(set_family_from_json(Json::parse(
                      R"({"universe": ["1"], "members": [["1","1"]]})")),
                  Error);
  CHECK_THROWS_AS(set_family_from_json(Json::parse(
                      R"({"universe": ["1"], "members": [["1"],["1"]]})")),
                  Error);
  CHECK_THROWS_AS(set_family_from_json(Json::parse(
                      R"({"universe": ["1"], "members": [["2"]]})")),
                  Error);
}

TEST_CASE("emission is byte-stable") {
  NumberSet n = make_set({1, 2, 3, 4, 6, 8, 12, 24});
  CHECK(number_set_to_json(n).dump(2) == number_set_to_json(n).dump(2));
  auto report = abundant_divisors(n);
  CHECK(divisor_abundance_to_json(report).dump(2) ==
        divisor_abundance_to_json(report).dump(2));
}

TEST_CASE("report serializers carry the headline fields") {
  auto abundance = divisor_abundance_to_json(
      abundant_divisors(make_set({1, 2, 3, 4, 6, 8, 12, 24})));
  CHECK(abundance["total"] == 8);
  CHECK(abundance["conjecture1"] == "holds");
  CHECK(abundance["witness"] == "2");

  auto nonabundance = nonabundance_to_json(
      nonabundant_prime_powers(make_set({1, 2, 3, 4, 6, 8, 12})));
  CHECK(nonabundance["conjecture3"] == "holds");
  CHECK(nonabundance["nonabundant_prime_powers"].size() == 3);

  auto elements = element_abundance_to_json(abundant_elements(frankl8()));
  CHECK(elements["abundant_elements"] == Json::array({"1", "2", "4"}));
}

TEST_SUITE_END();
