#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "frankl/family.hpp"
#include "test_util.hpp"

using namespace frankl;
using namespace frankl::testutil;

namespace {

// Random family over {1..n} from k random members, optionally closed.
SetFamily random_family(std::mt19937_64& rng, std::size_t n, std::size_t k,
                        bool with_empty) {
  std::set<MemberBits> members;
  if (with_empty) members.insert(0);
  while (members.size() < k) {
    members.insert(draw(rng, MemberBits{1} << n));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return SetFamily(Universe(std::move(labels)),
                   std::vector<MemberBits>(members.begin(), members.end()));
}

}  // namespace

TEST_SUITE_BEGIN("family");

TEST_CASE("universe and family validation") {
  CHECK_THROWS_AS(Universe({"1", "1"}), Error);
  CHECK_THROWS_AS(Universe(std::vector<std::string>(65, "x")), Error);
  CHECK_THROWS_AS(SetFamily(Universe({"1"}), {0, 2}), Error);  // out of range
  CHECK_THROWS_AS(SetFamily(Universe({"1"}), {1, 1}), Error);  // duplicate
}

TEST_CASE("union-closedness of the eight-member example") {
  CHECK(is_union_closed(frankl8()));
  // Remove the top member {1,2,3,4}: {1,2,3} | {4} is now missing.
  SetFamily broken =
      make_family(4, {{}, {1}, {1, 2}, {1, 2, 3}, {4}, {1, 4}, {1, 2, 4}});
  CHECK_FALSE(is_union_closed(broken));
  CHECK(is_union_closed(make_family(1, {{1}})));
  CHECK_THROWS_AS(is_union_closed(SetFamily{}), Error);
}

TEST_CASE("intersection-closedness") {
  CHECK(is_intersection_closed(complement_dual(frankl8())));
  CHECK_FALSE(is_intersection_closed(make_family(2, {{1}, {2}})));
  CHECK(is_intersection_closed(make_family(2, {{}, {1}, {2}})));
}

TEST_CASE("closures") {
  SetFamily two = make_family(2, {{1}, {2}});
  CHECK(union_closure(two) == make_family(2, {{1}, {2}, {1, 2}}));
  SetFamily overlap = make_family(3, {{1, 2}, {2, 3}});
  CHECK(intersection_closure(overlap) == make_family(3, {{2}, {1, 2}, {2, 3}}));
  CHECK(union_closure(frankl8()) == frankl8());
}

TEST_CASE("closure minimality on random families") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 100; ++iter) {
    SetFamily s = random_family(rng, 5, 1 + draw(rng, 5), false);
    SetFamily closed = union_closure(s);
    CHECK(is_union_closed(closed));
    CHECK(union_closure(closed) == closed);
    // Every closure member is the union of some nonempty subfamily.
    for (MemberBits m : closed.members()) {
      bool reachable = false;
      for (std::uint64_t mask = 1;
           mask < (std::uint64_t{1} << s.size()) && !reachable; ++mask) {
        MemberBits u = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (mask >> i & 1) u |= s.members()[i];
        }
        reachable = (u == m);
      }
      CHECK(reachable);
    }
  }
}

TEST_CASE("abundant elements of the eight-member example") {
  auto report = abundant_elements(frankl8());
  CHECK(report.total == 8);
  CHECK(report.abundant_elements == std::vector<std::string>{"1", "2", "4"});
  CHECK(report.conjecture == ConjectureStatus::holds);
  for (const auto& [label, count] : report.element_counts) {
    if (label == "1") CHECK(count == 6);
    if (label == "3") CHECK(count == 2);
  }
}

TEST_CASE("abundance is not applicable without a nonempty member") {
  auto report = abundant_elements(make_family(2, {{}}));
  CHECK(report.conjecture == ConjectureStatus::not_applicable);
  CHECK(report.element_counts.empty());
}

TEST_CASE("complement dual") {
  SetFamily dual = complement_dual(frankl8());
  CHECK(dual.size() == 8);
  CHECK(is_intersection_closed(dual));
  // Double dual restores the family (its members' intersection is empty).
  CHECK(complement_dual(dual) == frankl8());

  auto original = abundant_elements(frankl8());
  auto dualled = abundant_elements(dual);
  for (const auto& [label, count] : original.element_counts) {
    for (const auto& [dlabel, dcount] : dualled.element_counts) {
      if (dlabel == label) CHECK(count + dcount == 8);
    }
  }
}

TEST_CASE("complement dual swaps closedness on random closed families") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 100; ++iter) {
    SetFamily closed = union_closure(random_family(rng, 5, 1 + draw(rng, 6), false));
    SetFamily dual = complement_dual(closed);
    CHECK(dual.size() == closed.size());
    CHECK(is_intersection_closed(dual));

    // Count complement per label, over the union's labels.
    auto a = abundant_elements(closed);
    auto b = abundant_elements(dual);
    for (const auto& [label, count] : a.element_counts) {
      std::size_t dual_count = 0;
      for (const auto& [dlabel, dcount] : b.element_counts) {
        if (dlabel == label) dual_count = dcount;
      }
      CHECK(count + dual_count == closed.size());
    }

    SetFamily iclosed = intersection_closure(random_family(rng, 5, 1 + draw(rng, 6), false));
    CHECK(is_union_closed(complement_dual(iclosed)));
  }
}

TEST_CASE("separating families") {
  CHECK_FALSE(is_separating(frankl8()));  // 3 never appears without 2
  CHECK(is_separating(make_family(2, {{1}, {2}})));
  CHECK_FALSE(is_separating(make_family(2, {{1, 2}})));
}

TEST_CASE("separating test matches an exhaustive pair scan") {
  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 100; ++iter) {
    SetFamily s = random_family(rng, 4, 1 + draw(rng, 6), false);
    MemberBits u = family_union(s);
    bool expected = true;
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = 0; y < 4; ++y) {
        if (x == y || !(u >> x & 1) || !(u >> y & 1)) continue;
        bool ok = false;
        for (MemberBits a : s.members()) {
          for (MemberBits b : s.members()) {
            bool in_a = a >> x & 1, in_b = b >> y & 1;
            bool x_in_both = (a >> x & 1) && (b >> x & 1);
            bool y_in_both = (a >> y & 1) && (b >> y & 1);
            if (in_a && in_b && !x_in_both && !y_in_both) ok = true;
          }
        }
        expected = expected && ok;
      }
    }
    CHECK(is_separating(s) == expected);
  }
}

TEST_CASE("identify elements") {
  IdentifyResult merged = identify_elements(make_family(3, {{1, 2}, {1, 2, 3}}));
  CHECK(merged.quotient.universe().size() == 2);
  CHECK(merged.quotient.size() == 2);
  CHECK(merged.label_classes ==
        std::vector<std::pair<std::string, std::string>>{
            {"1", "1"}, {"2", "1"}, {"3", "3"}});

  IdentifyResult untouched = identify_elements(frankl8());
  CHECK(untouched.quotient == frankl8());

  IdentifyResult empty_member = identify_elements(make_family(1, {{}}));
  CHECK(empty_member.quotient.size() == 1);
}

TEST_CASE("identification preserves counts and class ratios") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 100; ++iter) {
    SetFamily s = random_family(rng, 5, 1 + draw(rng, 6), false);
    IdentifyResult r = identify_elements(s);
    CHECK(r.quotient.size() == s.size());
    // Member cardinalities measured in classes must agree.
    std::vector<std::size_t> direct;
    for (MemberBits m : s.members()) {
      std::set<std::string> classes;
      for (std::size_t i = 0; i < s.universe().size(); ++i) {
        if (m >> i & 1) classes.insert(r.label_classes[i].second);
      }
      direct.push_back(classes.size());
    }
    std::vector<std::size_t> quotient_sizes =
        family_signature(r.quotient).member_sizes;
    std::sort(direct.begin(), direct.end());
    CHECK(direct == quotient_sizes);
  }
}

TEST_SUITE_END();
