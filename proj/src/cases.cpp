#include "frankl/cases.hpp"

#include <bit>

namespace frankl {

namespace {

// 3*count >= 2*2^m without overflow.
bool density_condition(std::uint64_t count, std::uint64_t m) {
  unsigned __int128 lhs = static_cast<unsigned __int128>(count) * 3;
  if (m >= 126) return false;
  unsigned __int128 rhs = static_cast<unsigned __int128>(2) << m;
  return lhs >= rhs;
}

KnownCase make_case(
    int id, bool satisfied,
    std::vector<std::pair<std::string, std::uint64_t>> measured) {
  return KnownCase{id, satisfied, std::move(measured)};
}

CaseReport finish(std::vector<KnownCase> cases) {
  CaseReport report;
  report.cases = std::move(cases);
  for (const auto& c : report.cases) {
    if (c.satisfied) report.any_condition_met = true;
  }
  return report;
}

}  // namespace

CaseReport known_cases_family(const SetFamily& s) {
  if (s.empty()) {
    fail(errc::domain_error, "known cases need a nonempty family");
  }
  if (!is_union_closed(s)) {
    fail(errc::not_union_closed, "known cases need a union-closed family");
  }
  if (family_union(s) == 0) {
    fail(errc::domain_error, "known cases need a nonempty member");
  }

  MemberBits core = family_intersection(s);
  MemberBits effective = family_union(s) & ~core;
  std::uint64_t m = static_cast<std::uint64_t>(std::popcount(effective));
  std::uint64_t count = s.size();

  // 1: a member with one or two elements outside the core.
  std::uint64_t smallest = 0;
  bool small_member = false;
  for (MemberBits member : s.members()) {
    std::uint64_t size = static_cast<std::uint64_t>(std::popcount(member & ~core));
    if (size >= 1 && (smallest == 0 || size < smallest)) smallest = size;
    if (size == 1 || size == 2) small_member = true;
  }

  // 5: separation of every pair of effective elements.
  bool separating = true;
  for (std::size_t x = 0; x < s.universe().size() && separating; ++x) {
    if (!(effective >> x & 1)) continue;
    for (std::size_t y = x + 1; y < s.universe().size() && separating; ++y) {
      if (!(effective >> y & 1)) continue;
      bool a_found = false, b_found = false;
      for (MemberBits member : s.members()) {
        bool has_x = member >> x & 1, has_y = member >> y & 1;
        if (has_x && !has_y) a_found = true;
        if (has_y && !has_x) b_found = true;
      }
      separating = a_found && b_found;
    }
  }

  std::vector<KnownCase> cases;
  cases.push_back(make_case(1, small_member,
                            {{"smallest_nontrivial_member", smallest}}));
  cases.push_back(make_case(2, m <= 12, {{"effective_universe", m}}));
  cases.push_back(make_case(3, count <= 50, {{"size", count}}));
  cases.push_back(make_case(4, density_condition(count, m),
                            {{"size", count}, {"effective_universe", m}}));
  cases.push_back(make_case(5, count <= 2 * m && separating,
                            {{"size", count},
                             {"effective_universe", m},
                             {"separating", separating ? 1u : 0u}}));
  return finish(std::move(cases));
}

CaseReport known_cases_numset(const NumberSet& n) {
  if (n.empty()) {
    fail(errc::domain_error, "known cases need a nonempty set");
  }
  if (!is_lcm_closed(n)) {
    fail(errc::not_lcm_closed, "known cases need an LCM-closed set");
  }
  NumberSet reduced = normalize(n);
  ExponentVector hat = lcm_of(reduced);  // lcm(N)/gcd(N)
  if (lcm_of(n).is_one()) {
    fail(errc::domain_error, "known cases need an element different from 1");
  }
  std::uint64_t m = sigma_ppe(hat);
  std::uint64_t count = n.size();

  std::uint64_t smallest = 0;
  bool small_member = false;
  for (const auto& v : reduced.members()) {
    std::uint64_t size = sigma_ppe(v);
    if (size >= 1 && (smallest == 0 || size < smallest)) smallest = size;
    if (size == 1 || size == 2) small_member = true;
  }

  // Prime powers dividing lcm/gcd, for the separation test.
  std::vector<PrimePower> powers;
  for (auto [index, max_exp] : hat.entries()) {
    for (std::uint32_t k = 1; k <= max_exp; ++k) powers.push_back({index, k});
  }
  bool separating = true;
  for (std::size_t x = 0; x < powers.size() && separating; ++x) {
    for (std::size_t y = x + 1; y < powers.size() && separating; ++y) {
      bool a_found = false, b_found = false;
      for (const auto& v : reduced.members()) {
        bool has_x = divides(powers[x], v), has_y = divides(powers[y], v);
        if (has_x && !has_y) a_found = true;
        if (has_y && !has_x) b_found = true;
      }
      separating = a_found && b_found;
    }
  }

  std::vector<KnownCase> cases;
  cases.push_back(make_case(1, small_member,
                            {{"smallest_nontrivial_member", smallest}}));
  cases.push_back(make_case(2, m <= 12, {{"effective_universe", m}}));
  cases.push_back(make_case(3, count <= 50, {{"size", count}}));
  cases.push_back(make_case(4, density_condition(count, m),
                            {{"size", count}, {"effective_universe", m}}));
  cases.push_back(make_case(5, count <= 2 * m && separating,
                            {{"size", count},
                             {"effective_universe", m},
                             {"separating", separating ? 1u : 0u}}));
  return finish(std::move(cases));
}

}  // namespace frankl
