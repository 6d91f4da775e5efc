#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/numset.hpp"

namespace frankl {

struct KnownCase {
  int id = 0;
  bool satisfied = false;
  std::vector<std::pair<std::string, std::uint64_t>> measured;
};

struct CaseReport {
  std::vector<KnownCase> cases;  // ids 1..5
  bool any_condition_met = false;
};

// The five sufficient conditions, measured on the family with the common
// core (the intersection of all members) subtracted, so that the verdicts
// coincide with known_cases_numset through the prime relabeling:
//   1. some member has 1 or 2 elements outside the core;
//   2. the union minus the core has at most 12 elements;
//   3. at most 50 members;
//   4. 3*|S| >= 2*2^m for m = |union minus core|;
//   5. |S| <= 2m and the family separates every pair outside the core.
// Requires a nonempty union-closed family with a nonempty member.
CaseReport known_cases_family(const SetFamily& s);

// The same five conditions in number form, with m = sigma_ppe(lcm/gcd) and
// members measured after dividing out gcd(N):
//   1. some member != 1 of N/gcd has exponent sum at most 2;
//   2. m <= 12;  3. |N| <= 50;  4. 3*|N| >= 2*2^m;
//   5. |N| <= 2m and for any two distinct prime powers p', p'' dividing
//      lcm/gcd there are members of N/gcd separating them.
// Requires a nonempty LCM-closed set containing an element != 1.
CaseReport known_cases_numset(const NumberSet& n);

}  // namespace frankl
