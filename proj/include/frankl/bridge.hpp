#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frankl/arith.hpp"
#include "frankl/family.hpp"
#include "frankl/numset.hpp"

namespace frankl {

// A finite set of prime powers, sorted by (prime, exponent). Valid images
// of positive integers satisfy the chain property: whenever p^k is present
// with k >= 2, p^(k-1) is present too. The empty set represents 1.
class PrimePowerSet {
 public:
  PrimePowerSet() = default;
  // Deduplicates and sorts; does not enforce the chain property (g_map
  // reports violations).
  static PrimePowerSet from_powers(std::vector<PrimePower> powers);

  const std::vector<PrimePower>& powers() const noexcept { return powers_; }
  std::size_t size() const noexcept { return powers_.size(); }
  bool empty() const noexcept { return powers_.empty(); }
  bool contains(const PrimePower& p) const;

  bool operator==(const PrimePowerSet&) const = default;

 private:
  std::vector<PrimePower> powers_;
};

struct ChainGap {
  PrimeIndex index = 0;            // offending prime
  std::uint32_t missing = 0;       // smallest absent exponent below the top
  std::uint32_t highest = 0;       // highest present exponent of that prime
};

// First chain violation in (prime, exponent) order, if any.
std::optional<ChainGap> chain_gap(const PrimePowerSet& s);

// n -> { p^1, ..., p^q for every prime p with exponent q in n }.
// |f_map(n)| = sigma_ppe(n); f_map(1) is empty.
PrimePowerSet f_map(const ExponentVector& n);

// Product of the maximal prime powers per prime; inverse of f_map on valid
// chain sets. Fails with chain_violation naming the prime and the gap.
ExponentVector g_map(const PrimePowerSet& s);

PrimePowerSet set_union(const PrimePowerSet& a, const PrimePowerSet& b);
PrimePowerSet set_intersection(const PrimePowerSet& a, const PrimePowerSet& b);
bool is_subset(const PrimePowerSet& a, const PrimePowerSet& b);

// One row of the count table aligning family elements with prime powers.
struct TransportRow {
  std::string element;
  std::string prime_power;
  std::size_t element_count = 0;
  std::size_t divisor_count = 0;
};

// Relabels the universe element at (1-based) position i to the i-th prime,
// reads each member as a set of distinct primes, and multiplies. The input
// must be union-closed; the result is LCM-closed with the same cardinality,
// and element-membership counts carry over to prime-divisibility counts.
NumberSet family_to_numset(const SetFamily& s);

// Universe = all prime powers dividing lcm(N) (labels "2", "2^2", "3", ...
// ordered by prime then exponent); members = f_map of each element. The
// input must be LCM-closed; the result is union-closed with the same
// cardinality.
SetFamily numset_to_family(const NumberSet& n);

// Count table for family_to_numset: universe position i pairs with the
// i-th prime.
std::vector<TransportRow> family_transport(const SetFamily& s,
                                           const NumberSet& image);

// Count table for numset_to_family: each universe label is itself a prime
// power of the source set.
std::vector<TransportRow> numset_transport(const NumberSet& n,
                                           const SetFamily& image);

}  // namespace frankl
