#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frankl/arith.hpp"
#include "frankl/endo.hpp"

namespace frankl {

// A finite set of positive integers, deduplicated and kept in ascending
// numeric order. Immutable value; every operation below is a pure function.
class NumberSet {
 public:
  NumberSet() = default;
  explicit NumberSet(std::vector<ExponentVector> members);

  const std::vector<ExponentVector>& members() const noexcept {
    return members_;
  }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const ExponentVector& v) const;

  // Largest member (numeric order); set must be nonempty.
  const ExponentVector& max() const;

  bool operator==(const NumberSet& other) const = default;

 private:
  std::vector<ExponentVector> members_;
};

ExponentVector lcm_of(const NumberSet& n);
ExponentVector gcd_of(const NumberSet& n);

bool is_lcm_closed(const NumberSet& n);
bool is_gcd_closed(const NumberSet& n);

// Smallest superset closed under pairwise lcm (resp. gcd), computed by
// fixpoint iteration. Every added element divides lcm(n) (resp. divides
// some member), so the iteration terminates.
NumberSet lcm_closure(const NumberSet& n);
NumberSet gcd_closure(const NumberSet& n);

struct DivisorAbundanceReport {
  std::size_t total = 0;
  // Every prime power dividing lcm(N), in (prime, exponent) order, with the
  // number of members it divides.
  std::vector<std::pair<PrimePower, std::size_t>> prime_power_counts;
  // The subset with count*2 >= total.
  std::vector<PrimePower> abundant_prime_powers;
  // Decided on primes alone (exponent 1); not_applicable when every member
  // is 1.
  ConjectureStatus conjecture1 = ConjectureStatus::not_applicable;
  std::optional<PrimePower> witness;
};

DivisorAbundanceReport abundant_divisors(const NumberSet& n);

struct GeneralDivisorReport {
  std::size_t total = 0;
  ConjectureStatus status = ConjectureStatus::not_applicable;
  // Abundant divisors d > 1 of lcm(N) in ascending numeric order, with
  // member counts. Enumeration inspects at most `limit` divisors.
  std::vector<std::pair<ExponentVector, std::size_t>> abundant;
  bool truncated = false;
  std::size_t inspected = 0;
};

GeneralDivisorReport abundant_general_divisors(const NumberSet& n,
                                               std::size_t limit = 10000);

struct NonAbundanceReport {
  std::size_t total = 0;
  // Prime powers dividing at least one member but at most half of them
  // (count*2 <= total), with counts.
  std::vector<std::pair<PrimePower, std::size_t>> nonabundant_prime_powers;
  bool conjecture3_holds = false;
};

// Requires at least two members.
NonAbundanceReport nonabundant_prime_powers(const NumberSet& n);

// N / gcd(N): exponent-wise subtraction of the gcd from every member.
// Preserves LCM- and GCD-closedness; the result has gcd 1.
NumberSet normalize(const NumberSet& n);

// The dual N*: with hat = lcm(N), maps each member n to hat / n. Bijective
// on members, so |dual(N)| = |N|; swaps LCM- and GCD-closedness.
NumberSet dual(const NumberSet& n);

enum class DualDirection { gcd_to_lcm, lcm_to_gcd };

struct DualityWitness {
  NumberSet dual_set;
  PrimePower source;   // the chosen prime power in N
  PrimePower shifted;  // p^(q(lcm) - q* + 1)
  std::size_t source_count = 0;
  std::size_t shifted_count = 0;
  std::size_t total = 0;
  bool verified = false;
};

// Transports a witness through the dual construction:
//   gcd_to_lcm: N is GCD-closed with >= 2 members; `chosen` (default: the
//     first in (prime, exponent) order) is a non-abundant prime power of N;
//     the shifted power is verified abundant in dual(N).
//   lcm_to_gcd: N is LCM-closed with >= 2 members; `chosen` is an
//     abundant-but-not-universal prime power; the shifted power is verified
//     non-abundant in dual(N).
DualityWitness proposition3_witness(const NumberSet& n, DualDirection dir,
                                    std::optional<PrimePower> chosen = {});

// {P(B) : nonempty B subset of A} where P(B) is the least n >= 1 with
// sigma^n fixing all of B. Every element of A must lie on a cycle. Fixed
// points have period 1, which keeps the result closed under lcm; the
// maximum is P(A).
NumberSet period_set(const EndoFunction& sigma,
                     const std::vector<std::uint32_t>& a);

}  // namespace frankl
