#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frankl/common.hpp"

namespace frankl {

// 1-based index into the prime sequence; p_1 = 2.
using PrimeIndex = std::uint32_t;

// Cap on stored exponents (default 2^16). Nothing desk-scale comes close;
// the cap guards against pathological factored-string inputs.
std::uint32_t exponent_cap();
void set_exponent_cap(std::uint32_t cap);

// Number of primes the lazy sieve may materialize (default 10,000).
std::size_t sieve_cap();
void set_sieve_cap(std::size_t max_primes);

// p_i, growing the sieve on demand. Fails with sieve_exhausted when i
// exceeds the configured cap.
std::uint64_t nth_prime(PrimeIndex i);

// Position of p in the prime sequence, or nullopt when p is 1 or composite.
// Fails with sieve_exhausted when certifying p would exceed the cap.
std::optional<PrimeIndex> prime_index_of(std::uint64_t p);

// A positive integer in canonical prime-exponent form: sorted
// (prime index, exponent) entries, every exponent >= 1. The empty vector
// represents the integer 1. Immutable value type; all operations are pure.
class ExponentVector {
 public:
  using Entry = std::pair<PrimeIndex, std::uint32_t>;

  ExponentVector() = default;

  // Accepts entries in any order; rejects index 0, exponent 0, duplicate
  // indices, and exponents beyond the cap.
  static ExponentVector from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_one() const noexcept { return entries_.empty(); }
  std::uint32_t exponent_of(PrimeIndex i) const noexcept;

  bool operator==(const ExponentVector& other) const = default;

  // Structural ordering (lexicographic on entries); used for set-like
  // containers. Distinct canonical vectors are distinct integers, so this
  // agrees with numeric equality though not with numeric order.
  struct LexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
      return a.entries_ < b.entries_;
    }
  };

 private:
  std::vector<Entry> entries_;
};

// A prime power p_i^k with k >= 1.
struct PrimePower {
  PrimeIndex index = 0;
  std::uint32_t exponent = 0;

  auto operator<=>(const PrimePower&) const = default;

  // Canonical text form: "2" for exponent 1, otherwise "2^4".
  std::string label() const;
};

// Factorization by trial division against the sieve. Fails for n = 0, and
// with sieve_exhausted when a prime factor lies beyond the capped sieve.
ExponentVector factorize(std::uint64_t n);

// Exact decimal rendering of the represented integer (unbounded precision).
std::string to_decimal(const ExponentVector& v);

// Canonical factored rendering, e.g. "2^3*3"; "1" for the empty vector.
std::string to_factored(const ExponentVector& v);

// Accepts either a decimal string ("24") or a factored string ("2^3*3").
// Decimal inputs must fit in 64 bits; factored inputs are unbounded up to
// the exponent cap and must use prime bases without repetition.
ExponentVector parse_number(std::string_view text);

// The prime power p^k as a canonical vector, or the parse of a label.
ExponentVector to_exponent_vector(const PrimePower& p);
PrimePower parse_prime_power(std::string_view label);
// Classifies a value as a prime power; fails otherwise.
PrimePower prime_power_from_value(const ExponentVector& v);

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
bool divides(const ExponentVector& a, const ExponentVector& b);
bool divides(const PrimePower& p, const ExponentVector& v);

// Sum of all exponents; 0 for the integer 1.
std::uint64_t sigma_ppe(const ExponentVector& v);

// n / d, defined only when d | n.
ExponentVector divide_exact(const ExponentVector& n, const ExponentVector& d);

// Exponent-wise complement within hat: index i gets q_i(hat) - q_i(n).
// Defined only when n | hat.
ExponentVector exponent_complement(const ExponentVector& hat,
                                   const ExponentVector& n);

// Exact numeric order of the represented integers.
bool numeric_less(const ExponentVector& a, const ExponentVector& b);

}  // namespace frankl
