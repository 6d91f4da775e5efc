#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "frankl/endo.hpp"
#include "frankl/family.hpp"
#include "frankl/numset.hpp"

namespace frankl {

// Result of scanning every family over a small universe. A family is
// encoded by its characteristic integer: bit m set means the member whose
// element bitmask is m belongs to the family.
struct ExhaustiveReport {
  std::uint32_t universe_size = 0;
  std::uint64_t candidates = 0;
  std::uint64_t union_closed_count = 0;
  // Union-closed families with at least one nonempty member.
  std::uint64_t applicable_count = 0;
  // Characteristic integers of applicable families without an abundant
  // element. Any entry is a counterexample, not a test failure.
  std::vector<std::uint64_t> violations;
  // Minimum over applicable families of (best element count) / (family
  // size), as an exact pair.
  std::uint64_t min_abundance_count = 0;
  std::uint64_t min_abundance_size = 0;
  // Families achieving the minimum: total count plus the first few ids in
  // ascending order.
  std::uint64_t extremal_total = 0;
  std::vector<std::uint64_t> extremal_first;
  // Families cross-checked through the prime relabeling (verify only).
  std::uint64_t transport_checked = 0;

  bool operator==(const ExhaustiveReport&) const = default;
};

struct ScanOptions {
  unsigned workers = 1;
  // When nonempty, per-chunk results are appended here and previously
  // completed chunks are skipped on restart.
  std::string checkpoint_path;
  // n = 5 scans 2^32 candidates and must be requested explicitly.
  bool allow_large = false;
  // Progress lines ("chunk i/k done") to stderr.
  bool progress = false;
};

// Called for every union-closed family found. Runs on worker threads; must
// be thread-safe.
using FamilyVisitor = std::function<void(std::uint64_t family_id)>;

// Scans all 2^(2^n) families over {1..n} in ascending characteristic-
// integer order, filters union-closed ones, and accumulates the report
// deterministically (chunked range partition, merged in chunk order).
// Supported: 1 <= n <= 4, plus n = 5 behind allow_large.
ExhaustiveReport enumerate_union_closed(std::uint32_t n,
                                        const FamilyVisitor& visitor = {},
                                        const ScanOptions& options = {});

// enumerate_union_closed with conjecture checking, plus a transport
// cross-check through family_to_numset on a deterministic 1-in-64 sample.
ExhaustiveReport verify_exhaustive(std::uint32_t n,
                                   const ScanOptions& options = {});

// Decodes a characteristic integer into the family it encodes.
SetFamily decode_family(std::uint32_t n, std::uint64_t family_id);

struct RandomNumSetParams {
  std::uint64_t seed = 1;
  std::uint32_t draws = 4;           // members drawn before closing
  PrimeIndex max_prime_index = 3;    // indices drawn from 1..max
  std::uint32_t max_exponent = 2;    // exponents drawn from 0..max
  bool gcd_closed = false;           // close under gcd instead of lcm
};

// Deterministic for a fixed parameter set; the result is closed by
// construction. With d draws the closure has at most 2^d - 1 members.
NumberSet random_closed_numset(const RandomNumSetParams& params);

// period_set plus assertions that the result is LCM-closed with maximum
// P(A) before returning.
NumberSet periods_from_endofunction(const EndoFunction& sigma,
                                    const std::vector<std::uint32_t>& a);

}  // namespace frankl
