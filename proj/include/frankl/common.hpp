#pragma once

#include <stdexcept>
#include <string>

namespace frankl {

// Error kinds surfaced by all modules. The CLI maps every kind to exit
// code 2 with a one-line diagnostic naming the offending value.
enum class errc {
  domain_error,
  parse_error,
  sieve_exhausted,
  exponent_overflow,
  chain_violation,
  not_lcm_closed,
  not_gcd_closed,
  not_union_closed,
  too_few_members,
  no_witness,
  invalid_witness,
  universe_too_large,
  unsupported,
};

const char* errc_name(errc kind);

class Error : public std::runtime_error {
 public:
  Error(errc kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& message) {
  throw Error(kind, message);
}

// Verdict of a conjecture-style check. not_applicable covers inputs the
// hypothesis does not reach (e.g. a number set whose members are all 1).
enum class ConjectureStatus { holds, fails, not_applicable };

const char* to_string(ConjectureStatus s);

}  // namespace frankl
