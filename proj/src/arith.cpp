#include "frankl/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>

namespace frankl {

const char* errc_name(errc kind) {
  switch (kind) {
    case errc::domain_error: return "domain_error";
    case errc::parse_error: return "parse_error";
    case errc::sieve_exhausted: return "sieve_exhausted";
    case errc::exponent_overflow: return "exponent_overflow";
    case errc::chain_violation: return "chain_violation";
    case errc::not_lcm_closed: return "not_lcm_closed";
    case errc::not_gcd_closed: return "not_gcd_closed";
    case errc::not_union_closed: return "not_union_closed";
    case errc::too_few_members: return "too_few_members";
    case errc::no_witness: return "no_witness";
    case errc::invalid_witness: return "invalid_witness";
    case errc::universe_too_large: return "universe_too_large";
    case errc::unsupported: return "unsupported";
  }
  return "unknown";
}

const char* to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::holds: return "holds";
    case ConjectureStatus::fails: return "fails";
    case ConjectureStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

namespace {

std::atomic<std::uint32_t> g_exponent_cap{1u << 16};

struct SieveState {
  std::mutex mu;
  std::vector<std::uint64_t> primes;
  std::size_t cap = 10000;
};

SieveState& sieve_state() {
  static SieveState s;
  return s;
}

// Sieve of Eratosthenes over [2, bound].
std::vector<std::uint64_t> sieve_up_to(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return primes;
}

// Upper bound for p_n (Rosser-style estimate, padded).
std::uint64_t nth_prime_bound(std::size_t n) {
  if (n < 6) return 16;
  double nd = static_cast<double>(n);
  return static_cast<std::uint64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
}

void grow_to_count_locked(SieveState& s, std::size_t count) {
  if (s.primes.size() >= count) return;
  if (count > s.cap) {
    fail(errc::sieve_exhausted,
         "prime index " + std::to_string(count) + " exceeds the sieve cap of " +
             std::to_string(s.cap) + " primes");
  }
  std::uint64_t bound = nth_prime_bound(count);
  for (;;) {
    auto primes = sieve_up_to(bound);
    if (primes.size() >= count) {
      s.primes = std::move(primes);
      return;
    }
    bound *= 2;
  }
}

// Materializes every prime <= v, respecting the cap.
void grow_to_value_locked(SieveState& s, std::uint64_t v) {
  if (!s.primes.empty() && s.primes.back() >= v) return;
  if (v > nth_prime_bound(s.cap + 1)) {
    // p_(cap+1) <= the bound, so v has more than cap primes below it.
    fail(errc::sieve_exhausted,
         "certifying primes up to " + std::to_string(v) +
             " exceeds the sieve cap of " + std::to_string(s.cap) + " primes");
  }
  auto primes = sieve_up_to(v);
  if (primes.size() > s.cap) {
    fail(errc::sieve_exhausted,
         "certifying primes up to " + std::to_string(v) + " needs " +
             std::to_string(primes.size()) + " primes; the sieve cap is " +
             std::to_string(s.cap));
  }
  if (primes.size() > s.primes.size()) s.primes = std::move(primes);
}

void check_exponent(std::uint64_t e) {
  if (e > g_exponent_cap.load(std::memory_order_relaxed)) {
    fail(errc::exponent_overflow,
         "exponent " + std::to_string(e) + " exceeds the cap of " +
             std::to_string(g_exponent_cap.load(std::memory_order_relaxed)));
  }
}

// Little-endian base-1e9 decimal accumulator; just enough for rendering.
struct BigDecimal {
  static constexpr std::uint64_t kBase = 1000000000;
  std::vector<std::uint32_t> limbs{1};

  void multiply(std::uint64_t factor) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry != 0) {
      limbs.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
  }

  std::string str() const {
    std::string out = std::to_string(limbs.back());
    for (std::size_t i = limbs.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs[i]);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }
};

}  // namespace

std::uint32_t exponent_cap() { return g_exponent_cap.load(); }

void set_exponent_cap(std::uint32_t cap) {
  if (cap == 0) fail(errc::domain_error, "exponent cap must be positive");
  g_exponent_cap.store(cap);
}

std::size_t sieve_cap() {
  auto& s = sieve_state();
  std::lock_guard lock(s.mu);
  return s.cap;
}

void set_sieve_cap(std::size_t max_primes) {
  if (max_primes == 0) fail(errc::domain_error, "sieve cap must be positive");
  auto& s = sieve_state();
  std::lock_guard lock(s.mu);
  s.cap = max_primes;
}

std::uint64_t nth_prime(PrimeIndex i) {
  if (i == 0) fail(errc::domain_error, "prime indices are 1-based");
  auto& s = sieve_state();
  std::lock_guard lock(s.mu);
  grow_to_count_locked(s, i);
  return s.primes[i - 1];
}

std::optional<PrimeIndex> prime_index_of(std::uint64_t p) {
  if (p < 2) return std::nullopt;
  auto& s = sieve_state();
  std::lock_guard lock(s.mu);
  grow_to_value_locked(s, p);
  auto it = std::lower_bound(s.primes.begin(), s.primes.end(), p);
  if (it == s.primes.end() || *it != p) return std::nullopt;
  return static_cast<PrimeIndex>(it - s.primes.begin()) + 1;
}

ExponentVector ExponentVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto [index, exponent] = entries[k];
    if (index == 0) fail(errc::domain_error, "prime indices are 1-based");
    if (exponent == 0) {
      fail(errc::domain_error, "canonical form stores no zero exponents");
    }
    check_exponent(exponent);
    if (k > 0 && entries[k - 1].first == index) {
      fail(errc::domain_error,
           "duplicate prime index " + std::to_string(index));
    }
  }
  ExponentVector v;
  v.entries_ = std::move(entries);
  return v;
}

std::uint32_t ExponentVector::exponent_of(PrimeIndex i) const noexcept {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), i,
      [](const Entry& e, PrimeIndex idx) { return e.first < idx; });
  if (it == entries_.end() || it->first != i) return 0;
  return it->second;
}

std::string PrimePower::label() const {
  std::string out = std::to_string(nth_prime(index));
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
  return out;
}

ExponentVector factorize(std::uint64_t n) {
  if (n == 0) fail(errc::domain_error, "0 has no prime factorization");
  std::vector<ExponentVector::Entry> entries;
  std::uint64_t rest = n;
  for (PrimeIndex i = 1; rest > 1; ++i) {
    std::uint64_t p = nth_prime(i);
    if (p * p > rest) break;
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) entries.push_back({i, e});
  }
  if (rest > 1) {
    auto idx = prime_index_of(rest);
    if (!idx) fail(errc::domain_error, "internal: residual not prime");
    entries.push_back({*idx, 1});
  }
  return ExponentVector::from_entries(std::move(entries));
}

std::string to_decimal(const ExponentVector& v) {
  BigDecimal acc;
  for (auto [index, exponent] : v.entries()) {
    std::uint64_t p = nth_prime(index);
    for (std::uint32_t k = 0; k < exponent; ++k) acc.multiply(p);
  }
  return acc.str();
}

std::string to_factored(const ExponentVector& v) {
  if (v.is_one()) return "1";
  std::string out;
  for (auto [index, exponent] : v.entries()) {
    if (!out.empty()) out += '*';
    out += PrimePower{index, exponent}.label();
  }
  return out;
}

namespace {

ExponentVector parse_decimal(std::string_view text) {
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      fail(errc::parse_error,
           "not a number: \"" + std::string(text) + "\"");
    }
    std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - digit) / 10) {
      fail(errc::parse_error, "decimal input \"" + std::string(text) +
                                  "\" does not fit in 64 bits; use the "
                                  "factored form instead");
    }
    value = value * 10 + digit;
  }
  if (value == 0) {
    fail(errc::parse_error, "numbers must be positive: \"" +
                                std::string(text) + "\"");
  }
  return factorize(value);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  if (text.empty()) fail(errc::parse_error, std::string("missing ") + what);
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      fail(errc::parse_error, std::string("bad ") + what + ": \"" +
                                  std::string(text) + "\"");
    }
    std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - digit) / 10) {
      fail(errc::parse_error, std::string(what) + " out of range: \"" +
                                  std::string(text) + "\"");
    }
    value = value * 10 + digit;
  }
  return value;
}

ExponentVector::Entry parse_factor(std::string_view token) {
  token = trim(token);
  std::string_view base = token;
  std::uint64_t exponent = 1;
  if (auto caret = token.find('^'); caret != std::string_view::npos) {
    base = trim(token.substr(0, caret));
    exponent = parse_u64(trim(token.substr(caret + 1)), "exponent");
    if (exponent == 0) {
      fail(errc::parse_error,
           "exponents must be >= 1 in \"" + std::string(token) + "\"");
    }
    check_exponent(exponent);
  }
  std::uint64_t p = parse_u64(base, "prime");
  auto idx = prime_index_of(p);
  if (!idx) {
    fail(errc::parse_error,
         std::to_string(p) + " is not prime in \"" + std::string(token) + "\"");
  }
  return {*idx, static_cast<std::uint32_t>(exponent)};
}

}  // namespace

ExponentVector parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(errc::parse_error, "empty number");
  if (text.find('^') == std::string_view::npos &&
      text.find('*') == std::string_view::npos) {
    return parse_decimal(text);
  }
  std::vector<ExponentVector::Entry> entries;
  std::size_t start = 0;
  std::string_view rest = text;
  while (true) {
    std::size_t star = rest.find('*', start);
    std::string_view token =
        star == std::string_view::npos ? rest.substr(start)
                                       : rest.substr(start, star - start);
    entries.push_back(parse_factor(token));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  std::sort(entries.begin(), entries.end());
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].first == entries[k - 1].first) {
      fail(errc::parse_error,
           "prime " + std::to_string(nth_prime(entries[k].first)) +
               " repeats in \"" + std::string(text) + "\"");
    }
  }
  return ExponentVector::from_entries(std::move(entries));
}

ExponentVector to_exponent_vector(const PrimePower& p) {
  return ExponentVector::from_entries({{p.index, p.exponent}});
}

PrimePower parse_prime_power(std::string_view label) {
  auto entry = parse_factor(label);
  return PrimePower{entry.first, entry.second};
}

PrimePower prime_power_from_value(const ExponentVector& v) {
  if (v.entries().size() != 1) {
    fail(errc::domain_error,
         to_decimal(v) + " is not a prime power");
  }
  return PrimePower{v.entries()[0].first, v.entries()[0].second};
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  std::vector<ExponentVector::Entry> out;
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.push_back({ia->first, std::max(ia->second, ib->second)});
      ++ia;
      ++ib;
    }
  }
  return ExponentVector::from_entries(std::move(out));
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  std::vector<ExponentVector::Entry> out;
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea && ib != eb) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out.push_back({ia->first, std::min(ia->second, ib->second)});
      ++ia;
      ++ib;
    }
  }
  return ExponentVector::from_entries(std::move(out));
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (auto [index, exponent] : a.entries()) {
    if (b.exponent_of(index) < exponent) return false;
  }
  return true;
}

bool divides(const PrimePower& p, const ExponentVector& v) {
  return v.exponent_of(p.index) >= p.exponent;
}

std::uint64_t sigma_ppe(const ExponentVector& v) {
  std::uint64_t sum = 0;
  for (auto [index, exponent] : v.entries()) sum += exponent;
  return sum;
}

ExponentVector divide_exact(const ExponentVector& n, const ExponentVector& d) {
  if (!divides(d, n)) {
    fail(errc::domain_error,
         to_decimal(d) + " does not divide " + to_decimal(n));
  }
  std::vector<ExponentVector::Entry> out;
  for (auto [index, exponent] : n.entries()) {
    std::uint32_t q = exponent - d.exponent_of(index);
    if (q > 0) out.push_back({index, q});
  }
  return ExponentVector::from_entries(std::move(out));
}

ExponentVector exponent_complement(const ExponentVector& hat,
                                   const ExponentVector& n) {
  return divide_exact(hat, n);
}

bool numeric_less(const ExponentVector& a, const ExponentVector& b) {
  if (a == b) return false;
  std::string da = to_decimal(a);
  std::string db = to_decimal(b);
  if (da.size() != db.size()) return da.size() < db.size();
  return da < db;
}

}  // namespace frankl
