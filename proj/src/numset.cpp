#include "frankl/numset.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace frankl {

namespace {

using EvSet = std::set<ExponentVector, ExponentVector::LexLess>;

void require_nonempty(const NumberSet& n, const char* op) {
  if (n.empty()) {
    fail(errc::domain_error, std::string(op) + " is undefined for the empty set");
  }
}

}  // namespace

NumberSet::NumberSet(std::vector<ExponentVector> members) {
  std::vector<std::pair<std::string, ExponentVector>> keyed;
  keyed.reserve(members.size());
  for (auto& m : members) keyed.push_back({to_decimal(m), std::move(m)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [key, value] : keyed) {
    if (members_.empty() || members_.back() != value) {
      members_.push_back(std::move(value));
    }
  }
}

bool NumberSet::contains(const ExponentVector& v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v, numeric_less);
  return it != members_.end() && *it == v;
}

const ExponentVector& NumberSet::max() const {
  if (members_.empty()) fail(errc::domain_error, "max of an empty set");
  return members_.back();
}

ExponentVector lcm_of(const NumberSet& n) {
  require_nonempty(n, "lcm");
  ExponentVector acc;
  for (const auto& m : n.members()) acc = lcm(acc, m);
  return acc;
}

ExponentVector gcd_of(const NumberSet& n) {
  require_nonempty(n, "gcd");
  ExponentVector acc = n.members().front();
  for (const auto& m : n.members()) acc = gcd(acc, m);
  return acc;
}

bool is_lcm_closed(const NumberSet& n) {
  require_nonempty(n, "is_lcm_closed");
  EvSet have(n.members().begin(), n.members().end());
  const auto& ms = n.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!have.count(lcm(ms[i], ms[j]))) return false;
    }
  }
  return true;
}

bool is_gcd_closed(const NumberSet& n) {
  require_nonempty(n, "is_gcd_closed");
  EvSet have(n.members().begin(), n.members().end());
  const auto& ms = n.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!have.count(gcd(ms[i], ms[j]))) return false;
    }
  }
  return true;
}

namespace {

template <typename Combine>
NumberSet closure_of(const NumberSet& n, const char* op, Combine combine) {
  require_nonempty(n, op);
  EvSet cur(n.members().begin(), n.members().end());
  std::vector<ExponentVector> fresh(cur.begin(), cur.end());
  while (!fresh.empty()) {
    // Combining two old elements was covered in an earlier round.
    std::vector<ExponentVector> all(cur.begin(), cur.end());
    std::vector<ExponentVector> next;
    for (const auto& x : fresh) {
      for (const auto& y : all) {
        ExponentVector z = combine(x, y);
        if (cur.insert(z).second) next.push_back(std::move(z));
      }
    }
    fresh = std::move(next);
  }
  return NumberSet(std::vector<ExponentVector>(cur.begin(), cur.end()));
}

}  // namespace

NumberSet lcm_closure(const NumberSet& n) {
  return closure_of(n, "lcm_closure",
                    [](const ExponentVector& a, const ExponentVector& b) {
                      return lcm(a, b);
                    });
}

NumberSet gcd_closure(const NumberSet& n) {
  return closure_of(n, "gcd_closure",
                    [](const ExponentVector& a, const ExponentVector& b) {
                      return gcd(a, b);
                    });
}

namespace {

// All prime powers p^k (k >= 1) dividing hat, in (prime, exponent) order,
// each paired with the number of members it divides.
std::vector<std::pair<PrimePower, std::size_t>> prime_power_census(
    const NumberSet& n, const ExponentVector& hat) {
  std::vector<std::pair<PrimePower, std::size_t>> census;
  for (auto [index, max_exp] : hat.entries()) {
    for (std::uint32_t k = 1; k <= max_exp; ++k) {
      PrimePower pp{index, k};
      std::size_t count = 0;
      for (const auto& m : n.members()) {
        if (divides(pp, m)) ++count;
      }
      census.push_back({pp, count});
    }
  }
  return census;
}

}  // namespace

DivisorAbundanceReport abundant_divisors(const NumberSet& n) {
  require_nonempty(n, "abundant_divisors");
  DivisorAbundanceReport report;
  report.total = n.size();
  ExponentVector hat = lcm_of(n);
  report.prime_power_counts = prime_power_census(n, hat);
  bool applicable = !hat.is_one();
  for (const auto& [pp, count] : report.prime_power_counts) {
    if (count * 2 >= report.total) {
      report.abundant_prime_powers.push_back(pp);
      if (pp.exponent == 1 && !report.witness) report.witness = pp;
    }
  }
  if (!applicable) {
    report.conjecture1 = ConjectureStatus::not_applicable;
  } else {
    report.conjecture1 = report.witness ? ConjectureStatus::holds
                                        : ConjectureStatus::fails;
  }
  return report;
}

GeneralDivisorReport abundant_general_divisors(const NumberSet& n,
                                               std::size_t limit) {
  require_nonempty(n, "abundant_general_divisors");
  if (limit == 0) fail(errc::domain_error, "divisor limit must be positive");
  GeneralDivisorReport report;
  report.total = n.size();
  ExponentVector hat = lcm_of(n);
  if (hat.is_one()) {
    report.status = ConjectureStatus::not_applicable;
    return report;
  }

  // Ascending walk of the divisor lattice of hat via a min-heap keyed on
  // the exact numeric order; each pop extends by one prime-exponent step.
  struct HeapItem {
    std::string key;
    ExponentVector value;
  };
  auto heap_less = [](const HeapItem& a, const HeapItem& b) {
    if (a.key.size() != b.key.size()) return a.key.size() > b.key.size();
    return a.key > b.key;
  };
  std::priority_queue<HeapItem, std::vector<HeapItem>, decltype(heap_less)>
      heap(heap_less);
  EvSet seen;
  auto push = [&](ExponentVector v) {
    if (seen.insert(v).second) {
      heap.push({to_decimal(v), std::move(v)});
    }
  };
  push(ExponentVector{});
  bool witness_found = false;
  while (!heap.empty()) {
    HeapItem item = heap.top();
    heap.pop();
    if (!item.value.is_one()) {
      if (report.inspected == limit) {
        report.truncated = true;
        break;
      }
      ++report.inspected;
      std::size_t count = 0;
      for (const auto& m : n.members()) {
        if (divides(item.value, m)) ++count;
      }
      if (count * 2 >= report.total) {
        report.abundant.push_back({item.value, count});
        witness_found = true;
      }
    }
    for (auto [index, max_exp] : hat.entries()) {
      std::uint32_t cur = item.value.exponent_of(index);
      if (cur < max_exp) {
        auto entries = item.value.entries();
        bool replaced = false;
        for (auto& e : entries) {
          if (e.first == index) {
            ++e.second;
            replaced = true;
            break;
          }
        }
        if (!replaced) entries.push_back({index, 1});
        push(ExponentVector::from_entries(std::move(entries)));
      }
    }
  }
  report.status =
      witness_found ? ConjectureStatus::holds : ConjectureStatus::fails;
  return report;
}

NonAbundanceReport nonabundant_prime_powers(const NumberSet& n) {
  if (n.size() < 2) {
    fail(errc::too_few_members,
         "non-abundance needs at least two members, got " +
             std::to_string(n.size()));
  }
  NonAbundanceReport report;
  report.total = n.size();
  ExponentVector hat = lcm_of(n);
  for (const auto& [pp, count] : prime_power_census(n, hat)) {
    if (count >= 1 && count * 2 <= report.total) {
      report.nonabundant_prime_powers.push_back({pp, count});
    }
  }
  report.conjecture3_holds = !report.nonabundant_prime_powers.empty();
  return report;
}

NumberSet normalize(const NumberSet& n) {
  require_nonempty(n, "normalize");
  ExponentVector g = gcd_of(n);
  std::vector<ExponentVector> out;
  out.reserve(n.size());
  for (const auto& m : n.members()) out.push_back(divide_exact(m, g));
  return NumberSet(std::move(out));
}

NumberSet dual(const NumberSet& n) {
  require_nonempty(n, "dual");
  ExponentVector hat = lcm_of(n);
  std::vector<ExponentVector> out;
  out.reserve(n.size());
  for (const auto& m : n.members()) {
    out.push_back(exponent_complement(hat, m));
  }
  return NumberSet(std::move(out));
}

DualityWitness proposition3_witness(const NumberSet& n, DualDirection dir,
                                    std::optional<PrimePower> chosen) {
  require_nonempty(n, "proposition3_witness");
  if (n.size() < 2) {
    fail(errc::too_few_members,
         "the dual transport needs at least two members, got " +
             std::to_string(n.size()));
  }
  if (dir == DualDirection::gcd_to_lcm && !is_gcd_closed(n)) {
    fail(errc::not_gcd_closed, "the set is not GCD-closed");
  }
  if (dir == DualDirection::lcm_to_gcd && !is_lcm_closed(n)) {
    fail(errc::not_lcm_closed, "the set is not LCM-closed");
  }

  ExponentVector hat = lcm_of(n);
  auto census = prime_power_census(n, hat);
  auto qualifies = [&](std::size_t count) {
    if (dir == DualDirection::gcd_to_lcm) {
      return count >= 1 && count * 2 <= n.size();  // non-abundant
    }
    return count * 2 >= n.size() && count < n.size();  // abundant, not universal
  };

  DualityWitness w;
  w.total = n.size();
  bool found = false;
  for (const auto& [pp, count] : census) {
    if (chosen && pp != *chosen) continue;
    if (qualifies(count)) {
      w.source = pp;
      w.source_count = count;
      found = true;
      break;
    }
    if (chosen) {
      fail(errc::invalid_witness,
           pp.label() + " divides " + std::to_string(count) + " of " +
               std::to_string(n.size()) + " members and does not qualify");
    }
  }
  if (!found) {
    if (chosen) {
      fail(errc::invalid_witness,
           chosen->label() + " does not divide lcm of the set");
    }
    fail(errc::no_witness,
         dir == DualDirection::gcd_to_lcm
             ? "no non-abundant prime power exists"
             : "no abundant-but-not-universal prime power exists");
  }

  w.shifted = PrimePower{
      w.source.index,
      hat.exponent_of(w.source.index) - w.source.exponent + 1};
  w.dual_set = dual(n);
  for (const auto& m : w.dual_set.members()) {
    if (divides(w.shifted, m)) ++w.shifted_count;
  }
  if (dir == DualDirection::gcd_to_lcm) {
    w.verified = w.shifted_count * 2 >= w.total;
  } else {
    w.verified = w.shifted_count >= 1 && w.shifted_count * 2 <= w.total;
  }
  return w;
}

void EndoFunction::validate() const {
  if (image.empty()) fail(errc::domain_error, "endofunction domain is empty");
  for (std::uint32_t v : image) {
    if (v < 1 || v > image.size()) {
      fail(errc::domain_error,
           "image value " + std::to_string(v) + " outside 1.." +
               std::to_string(image.size()));
    }
  }
}

std::uint32_t EndoFunction::cycle_length(std::uint32_t x) const {
  std::uint32_t cur = x;
  for (std::size_t steps = 1; steps <= image.size(); ++steps) {
    cur = apply(cur);
    if (cur == x) return static_cast<std::uint32_t>(steps);
  }
  return 0;
}

NumberSet period_set(const EndoFunction& sigma,
                     const std::vector<std::uint32_t>& a) {
  sigma.validate();
  if (a.empty()) fail(errc::domain_error, "the subset A is empty");
  std::vector<ExponentVector> singleton_periods;
  for (std::uint32_t x : a) {
    if (x < 1 || x > sigma.domain_size()) {
      fail(errc::domain_error,
           "element " + std::to_string(x) + " outside the domain 1.." +
               std::to_string(sigma.domain_size()));
    }
    std::uint32_t len = sigma.cycle_length(x);
    if (len == 0) {
      fail(errc::domain_error,
           "element " + std::to_string(x) + " is not on a cycle");
    }
    singleton_periods.push_back(factorize(len));
  }
  // P(B) = lcm of the singleton periods over B, so the image over all
  // nonempty subsets is exactly the lcm closure of the singleton periods.
  return lcm_closure(NumberSet(std::move(singleton_periods)));
}

}  // namespace frankl
