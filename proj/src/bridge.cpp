#include "frankl/bridge.hpp"

#include <algorithm>

namespace frankl {

PrimePowerSet PrimePowerSet::from_powers(std::vector<PrimePower> powers) {
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  for (const auto& p : powers) {
    if (p.index == 0 || p.exponent == 0) {
      fail(errc::domain_error, "prime powers need index >= 1 and exponent >= 1");
    }
  }
  PrimePowerSet s;
  s.powers_ = std::move(powers);
  return s;
}

bool PrimePowerSet::contains(const PrimePower& p) const {
  return std::binary_search(powers_.begin(), powers_.end(), p);
}

std::optional<ChainGap> chain_gap(const PrimePowerSet& s) {
  // powers_ is sorted by (prime, exponent), so each prime's exponents form
  // a contiguous run that must be exactly 1..highest.
  std::size_t i = 0;
  const auto& ps = s.powers();
  while (i < ps.size()) {
    PrimeIndex prime = ps[i].index;
    std::uint32_t expected = 1;
    std::size_t j = i;
    while (j < ps.size() && ps[j].index == prime) {
      if (ps[j].exponent != expected) {
        return ChainGap{prime, expected, ps[j].exponent};
      }
      ++expected;
      ++j;
    }
    i = j;
  }
  return std::nullopt;
}

PrimePowerSet f_map(const ExponentVector& n) {
  std::vector<PrimePower> powers;
  powers.reserve(sigma_ppe(n));
  for (auto [index, exponent] : n.entries()) {
    for (std::uint32_t k = 1; k <= exponent; ++k) powers.push_back({index, k});
  }
  return PrimePowerSet::from_powers(std::move(powers));
}

ExponentVector g_map(const PrimePowerSet& s) {
  if (auto gap = chain_gap(s)) {
    fail(errc::chain_violation,
         "not an integer image: prime " + std::to_string(nth_prime(gap->index)) +
             " has " + PrimePower{gap->index, gap->highest}.label() +
             " but is missing " + PrimePower{gap->index, gap->missing}.label());
  }
  std::vector<ExponentVector::Entry> entries;
  for (const auto& p : s.powers()) {
    if (!entries.empty() && entries.back().first == p.index) {
      entries.back().second = p.exponent;  // keeps the maximal power
    } else {
      entries.push_back({p.index, p.exponent});
    }
  }
  return ExponentVector::from_entries(std::move(entries));
}

PrimePowerSet set_union(const PrimePowerSet& a, const PrimePowerSet& b) {
  std::vector<PrimePower> out(a.powers());
  out.insert(out.end(), b.powers().begin(), b.powers().end());
  return PrimePowerSet::from_powers(std::move(out));
}

PrimePowerSet set_intersection(const PrimePowerSet& a, const PrimePowerSet& b) {
  std::vector<PrimePower> out;
  std::set_intersection(a.powers().begin(), a.powers().end(),
                        b.powers().begin(), b.powers().end(),
                        std::back_inserter(out));
  return PrimePowerSet::from_powers(std::move(out));
}

bool is_subset(const PrimePowerSet& a, const PrimePowerSet& b) {
  return std::includes(b.powers().begin(), b.powers().end(),
                       a.powers().begin(), a.powers().end());
}

NumberSet family_to_numset(const SetFamily& s) {
  if (s.empty()) {
    fail(errc::domain_error, "cannot convert the empty family");
  }
  if (!is_union_closed(s)) {
    fail(errc::not_union_closed,
         "the family is not union-closed; close it first if that is intended");
  }
  std::vector<ExponentVector> members;
  members.reserve(s.size());
  for (MemberBits m : s.members()) {
    std::vector<PrimePower> powers;
    for (std::size_t i = 0; i < s.universe().size(); ++i) {
      if (m >> i & 1) {
        powers.push_back({static_cast<PrimeIndex>(i + 1), 1});
      }
    }
    members.push_back(g_map(PrimePowerSet::from_powers(std::move(powers))));
  }
  return NumberSet(std::move(members));
}

SetFamily numset_to_family(const NumberSet& n) {
  if (n.empty()) {
    fail(errc::domain_error, "cannot convert the empty set");
  }
  if (!is_lcm_closed(n)) {
    fail(errc::not_lcm_closed,
         "the set is not LCM-closed; close it first if that is intended");
  }
  ExponentVector hat = lcm_of(n);
  if (sigma_ppe(hat) > 64) {
    fail(errc::universe_too_large,
         "lcm has " + std::to_string(sigma_ppe(hat)) +
             " prime powers; family universes are limited to 64");
  }
  std::vector<std::string> labels;
  std::vector<PrimePower> columns;
  for (auto [index, max_exp] : hat.entries()) {
    for (std::uint32_t k = 1; k <= max_exp; ++k) {
      columns.push_back({index, k});
      labels.push_back(PrimePower{index, k}.label());
    }
  }
  std::vector<MemberBits> members;
  members.reserve(n.size());
  for (const auto& v : n.members()) {
    PrimePowerSet image = f_map(v);
    MemberBits bits = 0;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (image.contains(columns[i])) bits |= MemberBits{1} << i;
    }
    members.push_back(bits);
  }
  return SetFamily(Universe(std::move(labels)), std::move(members));
}

namespace {

std::size_t column_count(const SetFamily& s, std::size_t i) {
  std::size_t count = 0;
  for (MemberBits m : s.members()) {
    if (m >> i & 1) ++count;
  }
  return count;
}

std::size_t divisor_count(const NumberSet& n, const PrimePower& p) {
  std::size_t count = 0;
  for (const auto& v : n.members()) {
    if (divides(p, v)) ++count;
  }
  return count;
}

}  // namespace

std::vector<TransportRow> family_transport(const SetFamily& s,
                                           const NumberSet& image) {
  std::vector<TransportRow> rows;
  for (std::size_t i = 0; i < s.universe().size(); ++i) {
    PrimePower p{static_cast<PrimeIndex>(i + 1), 1};
    rows.push_back({s.universe().label(i), p.label(), column_count(s, i),
                    divisor_count(image, p)});
  }
  return rows;
}

std::vector<TransportRow> numset_transport(const NumberSet& n,
                                           const SetFamily& image) {
  std::vector<TransportRow> rows;
  for (std::size_t i = 0; i < image.universe().size(); ++i) {
    const std::string& label = image.universe().label(i);
    PrimePower p = parse_prime_power(label);
    rows.push_back({label, label, column_count(image, i), divisor_count(n, p)});
  }
  return rows;
}

}  // namespace frankl
