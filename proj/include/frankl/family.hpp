#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frankl/common.hpp"

namespace frankl {

// Ordered universe of distinct element labels; at most 64 so members fit in
// one machine word.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  // Index of a label, or fails with domain_error.
  std::size_t index_of(const std::string& label) const;

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A member set as a bitmask over universe indices.
using MemberBits = std::uint64_t;

// A finite family of subsets of the universe, deduplicated and kept in
// ascending bitmask order. The empty set may be a member. Immutable value.
class SetFamily {
 public:
  SetFamily() = default;
  // Validates that every member lies within the universe; rejects
  // duplicate members.
  SetFamily(Universe universe, std::vector<MemberBits> members);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<MemberBits>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(MemberBits m) const;

  bool operator==(const SetFamily&) const = default;

 private:
  Universe universe_;
  std::vector<MemberBits> members_;
};

// Union and intersection over all members (family must be nonempty).
MemberBits family_union(const SetFamily& s);
MemberBits family_intersection(const SetFamily& s);

bool is_union_closed(const SetFamily& s);
bool is_intersection_closed(const SetFamily& s);

// Smallest union-closed (resp. intersection-closed) superfamily, by
// fixpoint iteration; at most 2^|universe| members.
SetFamily union_closure(const SetFamily& s);
SetFamily intersection_closure(const SetFamily& s);

struct ElementAbundanceReport {
  std::size_t total = 0;
  // Labels of the union of all members, in universe order, with the number
  // of members containing each.
  std::vector<std::pair<std::string, std::size_t>> element_counts;
  std::vector<std::string> abundant_elements;  // count*2 >= total
  // not_applicable when no member is nonempty.
  ConjectureStatus conjecture = ConjectureStatus::not_applicable;
};

ElementAbundanceReport abundant_elements(const SetFamily& s);

// Complements every member within the union of all members; the result's
// universe is that union. Bijective on members; swaps union- and
// intersection-closedness.
SetFamily complement_dual(const SetFamily& s);

// True iff for every pair of distinct elements x, y of the union there are
// members A, B with x in A, y in B, and x, y not in A intersect B.
bool is_separating(const SetFamily& s);

struct IdentifyResult {
  SetFamily quotient;
  // old label -> representative label of its class (first in universe order)
  std::vector<std::pair<std::string, std::string>> label_classes;
};

// Merges universe elements that lie in exactly the same members. Member
// count is preserved, as are per-class abundance ratios.
IdentifyResult identify_elements(const SetFamily& s);

// Invariant signature used for cheap set-isomorphism checks: the multiset
// of member cardinalities plus the multiset of per-element membership
// counts (zero columns dropped).
struct FamilySignature {
  std::vector<std::size_t> member_sizes;   // sorted
  std::vector<std::size_t> column_counts;  // sorted

  bool operator==(const FamilySignature&) const = default;
};

FamilySignature family_signature(const SetFamily& s);

}  // namespace frankl
