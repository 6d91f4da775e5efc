#include "frankl/family.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace frankl {

namespace {

void require_nonempty(const SetFamily& s, const char* op) {
  if (s.empty()) {
    fail(errc::domain_error,
         std::string(op) + " is undefined for the empty family");
  }
}

std::string member_to_string(const Universe& u, MemberBits m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (m >> i & 1) {
      if (!first) out += ",";
      out += u.label(i);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 64) {
    fail(errc::universe_too_large,
         "universe has " + std::to_string(labels_.size()) +
             " labels; the limit is 64");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) fail(errc::domain_error, "empty universe label");
    if (!seen.insert(l).second) {
      fail(errc::domain_error, "duplicate universe label \"" + l + "\"");
    }
  }
}

std::size_t Universe::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  fail(errc::domain_error, "label \"" + label + "\" is not in the universe");
}

SetFamily::SetFamily(Universe universe, std::vector<MemberBits> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  MemberBits full = universe_.size() == 64
                        ? ~MemberBits{0}
                        : (MemberBits{1} << universe_.size()) - 1;
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if ((members_[i] & ~full) != 0) {
      fail(errc::domain_error, "member outside the declared universe");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      fail(errc::domain_error,
           "duplicate member " + member_to_string(universe_, members_[i]));
    }
  }
}

bool SetFamily::contains(MemberBits m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

MemberBits family_union(const SetFamily& s) {
  require_nonempty(s, "family_union");
  MemberBits u = 0;
  for (MemberBits m : s.members()) u |= m;
  return u;
}

MemberBits family_intersection(const SetFamily& s) {
  require_nonempty(s, "family_intersection");
  MemberBits c = ~MemberBits{0};
  for (MemberBits m : s.members()) c &= m;
  return c;
}

bool is_union_closed(const SetFamily& s) {
  require_nonempty(s, "is_union_closed");
  const auto& ms = s.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!s.contains(ms[i] | ms[j])) return false;
    }
  }
  return true;
}

bool is_intersection_closed(const SetFamily& s) {
  require_nonempty(s, "is_intersection_closed");
  const auto& ms = s.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!s.contains(ms[i] & ms[j])) return false;
    }
  }
  return true;
}

namespace {

template <typename Combine>
SetFamily closure_of(const SetFamily& s, const char* op, Combine combine) {
  require_nonempty(s, op);
  std::set<MemberBits> cur(s.members().begin(), s.members().end());
  std::vector<MemberBits> fresh(cur.begin(), cur.end());
  while (!fresh.empty()) {
    std::vector<MemberBits> all(cur.begin(), cur.end());
    std::vector<MemberBits> next;
    for (MemberBits x : fresh) {
      for (MemberBits y : all) {
        MemberBits z = combine(x, y);
        if (cur.insert(z).second) next.push_back(z);
      }
    }
    fresh = std::move(next);
  }
  return SetFamily(s.universe(),
                   std::vector<MemberBits>(cur.begin(), cur.end()));
}

}  // namespace

SetFamily union_closure(const SetFamily& s) {
  return closure_of(s, "union_closure",
                    [](MemberBits a, MemberBits b) { return a | b; });
}

SetFamily intersection_closure(const SetFamily& s) {
  return closure_of(s, "intersection_closure",
                    [](MemberBits a, MemberBits b) { return a & b; });
}

ElementAbundanceReport abundant_elements(const SetFamily& s) {
  require_nonempty(s, "abundant_elements");
  ElementAbundanceReport report;
  report.total = s.size();
  MemberBits u = family_union(s);
  for (std::size_t i = 0; i < s.universe().size(); ++i) {
    if (!(u >> i & 1)) continue;
    std::size_t count = 0;
    for (MemberBits m : s.members()) {
      if (m >> i & 1) ++count;
    }
    report.element_counts.push_back({s.universe().label(i), count});
    if (count * 2 >= report.total) {
      report.abundant_elements.push_back(s.universe().label(i));
    }
  }
  if (u == 0) {
    report.conjecture = ConjectureStatus::not_applicable;
  } else {
    report.conjecture = report.abundant_elements.empty()
                            ? ConjectureStatus::fails
                            : ConjectureStatus::holds;
  }
  return report;
}

SetFamily complement_dual(const SetFamily& s) {
  require_nonempty(s, "complement_dual");
  MemberBits u = family_union(s);
  // Re-encode over the union's labels only.
  std::vector<std::string> labels;
  std::vector<std::size_t> old_index;
  for (std::size_t i = 0; i < s.universe().size(); ++i) {
    if (u >> i & 1) {
      labels.push_back(s.universe().label(i));
      old_index.push_back(i);
    }
  }
  std::vector<MemberBits> members;
  members.reserve(s.size());
  for (MemberBits m : s.members()) {
    MemberBits inverted = 0;
    for (std::size_t k = 0; k < old_index.size(); ++k) {
      if (!(m >> old_index[k] & 1)) inverted |= MemberBits{1} << k;
    }
    members.push_back(inverted);
  }
  return SetFamily(Universe(std::move(labels)), std::move(members));
}

bool is_separating(const SetFamily& s) {
  require_nonempty(s, "is_separating");
  MemberBits u = family_union(s);
  for (std::size_t x = 0; x < s.universe().size(); ++x) {
    if (!(u >> x & 1)) continue;
    for (std::size_t y = x + 1; y < s.universe().size(); ++y) {
      if (!(u >> y & 1)) continue;
      // Need A with x but not y, and B with y but not x.
      bool a_found = false, b_found = false;
      for (MemberBits m : s.members()) {
        bool has_x = m >> x & 1, has_y = m >> y & 1;
        if (has_x && !has_y) a_found = true;
        if (has_y && !has_x) b_found = true;
        if (a_found && b_found) break;
      }
      if (!a_found || !b_found) return false;
    }
  }
  return true;
}

IdentifyResult identify_elements(const SetFamily& s) {
  require_nonempty(s, "identify_elements");
  // Column of element i = the set of members containing it.
  std::map<std::vector<bool>, std::size_t> representative;
  std::vector<std::size_t> class_of(s.universe().size());
  std::vector<std::size_t> reps;  // universe indices, in order
  for (std::size_t i = 0; i < s.universe().size(); ++i) {
    std::vector<bool> column;
    column.reserve(s.size());
    for (MemberBits m : s.members()) column.push_back(m >> i & 1);
    auto [it, inserted] = representative.insert({std::move(column), reps.size()});
    if (inserted) reps.push_back(i);
    class_of[i] = it->second;
  }

  std::vector<std::string> labels;
  labels.reserve(reps.size());
  for (std::size_t r : reps) labels.push_back(s.universe().label(r));
  std::vector<MemberBits> members;
  members.reserve(s.size());
  for (MemberBits m : s.members()) {
    MemberBits q = 0;
    for (std::size_t i = 0; i < s.universe().size(); ++i) {
      if (m >> i & 1) q |= MemberBits{1} << class_of[i];
    }
    members.push_back(q);
  }

  IdentifyResult result;
  result.quotient = SetFamily(Universe(std::move(labels)), std::move(members));
  for (std::size_t i = 0; i < s.universe().size(); ++i) {
    result.label_classes.push_back(
        {s.universe().label(i), s.universe().label(reps[class_of[i]])});
  }
  return result;
}

FamilySignature family_signature(const SetFamily& s) {
  FamilySignature sig;
  for (MemberBits m : s.members()) {
    sig.member_sizes.push_back(static_cast<std::size_t>(std::popcount(m)));
  }
  for (std::size_t i = 0; i < s.universe().size(); ++i) {
    std::size_t count = 0;
    for (MemberBits m : s.members()) {
      if (m >> i & 1) ++count;
    }
    if (count > 0) sig.column_counts.push_back(count);
  }
  std::sort(sig.member_sizes.begin(), sig.member_sizes.end());
  std::sort(sig.column_counts.begin(), sig.column_counts.end());
  return sig;
}

}  // namespace frankl
