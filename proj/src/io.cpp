#include "frankl/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace frankl {

namespace {

ExponentVector number_from_json(const Json& j) {
  if (j.is_string()) return parse_number(j.get<std::string>());
  if (j.is_number_unsigned()) return factorize(j.get<std::uint64_t>());
  if (j.is_object()) {
    if (j.contains("factored")) {
      return parse_number(j.at("factored").get<std::string>());
    }
    if (j.contains("decimal")) {
      return parse_number(j.at("decimal").get<std::string>());
    }
  }
  fail(errc::parse_error,
       "expected a number string, got: " + j.dump());
}

}  // namespace

NumberSet number_set_from_json(const Json& j) {
  const Json* array = &j;
  if (j.is_object()) {
    if (!j.contains("members")) {
      fail(errc::parse_error, "number set object lacks a \"members\" array");
    }
    array = &j.at("members");
  }
  if (!array->is_array()) {
    fail(errc::parse_error, "a number set is a JSON array of number strings");
  }
  std::vector<ExponentVector> members;
  members.reserve(array->size());
  for (const auto& item : *array) members.push_back(number_from_json(item));
  return NumberSet(std::move(members));
}

Json number_to_json(const ExponentVector& v) {
  return Json{{"decimal", to_decimal(v)}, {"factored", to_factored(v)}};
}

Json number_set_to_json(const NumberSet& n) {
  Json members = Json::array();
  for (const auto& v : n.members()) members.push_back(number_to_json(v));
  return Json{{"members", members}, {"size", n.size()}};
}

SetFamily set_family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("members")) {
    fail(errc::parse_error,
         "a family is {\"universe\": [labels], \"members\": [[labels], ...]}");
  }
  std::vector<std::string> labels;
  for (const auto& l : j.at("universe")) {
    if (!l.is_string()) fail(errc::parse_error, "universe labels are strings");
    labels.push_back(l.get<std::string>());
  }
  Universe universe(std::move(labels));

  std::vector<MemberBits> members;
  std::set<MemberBits> seen;
  for (const auto& member : j.at("members")) {
    if (!member.is_array()) {
      fail(errc::parse_error, "each member is an array of labels");
    }
    MemberBits bits = 0;
    for (const auto& l : member) {
      if (!l.is_string()) fail(errc::parse_error, "member elements are strings");
      std::size_t index = universe.index_of(l.get<std::string>());
      MemberBits bit = MemberBits{1} << index;
      if (bits & bit) {
        fail(errc::parse_error,
             "label \"" + l.get<std::string>() + "\" repeats within a member");
      }
      bits |= bit;
    }
    if (!seen.insert(bits).second) {
      fail(errc::parse_error, "duplicate member " + member.dump());
    }
    members.push_back(bits);
  }
  return SetFamily(std::move(universe), std::move(members));
}

Json set_family_to_json(const SetFamily& s) {
  Json members = Json::array();
  for (MemberBits m : s.members()) {
    Json labels = Json::array();
    for (std::size_t i = 0; i < s.universe().size(); ++i) {
      if (m >> i & 1) labels.push_back(s.universe().label(i));
    }
    members.push_back(labels);
  }
  return Json{{"universe", s.universe().labels()},
              {"members", members},
              {"size", s.size()}};
}

Json divisor_abundance_to_json(const DivisorAbundanceReport& r) {
  Json counts = Json::array();
  for (const auto& [pp, count] : r.prime_power_counts) {
    counts.push_back(Json{{"prime_power", pp.label()}, {"count", count}});
  }
  Json abundant = Json::array();
  for (const auto& pp : r.abundant_prime_powers) abundant.push_back(pp.label());
  Json out{{"total", r.total},
           {"prime_power_counts", counts},
           {"abundant_prime_powers", abundant},
           {"conjecture1", to_string(r.conjecture1)}};
  if (r.witness) out["witness"] = r.witness->label();
  return out;
}

Json general_divisors_to_json(const GeneralDivisorReport& r) {
  Json abundant = Json::array();
  for (const auto& [divisor, count] : r.abundant) {
    abundant.push_back(Json{{"divisor", number_to_json(divisor)},
                            {"count", count}});
  }
  return Json{{"total", r.total},
              {"status", to_string(r.status)},
              {"abundant", abundant},
              {"inspected", r.inspected},
              {"truncated", r.truncated}};
}

Json nonabundance_to_json(const NonAbundanceReport& r) {
  Json list = Json::array();
  for (const auto& [pp, count] : r.nonabundant_prime_powers) {
    list.push_back(Json{{"prime_power", pp.label()}, {"count", count}});
  }
  return Json{{"total", r.total},
              {"nonabundant_prime_powers", list},
              {"conjecture3", r.conjecture3_holds ? "holds" : "fails"}};
}

Json element_abundance_to_json(const ElementAbundanceReport& r) {
  Json counts = Json::array();
  for (const auto& [label, count] : r.element_counts) {
    counts.push_back(Json{{"element", label}, {"count", count}});
  }
  return Json{{"total", r.total},
              {"element_counts", counts},
              {"abundant_elements", r.abundant_elements},
              {"conjecture", to_string(r.conjecture)}};
}

Json case_report_to_json(const CaseReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json measured = Json::object();
    for (const auto& [key, value] : c.measured) measured[key] = value;
    cases.push_back(
        Json{{"id", c.id}, {"satisfied", c.satisfied}, {"measured", measured}});
  }
  return Json{{"cases", cases}, {"any_condition_met", r.any_condition_met}};
}

Json exhaustive_report_to_json(const ExhaustiveReport& r) {
  return Json{{"universe_size", r.universe_size},
              {"candidates", r.candidates},
              {"union_closed", r.union_closed_count},
              {"applicable", r.applicable_count},
              {"violations", r.violations},
              {"min_abundance",
               Json{{"count", r.min_abundance_count},
                    {"size", r.min_abundance_size}}},
              {"extremal",
               Json{{"total", r.extremal_total}, {"first", r.extremal_first}}},
              {"transport_checked", r.transport_checked}};
}

Json duality_witness_to_json(const DualityWitness& w) {
  return Json{{"dual", number_set_to_json(w.dual_set)},
              {"source", w.source.label()},
              {"source_count", w.source_count},
              {"shifted", w.shifted.label()},
              {"shifted_count", w.shifted_count},
              {"total", w.total},
              {"verified", w.verified}};
}

Json transport_rows_to_json(const std::vector<TransportRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back(Json{{"element", row.element},
                       {"prime_power", row.prime_power},
                       {"element_count", row.element_count},
                       {"divisor_count", row.divisor_count}});
  }
  return out;
}

Json load_json_argument(const std::string& argument) {
  std::string text;
  if (argument == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else if (!argument.empty() &&
             (argument.front() == '[' || argument.front() == '{')) {
    text = argument;
  } else {
    std::ifstream in(argument);
    if (!in) fail(errc::parse_error, "cannot open file " + argument);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    fail(errc::parse_error, "invalid JSON in " +
                                (argument == "-" ? "standard input" : argument));
  }
  return parsed;
}

}  // namespace frankl
