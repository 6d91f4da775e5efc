// Command-line front end: check / closure / abundance / dual / convert /
// known-cases / enumerate / gen, over number sets and set families.
//
// Exit codes: 0 = success (conjecture holds or not applicable),
//             1 = a conjecture violation was found (emitted in full),
//             2 = invalid input or precondition failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frankl/io.hpp"

namespace {

using frankl::Json;

struct Outcome {
  Json report;
  std::vector<std::string> violations;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string numbers_line(const frankl::NumberSet& n, bool factored) {
  std::vector<std::string> parts;
  for (const auto& m : n.members()) {
    parts.push_back(factored ? frankl::to_factored(m) : frankl::to_decimal(m));
  }
  return join(parts, ", ");
}

std::string member_line(const frankl::SetFamily& s, frankl::MemberBits m) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < s.universe().size(); ++i) {
    if (m >> i & 1) parts.push_back(s.universe().label(i));
  }
  return "{" + join(parts, ",") + "}";
}

std::string family_lines(const frankl::SetFamily& s) {
  std::vector<std::string> parts;
  for (frankl::MemberBits m : s.members()) parts.push_back(member_line(s, m));
  return join(parts, " ");
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ---- table renderers ------------------------------------------------------

void print_numset_header(std::ostream& os, const frankl::NumberSet& n) {
  os << "set (" << n.size() << "): " << numbers_line(n, false) << "\n";
  os << "  factored: " << numbers_line(n, true) << "\n";
}

void print_divisor_abundance(std::ostream& os,
                             const frankl::DivisorAbundanceReport& r) {
  os << "conjecture 1 (abundant divisor): " << to_string(r.conjecture1) << "\n";
  if (r.witness) {
    std::size_t count = 0;
    for (const auto& [pp, c] : r.prime_power_counts) {
      if (pp == *r.witness) count = c;
    }
    os << "  witness: prime " << r.witness->label() << " divides " << count
       << " of " << r.total << " members\n";
  }
  if (!r.prime_power_counts.empty()) {
    os << "  prime power counts:";
    for (const auto& [pp, c] : r.prime_power_counts) {
      os << " " << pp.label() << ":" << c;
    }
    os << "\n";
    std::vector<std::string> abundant;
    for (const auto& pp : r.abundant_prime_powers) abundant.push_back(pp.label());
    os << "  abundant prime powers: "
       << (abundant.empty() ? "none" : join(abundant, ", ")) << "\n";
  }
}

void print_nonabundance(std::ostream& os, const frankl::NonAbundanceReport& r) {
  os << "conjecture 3 (non-abundant prime power): "
     << (r.conjecture3_holds ? "holds" : "fails") << "\n";
  if (!r.nonabundant_prime_powers.empty()) {
    os << "  non-abundant:";
    for (const auto& [pp, c] : r.nonabundant_prime_powers) {
      os << " " << pp.label() << ":" << c;
    }
    os << "\n";
  }
}

void print_element_abundance(std::ostream& os,
                             const frankl::ElementAbundanceReport& r) {
  os << "conjecture (abundant element): " << to_string(r.conjecture) << "\n";
  if (!r.element_counts.empty()) {
    os << "  element counts:";
    for (const auto& [label, c] : r.element_counts) {
      os << " " << label << ":" << c;
    }
    os << "\n";
    os << "  abundant elements: "
       << (r.abundant_elements.empty() ? "none"
                                       : join(r.abundant_elements, ", "))
       << "\n";
  }
}

void print_case_report(std::ostream& os, const frankl::CaseReport& r) {
  static const char* description[] = {
      "a member with one or two (effective) elements",
      "effective universe of at most 12",
      "at most 50 members",
      "at least two thirds of the full power set",
      "separating with at most twice the universe size",
  };
  for (const auto& c : r.cases) {
    os << "case " << c.id << " (" << description[c.id - 1]
       << "): " << (c.satisfied ? "satisfied" : "not satisfied");
    if (!c.measured.empty()) {
      os << "  [";
      for (std::size_t i = 0; i < c.measured.size(); ++i) {
        if (i) os << ", ";
        os << c.measured[i].first << "=" << c.measured[i].second;
      }
      os << "]";
    }
    os << "\n";
  }
  os << "any condition met: " << yesno(r.any_condition_met) << "\n";
}

void print_exhaustive(std::ostream& os, const frankl::ExhaustiveReport& r) {
  os << "universe size: " << r.universe_size << "\n";
  os << "candidate families: " << r.candidates << "\n";
  os << "union-closed: " << r.union_closed_count << "\n";
  os << "with a nonempty member: " << r.applicable_count << "\n";
  os << "violations: " << r.violations.size() << "\n";
  os << "minimum abundance: " << r.min_abundance_count << "/"
     << r.min_abundance_size << " (reached by " << r.extremal_total
     << " families)\n";
  if (r.transport_checked > 0) {
    os << "transport cross-checks: " << r.transport_checked << "\n";
  }
}

// ---- subcommand handlers --------------------------------------------------

Outcome run_check_numset(const frankl::NumberSet& n) {
  Outcome out;
  bool lcm_closed = frankl::is_lcm_closed(n);
  bool gcd_closed = frankl::is_gcd_closed(n);
  auto abundance = frankl::abundant_divisors(n);
  out.report = Json{{"input", frankl::number_set_to_json(n)},
                    {"lcm_closed", lcm_closed},
                    {"gcd_closed", gcd_closed},
                    {"abundance", frankl::divisor_abundance_to_json(abundance)}};
  if (lcm_closed && abundance.conjecture1 == frankl::ConjectureStatus::fails) {
    out.violations.push_back(
        "LCM-closed set without an abundant prime: " + numbers_line(n, false));
  }
  if (n.size() >= 2) {
    auto nonabundance = frankl::nonabundant_prime_powers(n);
    out.report["nonabundance"] = frankl::nonabundance_to_json(nonabundance);
    if (gcd_closed && !nonabundance.conjecture3_holds) {
      out.violations.push_back(
          "GCD-closed set where every prime power is abundant: " +
          numbers_line(n, false));
    }
  }
  return out;
}

Outcome run_check_family(const frankl::SetFamily& s) {
  Outcome out;
  bool union_closed = frankl::is_union_closed(s);
  bool intersection_closed = frankl::is_intersection_closed(s);
  auto abundance = frankl::abundant_elements(s);
  out.report =
      Json{{"input", frankl::set_family_to_json(s)},
           {"union_closed", union_closed},
           {"intersection_closed", intersection_closed},
           {"abundance", frankl::element_abundance_to_json(abundance)}};
  if (union_closed && abundance.conjecture == frankl::ConjectureStatus::fails) {
    out.violations.push_back(
        "union-closed family without an abundant element: " + family_lines(s));
  }
  return out;
}

void print_check_numset(std::ostream& os, const frankl::NumberSet& n,
                        const Json& report) {
  print_numset_header(os, n);
  os << "lcm-closed: " << yesno(report.at("lcm_closed").get<bool>()) << "\n";
  os << "gcd-closed: " << yesno(report.at("gcd_closed").get<bool>()) << "\n";
  print_divisor_abundance(os, frankl::abundant_divisors(n));
  if (n.size() >= 2) {
    print_nonabundance(os, frankl::nonabundant_prime_powers(n));
  }
}

void print_check_family(std::ostream& os, const frankl::SetFamily& s,
                        const Json& report) {
  os << "family (" << s.size() << ") over universe {"
     << join(s.universe().labels(), ", ") << "}\n";
  os << "members: " << family_lines(s) << "\n";
  os << "union-closed: " << yesno(report.at("union_closed").get<bool>())
     << "\n";
  os << "intersection-closed: "
     << yesno(report.at("intersection_closed").get<bool>()) << "\n";
  print_element_abundance(os, frankl::abundant_elements(s));
}

// ---- main -----------------------------------------------------------------

int dispatch(int argc, char** argv) {
  CLI::App app{
      "frankl: finite checks for the union-closed sets conjecture and its "
      "LCM-closed integer form"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  std::size_t sieve_cap_opt = 0;
  app.add_option("--sieve-cap", sieve_cap_opt,
                 "maximum number of primes the sieve may hold");

  std::string kind, input;

  auto* check = app.add_subcommand("check", "closedness and conjecture report");
  check->add_option("kind", kind)->required()
      ->check(CLI::IsMember({"numset", "family"}));
  check->add_option("input", input, "inline JSON, file path, or -")->required();

  std::string closure_op;
  auto* closure = app.add_subcommand("closure", "close under an operation");
  closure->add_option("operation", closure_op)->required()
      ->check(CLI::IsMember({"lcm", "gcd", "union", "intersection"}));
  closure->add_option("input", input)->required();

  bool all_divisors = false;
  std::size_t divisor_limit = 10000;
  auto* abundance = app.add_subcommand("abundance", "abundance report");
  abundance->add_option("kind", kind)->required()
      ->check(CLI::IsMember({"numset", "family"}));
  abundance->add_option("input", input)->required();
  abundance->add_flag("--all-divisors", all_divisors,
                      "also enumerate composite divisors (numset only)");
  abundance->add_option("--limit", divisor_limit,
                        "divisor enumeration cap (default 10000)");

  bool witness = false;
  std::string witness_power, witness_direction = "auto";
  auto* dual_cmd = app.add_subcommand("dual", "dual construction");
  dual_cmd->add_option("kind", kind)->required()
      ->check(CLI::IsMember({"numset", "family"}));
  dual_cmd->add_option("input", input)->required();
  dual_cmd->add_flag("--witness", witness,
                     "transport a prime-power witness through the dual");
  dual_cmd->add_option("--power", witness_power,
                       "the prime power to transport, e.g. 2^2");
  dual_cmd->add_option("--direction", witness_direction)
      ->check(CLI::IsMember({"auto", "gcd-to-lcm", "lcm-to-gcd"}));

  auto* convert = app.add_subcommand("convert",
                                     "translate between families and sets");
  convert->add_option("kind", kind, "the INPUT representation")->required()
      ->check(CLI::IsMember({"numset", "family"}));
  convert->add_option("input", input)->required();

  auto* cases = app.add_subcommand("known-cases",
                                   "sufficient conditions with known proofs");
  cases->add_option("kind", kind)->required()
      ->check(CLI::IsMember({"numset", "family"}));
  cases->add_option("input", input)->required();

  std::uint32_t enum_n = 0;
  unsigned workers = 1;
  if (const char* env = std::getenv("FRANKL_WORKERS")) {
    int parsed = std::atoi(env);
    if (parsed > 0) workers = static_cast<unsigned>(parsed);
  }
  std::string checkpoint_path;
  bool allow_large = false, progress = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "scan every family over a small universe");
  enumerate->add_option("--n", enum_n, "universe size (1..4; 5 gated)")
      ->required();
  enumerate->add_option("--workers", workers, "worker threads");
  enumerate->add_option("--checkpoint", checkpoint_path,
                        "resumable per-chunk progress file");
  enumerate->add_flag("--allow-large", allow_large,
                      "accept the 2^32-candidate scan at n = 5");
  enumerate->add_flag("--progress", progress, "progress lines on stderr");

  std::string gen_what;
  std::uint64_t seed = 1;
  std::uint32_t draws = 4, max_exponent = 2;
  frankl::PrimeIndex max_prime_index = 3;
  bool gen_gcd = false;
  std::string sigma_text, subset_text;
  auto* gen = app.add_subcommand("gen", "generate test instances");
  gen->add_option("what", gen_what)->required()
      ->check(CLI::IsMember({"closed-numset", "periods"}));
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--draws", draws, "members drawn before closing");
  gen->add_option("--max-prime-index", max_prime_index);
  gen->add_option("--max-exponent", max_exponent);
  gen->add_flag("--gcd", gen_gcd, "close under gcd instead of lcm");
  gen->add_option("--sigma", sigma_text,
                  "endofunction image as a JSON array, e.g. [2,1,4,5,3]");
  gen->add_option("--subset", subset_text,
                  "subset of the domain as a JSON array, e.g. [1,3]");

  CLI11_PARSE(app, argc, argv);

  if (sieve_cap_opt > 0) frankl::set_sieve_cap(sieve_cap_opt);

  Outcome out;

  if (check->parsed()) {
    if (kind == "numset") {
      out = run_check_numset(
          frankl::number_set_from_json(frankl::load_json_argument(input)));
    } else {
      out = run_check_family(
          frankl::set_family_from_json(frankl::load_json_argument(input)));
    }
  } else if (closure->parsed()) {
    if (closure_op == "lcm" || closure_op == "gcd") {
      auto n = frankl::number_set_from_json(frankl::load_json_argument(input));
      auto closed = closure_op == "lcm" ? frankl::lcm_closure(n)
                                        : frankl::gcd_closure(n);
      out.report = Json{{"input", frankl::number_set_to_json(n)},
                        {"closure", frankl::number_set_to_json(closed)},
                        {"added", closed.size() - n.size()},
                        {"was_closed", closed.size() == n.size()}};
    } else {
      auto s = frankl::set_family_from_json(frankl::load_json_argument(input));
      auto closed = closure_op == "union" ? frankl::union_closure(s)
                                          : frankl::intersection_closure(s);
      out.report = Json{{"input", frankl::set_family_to_json(s)},
                        {"closure", frankl::set_family_to_json(closed)},
                        {"added", closed.size() - s.size()},
                        {"was_closed", closed.size() == s.size()}};
    }
  } else if (abundance->parsed()) {
    if (kind == "numset") {
      auto n = frankl::number_set_from_json(frankl::load_json_argument(input));
      bool lcm_closed = frankl::is_lcm_closed(n);
      auto report = frankl::abundant_divisors(n);
      out.report = Json{{"input", frankl::number_set_to_json(n)},
                        {"lcm_closed", lcm_closed},
                        {"report", frankl::divisor_abundance_to_json(report)}};
      if (all_divisors) {
        out.report["general_divisors"] = frankl::general_divisors_to_json(
            frankl::abundant_general_divisors(n, divisor_limit));
      }
      if (lcm_closed && report.conjecture1 == frankl::ConjectureStatus::fails) {
        out.violations.push_back("LCM-closed set without an abundant prime: " +
                                 numbers_line(n, false));
      }
    } else {
      auto s = frankl::set_family_from_json(frankl::load_json_argument(input));
      bool union_closed = frankl::is_union_closed(s);
      auto report = frankl::abundant_elements(s);
      out.report = Json{{"input", frankl::set_family_to_json(s)},
                        {"union_closed", union_closed},
                        {"report", frankl::element_abundance_to_json(report)}};
      if (union_closed &&
          report.conjecture == frankl::ConjectureStatus::fails) {
        out.violations.push_back(
            "union-closed family without an abundant element: " +
            family_lines(s));
      }
    }
  } else if (dual_cmd->parsed()) {
    if (kind == "numset") {
      auto n = frankl::number_set_from_json(frankl::load_json_argument(input));
      auto d = frankl::dual(n);
      frankl::ExponentVector hat = frankl::lcm_of(n);
      Json map = Json::array();
      for (const auto& m : n.members()) {
        map.push_back(
            Json{{"from", frankl::number_to_json(m)},
                 {"to", frankl::number_to_json(
                            frankl::exponent_complement(hat, m))}});
      }
      out.report = Json{{"input", frankl::number_set_to_json(n)},
                        {"lcm", frankl::number_to_json(hat)},
                        {"dual", frankl::number_set_to_json(d)},
                        {"map", map}};
      if (witness) {
        frankl::DualDirection dir;
        if (witness_direction == "gcd-to-lcm") {
          dir = frankl::DualDirection::gcd_to_lcm;
        } else if (witness_direction == "lcm-to-gcd") {
          dir = frankl::DualDirection::lcm_to_gcd;
        } else {
          dir = frankl::is_gcd_closed(n) ? frankl::DualDirection::gcd_to_lcm
                                         : frankl::DualDirection::lcm_to_gcd;
        }
        std::optional<frankl::PrimePower> chosen;
        if (!witness_power.empty()) {
          chosen = frankl::parse_prime_power(witness_power);
        }
        auto w = frankl::proposition3_witness(n, dir, chosen);
        out.report["witness"] = frankl::duality_witness_to_json(w);
        if (!w.verified) {
          out.violations.push_back("shifted prime power " + w.shifted.label() +
                                   " failed verification in the dual");
        }
      }
    } else {
      auto s = frankl::set_family_from_json(frankl::load_json_argument(input));
      auto d = frankl::complement_dual(s);
      std::vector<std::string> union_labels;
      frankl::MemberBits u = frankl::family_union(s);
      for (std::size_t i = 0; i < s.universe().size(); ++i) {
        if (u >> i & 1) union_labels.push_back(s.universe().label(i));
      }
      out.report = Json{{"input", frankl::set_family_to_json(s)},
                        {"union", union_labels},
                        {"dual", frankl::set_family_to_json(d)}};
    }
  } else if (convert->parsed()) {
    if (kind == "family") {
      auto s = frankl::set_family_from_json(frankl::load_json_argument(input));
      auto n = frankl::family_to_numset(s);
      out.report = Json{
          {"direction", "family-to-numset"},
          {"input", frankl::set_family_to_json(s)},
          {"result", frankl::number_set_to_json(n)},
          {"transport",
           frankl::transport_rows_to_json(frankl::family_transport(s, n))}};
    } else {
      auto n = frankl::number_set_from_json(frankl::load_json_argument(input));
      auto s = frankl::numset_to_family(n);
      out.report = Json{
          {"direction", "numset-to-family"},
          {"input", frankl::number_set_to_json(n)},
          {"result", frankl::set_family_to_json(s)},
          {"transport",
           frankl::transport_rows_to_json(frankl::numset_transport(n, s))}};
    }
  } else if (cases->parsed()) {
    if (kind == "numset") {
      auto n = frankl::number_set_from_json(frankl::load_json_argument(input));
      out.report = Json{{"input", frankl::number_set_to_json(n)},
                        {"report", frankl::case_report_to_json(
                                       frankl::known_cases_numset(n))}};
    } else {
      auto s = frankl::set_family_from_json(frankl::load_json_argument(input));
      out.report = Json{{"input", frankl::set_family_to_json(s)},
                        {"report", frankl::case_report_to_json(
                                       frankl::known_cases_family(s))}};
    }
  } else if (enumerate->parsed()) {
    frankl::ScanOptions options;
    options.workers = workers;
    options.checkpoint_path = checkpoint_path;
    options.allow_large = allow_large;
    options.progress = progress || enum_n == 5;
    auto report = frankl::verify_exhaustive(enum_n, options);
    out.report = Json{{"report", frankl::exhaustive_report_to_json(report)}};
    if (!report.violations.empty()) {
      Json counterexamples = Json::array();
      for (std::uint64_t id : report.violations) {
        counterexamples.push_back(frankl::set_family_to_json(
            frankl::decode_family(enum_n, id)));
        out.violations.push_back("family id " + std::to_string(id) +
                                 " has no abundant element");
      }
      out.report["counterexamples"] = counterexamples;
    }
  } else if (gen->parsed()) {
    if (gen_what == "closed-numset") {
      frankl::RandomNumSetParams params;
      params.seed = seed;
      params.draws = draws;
      params.max_prime_index = max_prime_index;
      params.max_exponent = max_exponent;
      params.gcd_closed = gen_gcd;
      auto n = frankl::random_closed_numset(params);
      out.report = Json{{"params",
                         Json{{"seed", params.seed},
                              {"draws", params.draws},
                              {"max_prime_index", params.max_prime_index},
                              {"max_exponent", params.max_exponent},
                              {"kind", gen_gcd ? "gcd" : "lcm"}}},
                        {"result", frankl::number_set_to_json(n)}};
    } else {
      if (sigma_text.empty() || subset_text.empty()) {
        frankl::fail(frankl::errc::parse_error,
                     "gen periods needs --sigma and --subset");
      }
      Json sigma_json = frankl::load_json_argument(sigma_text);
      Json subset_json = frankl::load_json_argument(subset_text);
      frankl::EndoFunction sigma;
      for (const auto& v : sigma_json) {
        sigma.image.push_back(v.get<std::uint32_t>());
      }
      std::vector<std::uint32_t> subset;
      for (const auto& v : subset_json) subset.push_back(v.get<std::uint32_t>());
      auto periods = frankl::periods_from_endofunction(sigma, subset);
      out.report =
          Json{{"sigma", sigma.image},
               {"subset", subset},
               {"periods", frankl::number_set_to_json(periods)},
               {"fundamental_period", frankl::number_to_json(periods.max())},
               {"lcm_closed", true}};
    }
  }

  out.report["violations"] = out.violations;

  if (format == "json") {
    std::cout << out.report.dump(2) << "\n";
  } else {
    // Table views re-derive the headline facts from the inputs.
    if (check->parsed()) {
      if (kind == "numset") {
        print_check_numset(std::cout,
                           frankl::number_set_from_json(out.report["input"]),
                           out.report);
      } else {
        print_check_family(std::cout,
                           frankl::set_family_from_json(out.report["input"]),
                           out.report);
      }
    } else if (closure->parsed()) {
      if (closure_op == "lcm" || closure_op == "gcd") {
        auto closed = frankl::number_set_from_json(out.report["closure"]);
        print_numset_header(std::cout, closed);
      } else {
        auto closed = frankl::set_family_from_json(out.report["closure"]);
        std::cout << "family (" << closed.size() << "): "
                  << family_lines(closed) << "\n";
      }
      std::cout << "added members: " << out.report["added"] << "\n";
    } else if (abundance->parsed()) {
      if (kind == "numset") {
        auto n = frankl::number_set_from_json(out.report["input"]);
        print_numset_header(std::cout, n);
        print_divisor_abundance(std::cout, frankl::abundant_divisors(n));
        if (out.report.contains("general_divisors")) {
          const auto& g = out.report["general_divisors"];
          std::cout << "abundant divisors up to limit ("
                    << (g["truncated"].get<bool>() ? "truncated" : "complete")
                    << "):";
          for (const auto& item : g["abundant"]) {
            std::cout << " " << item["divisor"]["decimal"].get<std::string>()
                      << ":" << item["count"].get<std::size_t>();
          }
          std::cout << "\n";
        }
      } else {
        auto s = frankl::set_family_from_json(out.report["input"]);
        std::cout << "family (" << s.size() << "): " << family_lines(s) << "\n";
        print_element_abundance(std::cout, frankl::abundant_elements(s));
      }
    } else if (dual_cmd->parsed()) {
      if (kind == "numset") {
        auto d = frankl::number_set_from_json(out.report["dual"]);
        std::cout << "lcm: " << out.report["lcm"]["decimal"].get<std::string>()
                  << "\n";
        std::cout << "dual (" << d.size() << "): " << numbers_line(d, false)
                  << "\n";
        if (out.report.contains("witness")) {
          const auto& w = out.report["witness"];
          std::cout << "witness: " << w["source"].get<std::string>()
                    << " (divides " << w["source_count"].get<std::size_t>()
                    << " of " << w["total"].get<std::size_t>()
                    << ") shifts to " << w["shifted"].get<std::string>()
                    << " (divides " << w["shifted_count"].get<std::size_t>()
                    << " in the dual); verified: "
                    << yesno(w["verified"].get<bool>()) << "\n";
        }
      } else {
        auto d = frankl::set_family_from_json(out.report["dual"]);
        std::cout << "dual (" << d.size() << "): " << family_lines(d) << "\n";
      }
    } else if (convert->parsed()) {
      std::cout << out.report["direction"].get<std::string>() << "\n";
      if (kind == "family") {
        auto n = frankl::number_set_from_json(out.report["result"]);
        print_numset_header(std::cout, n);
      } else {
        auto s = frankl::set_family_from_json(out.report["result"]);
        std::cout << "family (" << s.size() << ") over universe {"
                  << join(s.universe().labels(), ", ") << "}\n";
        std::cout << "members: " << family_lines(s) << "\n";
      }
      std::cout << "transport counts:";
      for (const auto& row : out.report["transport"]) {
        std::cout << " " << row["element"].get<std::string>() << "->"
                  << row["prime_power"].get<std::string>() << ":"
                  << row["element_count"].get<std::size_t>();
      }
      std::cout << "\n";
    } else if (cases->parsed()) {
      frankl::CaseReport report;
      for (const auto& c : out.report["report"]["cases"]) {
        frankl::KnownCase kc;
        kc.id = c["id"].get<int>();
        kc.satisfied = c["satisfied"].get<bool>();
        for (const auto& [key, value] : c["measured"].items()) {
          kc.measured.push_back({key, value.get<std::uint64_t>()});
        }
        report.cases.push_back(kc);
      }
      report.any_condition_met = out.report["report"]["any_condition_met"];
      print_case_report(std::cout, report);
    } else if (enumerate->parsed()) {
      frankl::ExhaustiveReport r;
      const auto& j = out.report["report"];
      r.universe_size = j["universe_size"];
      r.candidates = j["candidates"];
      r.union_closed_count = j["union_closed"];
      r.applicable_count = j["applicable"];
      r.violations = j["violations"].get<std::vector<std::uint64_t>>();
      r.min_abundance_count = j["min_abundance"]["count"];
      r.min_abundance_size = j["min_abundance"]["size"];
      r.extremal_total = j["extremal"]["total"];
      r.transport_checked = j["transport_checked"];
      print_exhaustive(std::cout, r);
    } else if (gen->parsed()) {
      if (gen_what == "closed-numset") {
        print_numset_header(
            std::cout, frankl::number_set_from_json(out.report["result"]));
      } else {
        auto periods = frankl::number_set_from_json(out.report["periods"]);
        std::cout << "periods (" << periods.size() << "): "
                  << numbers_line(periods, false) << "\n";
        std::cout << "fundamental period: "
                  << out.report["fundamental_period"]["decimal"]
                         .get<std::string>()
                  << "\n";
      }
    }
    for (const auto& v : out.violations) {
      std::cout << "VIOLATION: " << v << "\n";
    }
  }

  return out.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const frankl::Error& e) {
    std::cerr << "error (" << frankl::errc_name(e.kind()) << "): " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
