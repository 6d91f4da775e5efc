#pragma once

#include <string>

#include <json.hpp>

#include "frankl/bridge.hpp"
#include "frankl/cases.hpp"
#include "frankl/family.hpp"
#include "frankl/numset.hpp"
#include "frankl/search.hpp"

namespace frankl {

// nlohmann::json with std::map storage: object keys come out sorted, which
// together with canonical member order makes every emission byte-stable.
using Json = nlohmann::json;

// Number sets read as a JSON array of number strings (decimal or factored),
// or of {"decimal": ...}/{"factored": ...} objects as emitted below, or an
// object with a "members" array of either.
NumberSet number_set_from_json(const Json& j);
Json number_set_to_json(const NumberSet& n);

// Families read as {"universe": [labels...], "members": [[labels...], ...]}.
// Duplicate members and duplicate labels within a member are rejected.
SetFamily set_family_from_json(const Json& j);
Json set_family_to_json(const SetFamily& s);

Json number_to_json(const ExponentVector& v);

Json divisor_abundance_to_json(const DivisorAbundanceReport& r);
Json general_divisors_to_json(const GeneralDivisorReport& r);
Json nonabundance_to_json(const NonAbundanceReport& r);
Json element_abundance_to_json(const ElementAbundanceReport& r);
Json case_report_to_json(const CaseReport& r);
Json exhaustive_report_to_json(const ExhaustiveReport& r);
Json duality_witness_to_json(const DualityWitness& w);
Json transport_rows_to_json(const std::vector<TransportRow>& rows);

// Parses text that is either inline JSON or (when not starting with '[' or
// '{') the path of a file containing it; "-" reads standard input.
Json load_json_argument(const std::string& argument);

}  // namespace frankl
