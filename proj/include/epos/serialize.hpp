#pragma once

#include <string>
#include <string_view>

#include "epos/certify.hpp"
#include "epos/decomposition.hpp"
#include "epos/efunction.hpp"
#include "epos/injections.hpp"
#include "json.hpp"

namespace epos {

using Json = nlohmann::ordered_json;

/// {"degree": n, "basis": "e", "terms": [{"partition": [...], "coeff": "..."}]}
/// in canonical term order. degree is null for the zero function and for
/// inhomogeneous functions. Coefficients are decimal strings.
Json to_json(const EFunction& f);

/// Inverse of to_json; throws DomainError on malformed input.
EFunction efunction_from_json(const nlohmann::json& doc);

/// Header "partition,coefficient", then one row per term with the parts
/// separated by spaces.
std::string to_csv(const EFunction& f);
EFunction efunction_from_csv(std::string_view text);

Json to_json(const IdentityCheck& check);
Json to_json(const InjectionReport& report);
Json to_json(const DisjointnessReport& report);
/// The summary of a certificate; the per-group list is not included.
Json to_json(const Certificate& cert);

/// Flattens a report into "key,value" rows (nested keys joined by '.').
std::string report_to_csv(const Json& report);
/// The same rows as "key: value" lines.
std::string report_to_text(const Json& report);

}  // namespace epos
