#include "epos/serialize.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "epos/errors.hpp"

namespace epos {

namespace {

Coeff parse_coeff(const std::string& text) {
  const bool negative = !text.empty() && text.front() == '-';
  const std::string_view digits = std::string_view(text).substr(negative ? 1 : 0);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw DomainError("malformed coefficient '" + text + "'");
  }
  return Coeff(text);
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 1) throw DomainError("malformed partition '" + text + "'");
    parts.push_back(value);
  }
  return parts;
}

Json check_json(const MapCheck& check) {
  Json out;
  out["name"] = check.name;
  out["domain_size"] = check.domain_size;
  out["duplicate_images"] = check.duplicate_images;
  out["outside_A"] = check.outside_a;
  out["outside_S"] = check.outside_s;
  out["partition_changed"] = check.partition_changed;
  out["round_trip_failures"] = check.round_trip_failures;
  out["coefficient_failures"] = check.coefficient_failures;
  out["min_coefficient"] = check.min_coefficient ? Json(*check.min_coefficient) : Json(nullptr);
  out["max_coefficient"] = check.max_coefficient ? Json(*check.max_coefficient) : Json(nullptr);
  out["passed"] = check.passed();
  return out;
}

void flatten(const Json& value, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
  if (value.is_object()) {
    for (const auto& [name, child] : value.items()) flatten(child, key.empty() ? name : key + "." + name, rows);
  } else if (value.is_array()) {
    if (value.empty()) rows.emplace_back(key, "");
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], key + "[" + std::to_string(i) + "]", rows);
  } else if (value.is_string()) {
    rows.emplace_back(key, value.get<std::string>());
  } else {
    rows.emplace_back(key, value.dump());
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const EFunction& f) {
  Json out;
  const auto degree = f.degree();
  out["degree"] = degree ? Json(*degree) : Json(nullptr);
  out["basis"] = "e";
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    Json term;
    term["partition"] = std::vector<int>(lambda.parts().begin(), lambda.parts().end());
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

EFunction efunction_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw DomainError("expected an object with a 'terms' array");
  }
  if (doc.contains("basis") && doc["basis"] != "e") throw DomainError("only the e basis is supported");
  EFunction f;
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("partition") || !term.contains("coeff") || !term["partition"].is_array() ||
        !term["coeff"].is_string()) {
      throw DomainError("malformed term " + term.dump());
    }
    std::vector<int> parts;
    for (const auto& p : term["partition"]) {
      if (!p.is_number_integer() || p.get<int>() < 1) throw DomainError("malformed partition in " + term.dump());
      parts.push_back(p.get<int>());
    }
    f.add_term(Partition(std::move(parts)), parse_coeff(term["coeff"].get<std::string>()));
  }
  return f;
}

std::string to_csv(const EFunction& f) {
  std::string out = "partition,coefficient\n";
  for (const auto& [lambda, c] : f.terms()) {
    std::string parts;
    for (int p : lambda.parts()) {
      if (!parts.empty()) parts += ' ';
      parts += std::to_string(p);
    }
    out += parts + "," + c.str() + "\n";
  }
  return out;
}

EFunction efunction_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "partition,coefficient") throw DomainError("missing CSV header");
  EFunction f;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("malformed CSV row '" + line + "'");
    f.add_term(Partition(parse_parts(line.substr(0, comma))), parse_coeff(line.substr(comma + 1)));
  }
  return f;
}

Json to_json(const IdentityCheck& check) {
  Json out;
  out["identity"] = check.name;
  out["m"] = check.m;
  out["holds"] = check.holds;
  out["difference_terms"] = check.difference.size();
  out["notes"] = check.notes;
  out["verdict"] = check.holds;
  return out;
}

Json to_json(const InjectionReport& report) {
  Json out;
  out["check"] = "injections";
  out["m"] = report.m;
  Json maps = Json::array();
  for (const auto& check : report.maps) maps.push_back(check_json(check));
  out["maps"] = std::move(maps);
  out["cross_duplicates"] = report.cross_duplicates;
  out["c3_at_least_two"] = report.c3_at_least_two;
  out["c3_witness"] = report.c3_witness ? Json(*report.c3_witness) : Json(nullptr);
  out["bar_reading_agreements"] = report.bar_reading_agreements;
  out["bar_reading_disagreements"] = report.bar_reading_disagreements;
  out["verdict"] = report.verdict();
  out["witnesses"] = report.witnesses;
  return out;
}

Json to_json(const DisjointnessReport& report) {
  Json out;
  out["check"] = "disjointness";
  out["m"] = report.m;
  out["s2_variant"] = report.variant == S2Variant::kStrict ? "strict" : "relaxed";
  out["scanned"] = report.scanned;
  Json members;
  for (std::size_t x = 0; x < report.members.size(); ++x) members[to_string(kAllSLabels[x])] = report.members[x];
  out["members"] = std::move(members);
  out["overlaps"] = report.overlaps;
  out["separation_failures"] = report.separation_failures;
  out["ambiguous_factorizations"] = report.ambiguous_factorizations;
  out["verdict"] = report.verdict();
  out["witnesses"] = report.witnesses;
  return out;
}

Json to_json(const Certificate& cert) {
  Json out;
  out["m"] = cert.m;
  Json counts;
  counts["T1"] = cert.group_count[0];
  counts["T2"] = cert.group_count[1];
  counts["T3"] = cert.group_count[2];
  counts["T4"] = cert.group_count[3];
  out["group_count"] = std::move(counts);
  out["zero_net_count"] = cert.zero_net_count;
  out["leftover_A_count"] = cert.leftover_a_count;
  out["leftover_A_weight"] = cert.leftover_a_weight.str();
  out["nets_nonnegative"] = cert.nets_nonnegative;
  out["t4_nets_zero"] = cert.t4_nets_zero;
  out["images_unique"] = cert.images_unique;
  out["images_in_A"] = cert.images_in_a;
  out["pieces_nonnegative"] = cert.pieces_nonnegative;
  out["identity_checked"] = cert.identity_checked;
  out["spider_e_positive"] = cert.spider_e_positive;
  out["verdict"] = cert.verdict;
  out["witnesses"] = cert.witnesses;
  return out;
}

std::string report_to_csv(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string out = "key,value\n";
  for (const auto& [key, value] : rows) out += csv_field(key) + "," + csv_field(value) + "\n";
  return out;
}

std::string report_to_text(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string out;
  for (const auto& [key, value] : rows) out += key + ": " + value + "\n";
  return out;
}

}  // namespace epos
