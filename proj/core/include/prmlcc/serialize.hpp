#pragma once

#include <span>
#include <string>
#include <string_view>

#include "prmlcc/codes.hpp"
#include "prmlcc/sim.hpp"

namespace prmlcc {

std::string family_name(CodeFamily family);
CodeFamily family_from_name(std::string_view name);  // case-insensitive; throws on unknown

/// {"p":3,"k":1,"modulus":[0,1]}, digits low order first. Loading verifies
/// the stored modulus against the deterministic choice for (p, k).
std::string field_to_json(const Field& f);
Field field_from_json(const std::string& text);

/// {"family":"PRM","p":3,"k":1,"d":1,"m":2,"symbols":[...]} with symbols as
/// integer element values in canonical index order; "m" is omitted for RS
/// and ERS. Loading validates the symbol count and range.
std::string codeword_to_json(const Codeword& word);
Codeword codeword_from_json(const std::string& text);

Codeword load_codeword(const std::string& path);
void save_codeword(const Codeword& word, const std::string& path);

/// One report as a JSON object. Identical configs and seeds serialize byte
/// identically except for the wall_time field.
std::string report_to_json(const SimReport& report);

/// CSV with the fixed header
/// family,p,k,d,m,delta,sigma,trials,seed,success,wrong,failed,bound
/// and one row per cell; sigma is empty for modes that do not use it.
std::string reports_to_csv(std::span<const SimReport> reports);

}  // namespace prmlcc
