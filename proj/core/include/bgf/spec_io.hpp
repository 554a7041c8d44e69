#pragma once

#include <string>
#include <string_view>

#include "bgf/series.hpp"

namespace bgf {

/// {"theta":"p/q","c":[{"partition":[2],"value":"p/q"},…]} with entries in
/// partition order. Writing then reading is the identity, and reading then
/// writing reproduces any text this function produced.
std::string spec_to_json(const CumulantSpec& spec);

/// Throws std::invalid_argument on malformed JSON, rationals, partitions,
/// duplicate keys, or a nonpositive θ.
CumulantSpec spec_from_json(std::string_view text);

CumulantSpec load_spec(const std::string& path);
void save_spec(const CumulantSpec& spec, const std::string& path);

}  // namespace bgf
