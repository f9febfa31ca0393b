#pragma once

// JSON interchange for designs, codes, permutations and groupoid summaries.
// Bit-strings put coordinate 0 leftmost. Parsers throw InvalidInput on any
// schema violation; file helpers throw IoError when the file cannot be used.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cg/codes.hpp"
#include "cg/design.hpp"
#include "cg/groupoid.hpp"
#include "cg/permutation.hpp"

namespace cg {

/// {"name", "n", "lambda"?, "blocks", "labels"?}
nlohmann::json design_to_json(const Design& d);
Design design_from_json(const nlohmann::json& j);

Design load_design(const std::filesystem::path& path);
void save_design(const std::filesystem::path& path, const Design& d);

/// {"n", "k", "basis", "parity_check"?}
nlohmann::json code_to_json(const LinearCode& c);
LinearCode code_from_json(const nlohmann::json& j);

/// Image array.
nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

/// Orders are decimal strings.
nlohmann::json summary_to_json(const GroupoidSummary& s);
GroupoidSummary summary_from_json(const nlohmann::json& j);

}  // namespace cg
