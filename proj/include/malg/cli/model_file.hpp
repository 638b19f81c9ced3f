#pragma once

/**
 * @file model_file.hpp
 * @brief JSON model files for the three backends.
 *
 *   {"kind":"table", "states":[ids], "zero":id,
 *    "measurements":{name:{id:id,...}}, "negations":{name:name}}
 *   {"kind":"ray", "dimension":n, "full_lattice":bool,
 *    "subspaces":{name:[["1","-1/2",...],...]}, "sample_height":H}
 *   {"kind":"propositional", "atoms":[names],
 *    "variant":"all_theories"|"maximal_theories"}
 *
 * "negations", "full_lattice", "sample_height" and "variant" are optional.
 * Rationals are strings; plain JSON integers are accepted too. Key order in
 * the file is kept, so tables keep their declared state order.
 */

#include "malg/models/models.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace malg::cli {

/// Throws InputError prefixed with `origin` and the JSON pointer of the
/// offending field.
models::ModelSpec parse_model(const nlohmann::ordered_json& doc, std::string_view origin);
models::ModelSpec parse_model_text(std::string_view text, std::string_view origin);
models::ModelSpec load_model_file(const std::string& path);

nlohmann::ordered_json to_json(const models::ModelSpec& spec);
/// Indented, in the key order parse_model reads.
std::string serialize_model(const models::ModelSpec& spec);

std::string_view kind_name(const models::ModelSpec& spec);

}  // namespace malg::cli
