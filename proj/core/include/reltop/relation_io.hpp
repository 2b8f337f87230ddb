#pragma once

#include <filesystem>
#include <string>

#include "reltop/relation.hpp"

namespace reltop {

// JSON form: {"universe": ["a","b"], "pairs": [["a","b"], ...]}.
std::string relation_to_json(const BinaryRelation& relation);
BinaryRelation relation_from_json(const std::string& text);

// Text form: first line lists the labels, each following non-empty line is "x y".
// Labels must be whitespace-free for this form; the JSON form has no restriction.
std::string relation_to_text(const BinaryRelation& relation);
BinaryRelation relation_from_text(const std::string& text);

// Reads either form, deciding by the first non-whitespace character.
BinaryRelation load_relation_file(const std::filesystem::path& path);

}  // namespace reltop
