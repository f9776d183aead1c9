#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "posit/automata.hpp"
#include "posit/games.hpp"
#include "posit/positionality.hpp"

namespace posit {

using Json = nlohmann::ordered_json;

// `.dpa` files:
//   dpa v1
//   alphabet a b
//   states 2
//   names s t          (optional; states may then be referred to by name)
//   initial 0
//   trans <state> <letter> <target> <priority>    (one per state and letter)
Dpa parse_dpa(std::string_view text);
Dpa load_dpa(const std::filesystem::path& path);
std::string write_dpa(const Dpa& a);

// `.arena` files:
//   arena v1
//   alphabet a b
//   vertex <name> E|A
//   edge <src> <letter> <dst>
Arena parse_arena(std::string_view text);
Arena load_arena(const std::filesystem::path& path);
std::string write_arena(const Arena& arena);

/// {"property":3,"u":"","v":"ab","vp":"ac"}; lassos as `prefix:period`.
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j, const Alphabet& alphabet);

}  // namespace posit
