#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "slimlat/diagram.hpp"
#include "slimlat/lattice.hpp"
#include "slimlat/structure.hpp"

namespace slimlat {

using Json = nlohmann::ordered_json;

// {"elements":[...],"covers":[[a,b],...],"coords":{...}?} with elements
// sorted lexicographically and keys in exactly that order. Coordinates are
// plain integers or [num,den] pairs.
Json lattice_to_json(const FiniteLattice& L, const DiagramLayout* lay = nullptr);

struct LoadedLattice {
  FiniteLattice lattice;
  std::optional<DiagramLayout> layout;
};

LoadedLattice lattice_from_json(const Json& j);

Json recipe_to_json(const ConstructionRecipe& r);
ConstructionRecipe recipe_from_json(const Json& j);

Json report_to_json(const Report& rep);

Json parse_json(const std::string& text);  // SchemaError on bad input
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace slimlat
