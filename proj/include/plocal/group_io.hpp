#pragma once

#include <filesystem>

#include "json.hpp"
#include "plocal/group.hpp"

namespace plocal::io {

using json = nlohmann::json;

// Group files:
//   {"kind":"perm","degree":n,"generators":[[cycle,...],...]}  points 1-based
//   {"kind":"table","order":n,"table":[[...],...]}              0 = identity
//   {"kind":"semidirect","q":q,"dim":d,"acting":<group>,"action":[matrix per acting generator]}
//   {"kind":"named","name":"S4"}
//   {"file":"relative/path.json"}
FiniteGroup group_from_json(const json& j, const std::filesystem::path& base_dir = {});
FiniteGroup load_group(const std::filesystem::path& file);
json group_to_json(const FiniteGroup& G);

// Elements: perm -> list of 1-based cycles; table/rule -> index; semidirect -> {"v":[...],"h":<acting element>}
Elem element_from_json(const FiniteGroup& G, const json& j);
json element_to_json(const FiniteGroup& G, Elem x);

// Subgroup files: {"generators":[elements]} or {"members":[indices]}
Subgroup subgroup_from_json(const FiniteGroup& G, const json& j);
Subgroup load_subgroup(const FiniteGroup& G, const std::filesystem::path& file);
json subgroup_to_json(const Subgroup& H);

json read_json_file(const std::filesystem::path& file);

}  // namespace plocal::io
