#pragma once

#include <filesystem>
#include <optional>

#include "plocal/group_io.hpp"
#include "plocal/tower.hpp"

namespace plocal::io {

// Tower files:
//   {"kind":"constant","group":<group>,"levels":n,"p":p}
//   {"kind":"cyclic","p":p,"levels":n}            C_p <= C_{p^2} <= ...
//   {"kind":"dihedral","p":p,"levels":n}          C_{p^i} x| C_2
//   {"kind":"symmetric","from":a,"to":b,"p":p}
//   {"kind":"pgl2","p":p,"k":k,"prime":r}
//   {"kind":"fqh","H":<tower>,"q":q}
//   {"kind":"lfs_ext","p":p,"q":q,"levels":n}
//   {"kind":"explicit","p":p,"tower_kind":"ambient"|"p_tower","levels":[<group>,...],
//    "embeddings":[[image of element 0, ...], ...]}
//   {"file":"relative/path.json"}
// Optional "torus":{"top":<subgroup of the top level>,"rank":r}. Cyclic and
// dihedral towers get their rotation torus by default.
struct LoadedTower {
    TowerGroup tower;
    std::optional<Subgroup> torus_top;
    unsigned torus_rank = 0;
};

LoadedTower tower_from_json(const json& j, const std::filesystem::path& base_dir = {});
LoadedTower load_tower(const std::filesystem::path& file);

// Torus data for S = weakly_sylow(tower), if the file declares one.
std::optional<TorusData> torus_of(const LoadedTower& t, const SubTower& S);

}  // namespace plocal::io
