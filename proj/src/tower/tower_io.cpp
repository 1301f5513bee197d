#include "plocal/tower_io.hpp"

#include "plocal/tower_examples.hpp"

namespace plocal::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse_error, what); }

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("tower: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        bad(std::string("tower: field '") + key + "': " + e.what());
    }
}

}  // namespace

LoadedTower tower_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) bad("tower must be a JSON object");
    if (j.contains("file")) return load_tower(base_dir / get<std::string>(j, "file"));
    const std::string kind = get<std::string>(j, "kind");
    LoadedTower t;
    if (kind == "constant") {
        t.tower = TowerGroup::constant(group_from_json(j.at("group"), base_dir), get<std::size_t>(j, "levels"),
                                       get<unsigned>(j, "p"));
    } else if (kind == "cyclic") {
        t.tower = towers::cyclic_p(get<unsigned>(j, "p"), get<std::size_t>(j, "levels"));
        t.torus_top = Subgroup::whole(t.tower.top());
        t.torus_rank = 1;
    } else if (kind == "dihedral") {
        t.tower = towers::dihedral_type(get<unsigned>(j, "p"), get<std::size_t>(j, "levels"));
        std::vector<Elem> rot;
        for (Elem x = 0; x < t.tower.top().order() / 2; ++x) rot.push_back(x);
        t.torus_top = Subgroup::trusted(t.tower.top(), std::move(rot));
        t.torus_rank = 1;
    } else if (kind == "symmetric") {
        t.tower = towers::symmetric(get<std::size_t>(j, "from"), get<std::size_t>(j, "to"), get<unsigned>(j, "p"));
    } else if (kind == "pgl2") {
        t.tower = towers::pgl2_pair(get<unsigned>(j, "p"), get<unsigned>(j, "k"), get<unsigned>(j, "prime"));
    } else if (kind == "fqh") {
        if (!j.contains("H")) bad("tower: missing field 'H'");
        t.tower = towers::build_fqh(tower_from_json(j.at("H"), base_dir).tower, get<unsigned>(j, "q"));
    } else if (kind == "lfs_ext") {
        t.tower = towers::build_lfs_ext(get<unsigned>(j, "p"), get<unsigned>(j, "q"), get<std::size_t>(j, "levels"));
    } else if (kind == "explicit") {
        if (!j.contains("levels") || !j.at("levels").is_array()) bad("tower: field 'levels' must be a list");
        std::vector<FiniteGroup> levels;
        for (const auto& g : j.at("levels")) levels.push_back(group_from_json(g, base_dir));
        const auto emb = get<std::vector<std::vector<Elem>>>(j, "embeddings");
        const std::string tk = j.value("tower_kind", std::string("ambient"));
        if (tk != "ambient" && tk != "p_tower") bad("tower: field 'tower_kind' must be ambient or p_tower");
        t.tower = TowerGroup(std::move(levels), emb, get<unsigned>(j, "p"),
                             tk == "p_tower" ? TowerKind::p_tower : TowerKind::ambient, j.value("label", std::string()));
    } else {
        bad("tower: unknown kind '" + kind + "'");
    }
    if (j.contains("torus")) {
        const json& tj = j.at("torus");
        if (!tj.contains("top")) bad("tower: torus needs field 'top'");
        t.torus_top = subgroup_from_json(t.tower.top(), tj.at("top"));
        t.torus_rank = get<unsigned>(tj, "rank");
    }
    return t;
}

LoadedTower load_tower(const std::filesystem::path& file) {
    return tower_from_json(read_json_file(file), file.parent_path());
}

std::optional<TorusData> torus_of(const LoadedTower& t, const SubTower& S) {
    if (!t.torus_top) return std::nullopt;
    return torus_from_top(t.tower, S, intersection(*t.torus_top, S.top_image(t.tower.top_index())), t.torus_rank);
}

}  // namespace plocal::io
