#include "plocal/group_io.hpp"

#include <fstream>
#include <numeric>

#include "plocal/catalog.hpp"
#include "plocal/group_ops.hpp"

namespace plocal::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse_error, what); }

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        bad(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<Point> perm_from_cycles(std::size_t degree, const json& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point(0));
    if (!cycles.is_array()) bad("permutation must be a list of cycles");
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
        if (!c.is_array() || c.empty()) bad("cycle must be a non-empty list");
        std::vector<Point> pts;
        for (const auto& x : c) {
            if (!x.is_number_unsigned() && !x.is_number_integer()) bad("cycle entries must be integers");
            long long v = x.get<long long>();
            if (v < 1 || std::size_t(v) > degree) bad("cycle point out of range 1.." + std::to_string(degree));
            if (used[v - 1]) bad("point repeated across cycles");
            used[v - 1] = true;
            pts.push_back(Point(v - 1));
        }
        for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
    }
    return img;
}

json cycles_of(std::span<const Point> img) {
    json out = json::array();
    std::vector<bool> seen(img.size(), false);
    for (std::size_t x = 0; x < img.size(); ++x) {
        if (seen[x] || img[x] == x) continue;
        json c = json::array();
        std::size_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            c.push_back(y + 1);
            y = img[y];
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) bad("cannot open '" + file.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        bad("'" + file.string() + "': " + e.what());
    }
}

FiniteGroup group_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) bad("group must be a JSON object");
    if (j.contains("file")) return load_group(base_dir / get<std::string>(j, "file"));
    const std::string kind = get<std::string>(j, "kind");
    const std::string label = j.value("label", std::string());
    if (kind == "named") {
        FiniteGroup g = catalog::by_name(get<std::string>(j, "name"));
        return g;
    }
    if (kind == "perm") {
        const auto degree = get<std::size_t>(j, "degree");
        std::vector<std::vector<Point>> gens;
        for (const auto& g : get<json>(j, "generators")) gens.push_back(perm_from_cycles(degree, g));
        return FiniteGroup::from_permutations(degree, gens, label);
    }
    if (kind == "table") {
        const auto order = get<std::size_t>(j, "order");
        auto table = get<std::vector<std::vector<Elem>>>(j, "table");
        if (table.size() != order) bad("table size does not match order");
        return FiniteGroup::from_table(table, label);
    }
    if (kind == "semidirect") {
        const auto q = get<unsigned>(j, "q");
        const auto dim = get<std::size_t>(j, "dim");
        FiniteGroup H = group_from_json(get<json>(j, "acting"), base_dir);
        const json& acting = j.at("acting");
        auto action = get<std::vector<std::vector<std::vector<std::uint32_t>>>>(j, "action");
        std::vector<Elem> gens;
        // action matrices follow the generator list of the acting group as written
        if (acting.contains("kind") && acting.at("kind") == "perm") {
            const auto degree = acting.at("degree").get<std::size_t>();
            for (const auto& g : acting.at("generators")) {
                auto e = H.find_permutation(perm_from_cycles(degree, g));
                gens.push_back(*e);
            }
        } else {
            gens.assign(H.generators().begin(), H.generators().end());
        }
        if (gens.size() != action.size()) bad("need one action matrix per acting generator");
        std::vector<Matrix> mats;
        for (const auto& m : action) {
            if (m.size() != dim) bad("action matrix has wrong number of rows");
            Matrix flat;
            for (const auto& row : m) {
                if (row.size() != dim) bad("action matrix has wrong number of columns");
                flat.insert(flat.end(), row.begin(), row.end());
            }
            mats.push_back(std::move(flat));
        }
        return semidirect(q, dim, H, gens, mats, label);
    }
    bad("unknown group kind '" + kind + "'");
}

FiniteGroup load_group(const std::filesystem::path& file) {
    return group_from_json(read_json_file(file), file.parent_path());
}

json group_to_json(const FiniteGroup& G) {
    json j;
    switch (G.representation()) {
        case Representation::permutation: {
            j["kind"] = "perm";
            j["degree"] = G.degree();
            json gens = json::array();
            for (Elem g : G.generators()) gens.push_back(cycles_of(G.permutation(g)));
            j["generators"] = gens;
            break;
        }
        case Representation::semidirect: {
            const SemidirectInfo* info = G.semidirect_info();
            j["kind"] = "semidirect";
            j["q"] = info->q;
            j["dim"] = info->dim;
            j["acting"] = group_to_json(*info->acting);
            json action = json::array();
            for (Elem h : info->acting->generators()) {
                json m = json::array();
                for (std::size_t r = 0; r < info->dim; ++r) {
                    json row = json::array();
                    for (std::size_t c = 0; c < info->dim; ++c) row.push_back(info->matrices[h][r * info->dim + c]);
                    m.push_back(row);
                }
                action.push_back(m);
            }
            j["action"] = action;
            break;
        }
        default: {
            const std::size_t n = G.order();
            if (n > Bounds::defaults().max_table_order) fail(ErrorCode::bound_exceeded, "group too large to write as a table");
            j["kind"] = "table";
            j["order"] = n;
            json t = json::array();
            for (Elem a = 0; a < n; ++a) {
                json row = json::array();
                for (Elem b = 0; b < n; ++b) row.push_back(G.mul(a, b));
                t.push_back(row);
            }
            j["table"] = t;
        }
    }
    if (!G.label().empty()) j["label"] = G.label();
    return j;
}

Elem element_from_json(const FiniteGroup& G, const json& j) {
    switch (G.representation()) {
        case Representation::permutation: {
            auto e = G.find_permutation(perm_from_cycles(G.degree(), j));
            if (!e) bad("permutation is not an element of the group");
            return *e;
        }
        case Representation::semidirect: {
            const SemidirectInfo* info = G.semidirect_info();
            auto v = get<std::vector<std::uint32_t>>(j, "v");
            if (v.size() != info->dim) bad("module vector has wrong length");
            std::uint64_t code = 0;
            for (std::size_t i = v.size(); i-- > 0;) {
                if (v[i] >= info->q) bad("module coordinate out of range");
                code = code * info->q + v[i];
            }
            Elem h = element_from_json(*info->acting, get<json>(j, "h"));
            return Elem(code + info->module_order * h);
        }
        default: {
            if (!j.is_number_unsigned() && !j.is_number_integer()) bad("element must be an index");
            long long x = j.get<long long>();
            if (x < 0 || std::size_t(x) >= G.order()) bad("element index out of range");
            return Elem(x);
        }
    }
}

json element_to_json(const FiniteGroup& G, Elem x) {
    switch (G.representation()) {
        case Representation::permutation: return cycles_of(G.permutation(x));
        case Representation::semidirect: {
            const SemidirectInfo* info = G.semidirect_info();
            std::uint64_t v = x % info->module_order;
            json vec = json::array();
            for (std::size_t i = 0; i < info->dim; ++i) {
                vec.push_back(v % info->q);
                v /= info->q;
            }
            return json{{"v", vec}, {"h", element_to_json(*info->acting, Elem(x / info->module_order))}};
        }
        default: return x;
    }
}

Subgroup subgroup_from_json(const FiniteGroup& G, const json& j) {
    if (j.contains("members")) return Subgroup::from_members(G, get<std::vector<Elem>>(j, "members"));
    std::vector<Elem> gens;
    for (const auto& e : get<json>(j, "generators")) gens.push_back(element_from_json(G, e));
    return Subgroup::generated(G, gens);
}

Subgroup load_subgroup(const FiniteGroup& G, const std::filesystem::path& file) {
    return subgroup_from_json(G, read_json_file(file));
}

json subgroup_to_json(const Subgroup& H) {
    json gens = json::array();
    for (Elem g : H.generators()) gens.push_back(element_to_json(H.parent(), g));
    return json{{"order", H.order()}, {"generators", gens}};
}

}  // namespace plocal::io
