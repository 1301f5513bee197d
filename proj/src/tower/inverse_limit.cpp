#include "plocal/inverse_limit.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plocal/catalog.hpp"
#include "plocal/group_ops.hpp"

namespace plocal {

void validate(const InverseSystem& sys) {
    const std::size_t n = sys.sizes.size();
    const std::size_t g = sys.gamma.order();
    if (sys.maps.size() + 1 != n && !(n == 0 && sys.maps.empty()))
        fail(ErrorCode::invalid_argument, "an inverse system on n levels needs n-1 maps");
    if (sys.action.size() != n) fail(ErrorCode::invalid_argument, "one action table per level is required");
    for (std::size_t i = 0; i < n; ++i) {
        if (sys.action[i].size() != g) fail(ErrorCode::invalid_argument, "action table needs one row per group element");
        for (std::size_t a = 0; a < g; ++a) {
            if (sys.action[i][a].size() != sys.sizes[i]) fail(ErrorCode::invalid_argument, "action row has wrong length");
            for (std::size_t x : sys.action[i][a])
                if (x >= sys.sizes[i]) fail(ErrorCode::invalid_argument, "action leaves the set");
        }
        for (std::size_t x = 0; x < sys.sizes[i]; ++x)
            if (sys.action[i][0][x] != x) fail(ErrorCode::invalid_argument, "identity must act trivially");
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = 0; b < g; ++b) {
                const std::size_t ab = sys.gamma.mul(Elem(a), Elem(b));
                for (std::size_t x = 0; x < sys.sizes[i]; ++x)
                    if (sys.action[i][ab][x] != sys.action[i][a][sys.action[i][b][x]])
                        fail(ErrorCode::invalid_argument, "action table is not a group action");
            }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sys.maps[i].size() != sys.sizes[i + 1]) fail(ErrorCode::invalid_argument, "connecting map has wrong length");
        for (std::size_t x = 0; x < sys.sizes[i + 1]; ++x) {
            if (sys.maps[i][x] >= sys.sizes[i]) fail(ErrorCode::invalid_argument, "connecting map leaves the set");
            for (std::size_t a = 0; a < g; ++a)
                if (sys.maps[i][sys.action[i + 1][a][x]] != sys.action[i][a][sys.maps[i][x]])
                    fail(ErrorCode::not_equivariant, "connecting map " + std::to_string(i + 1) + " is not equivariant");
        }
    }
}

namespace {

std::vector<std::size_t> orbit_ids(const InverseSystem& sys, std::size_t i, std::size_t& count) {
    constexpr std::size_t unset = ~std::size_t(0);
    std::vector<std::size_t> id(sys.sizes[i], unset);
    count = 0;
    for (std::size_t x = 0; x < sys.sizes[i]; ++x) {
        if (id[x] != unset) continue;
        for (std::size_t a = 0; a < sys.gamma.order(); ++a) id[sys.action[i][a][x]] = count;
        ++count;
    }
    return id;
}

}  // namespace

InverseLimitResult inverse_limit(const InverseSystem& sys, std::size_t depth) {
    validate(sys);
    const std::size_t n = sys.sizes.size();
    if (depth == 0 || depth > n) fail(ErrorCode::invalid_argument, "depth must lie in 1..number of levels");
    const std::size_t g = sys.gamma.order();
    InverseLimitResult r;
    r.depth = depth;
    r.empty_level = std::any_of(sys.sizes.begin(), sys.sizes.end(), [](std::size_t s) { return s == 0; });

    // points that extend to the top level
    std::vector<std::vector<bool>> liftable(n);
    liftable[n - 1].assign(sys.sizes[n - 1], true);
    for (std::size_t i = n - 1; i-- > 0;) {
        liftable[i].assign(sys.sizes[i], false);
        for (std::size_t x = 0; x < sys.sizes[i + 1]; ++x)
            if (liftable[i + 1][x]) liftable[i][sys.maps[i][x]] = true;
    }

    // families, built upward from level 1
    std::vector<std::size_t> cur;
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == depth) {
            r.families.push_back(cur);
            return;
        }
        for (std::size_t x = 0; x < sys.sizes[i]; ++x) {
            if (!liftable[i][x]) continue;
            if (i > 0 && sys.maps[i - 1][x] != cur[i - 1]) continue;
            cur.push_back(x);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    r.nonempty = !r.families.empty();

    // Gamma-orbits of families
    std::map<std::vector<std::size_t>, std::size_t> family_index;
    for (std::size_t f = 0; f < r.families.size(); ++f) family_index.emplace(r.families[f], f);
    constexpr std::size_t unset = ~std::size_t(0);
    std::vector<std::size_t> family_orbit(r.families.size(), unset);
    r.free_on_limit = true;
    for (std::size_t f = 0; f < r.families.size(); ++f) {
        const bool fresh = family_orbit[f] == unset;
        const std::size_t id = fresh ? r.family_orbits++ : family_orbit[f];
        std::size_t fixers = 0;
        for (std::size_t a = 0; a < g; ++a) {
            std::vector<std::size_t> moved(depth);
            for (std::size_t i = 0; i < depth; ++i) moved[i] = sys.action[i][a][r.families[f][i]];
            auto it = family_index.find(moved);
            if (it == family_index.end()) fail(ErrorCode::not_equivariant, "Gamma does not preserve the families");
            if (fresh) family_orbit[it->second] = id;
            if (it->second == f) ++fixers;
        }
        if (fixers != 1) r.free_on_limit = false;
    }

    // orbit families, built from orbit data only
    std::vector<std::vector<std::size_t>> oid(n);
    std::vector<std::size_t> ocount(n);
    for (std::size_t i = 0; i < n; ++i) oid[i] = orbit_ids(sys, i, ocount[i]);
    std::vector<std::vector<std::size_t>> orep(n);
    for (std::size_t i = 0; i < n; ++i) {
        orep[i].assign(ocount[i], unset);
        for (std::size_t x = 0; x < sys.sizes[i]; ++x)
            if (orep[i][oid[i][x]] == unset) orep[i][oid[i][x]] = x;
    }
    std::vector<std::vector<bool>> olift(n);
    olift[n - 1].assign(ocount[n - 1], true);
    for (std::size_t i = n - 1; i-- > 0;) {
        olift[i].assign(ocount[i], false);
        for (std::size_t o = 0; o < ocount[i + 1]; ++o)
            if (olift[i + 1][o]) olift[i][oid[i][sys.maps[i][orep[i + 1][o]]]] = true;
    }
    std::vector<std::vector<std::size_t>> ofams;
    cur.clear();
    auto oextend = [&](auto&& self, std::size_t i) -> void {
        if (i == depth) {
            ofams.push_back(cur);
            return;
        }
        for (std::size_t o = 0; o < ocount[i]; ++o) {
            if (!olift[i][o]) continue;
            if (i > 0 && oid[i - 1][sys.maps[i - 1][orep[i][o]]] != cur[i - 1]) continue;
            cur.push_back(o);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    oextend(oextend, 0);
    r.orbit_families = ofams.size();

    // Phi: family orbits -> orbit families
    std::map<std::vector<std::size_t>, std::size_t> ofam_index;
    for (std::size_t k = 0; k < ofams.size(); ++k) ofam_index.emplace(ofams[k], k);
    std::vector<std::size_t> phi_of_orbit(r.family_orbits, unset);
    std::vector<bool> hit(ofams.size(), false);
    bool well_defined = true;
    for (std::size_t f = 0; f < r.families.size(); ++f) {
        std::vector<std::size_t> of(depth);
        for (std::size_t i = 0; i < depth; ++i) of[i] = oid[i][r.families[f][i]];
        auto it = ofam_index.find(of);
        if (it == ofam_index.end()) {
            well_defined = false;
            continue;
        }
        std::size_t& slot = phi_of_orbit[family_orbit[f]];
        if (slot != unset && slot != it->second) well_defined = false;
        slot = it->second;
        hit[it->second] = true;
    }
    r.phi_surjective = well_defined && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    {
        std::vector<std::size_t> images(phi_of_orbit);
        std::sort(images.begin(), images.end());
        r.phi_injective = well_defined && std::adjacent_find(images.begin(), images.end()) == images.end();
    }

    // telescoping lift: x^_i = gamma_1^-1 ... gamma_{i-1}^-1 x_i
    r.lift_ok = true;
    for (const auto& of : ofams) {
        std::vector<std::size_t> x(depth), lifted(depth);
        for (std::size_t i = 0; i < depth; ++i) x[i] = orep[i][of[i]];
        Elem delta = 0;
        lifted[0] = x[0];
        for (std::size_t i = 0; i + 1 < depth; ++i) {
            const std::size_t down = sys.maps[i][x[i + 1]];
            std::optional<Elem> gamma_i;
            for (std::size_t a = 0; a < g && !gamma_i; ++a)
                if (sys.action[i][a][x[i]] == down) gamma_i = Elem(a);
            if (!gamma_i) {
                r.lift_ok = false;
                break;
            }
            delta = sys.gamma.mul(delta, sys.gamma.inv(*gamma_i));
            lifted[i + 1] = sys.action[i + 1][delta][x[i + 1]];
        }
        if (!r.lift_ok) break;
        for (std::size_t i = 0; i + 1 < depth; ++i)
            if (sys.maps[i][lifted[i + 1]] != lifted[i]) r.lift_ok = false;
        if (!liftable[depth - 1][lifted[depth - 1]]) r.lift_ok = false;
        for (std::size_t i = 0; i < depth; ++i)
            if (oid[i][lifted[i]] != of[i]) r.lift_ok = false;
        if (!r.lift_ok) break;
    }

    r.free_on_levels = true;
    for (std::size_t i = 0; i < n && r.free_on_levels; ++i)
        for (std::size_t a = 1; a < g && r.free_on_levels; ++a)
            for (std::size_t x = 0; x < sys.sizes[i]; ++x)
                if (sys.action[i][a][x] == x) {
                    r.free_on_levels = false;
                    break;
                }

    const bool all_nonempty = !r.empty_level;
    r.a_holds = r.phi_surjective && r.lift_ok && (!all_nonempty || r.nonempty);
    r.b_holds = !r.free_on_levels || r.free_on_limit;
    r.c_holds = r.phi_surjective && r.phi_injective;
    return r;
}

namespace {

struct CosetSpace {
    std::vector<std::size_t> coset_of;  // element -> coset index
    std::size_t size = 0;
};

CosetSpace cosets(const FiniteGroup& G, const Subgroup& K) {
    constexpr std::size_t unset = ~std::size_t(0);
    CosetSpace c;
    c.coset_of.assign(G.order(), unset);
    for (Elem x = 0; x < G.order(); ++x) {
        if (c.coset_of[x] != unset) continue;
        for (Elem k : K.members()) c.coset_of[G.mul(x, k)] = c.size;
        ++c.size;
    }
    return c;
}

}  // namespace

InverseSystem random_inverse_system(std::mt19937_64& rng, std::size_t levels, std::size_t max_points,
                                    std::size_t max_gamma) {
    static const std::vector<catalog::CorpusEntry> corpus = catalog::small_corpus();
    std::vector<FiniteGroup> pool{FiniteGroup()};
    for (const auto& e : corpus)
        if (e.group.order() <= max_gamma) pool.push_back(e.group);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    InverseSystem sys;
    sys.gamma = pool[pick(pool.size())];
    const FiniteGroup& G = sys.gamma;
    const std::size_t g = G.order();
    const auto subs = all_subgroups(Subgroup::whole(G));
    const bool free_mode = pick(4) == 0 && g <= max_points;

    sys.sizes.assign(levels, 0);
    sys.action.assign(levels, std::vector<std::vector<std::size_t>>(g));
    sys.maps.assign(levels > 0 ? levels - 1 : 0, {});

    for (std::size_t i = 0; i < levels; ++i) {
        const std::size_t orbits_wanted = 1 + pick(3);
        for (std::size_t k = 0; k < orbits_wanted; ++k) {
            // orbit type Gamma/K, and for i > 0 the point y it maps onto
            std::optional<std::size_t> y;
            std::vector<const Subgroup*> choices;
            if (i > 0) {
                y = pick(sys.sizes[i - 1]);
                for (const auto& K : subs) {
                    bool fixes = true;
                    for (Elem a : K.members()) fixes = fixes && sys.action[i - 1][a][*y] == *y;
                    if (fixes) choices.push_back(&K);
                }
            } else {
                for (const auto& K : subs) choices.push_back(&K);
            }
            const Subgroup* K = free_mode ? &subs.front() : choices[pick(choices.size())];
            const std::size_t osize = g / K->order();
            if (sys.sizes[i] + osize > max_points) {
                if (sys.sizes[i] == 0) fail(ErrorCode::bound_exceeded, "random system: orbit does not fit");
                break;
            }
            const CosetSpace cs = cosets(G, *K);
            const std::size_t base = sys.sizes[i];
            std::vector<Elem> rep(cs.size);
            for (Elem x = Elem(g); x-- > 0;) rep[cs.coset_of[x]] = x;
            for (std::size_t a = 0; a < g; ++a)
                for (std::size_t c = 0; c < cs.size; ++c)
                    sys.action[i][a].push_back(base + cs.coset_of[G.mul(Elem(a), rep[c])]);
            if (i > 0)
                for (std::size_t c = 0; c < cs.size; ++c) sys.maps[i - 1].push_back(sys.action[i - 1][rep[c]][*y]);
            sys.sizes[i] += osize;
        }
    }
    return sys;
}

}  // namespace plocal
