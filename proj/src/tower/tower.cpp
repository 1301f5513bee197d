#include "plocal/tower.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plocal {

const char* tower_kind_name(TowerKind k) { return k == TowerKind::p_tower ? "p-tower" : "ambient"; }

TowerGroup::TowerGroup(std::vector<FiniteGroup> levels, std::vector<std::vector<Elem>> embeddings, unsigned p,
                       TowerKind kind, std::string label)
    : levels_(std::move(levels)), emb_(std::move(embeddings)), p_(p), kind_(kind), label_(std::move(label)) {
    if (levels_.empty()) fail(ErrorCode::invalid_tower, "a tower needs at least one level");
    if (emb_.size() + 1 != levels_.size()) fail(ErrorCode::invalid_tower, "a tower on n levels needs n-1 embeddings");
    if (!is_prime(p_)) fail(ErrorCode::invalid_tower, "tower prime must be prime");
    for (std::size_t i = 0; i < emb_.size(); ++i) {
        const FiniteGroup& A = levels_[i];
        const FiniteGroup& B = levels_[i + 1];
        const auto& e = emb_[i];
        const std::string where = "embedding " + std::to_string(i + 1) + " -> " + std::to_string(i + 2);
        if (e.size() != A.order()) fail(ErrorCode::invalid_tower, where + ": table has wrong length");
        std::vector<bool> used(B.order(), false);
        for (Elem y : e) {
            if (y >= B.order()) fail(ErrorCode::invalid_tower, where + ": image out of range");
            if (used[y]) fail(ErrorCode::invalid_tower, where + ": not injective");
            used[y] = true;
        }
        for (Elem g : A.generators())
            for (Elem x = 0; x < A.order(); ++x)
                if (e[A.mul(g, x)] != B.mul(e[g], e[x]))
                    fail(ErrorCode::invalid_tower, where + ": not a homomorphism");
    }
    if (kind_ == TowerKind::p_tower)
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            const std::size_t n = levels_[i].order();
            if (n > 1 && prime_of_power(n) != p_)
                fail(ErrorCode::invalid_tower, "level " + std::to_string(i + 1) + " of a p-tower is not a p-group");
        }
    const std::size_t N = levels_.size();
    top_.resize(N);
    top_[N - 1].resize(levels_[N - 1].order());
    for (Elem x = 0; x < top_[N - 1].size(); ++x) top_[N - 1][x] = x;
    for (std::size_t i = N - 1; i-- > 0;) {
        top_[i].resize(levels_[i].order());
        for (Elem x = 0; x < top_[i].size(); ++x) top_[i][x] = top_[i + 1][emb_[i][x]];
    }
    from_top_.assign(N, std::vector<Elem>(levels_[N - 1].order(), no_elem));
    for (std::size_t i = 0; i < N; ++i)
        for (Elem x = 0; x < top_[i].size(); ++x) from_top_[i][top_[i][x]] = x;
}

TowerGroup TowerGroup::constant(const FiniteGroup& G, std::size_t n, unsigned p, std::string label) {
    if (n == 0) fail(ErrorCode::invalid_tower, "a tower needs at least one level");
    std::vector<Elem> id(G.order());
    for (Elem x = 0; x < id.size(); ++x) id[x] = x;
    const std::size_t order = G.order();
    const bool pg = order == 1 || prime_of_power(order) == p;
    if (label.empty()) label = "constant(" + G.label() + ")";
    return TowerGroup(std::vector<FiniteGroup>(n, G), std::vector<std::vector<Elem>>(n - 1, id), p,
                      pg ? TowerKind::p_tower : TowerKind::ambient, std::move(label));
}

Elem TowerGroup::embed(Elem x, std::size_t from, std::size_t to) const {
    if (from > to || to >= levels_.size()) fail(ErrorCode::invalid_argument, "embed needs from <= to < size");
    for (std::size_t i = from; i < to; ++i) x = emb_[i][x];
    return x;
}

std::optional<Elem> TowerGroup::pull(Elem y, std::size_t from, std::size_t to) const {
    if (to > from || from >= levels_.size()) fail(ErrorCode::invalid_argument, "pull needs to <= from < size");
    const Elem x = from_top_[to][top_[from][y]];
    if (x == no_elem) return std::nullopt;
    return x;
}

Subgroup TowerGroup::push(const Subgroup& P, std::size_t from, std::size_t to) const {
    if (!P.parent().same_as(levels_.at(from))) fail(ErrorCode::mismatched_parent, "subgroup is not in the given level");
    std::vector<Elem> m;
    m.reserve(P.order());
    for (Elem x : P.members()) m.push_back(embed(x, from, to));
    std::sort(m.begin(), m.end());
    return Subgroup::trusted(levels_.at(to), std::move(m));
}

Subgroup TowerGroup::pull(const Subgroup& P, std::size_t from, std::size_t to) const {
    if (!P.parent().same_as(levels_.at(from))) fail(ErrorCode::mismatched_parent, "subgroup is not in the given level");
    std::vector<Elem> m;
    for (Elem y : P.members())
        if (auto x = pull(y, from, to)) m.push_back(*x);
    std::sort(m.begin(), m.end());
    return Subgroup::trusted(levels_.at(to), std::move(m));
}

SubTower::SubTower(const TowerGroup& G, std::vector<Subgroup> levels) : levels_(std::move(levels)) {
    if (levels_.size() != G.size()) fail(ErrorCode::invalid_tower, "sub-tower needs one subgroup per level");
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (!levels_[i].parent().same_as(G.level(i)))
            fail(ErrorCode::mismatched_parent, "sub-tower level " + std::to_string(i + 1) + " lies in another group");
    for (std::size_t i = 0; i + 1 < levels_.size(); ++i)
        for (Elem x : levels_[i].members())
            if (!levels_[i + 1].contains(G.embedding(i)[x]))
                fail(ErrorCode::invalid_tower,
                     "sub-tower level " + std::to_string(i + 1) + " does not embed into level " + std::to_string(i + 2));
    for (std::size_t i = 0; i < levels_.size(); ++i) tops_.push_back(G.push_top(levels_[i], i));
}

SubTower SubTower::whole(const TowerGroup& G) {
    std::vector<Subgroup> v;
    for (std::size_t i = 0; i < G.size(); ++i) v.push_back(Subgroup::whole(G.level(i)));
    return SubTower(G, std::move(v));
}

SubTower SubTower::trivial(const TowerGroup& G) {
    std::vector<Subgroup> v;
    for (std::size_t i = 0; i < G.size(); ++i) v.push_back(Subgroup::trivial(G.level(i)));
    return SubTower(G, std::move(v));
}

SubTower SubTower::from_top(const TowerGroup& G, const Subgroup& top) {
    std::vector<Subgroup> v;
    for (std::size_t i = 0; i < G.size(); ++i) v.push_back(G.pull(top, G.top_index(), i));
    return SubTower(G, std::move(v));
}

bool SubTower::contains(const SubTower& other) const {
    if (other.size() != size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (!levels_[i].contains(other.levels_[i])) return false;
    return true;
}

Subgroup unique_cyclic_subgroup(const Subgroup& P, std::size_t order) {
    const FiniteGroup& G = P.parent();
    std::set<std::vector<Elem>> found;
    for (Elem x : P.members()) {
        if (G.element_order(x) != order) continue;
        const Elem gen[] = {x};
        auto C = Subgroup::generated(G, gen);
        found.insert(std::vector<Elem>(C.members().begin(), C.members().end()));
    }
    if (found.size() != 1)
        fail(ErrorCode::invalid_argument, "expected exactly one cyclic subgroup of order " + std::to_string(order) +
                                              ", found " + std::to_string(found.size()));
    return Subgroup::trusted(G, *found.begin());
}

TorusData torus_from_top(const TowerGroup& G, const SubTower& S, const Subgroup& T_top, unsigned rank) {
    std::vector<Subgroup> v;
    for (std::size_t i = 0; i < G.size(); ++i) v.push_back(intersection(G.pull(T_top, G.top_index(), i), S.at(i)));
    return {SubTower(G, std::move(v)), rank};
}

StabilizationCertificate StabilizationCertificate::from_values(std::string quantity, std::vector<std::uint64_t> values,
                                                               std::size_t window, std::vector<bool> bijective) {
    StabilizationCertificate c;
    c.quantity = std::move(quantity);
    c.values = std::move(values);
    c.bijective = std::move(bijective);
    c.window = window;
    const std::size_t n = c.values.size();
    if (n == 0) return c;
    std::size_t k = n - 1;  // 0-based start of the constant tail
    while (k > 0 && c.values[k - 1] == c.values[n - 1] && (c.bijective.empty() || c.bijective[k - 1])) --k;
    if (k + 1 + window <= n) c.stabilized_at = k + 1;
    return c;
}

std::string truncation_status(std::size_t depth, std::size_t window) {
    return "verified up to depth " + std::to_string(depth) + ", window " + std::to_string(window);
}

namespace {

bool abelian(const Subgroup& A) {
    const FiniteGroup& G = A.parent();
    auto g = A.generators();
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (G.mul(g[a], g[b]) != G.mul(g[b], g[a])) return false;
    return true;
}

unsigned log_p(std::size_t n, unsigned p) {
    unsigned r = 0;
    while (n > 1) {
        n /= p;
        ++r;
    }
    return r;
}

void check_depth(const TowerGroup& G, std::size_t depth) {
    if (depth == 0 || depth > G.size())
        fail(ErrorCode::invalid_argument, "depth must lie in 1.." + std::to_string(G.size()));
}

// positions of the members of small inside big
std::vector<std::size_t> positions(const Subgroup& big, const Subgroup& small) {
    std::vector<std::size_t> pos;
    pos.reserve(small.order());
    for (Elem x : small.members()) pos.push_back(big.position(x));
    return pos;
}

std::vector<std::vector<Elem>> tables_of(const std::vector<GroupMap>& maps) {
    std::vector<std::vector<Elem>> t;
    t.reserve(maps.size());
    for (const auto& m : maps) t.push_back(m.table());
    return t;
}

std::vector<Elem> restrict_table(const std::vector<Elem>& t, const std::vector<std::size_t>& pos) {
    std::vector<Elem> r;
    r.reserve(pos.size());
    for (std::size_t k : pos) r.push_back(t[k]);
    return r;
}

// restriction from tables on big to tables on small is a bijection between the given sets
bool restriction_bijective(const std::vector<std::vector<Elem>>& big_tables, const Subgroup& big,
                           const std::vector<std::vector<Elem>>& small_tables, const Subgroup& small) {
    const auto pos = positions(big, small);
    std::set<std::vector<Elem>> image;
    for (const auto& t : big_tables) image.insert(restrict_table(t, pos));
    if (image.size() != big_tables.size()) return false;
    return image == std::set<std::vector<Elem>>(small_tables.begin(), small_tables.end());
}

// Hom_{G_N}(P_i, Q) for every level, as an inverse system acted on by Gamma (trivial or Q by conjugation)
struct HomSystem {
    std::vector<std::vector<std::vector<Elem>>> tables;
    InverseSystem sys;
};

HomSystem hom_system(const TowerGroup& G, const SubTower& P, const Subgroup& Q, bool act) {
    HomSystem h;
    const std::size_t n = G.size();
    const FiniteGroup& U = G.top();
    h.tables.resize(n);
    for (std::size_t i = 0; i < n; ++i) h.tables[i] = tables_of(hom_g(U, P.top_image(i), Q));
    h.sys.gamma = act ? as_group(Q) : FiniteGroup();
    const std::size_t g = h.sys.gamma.order();
    h.sys.sizes.resize(n);
    h.sys.action.resize(n);
    std::vector<std::map<std::vector<Elem>, std::size_t>> index(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.sys.sizes[i] = h.tables[i].size();
        for (std::size_t k = 0; k < h.tables[i].size(); ++k) index[i].emplace(h.tables[i][k], k);
    }
    for (std::size_t i = 0; i < n; ++i) {
        h.sys.action[i].assign(g, std::vector<std::size_t>(h.sys.sizes[i]));
        for (std::size_t a = 0; a < g; ++a) {
            const Elem q = act ? Q.members()[a] : 0;
            for (std::size_t k = 0; k < h.sys.sizes[i]; ++k) {
                std::vector<Elem> t = h.tables[i][k];
                for (Elem& y : t) y = U.conj(q, y);
                h.sys.action[i][a][k] = index[i].at(t);
            }
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto pos = positions(P.top_image(i + 1), P.top_image(i));
        std::vector<std::size_t> m;
        for (const auto& t : h.tables[i + 1]) m.push_back(index[i].at(restrict_table(t, pos)));
        h.sys.maps.push_back(std::move(m));
    }
    return h;
}

}  // namespace

POrder p_order(const TowerGroup& G, const SubTower& S, const TorusData& torus, std::size_t at) {
    if (at >= G.size()) fail(ErrorCode::invalid_argument, "level out of range");
    const SubTower& T = torus.torus;
    if (T.size() != S.size()) fail(ErrorCode::inconsistent_torus, "torus data has the wrong number of levels");
    const unsigned p = G.prime();
    std::optional<std::uint64_t> index;
    for (std::size_t j = 0; j < G.size(); ++j) {
        const Subgroup& Sj = S.at(j);
        const Subgroup& Tj = T.at(j);
        const std::string lv = " at level " + std::to_string(j + 1);
        if (!Sj.contains(Tj)) fail(ErrorCode::inconsistent_torus, "torus not contained in S" + lv);
        if (!abelian(Tj)) fail(ErrorCode::inconsistent_torus, "torus not abelian" + lv);
        if (!is_normal(Sj, Tj)) fail(ErrorCode::inconsistent_torus, "torus not normal in S" + lv);
        if (Sj.order() > 1 && prime_of_power(Sj.order()) != p)
            fail(ErrorCode::inconsistent_torus, "S is not a p-group" + lv);
        if (j < at) continue;
        const std::uint64_t idx = Sj.order() / Tj.order();
        if (index && *index != idx)
            fail(ErrorCode::inconsistent_torus, "index |S_i/T_i| is not constant from level " + std::to_string(at + 1));
        index = idx;
    }
    const Subgroup& Ttop = T.top_image(G.top_index());
    const unsigned r = log_p(omega(Ttop, 1).order(), p);
    if (r != torus.rank)
        fail(ErrorCode::inconsistent_torus,
             "declared rank " + std::to_string(torus.rank) + " but Omega_1(T_N) has rank " + std::to_string(r));
    return {torus.rank, *index};
}

SubTower weakly_sylow(const TowerGroup& G, unsigned p) {
    if (!is_prime(p)) fail(ErrorCode::invalid_argument, "p must be prime");
    std::vector<Subgroup> v;
    v.push_back(sylow(G.level(0), p));
    for (std::size_t i = 0; i + 1 < G.size(); ++i) {
        const Subgroup image = G.push(v.back(), i, i + 1);
        v.push_back(sylow_containing(Subgroup::whole(G.level(i + 1)), image, p));
    }
    return SubTower(G, std::move(v));
}

TowerGroup restrict_tower(const TowerGroup& G, const SubTower& P, TowerKind kind) {
    std::vector<FiniteGroup> levels;
    std::vector<std::vector<Elem>> emb;
    for (std::size_t i = 0; i < G.size(); ++i) levels.push_back(as_group(P.at(i)));
    for (std::size_t i = 0; i + 1 < G.size(); ++i) {
        std::vector<Elem> t;
        for (Elem x : P.at(i).members()) t.push_back(Elem(P.at(i + 1).position(G.embedding(i)[x])));
        emb.push_back(std::move(t));
    }
    return TowerGroup(std::move(levels), std::move(emb), G.prime(), kind, G.label() + "|sub");
}

std::optional<std::vector<GroupMap>> local_conjugation(const TowerGroup& G, const SubTower& P, const SubTower& Q,
                                                       std::size_t depth) {
    check_depth(G, depth);
    const Subgroup& Qtop = Q.top_image(G.top_index());
    HomSystem h = hom_system(G, P, Qtop, true);
    for (std::size_t s : h.sys.sizes)
        if (s == 0) return std::nullopt;
    const InverseLimitResult r = inverse_limit(h.sys, depth);
    if (!r.nonempty) return std::nullopt;
    std::vector<GroupMap> out;
    for (std::size_t i = 0; i < depth; ++i)
        out.emplace_back(P.top_image(i), Qtop, h.tables[i][r.families.front()[i]]);
    return out;
}

ClosureHom closure_hom(const TowerGroup& G, const SubTower& P, const Subgroup& Q, std::size_t depth,
                       std::size_t window) {
    check_depth(G, depth);
    if (!Q.parent().same_as(G.top())) fail(ErrorCode::mismatched_parent, "Q must be a subgroup of the top level");
    HomSystem h = hom_system(G, P, Q, false);
    ClosureHom out;
    std::vector<std::uint64_t> values;
    std::vector<bool> bij;
    for (std::size_t i = 0; i < G.size(); ++i) values.push_back(h.tables[i].size());
    for (std::size_t i = 0; i + 1 < G.size(); ++i)
        bij.push_back(restriction_bijective(h.tables[i + 1], P.top_image(i + 1), h.tables[i], P.top_image(i)));
    out.certificate = StabilizationCertificate::from_values("|Hom(P_i, Q)|", std::move(values), window, std::move(bij));
    bool any_empty = false;
    for (std::size_t s : h.sys.sizes) any_empty = any_empty || s == 0;
    if (any_empty) return out;
    const InverseLimitResult r = inverse_limit(h.sys, depth);
    for (const auto& f : r.families) {
        std::vector<GroupMap> fam;
        for (std::size_t i = 0; i < depth; ++i) fam.emplace_back(P.top_image(i), Q, h.tables[i][f[i]]);
        out.families.push_back(std::move(fam));
    }
    return out;
}

std::optional<ContinuityWitness> continuity_witness(const TowerGroup& G, const SubTower& S, std::size_t depth) {
    check_depth(G, depth);
    if (depth < 2) return std::nullopt;
    const FiniteGroup& U = G.top();
    const Subgroup whole = Subgroup::whole(U);
    ContinuityWitness w;
    std::vector<Subgroup> C;
    for (std::size_t i = 0; i < depth; ++i) {
        const Subgroup& Pi = S.top_image(i);
        w.chain_orders.push_back(Pi.order());
        C.push_back(centralizer(U, Pi));
        w.centralizer_orders.push_back(C.back().order());
        if (i > 0 && !(w.centralizer_orders[i] < w.centralizer_orders[i - 1])) return std::nullopt;
    }
    std::vector<std::vector<std::vector<Elem>>> X(depth);
    for (std::size_t i = 0; i < depth; ++i) {
        X[i] = tables_of(hom_g(U, S.top_image(i), whole));
        w.hom_counts.push_back(X[i].size());
    }
    for (std::size_t i = 0; i + 1 < depth; ++i) {
        const auto pos = positions(S.top_image(i + 1), S.top_image(i));
        std::map<std::vector<Elem>, std::size_t> fiber;
        for (const auto& t : X[i + 1]) ++fiber[restrict_table(t, pos)];
        std::size_t least = ~std::size_t(0);
        for (const auto& t : X[i]) least = std::min(least, fiber.count(t) ? fiber.at(t) : std::size_t(0));
        w.min_fiber.push_back(least);
    }
    // x_{i+1} = x_i g_i with g_i in C(P_i) \ C(P_{i+1})
    Elem x = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        if (i > 0) {
            Elem g = no_elem;
            for (Elem c : C[i - 1].members())
                if (!C[i].contains(c)) {
                    g = c;
                    break;
                }
            x = U.mul(x, g);
        }
        const Subgroup& Pi = S.top_image(i);
        w.family.push_back(GroupMap::conjugation(Pi, whole, x));
        std::size_t count = 0;
        const auto& target = w.family.back().table();
        for (Elem g = 0; g < U.order(); ++g) {
            bool same = true;
            auto pm = Pi.members();
            for (std::size_t a = 0; a < pm.size() && same; ++a) same = U.conj(g, pm[a]) == target[a];
            if (same) ++count;
        }
        w.realizing_counts.push_back(count);
    }
    return w;
}

FinSaturationReport fin_saturation_check(const TowerGroup& G, const SubTower& S, std::size_t depth, std::size_t window,
                                         const std::optional<TorusData>& torus) {
    check_depth(G, depth);
    const std::size_t N = G.size();
    const Subgroup& Stop = S.top_image(N - 1);
    const FusionSystem F = FusionSystem::realize(G.top(), Stop, G.prime());
    FinSaturationReport rep;
    rep.depth = depth;
    rep.window = window;

    auto chain_certificate = [&](const std::string& name, auto&& level_subgroup) {
        std::vector<std::uint64_t> values;
        std::vector<bool> bij;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < N; ++i) {
            idx.push_back(F.index_of(level_subgroup(i)));
            values.push_back(F.tables(idx.back()).size());
        }
        for (std::size_t i = 0; i + 1 < N; ++i)
            bij.push_back(restriction_bijective(F.tables(idx[i + 1]), F.subgroups()[idx[i + 1]], F.tables(idx[i]),
                                                F.subgroups()[idx[i]]));
        return StabilizationCertificate::from_values(name, std::move(values), window, std::move(bij));
    };

    const Subgroup& Sd = S.top_image(depth - 1);
    for (std::size_t k = 0; k < F.subgroups().size(); ++k) {
        const Subgroup& P = F.subgroups()[k];
        if (!Sd.contains(P)) continue;
        FinSubgroupRecord rec;
        rec.subgroup = P;
        for (std::size_t i = 0; i < depth; ++i)
            if (S.top_image(i).contains(P)) {
                rec.level = i + 1;
                break;
            }
        rec.status = status(F, P);
        if (rec.status.fully_normalized && !rec.status.fully_automized) rec.failing_axiom = "sylow:fully_automized";
        else if (rec.status.fully_normalized && !rec.status.fully_centralized)
            rec.failing_axiom = "sylow:fully_centralized";
        else if (rec.status.fully_centralized && !rec.status.receptive) rec.failing_axiom = "extension:receptive";
        rec.ok = rec.failing_axiom.empty();
        rep.fin_saturated = rep.fin_saturated && rec.ok;
        rec.certificate = chain_certificate("|Hom_F(P meet S_i, S)|",
                                            [&](std::size_t i) { return intersection(P, S.top_image(i)); });
        rep.certificates_stabilized = rep.certificates_stabilized && rec.certificate.stabilized_at.has_value();
        rep.subgroups.push_back(std::move(rec));
    }
    rep.chains.push_back(chain_certificate("|Hom_F(S_i, S)|", [&](std::size_t i) { return S.top_image(i); }));
    if (torus)
        rep.chains.push_back(
            chain_certificate("|Hom_F(T_i, S)|", [&](std::size_t i) { return torus->torus.top_image(i); }));
    for (const auto& c : rep.chains) rep.certificates_stabilized = rep.certificates_stabilized && c.stabilized_at;
    rep.continuity = continuity_witness(G, S, depth);
    rep.saturated_conditional = rep.fin_saturated && rep.certificates_stabilized && !rep.continuity;
    rep.status = std::string(rep.fin_saturated ? "Fin(S)-saturated" : "not Fin(S)-saturated") + " up to depth " +
                 std::to_string(depth) + ", window " + std::to_string(window);
    return rep;
}

AutTorusResult aut_torus(const TowerGroup& G, const TorusData& torus, std::size_t depth, std::size_t window) {
    check_depth(G, depth);
    const FiniteGroup& U = G.top();
    const SubTower& T = torus.torus;
    AutTorusResult out;
    std::vector<std::vector<std::vector<Elem>>> W(depth);
    for (std::size_t i = 0; i < depth; ++i) {
        const Subgroup& Ti = T.top_image(i);
        if (!abelian(Ti)) fail(ErrorCode::inconsistent_torus, "torus level " + std::to_string(i + 1) + " is not abelian");
        W[i] = tables_of(hom_g(U, Ti, Ti));
    }
    const Subgroup& T1 = T.top_image(0);
    const std::set<std::vector<Elem>> W1(W[0].begin(), W[0].end());
    std::vector<std::uint64_t> orders;
    std::vector<bool> step_bij;
    for (std::size_t i = 0; i < depth; ++i) {
        orders.push_back(W[i].size());
        const Subgroup& Ti = T.top_image(i);
        const auto pos = positions(Ti, T1);
        std::set<std::vector<Elem>> image;
        std::size_t kernel = 0;
        const std::vector<Elem> id1(T1.members().begin(), T1.members().end());
        for (const auto& t : W[i]) {
            auto r = restrict_table(t, pos);
            if (r == id1) ++kernel;
            image.insert(std::move(r));
        }
        out.restriction_surjective.push_back(image == W1);
        out.kernel_orders.push_back(kernel);
        out.kernel_p_group.push_back(kernel == 1 || prime_of_power(kernel) == G.prime());
        if (i > 0) {
            const Subgroup& Tp = T.top_image(i - 1);
            const auto ppos = positions(Ti, Tp);
            const std::vector<Elem> idp(Tp.members().begin(), Tp.members().end());
            std::size_t k = 0;
            for (const auto& t : W[i])
                if (restrict_table(t, ppos) == idp) ++k;
            out.step_kernel_orders.push_back(k);
            step_bij.push_back(restriction_bijective(W[i], Ti, W[i - 1], Tp));
        }
    }
    out.certificate = StabilizationCertificate::from_values("|Aut_F(T_i)|", std::move(orders), window, std::move(step_bij));
    if (out.certificate.stabilized_at) {
        const std::size_t k = *out.certificate.stabilized_at - 1;
        const Subgroup& Tk = T.top_image(k);
        for (const auto& t : W[k]) out.W.emplace_back(Tk, Tk, t);
        out.conclusive = true;
    }
    return out;
}

EntryLevel torus_entry_level(const TowerGroup& G, const SubTower& S, const TorusData& torus, const SubTower& U,
                             std::size_t depth) {
    check_depth(G, depth);
    const std::size_t N = G.size();
    if (!torus.torus.contains(U)) fail(ErrorCode::inconsistent_torus, "U is not contained in the torus");
    const FusionSystem F = FusionSystem::realize(G.top(), S.top_image(N - 1), G.prime());
    const Subgroup& Ttop = torus.torus.top_image(N - 1);
    const Subgroup& Ud = U.top_image(depth - 1);
    EntryLevel out;
    out.depth = depth;
    for (std::size_t n = 1; n <= depth; ++n) {
        const Subgroup Om = omega(Ud, unsigned(n));
        std::size_t bad = 0;
        for (std::size_t k = 0; k < F.subgroups().size(); ++k) {
            const Subgroup& P = F.subgroups()[k];
            if (!Ud.contains(P) || !P.contains(Om)) continue;
            for (const auto& t : F.tables(k))
                for (Elem y : t)
                    if (!Ttop.contains(y)) {
                        ++bad;
                        break;
                    }
        }
        out.failures.push_back(bad);
        if (bad == 0 && !out.level) out.level = n;
    }
    return out;
}

ArtinianProbe strongly_artinian_probe(const TowerGroup& G, unsigned p, std::size_t depth, std::size_t window) {
    check_depth(G, depth);
    const SubTower S = weakly_sylow(G, p);
    const FiniteGroup& U = G.top();
    ArtinianProbe out;
    Subgroup prev = Subgroup::trivial(U);
    for (std::size_t j = 0; j < depth; ++j) {
        std::optional<Subgroup> best;
        std::size_t best_c = 0;
        for (const auto& A : all_subgroups(S.top_image(j))) {
            if (!A.contains(prev) || !abelian(A)) continue;
            const std::size_t c = centralizer(U, A).order();
            if (!best || c < best_c || (c == best_c && best->order() < A.order())) {
                best = A;
                best_c = c;
            }
        }
        out.chain.push_back(*best);
        out.centralizer_orders.push_back(best_c);
        prev = *best;
    }
    std::size_t run = 0;
    for (std::size_t j = 1; j < depth; ++j) {
        run = out.centralizer_orders[j] < out.centralizer_orders[j - 1] ? run + 1 : 0;
        out.strict_decreases = std::max(out.strict_decreases, run);
    }
    out.counterexample = out.strict_decreases >= window;
    out.status = out.counterexample ? "counterexample: centralizers strictly decrease over " +
                                          std::to_string(out.strict_decreases) + " steps"
                                    : truncation_status(depth, window);
    return out;
}

SumVerdict direct_sum_classifier(const SumDescriptor& d, unsigned p, unsigned q) {
    if (d.pattern.empty()) fail(ErrorCode::invalid_descriptor, "descriptor needs a nonempty repeating pattern");
    if (!is_prime(p)) fail(ErrorCode::invalid_argument, "p must be prime");
    if (q != 0 && !is_prime(q)) fail(ErrorCode::invalid_argument, "q must be prime or 0");
    SumVerdict v;
    std::set<unsigned> inf;
    bool pattern_abelian = true;
    for (const auto& H : d.pattern) {
        for (unsigned r : prime_divisors(H.order())) inf.insert(r);
        pattern_abelian = pattern_abelian && H.is_abelian();
    }
    v.infinite_primes.assign(inf.begin(), inf.end());
    v.strongly_artinian = !inf.count(p);
    // (1) I_r finite for r != q
    bool c1 = true;
    for (unsigned r : inf) c1 = c1 && r == q;
    // (3) rk_r(G) over r != q bounded, and q-power element orders bounded
    bool ranks_bounded = true;
    for (unsigned r : inf) {
        if (r == q) continue;
        for (const auto& H : d.pattern)
            if (p_rank(H, r) > 0) ranks_bounded = false;  // the rank grows with every period
    }
    // finitely many distinct groups, so q-power orders are bounded by their q-exponents
    const bool c3 = ranks_bounded;
    if (!c1) v.failed_criteria.push_back(1);
    if (!pattern_abelian) v.failed_criteria.push_back(2);
    if (!c3) v.failed_criteria.push_back(3);
    v.linear_torsion = v.failed_criteria.empty();
    return v;
}

QuotientComparison quotient_fusion_compare(const TowerGroup& G, const SubTower& N, const SubTower& S,
                                           std::size_t depth) {
    check_depth(G, depth);
    const unsigned p = G.prime();
    QuotientComparison out;
    for (std::size_t i = 0; i < depth; ++i) {
        const FiniteGroup& Gi = G.level(i);
        const Subgroup& Ni = N.at(i);
        const Subgroup& Si = S.at(i);
        if (Ni.order() % p == 0)
            fail(ErrorCode::invalid_argument, "N at level " + std::to_string(i + 1) + " is not a p'-group");
        const Quotient Q = quotient(Gi, Ni);  // throws not_normal
        std::vector<Elem> bar, alpha;
        for (Elem x : Si.members()) {
            alpha.push_back(Q.projection[x]);
            bar.push_back(Q.projection[x]);
        }
        std::sort(bar.begin(), bar.end());
        const Subgroup Sbar = Subgroup::trusted(Q.group, bar);
        const FusionSystem F1 = FusionSystem::realize(Gi, Si, p);
        const FusionSystem F2 = FusionSystem::realize(Q.group, Sbar, p);
        const bool ok = is_fusion_preserving(GroupMap(Si, Sbar, std::move(alpha)), F1, F2);
        out.levels.push_back({i + 1, ok});
        out.verdict = out.verdict && ok;
    }
    return out;
}

RealizabilityWitness seq_realizability_witness(const TowerGroup& G, const SubTower& S, std::size_t depth) {
    check_depth(G, depth);
    const std::size_t N = G.size();
    const unsigned p = G.prime();
    RealizabilityWitness w;
    for (std::size_t i = 0; i < N; ++i) w.systems.push_back(FusionSystem::realize(G.level(i), S.at(i), p));
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const FusionSystem& A = w.systems[i];
        const FusionSystem& B = w.systems[i + 1];
        bool nested = true;
        for (std::size_t k = 0; k < A.subgroups().size() && nested; ++k) {
            const Subgroup& P = A.subgroups()[k];
            const Subgroup iP = G.push(P, i, i + 1);
            for (const auto& t : A.tables(k)) {
                std::vector<Elem> u(P.order());
                auto pm = P.members();
                for (std::size_t a = 0; a < pm.size(); ++a)
                    u[iP.position(G.embedding(i)[pm[a]])] = G.embedding(i)[t[a]];
                if (!B.contains(GroupMap(iP, S.at(i + 1), std::move(u)))) {
                    nested = false;
                    break;
                }
            }
        }
        w.nested.push_back(nested);
    }
    // every top-level morphism of a materialized subgroup comes from some F_j
    const FusionSystem& Ftop = w.systems.back();
    const Subgroup& Sd = S.top_image(depth - 1);
    w.union_certified = std::all_of(w.nested.begin(), w.nested.end(), [](bool b) { return b; });
    for (std::size_t k = 0; k < Ftop.subgroups().size(); ++k) {
        const Subgroup& P = Ftop.subgroups()[k];
        if (!Sd.contains(P)) continue;
        std::size_t worst = 0;
        for (const auto& t : Ftop.tables(k)) {
            std::optional<std::size_t> found;
            for (std::size_t j = 0; j < N && !found; ++j) {
                const Subgroup& Sj = S.top_image(j);
                if (!Sj.contains(P)) continue;
                bool inside = true;
                for (Elem y : t) inside = inside && Sj.contains(y);
                if (!inside) continue;
                const Subgroup Pj = G.pull(P, N - 1, j);
                std::vector<Elem> u(Pj.order());
                auto pm = P.members();
                for (std::size_t a = 0; a < pm.size(); ++a) u[Pj.position(*G.pull(pm[a], N - 1, j))] = *G.pull(t[a], N - 1, j);
                if (w.systems[j].contains(GroupMap(Pj, S.at(j), std::move(u)))) found = j + 1;
            }
            if (!found) {
                w.union_certified = false;
                worst = 0;
                break;
            }
            worst = std::max(worst, *found);
        }
        w.appearance_level.push_back(worst);
    }
    return w;
}

}  // namespace plocal
