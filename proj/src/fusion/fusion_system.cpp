#include <deque>
#include <numeric>
#include <set>

#include "internal.hpp"

namespace plocal {

using namespace fusion_detail;

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::realized: return "realized";
        case Provenance::generated: return "generated";
        case Provenance::centralizer: return "centralizer";
        case Provenance::truncation: return "closure-truncation";
    }
    return "?";
}

namespace {

void check_sylow_input(const Subgroup& S, unsigned p) {
    if (!is_prime(p)) fail(ErrorCode::invalid_argument, "p = " + std::to_string(p) + " is not prime");
    if (!is_p_group(S, p)) fail(ErrorCode::not_a_p_group, "S of order " + std::to_string(S.order()) + " is not a " +
                                                               std::to_string(p) + "-group");
}

}  // namespace

FusionSystem FusionSystem::from_tables(const Subgroup& S, unsigned p, Provenance prov, std::string detail,
                                       std::vector<std::vector<std::vector<Elem>>> homs, const Bounds& bounds) {
    check_sylow_input(S, p);
    FusionSystem F;
    F.S_ = S;
    F.p_ = p;
    F.prov_ = prov;
    F.detail_ = std::move(detail);
    F.bounds_ = bounds;
    F.subs_ = all_subgroups(S, bounds);
    for (std::size_t i = 0; i < F.subs_.size(); ++i)
        F.index_.emplace(std::vector<Elem>(F.subs_[i].members().begin(), F.subs_[i].members().end()), i);
    if (homs.size() != F.subs_.size()) fail(ErrorCode::invalid_argument, "one hom list per subgroup of S expected");
    F.homs_ = std::move(homs);
    F.finish();
    return F;
}

void FusionSystem::finish() {
    const std::size_t n = subs_.size();
    images_.assign(n, {});
    nS_.assign(n, 0);
    cS_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto& h = homs_[i];
        std::sort(h.begin(), h.end());
        h.erase(std::unique(h.begin(), h.end()), h.end());
        for (const auto& t : h) {
            if (t.size() != subs_[i].order()) fail(ErrorCode::invalid_argument, "hom table has wrong length");
            auto j = find_index(sorted_copy(t));
            if (!j) fail(ErrorCode::invalid_argument, "hom image is not a subgroup of S");
            if (subs_[*j].order() != subs_[i].order()) fail(ErrorCode::non_injective, "morphism is not injective");
            images_[i].push_back(*j);
        }
        nS_[i] = normalizer(S_, subs_[i]).order();
        cS_[i] = centralizer(S_, subs_[i]).order();
    }
    constexpr std::size_t unset = ~std::size_t(0);
    class_id_.assign(n, unset);
    class_reps_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (class_id_[i] != unset) continue;
        const std::size_t c = class_reps_.size();
        std::size_t rep = i;
        class_id_[i] = c;
        for (std::size_t j : images_[i]) {
            class_id_[j] = c;
            if (nS_[j] > nS_[rep] || (nS_[j] == nS_[rep] && j < rep)) rep = j;
        }
        class_reps_.push_back(rep);
    }
}

FusionSystem FusionSystem::realize(const FiniteGroup& G, const Subgroup& S, unsigned p, const Bounds& bounds) {
    if (!S.parent().same_as(G)) fail(ErrorCode::mismatched_parent, "S is not a subgroup of G");
    check_sylow_input(S, p);
    auto subs = all_subgroups(S, bounds);
    std::vector<std::vector<std::vector<Elem>>> homs(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (const auto& m : hom_g(G, subs[i], S)) homs[i].push_back(m.table());
    return from_tables(S, p, Provenance::realized, G.label(), std::move(homs), bounds);
}

FusionSystem FusionSystem::inner(const Subgroup& S, unsigned p, const Bounds& bounds) {
    check_sylow_input(S, p);
    auto subs = all_subgroups(S, bounds);
    std::vector<std::vector<std::vector<Elem>>> homs(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (const auto& m : hom_g(S, subs[i], S)) homs[i].push_back(m.table());
    return from_tables(S, p, Provenance::realized, "inner", std::move(homs), bounds);
}

FusionSystem FusionSystem::generate(const Subgroup& S, unsigned p, const std::vector<GroupMap>& seeds,
                                    const Bounds& bounds) {
    check_sylow_input(S, p);
    const FiniteGroup& U = S.parent();
    auto subs = all_subgroups(S, bounds);
    const std::size_t n = subs.size();
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(std::vector<Elem>(subs[i].members().begin(), subs[i].members().end()), i);
    auto idx = [&](const std::vector<Elem>& members) {
        auto it = index.find(sorted_copy(members));
        if (it == index.end()) fail(ErrorCode::invalid_argument, "map image is not a subgroup of S");
        return it->second;
    };
    std::vector<std::vector<std::size_t>> below(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (subs[k].order() < subs[i].order() && subs[i].contains(subs[k])) below[i].push_back(k);

    std::vector<std::set<std::vector<Elem>>> sets(n);
    // maps with image exactly subs[j]: (source, table)
    std::vector<std::vector<std::pair<std::size_t, std::vector<Elem>>>> by_image(n);
    std::deque<std::pair<std::size_t, std::vector<Elem>>> work;
    auto add = [&](std::size_t i, std::vector<Elem> t) {
        if (!sets[i].insert(t).second) return;
        by_image[idx(t)].emplace_back(i, t);
        work.emplace_back(i, std::move(t));
    };

    for (std::size_t i = 0; i < n; ++i)
        for (const auto& m : hom_g(S, subs[i], S)) add(i, m.table());
    for (const auto& s : seeds) {
        if (!s.domain().parent().same_as(U) || !S.contains(s.domain()))
            fail(ErrorCode::invalid_argument, "seed domain is not a subgroup of S");
        for (Elem y : s.table())
            if (!S.contains(y)) fail(ErrorCode::invalid_argument, "seed image leaves S");
        if (!s.injective()) fail(ErrorCode::non_injective, "seed map is not injective");
        GroupMap m(s.domain(), S, s.table());
        if (!m.is_homomorphism()) fail(ErrorCode::invalid_argument, "seed map is not a homomorphism");
        add(idx(std::vector<Elem>(s.domain().members().begin(), s.domain().members().end())), s.table());
    }

    while (!work.empty()) {
        auto [i, t] = std::move(work.front());
        work.pop_front();
        const Subgroup& P = subs[i];
        const std::size_t j = idx(t);
        const Subgroup& Q = subs[j];
        for (std::size_t k : below[i]) {
            std::vector<Elem> r;
            r.reserve(subs[k].order());
            for (Elem x : subs[k].members()) r.push_back(apply(P, t, x));
            add(k, std::move(r));
        }
        {
            std::vector<Elem> inv(Q.order());
            auto pm = P.members();
            for (std::size_t a = 0; a < pm.size(); ++a) inv[Q.position(t[a])] = pm[a];
            add(j, std::move(inv));
        }
        std::vector<std::vector<Elem>> after(sets[j].begin(), sets[j].end());
        for (const auto& psi : after) {
            std::vector<Elem> c;
            c.reserve(t.size());
            for (Elem y : t) c.push_back(apply(Q, psi, y));
            add(i, std::move(c));
        }
        auto before = by_image[i];
        for (const auto& [k, chi] : before) {
            std::vector<Elem> c;
            c.reserve(chi.size());
            for (Elem y : chi) c.push_back(apply(P, t, y));
            add(k, std::move(c));
        }
    }
    std::vector<std::vector<std::vector<Elem>>> homs(n);
    for (std::size_t i = 0; i < n; ++i) homs[i].assign(sets[i].begin(), sets[i].end());
    return from_tables(S, p, Provenance::generated, std::to_string(seeds.size()) + " seeds", std::move(homs), bounds);
}

std::optional<std::size_t> FusionSystem::find_index(std::span<const Elem> sorted_members) const {
    auto it = index_.find(std::vector<Elem>(sorted_members.begin(), sorted_members.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FusionSystem::index_of(const Subgroup& P) const {
    if (!P.parent().same_as(S_.parent())) fail(ErrorCode::mismatched_parent, "subgroup of a different group");
    auto i = find_index(P.members());
    if (!i) fail(ErrorCode::not_a_subgroup, "not a subgroup of S");
    return *i;
}

GroupMap FusionSystem::map(std::size_t source, std::size_t k) const {
    return GroupMap(subs_[source], S_, homs_[source][k]);
}

std::vector<GroupMap> FusionSystem::homs(const Subgroup& P) const {
    const std::size_t i = index_of(P);
    std::vector<GroupMap> out;
    for (std::size_t k = 0; k < homs_[i].size(); ++k) out.push_back(map(i, k));
    return out;
}

std::vector<GroupMap> FusionSystem::homs(const Subgroup& P, const Subgroup& Q) const {
    const std::size_t i = index_of(P);
    std::vector<GroupMap> out;
    for (std::size_t k = 0; k < homs_[i].size(); ++k)
        if (Q.contains(subs_[images_[i][k]])) out.emplace_back(subs_[i], Q, homs_[i][k]);
    return out;
}

std::vector<GroupMap> FusionSystem::automorphisms(const Subgroup& P) const {
    const std::size_t i = index_of(P);
    std::vector<GroupMap> out;
    for (std::size_t k = 0; k < homs_[i].size(); ++k)
        if (images_[i][k] == i) out.emplace_back(subs_[i], subs_[i], homs_[i][k]);
    return out;
}

std::size_t FusionSystem::hom_count(const Subgroup& P, const Subgroup& Q) const {
    const std::size_t i = index_of(P);
    std::size_t c = 0;
    for (std::size_t j : images_[i]) c += Q.contains(subs_[j]);
    return c;
}

std::size_t FusionSystem::aut_order(const Subgroup& P) const {
    const std::size_t i = index_of(P);
    return std::size_t(std::count(images_[i].begin(), images_[i].end(), i));
}

bool FusionSystem::contains(const GroupMap& phi) const {
    if (!phi.domain().parent().same_as(S_.parent())) return false;
    auto i = find_index(phi.domain().members());
    if (!i) return false;
    return std::binary_search(homs_[*i].begin(), homs_[*i].end(), phi.table());
}

std::size_t FusionSystem::morphism_count() const {
    std::size_t c = 0;
    for (const auto& h : homs_) c += h.size();
    return c;
}

std::vector<std::size_t> FusionSystem::class_members(std::size_t c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < class_id_.size(); ++i)
        if (class_id_[i] == c) out.push_back(i);
    return out;
}

std::vector<Subgroup> FusionSystem::conjugacy_class(const Subgroup& P) const {
    std::vector<Subgroup> out;
    for (std::size_t j : class_members(class_id_[index_of(P)])) out.push_back(subs_[j]);
    return out;
}

bool operator==(const FusionSystem& a, const FusionSystem& b) {
    if (!(a.sylow() == b.sylow())) return false;
    for (std::size_t i = 0; i < a.subgroups().size(); ++i)
        if (a.tables(i) != b.tables(i)) return false;
    return true;
}

// ---------------------------------------------------------------- shared helpers

namespace fusion_detail {

std::vector<std::vector<Elem>> aut_tables(const FusionSystem& F, std::size_t i) {
    std::vector<std::vector<Elem>> out;
    const auto& t = F.tables(i);
    const auto& im = F.images(i);
    for (std::size_t k = 0; k < t.size(); ++k)
        if (im[k] == i) out.push_back(t[k]);
    return out;
}

FiniteGroup aut_group(const FusionSystem& F, std::size_t i) {
    const Subgroup& P = F.subgroups()[i];
    auto auts = aut_tables(F, i);
    const std::size_t n = auts.size();
    auto index = std::make_shared<std::map<std::vector<Elem>, Elem>>();
    for (std::size_t k = 0; k < n; ++k) index->emplace(auts[k], Elem(k));
    auto shared = std::make_shared<std::vector<std::vector<Elem>>>(std::move(auts));
    auto compose = [P, shared, index](Elem a, Elem b) {
        const auto& ta = (*shared)[a];
        std::vector<Elem> c;
        c.reserve(ta.size());
        for (Elem y : (*shared)[b]) c.push_back(apply(P, ta, y));
        return index->at(c);
    };
    if (n <= F.bounds().max_table_order) {
        std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) table[a][b] = compose(a, b);
        return FiniteGroup::from_table(table, "Aut_F");
    }
    std::vector<Elem> inv(n);
    for (Elem a = 0; a < n; ++a) {
        const auto& ta = (*shared)[a];
        std::vector<Elem> r(ta.size());
        auto pm = P.members();
        for (std::size_t x = 0; x < pm.size(); ++x) r[P.position(ta[x])] = pm[x];
        inv[a] = index->at(r);
    }
    std::vector<Elem> gens(n > 1 ? n - 1 : 0);
    std::iota(gens.begin(), gens.end(), Elem(1));
    return FiniteGroup::from_rule(n, compose, [inv](Elem a) { return inv[a]; }, gens, "Aut_F");
}

std::vector<std::vector<Elem>> aut_s_tables(const FusionSystem& F, std::size_t i) {
    const Subgroup& P = F.subgroups()[i];
    std::set<std::vector<Elem>> out;
    const FiniteGroup& U = P.parent();
    const Subgroup N = normalizer(F.sylow(), P);
    for (Elem g : N.members()) {
        std::vector<Elem> t;
        t.reserve(P.order());
        for (Elem x : P.members()) t.push_back(U.conj(g, x));
        out.insert(std::move(t));
    }
    return {out.begin(), out.end()};
}

std::size_t inn_order(const Subgroup& P) { return P.order() / center(P).order(); }

bool centric_in_s(const FusionSystem& F, std::size_t i) {
    const Subgroup& P = F.subgroups()[i];
    return P.contains(centralizer(F.sylow(), P));
}

bool centric_index(const FusionSystem& F, std::size_t i) {
    for (std::size_t j : F.class_members(F.class_of(i)))
        if (!centric_in_s(F, j)) return false;
    return true;
}

bool radical_index(const FusionSystem& F, std::size_t i) {
    const Subgroup& P = F.subgroups()[i];
    FiniteGroup A = aut_group(F, i);
    return o_lower_p(Subgroup::whole(A), F.prime()).order() == inn_order(P);
}

bool fully_normalized_index(const FusionSystem& F, std::size_t i) {
    for (std::size_t j : F.images(i))
        if (F.normalizer_order(j) > F.normalizer_order(i)) return false;
    return true;
}

bool fully_centralized_index(const FusionSystem& F, std::size_t i) {
    for (std::size_t j : F.images(i))
        if (F.centralizer_order(j) > F.centralizer_order(i)) return false;
    return true;
}

void require_saturated(const FusionSystem& F, const char* what) {
    if (!is_saturated(F).verdict)
        fail(ErrorCode::not_saturated, std::string(what) + " requires a saturated fusion system");
}

}  // namespace fusion_detail

}  // namespace plocal
