#include <set>

#include "internal.hpp"

namespace plocal {

using namespace fusion_detail;

namespace {

bool strongly_closed_index(const FusionSystem& F, std::size_t i) {
    const Subgroup& P = F.subgroups()[i];
    for (Elem x : P.members()) {
        const Elem gen[] = {x};
        const Subgroup X = Subgroup::generated(P.parent(), gen);
        const std::size_t k = F.index_of(X);
        const std::size_t pos = X.position(x);
        for (const auto& t : F.tables(k))
            if (!P.contains(t[pos])) return false;
    }
    return true;
}

bool is_inner_unchecked(const FusionSystem& F) {
    const Subgroup& S = F.sylow();
    const FiniteGroup& U = S.parent();
    for (std::size_t i = 0; i < F.subgroups().size(); ++i) {
        const Subgroup& P = F.subgroups()[i];
        const auto& tabs = F.tables(i);
        if (tabs.size() != S.order() / F.centralizer_order(i)) return false;
        for (Elem g : S.members()) {
            std::vector<Elem> t;
            t.reserve(P.order());
            for (Elem x : P.members()) t.push_back(U.conj(g, x));
            if (!std::binary_search(tabs.begin(), tabs.end(), t)) return false;
        }
    }
    return true;
}

}  // namespace

namespace fusion_detail {

bool quasicentric_unchecked(const FusionSystem& F, std::size_t i) {
    for (std::size_t q : F.class_members(F.class_of(i))) {
        if (!fully_centralized_index(F, q)) continue;
        if (!is_inner(centralizer_system(F, F.subgroups()[q]))) return false;
    }
    return true;
}

}  // namespace fusion_detail

bool is_centric(const FusionSystem& F, const Subgroup& P) { return centric_index(F, F.index_of(P)); }
bool is_radical(const FusionSystem& F, const Subgroup& P) { return radical_index(F, F.index_of(P)); }

bool is_weakly_closed(const FusionSystem& F, const Subgroup& P) {
    const std::size_t i = F.index_of(P);
    for (std::size_t j : F.images(i))
        if (j != i) return false;
    return true;
}

bool is_strongly_closed(const FusionSystem& F, const Subgroup& P) { return strongly_closed_index(F, F.index_of(P)); }

std::size_t out_order_by_index(const FusionSystem& F, const Subgroup& P) {
    const std::size_t aut = F.aut_order(P);
    const std::size_t inn = inn_order(P);
    if (aut % inn != 0) fail(ErrorCode::invalid_argument, "Inn(P) is not contained in Aut_F(P)");
    return aut / inn;
}

std::size_t out_order_by_orbits(const FusionSystem& F, const Subgroup& P) {
    const std::size_t i = F.index_of(P);
    auto auts = aut_tables(F, i);
    const FiniteGroup& U = P.parent();
    std::set<std::vector<Elem>> inn;
    for (Elem g : P.members()) {
        std::vector<Elem> t;
        for (Elem x : P.members()) t.push_back(U.conj(g, x));
        inn.insert(std::move(t));
    }
    std::set<std::vector<Elem>> seen;
    std::size_t orbits = 0;
    for (const auto& a : auts) {
        if (seen.count(a)) continue;
        ++orbits;
        for (const auto& c : inn) {
            std::vector<Elem> ca;
            ca.reserve(a.size());
            for (Elem y : a) ca.push_back(apply(P, c, y));
            if (!std::binary_search(auts.begin(), auts.end(), ca))
                fail(ErrorCode::invalid_argument, "Inn(P) is not contained in Aut_F(P)");
            seen.insert(std::move(ca));
        }
    }
    return orbits;
}

FusionSystem centralizer_system(const FusionSystem& F, const Subgroup& Q) {
    F.index_of(Q);  // Q must be a subgroup of S
    const Subgroup C = centralizer(F.sylow(), Q);
    auto subs = all_subgroups(C, F.bounds());
    std::vector<std::vector<std::vector<Elem>>> homs(subs.size());
    for (std::size_t r = 0; r < subs.size(); ++r) {
        const Subgroup& R = subs[r];
        const Subgroup RQ = join(R, Q);
        const std::size_t k = F.index_of(RQ);
        std::vector<std::size_t> qpos, rpos;
        for (Elem x : Q.members()) qpos.push_back(RQ.position(x));
        for (Elem x : R.members()) rpos.push_back(RQ.position(x));
        for (const auto& t : F.tables(k)) {
            bool fixes = true;
            auto qm = Q.members();
            for (std::size_t a = 0; a < qm.size() && fixes; ++a) fixes = t[qpos[a]] == qm[a];
            if (!fixes) continue;
            std::vector<Elem> restricted;
            restricted.reserve(rpos.size());
            for (std::size_t pos : rpos) restricted.push_back(t[pos]);
            homs[r].push_back(std::move(restricted));
        }
    }
    return FusionSystem::from_tables(C, F.prime(), Provenance::centralizer, "C_F(Q), |Q| = " + std::to_string(Q.order()),
                                     std::move(homs), F.bounds());
}

bool is_quasicentric(const FusionSystem& F, const Subgroup& P) {
    require_saturated(F, "quasicentricity");
    return quasicentric_unchecked(F, F.index_of(P));
}

StrongQuasicentricity is_strongly_quasicentric(const FusionSystem& F, const Subgroup& P) {
    require_saturated(F, "strong quasicentricity");
    StrongQuasicentricity out;
    const std::size_t pi = F.index_of(P);
    for (std::size_t r = 0; r <= pi; ++r) {
        const Subgroup& R = F.subgroups()[r];
        if (!P.contains(R)) continue;
        if (quasicentric_unchecked(F, r)) {
            out.value = true;
            out.witness = R;
            break;
        }
    }
    return out;
}

std::vector<SubgroupClass> classify(const FusionSystem& F) {
    const std::size_t n = F.subgroups().size();
    const bool saturated = is_saturated(F).verdict;
    std::vector<SubgroupClass> out(n);
    std::vector<bool> self(n);
    for (std::size_t i = 0; i < n; ++i) self[i] = centric_in_s(F, i);
    // class-level bits are computed once per class
    for (std::size_t c = 0; c < F.class_count(); ++c) {
        const auto members = F.class_members(c);
        bool centric = true;
        for (std::size_t m : members) centric = centric && self[m];
        const std::size_t rep = F.class_representative(c);
        const bool radical = radical_index(F, rep);
        const bool qc = saturated && quasicentric_unchecked(F, rep);
        for (std::size_t m : members) {
            out[m].centric = centric;
            out[m].radical = radical;
            out[m].quasicentric = qc;
            out[m].weakly_closed = members.size() == 1;
            out[m].strongly_closed = strongly_closed_index(F, m);
        }
    }
    return out;
}

bool inner_criterion(const FusionSystem& F) {
    require_saturated(F, "the inner criterion");
    for (std::size_t i = 0; i < F.subgroups().size(); ++i) {
        if (!fully_normalized_index(F, i)) continue;
        const std::size_t a = aut_tables(F, i).size();
        if (a > 1 && prime_of_power(a) != F.prime()) return false;
    }
    return true;
}

bool is_inner(const FusionSystem& F) { return is_inner_unchecked(F); }

}  // namespace plocal
