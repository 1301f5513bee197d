#include <set>

#include "internal.hpp"

namespace plocal {

using namespace fusion_detail;

namespace {

bool fully_automized_index(const FusionSystem& F, std::size_t i) {
    const std::size_t aut = aut_tables(F, i).size();
    const std::size_t aut_s = F.normalizer_order(i) / F.centralizer_order(i);
    return p_part(aut, F.prime()) == aut_s;
}

std::optional<ReceptivityFailure> receptivity_failure_index(const FusionSystem& F, std::size_t pi) {
    const auto& subs = F.subgroups();
    const Subgroup& P = subs[pi];
    const FiniteGroup& U = P.parent();
    const auto aut_s = aut_s_tables(F, pi);
    for (std::size_t q : F.class_members(F.class_of(pi))) {
        const Subgroup& Q = subs[q];
        const Subgroup NQ = normalizer(F.sylow(), Q);
        const auto& tabs = F.tables(q);
        for (std::size_t k = 0; k < tabs.size(); ++k) {
            if (F.images(q)[k] != pi) continue;
            const auto& phi = tabs[k];
            // phi^-1 : P -> Q aligned with P.members()
            std::vector<Elem> phi_inv(P.order());
            auto qm = Q.members();
            for (std::size_t a = 0; a < qm.size(); ++a) phi_inv[P.position(phi[a])] = qm[a];
            std::vector<Elem> n_members;
            for (Elem g : NQ.members()) {
                std::vector<Elem> u;
                u.reserve(P.order());
                for (std::size_t b = 0; b < phi_inv.size(); ++b) u.push_back(apply(Q, phi, U.conj(g, phi_inv[b])));
                if (std::binary_search(aut_s.begin(), aut_s.end(), u)) n_members.push_back(g);
            }
            auto n = F.find_index(n_members);
            if (!n) fail(ErrorCode::invalid_argument, "N_phi is not a subgroup; the morphism data is inconsistent");
            const Subgroup& N = subs[*n];
            std::vector<std::size_t> qpos;
            for (Elem x : qm) qpos.push_back(N.position(x));
            bool extends = false;
            for (const auto& psi : F.tables(*n)) {
                bool same = true;
                for (std::size_t a = 0; a < qm.size() && same; ++a) same = psi[qpos[a]] == phi[a];
                if (same) {
                    extends = true;
                    break;
                }
            }
            if (!extends) return ReceptivityFailure{GroupMap(Q, P, phi), N};
        }
    }
    return std::nullopt;
}

// A p-element of Aut_F(P) outside Aut_S(P); exists whenever Aut_S(P) is not Sylow.
std::optional<GroupMap> non_sylow_witness(const FusionSystem& F, std::size_t i) {
    const Subgroup& P = F.subgroups()[i];
    const auto aut_s = aut_s_tables(F, i);
    const auto auts = aut_tables(F, i);
    std::optional<GroupMap> fallback;
    for (const auto& t : auts) {
        if (std::binary_search(aut_s.begin(), aut_s.end(), t)) continue;
        if (!fallback) fallback = GroupMap(P, P, t);
        // order of t
        std::vector<Elem> cur = t;
        std::uint64_t ord = 1;
        const std::vector<Elem> id(P.members().begin(), P.members().end());
        while (cur != id) {
            std::vector<Elem> next;
            next.reserve(cur.size());
            for (Elem y : cur) next.push_back(apply(P, t, y));
            cur = std::move(next);
            ++ord;
        }
        if (prime_of_power(ord) == F.prime()) return GroupMap(P, P, t);
    }
    return fallback;
}

}  // namespace

std::optional<ReceptivityFailure> receptivity_failure(const FusionSystem& F, const Subgroup& P) {
    return receptivity_failure_index(F, F.index_of(P));
}

SubgroupStatus status(const FusionSystem& F, const Subgroup& P) {
    const std::size_t i = F.index_of(P);
    SubgroupStatus s;
    s.fully_normalized = fully_normalized_index(F, i);
    s.fully_centralized = fully_centralized_index(F, i);
    s.fully_automized = fully_automized_index(F, i);
    s.receptive = !receptivity_failure_index(F, i).has_value();
    return s;
}

SaturationReport is_saturated(const FusionSystem& F) {
    SaturationReport report;
    const auto& subs = F.subgroups();
    std::vector<std::size_t> order(F.class_count());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return F.class_representative(a) < F.class_representative(b); });
    for (std::size_t c : order) {
        const std::size_t rep = F.class_representative(c);
        const auto members = F.class_members(c);
        ClassRecord rec;
        rec.representative = subs[rep];
        rec.class_size = members.size();
        rec.aut_order = aut_tables(F, rep).size();
        rec.out_order = rec.aut_order / inn_order(subs[rep]);
        rec.status = status(F, subs[rep]);
        std::size_t max_c = 0;
        for (std::size_t m : members) max_c = std::max(max_c, F.centralizer_order(m));
        for (std::size_t m : members)
            if (F.centralizer_order(m) == max_c) {
                rec.fully_centralized_witness = subs[m];
                break;
            }
        auto record_failure = [&](const char* axiom, std::size_t m, std::optional<GroupMap> witness) {
            if (!rec.ok) return;
            rec.ok = false;
            rec.failing_axiom = axiom;
            rec.failing_member = subs[m];
            rec.counterexample = std::move(witness);
        };
        for (std::size_t m : members) {
            if (fully_normalized_index(F, m)) {
                if (!fully_automized_index(F, m)) record_failure("sylow:fully_automized", m, non_sylow_witness(F, m));
                if (F.centralizer_order(m) != max_c) {
                    std::optional<GroupMap> w;
                    const auto& im = F.images(m);
                    for (std::size_t k = 0; k < im.size(); ++k)
                        if (F.centralizer_order(im[k]) == max_c) {
                            w = GroupMap(subs[m], subs[im[k]], F.tables(m)[k]);
                            break;
                        }
                    record_failure("sylow:fully_centralized", m, w);
                }
            }
            if (F.centralizer_order(m) == max_c) {
                if (auto f = receptivity_failure_index(F, m)) record_failure("extension:receptive", m, f->phi);
            }
        }
        if (!rec.ok) report.verdict = false;
        report.classes.push_back(std::move(rec));
    }
    return report;
}

}  // namespace plocal
