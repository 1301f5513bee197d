#include "internal.hpp"

namespace plocal {

using namespace fusion_detail;

bool is_fusion_preserving(const GroupMap& alpha, const FusionSystem& F1, const FusionSystem& F2) {
    const Subgroup& S1 = F1.sylow();
    const Subgroup& S2 = F2.sylow();
    if (!(alpha.domain() == S1) || S1.order() != S2.order())
        fail(ErrorCode::invalid_argument, "alpha must be defined on the Sylow subgroup of the first system");
    for (Elem y : alpha.table())
        if (!S2.contains(y)) fail(ErrorCode::invalid_argument, "alpha does not map into the second Sylow subgroup");
    if (!alpha.injective()) fail(ErrorCode::non_injective, "alpha is not injective");
    if (F1.subgroups().size() != F2.subgroups().size()) return false;
    for (std::size_t i = 0; i < F1.subgroups().size(); ++i) {
        const Subgroup& P = F1.subgroups()[i];
        std::vector<Elem> image;
        for (Elem x : P.members()) image.push_back(alpha(x));
        auto j = F2.find_index(sorted_copy(image));
        if (!j) return false;
        const Subgroup& P2 = F2.subgroups()[*j];
        const auto& tabs1 = F1.tables(i);
        const auto& tabs2 = F2.tables(*j);
        if (tabs1.size() != tabs2.size()) return false;
        for (const auto& t : tabs1) {
            // alpha o phi o alpha^-1 on alpha(P)
            std::vector<Elem> u(P2.order());
            auto pm = P.members();
            for (std::size_t a = 0; a < pm.size(); ++a) u[P2.position(image[a])] = alpha(t[a]);
            if (!std::binary_search(tabs2.begin(), tabs2.end(), u)) return false;
        }
    }
    return true;
}

std::optional<GroupMap> find_isomorphism(const FusionSystem& F1, const FusionSystem& F2) {
    const Subgroup& S1 = F1.sylow();
    const Subgroup& S2 = F2.sylow();
    const std::size_t limit = F1.bounds().max_iso_search_order;
    if (S1.order() > limit)
        fail(ErrorCode::bound_exceeded, "isomorphism search needs |S| <= " + std::to_string(limit) + " (max_iso_search_order)");
    if (S1.order() != S2.order() || F1.prime() != F2.prime()) return std::nullopt;
    if (F1.subgroups().size() != F2.subgroups().size() || F1.morphism_count() != F2.morphism_count() ||
        F1.class_count() != F2.class_count())
        return std::nullopt;
    const FiniteGroup A1 = as_group(S1);
    const FiniteGroup A2 = as_group(S2);
    std::optional<GroupMap> result;
    for_each_isomorphism(A1, A2, [&](const GroupMap& m) {
        std::vector<Elem> t(S1.order());
        for (std::size_t a = 0; a < t.size(); ++a) t[a] = S2.members()[m.table()[a]];
        GroupMap alpha(S1, S2, std::move(t));
        if (is_fusion_preserving(alpha, F1, F2)) {
            result = std::move(alpha);
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace plocal
