#include <deque>

#include "internal.hpp"

namespace plocal {

using namespace fusion_detail;

std::vector<AlperinFactor> alperin_decompose(const FusionSystem& F, const GroupMap& phi) {
    require_saturated(F, "Alperin decomposition");
    if (!F.contains(phi)) {
        // allow any codomain inside S
        GroupMap to_s(phi.domain(), F.sylow(), phi.table());
        if (!F.contains(to_s)) fail(ErrorCode::invalid_argument, "morphism is not in the fusion system");
    }
    const auto& subs = F.subgroups();
    const Subgroup& P = phi.domain();
    const std::size_t n = subs.size();

    // fully normalized centric radical subgroups, and S; larger first
    std::vector<std::size_t> cand;
    for (std::size_t q = 0; q < n; ++q) {
        if (q + 1 == n || (fully_normalized_index(F, q) && centric_index(F, q) && radical_index(F, q)))
            cand.push_back(q);
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [&](std::size_t a, std::size_t b) { return subs[a].order() > subs[b].order(); });
    std::vector<std::vector<std::vector<Elem>>> auts(n);
    for (std::size_t q : cand) auts[q] = aut_tables(F, q);

    struct Node {
        std::vector<Elem> table;
        std::size_t parent;
        std::size_t q;
        std::size_t alpha;
        std::size_t source;
        std::size_t depth;
    };
    const std::vector<Elem> start(P.members().begin(), P.members().end());
    if (phi.table() == start) return {};
    std::vector<Node> nodes{{start, 0, 0, 0, 0, 0}};
    std::map<std::vector<Elem>, std::size_t> seen{{start, 0}};
    std::deque<std::size_t> queue{0};
    const std::size_t max_depth = F.bounds().max_alperin_depth;
    std::optional<std::size_t> found;
    while (!queue.empty() && !found) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= max_depth) continue;
        const std::vector<Elem> table = nodes[cur].table;
        const std::size_t r = *F.find_index(sorted_copy(table));
        for (std::size_t q : cand) {
            if (!subs[q].contains(subs[r])) continue;
            for (std::size_t a = 0; a < auts[q].size(); ++a) {
                std::vector<Elem> next;
                next.reserve(table.size());
                for (Elem y : table) next.push_back(apply(subs[q], auts[q][a], y));
                if (seen.count(next)) continue;
                seen.emplace(next, nodes.size());
                nodes.push_back({next, cur, q, a, r, nodes[cur].depth + 1});
                if (next == phi.table()) {
                    found = nodes.size() - 1;
                    break;
                }
                queue.push_back(nodes.size() - 1);
            }
            if (found) break;
        }
    }
    if (!found)
        fail(ErrorCode::decomposition_not_found,
             "no decomposition within depth " + std::to_string(max_depth) + " for a morphism on a subgroup of order " +
                 std::to_string(P.order()) + " (" + std::to_string(nodes.size()) + " states explored, " +
                 std::to_string(cand.size()) + " candidate subgroups)");
    std::vector<AlperinFactor> out;
    for (std::size_t k = *found; k != 0; k = nodes[k].parent) {
        const Node& nd = nodes[k];
        out.push_back({subs[nd.q], GroupMap(subs[nd.q], subs[nd.q], auts[nd.q][nd.alpha]), subs[nd.source]});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

GroupMap alperin_compose(const FusionSystem& F, const Subgroup& P, const std::vector<AlperinFactor>& factors) {
    std::vector<Elem> t(P.members().begin(), P.members().end());
    for (const auto& f : factors) {
        for (Elem& y : t) {
            if (!f.source.contains(y)) fail(ErrorCode::invalid_argument, "factor source does not contain the image");
            y = f.alpha(y);
        }
    }
    return GroupMap(P, F.sylow(), std::move(t));
}

}  // namespace plocal
