#include <algorithm>
#include <map>
#include <ostream>

#include "plocal/linking.hpp"

namespace plocal {

Nerve export_nerve(const SmallCategory& C, std::size_t max_dim, const Bounds& bounds) {
    Nerve N;
    N.max_dim = max_dim;
    const std::size_t m = C.morphism_count();
    std::vector<std::vector<std::size_t>> out(C.objects);  // morphisms by source
    for (std::size_t f = 0; f < m; ++f) out[C.source[f]].push_back(f);
    std::vector<bool> is_id(m, false);
    for (std::size_t id : C.identity) is_id[id] = true;

    std::size_t total = C.objects;
    N.simplices.emplace_back();
    for (std::size_t x = 0; x < C.objects; ++x) N.simplices[0].push_back({x});
    for (std::size_t k = 1; k <= max_dim; ++k) {
        std::vector<std::vector<std::size_t>> next;
        if (k == 1) {
            for (std::size_t f = 0; f < m; ++f) next.push_back({f});
        } else {
            for (const auto& s : N.simplices[k - 1])
                for (std::size_t f : out[C.target[s.back()]]) {
                    if (++total > bounds.max_nerve_simplices)
                        fail(ErrorCode::bound_exceeded, "nerve exceeds max_nerve_simplices");
                    auto t = s;
                    t.push_back(f);
                    next.push_back(std::move(t));
                }
        }
        if (k == 1 && (total += m) > bounds.max_nerve_simplices)
            fail(ErrorCode::bound_exceeded, "nerve exceeds max_nerve_simplices");
        N.simplices.push_back(std::move(next));
    }

    // Simplices of each dimension are generated in lexicographic order.
    auto index = [&](std::size_t k, const std::vector<std::size_t>& s) -> std::size_t {
        const auto& v = N.simplices[k];
        return std::lower_bound(v.begin(), v.end(), s) - v.begin();
    };
    N.faces.resize(max_dim + 1);
    N.degeneracies.resize(max_dim + 1);
    N.nondegenerate.resize(max_dim + 1);
    for (std::size_t k = 0; k <= max_dim; ++k)
        for (const auto& s : N.simplices[k]) {
            std::vector<std::size_t> faces;
            if (k == 1) {
                faces = {C.target[s[0]], C.source[s[0]]};
            } else if (k > 1) {
                for (std::size_t i = 0; i <= k; ++i) {
                    std::vector<std::size_t> t;
                    if (i == 0) {
                        t.assign(s.begin() + 1, s.end());
                    } else if (i == k) {
                        t.assign(s.begin(), s.end() - 1);
                    } else {
                        t.assign(s.begin(), s.begin() + (i - 1));
                        t.push_back(C.compose(s[i], s[i - 1]));
                        t.insert(t.end(), s.begin() + i + 1, s.end());
                    }
                    faces.push_back(index(k - 1, t));
                }
            }
            N.faces[k].push_back(std::move(faces));

            bool nd = true;
            if (k > 0)
                for (std::size_t f : s) nd = nd && !is_id[f];
            N.nondegenerate[k] += nd;

            if (k < max_dim) {
                std::vector<std::size_t> degs;
                for (std::size_t i = 0; i <= k; ++i) {
                    std::vector<std::size_t> t;
                    if (k == 0) {
                        t = {C.identity[s[0]]};
                    } else {
                        // identity at vertex i
                        const std::size_t obj = i == 0 ? C.source[s[0]] : C.target[s[i - 1]];
                        t = s;
                        t.insert(t.begin() + i, C.identity[obj]);
                    }
                    degs.push_back(index(k + 1, t));
                }
                N.degeneracies[k].push_back(std::move(degs));
            }
        }
    return N;
}

void write_nerve(std::ostream& out, const Nerve& N, const std::string& name) {
    out << "# nerve " << name << "\n"
        << "# A 0-simplex is an object. A k-simplex (k >= 1) is a chain f_1 ... f_k of morphism\n"
        << "# numbers with target(f_i) = source(f_{i+1}); simplices of each dimension are listed\n"
        << "# in lexicographic order and numbered from 0.\n"
        << "# faces: d_0 drops f_1, d_k drops f_k, d_i composes f_{i+1} o f_i; for k = 1, d_0 = target\n"
        << "# and d_1 = source. degeneracies: s_i inserts the identity at vertex i.\n"
        << "# line format: <dim> <index> : <chain> | faces <d_0 ... d_k> | degeneracies <s_0 ... s_k>\n"
        << "max_dim " << N.max_dim << "\n";
    for (std::size_t k = 0; k < N.simplices.size(); ++k)
        out << "count " << k << " " << N.simplices[k].size() << " nondegenerate " << N.nondegenerate[k] << "\n";
    for (std::size_t k = 0; k < N.simplices.size(); ++k)
        for (std::size_t s = 0; s < N.simplices[k].size(); ++s) {
            out << k << " " << s << " :";
            for (std::size_t f : N.simplices[k][s]) out << " " << f;
            out << " | faces";
            for (std::size_t f : N.faces[k][s]) out << " " << f;
            out << " | degeneracies";
            if (k < N.degeneracies.size() && s < N.degeneracies[k].size())
                for (std::size_t f : N.degeneracies[k][s]) out << " " << f;
            out << "\n";
        }
}

}  // namespace plocal
