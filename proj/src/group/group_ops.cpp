#include "plocal/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plocal {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
    std::vector<unsigned> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(unsigned(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(unsigned(n));
    return out;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
    std::uint64_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

std::optional<unsigned> prime_of_power(std::uint64_t n) {
    auto ps = prime_divisors(n);
    if (ps.size() != 1) return std::nullopt;
    return ps[0];
}

bool is_p_group(const Subgroup& P, unsigned p) { return p_part(P.order(), p) == P.order(); }

namespace {

void check_same_parent(const Subgroup& a, const Subgroup& b) {
    if (!a.parent().same_as(b.parent())) fail(ErrorCode::mismatched_parent, "subgroups of different groups");
}

}  // namespace

Subgroup centralizer(const Subgroup& ambient, const Subgroup& P) {
    check_same_parent(ambient, P);
    const FiniteGroup& G = ambient.parent();
    std::vector<Elem> out;
    auto gens = P.generators();
    for (Elem g : ambient.members()) {
        bool ok = true;
        for (Elem x : gens)
            if (G.mul(g, x) != G.mul(x, g)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return Subgroup::trusted(G, std::move(out));
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& P) { return centralizer(Subgroup::whole(G), P); }

Subgroup normalizer(const Subgroup& ambient, const Subgroup& P) {
    check_same_parent(ambient, P);
    const FiniteGroup& G = ambient.parent();
    std::vector<Elem> out;
    auto gens = P.generators();
    for (Elem g : ambient.members()) {
        bool ok = true;
        for (Elem x : gens)
            if (!P.contains(G.conj(g, x))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return Subgroup::trusted(G, std::move(out));
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& P) { return normalizer(Subgroup::whole(G), P); }

Subgroup conjugate(const Subgroup& P, Elem g) {
    const FiniteGroup& G = P.parent();
    std::vector<Elem> out;
    out.reserve(P.order());
    const Elem gi = G.inv(g);
    for (Elem x : P.members()) out.push_back(G.mul(G.mul(g, x), gi));
    return Subgroup::trusted(G, std::move(out));
}

bool is_normal(const Subgroup& ambient, const Subgroup& N) {
    check_same_parent(ambient, N);
    if (!ambient.contains(N)) return false;
    const FiniteGroup& G = ambient.parent();
    for (Elem g : ambient.generators())
        for (Elem n : N.generators())
            if (!N.contains(G.conj(g, n))) return false;
    return true;
}

Subgroup join(const Subgroup& A, const Subgroup& B) {
    check_same_parent(A, B);
    std::vector<Elem> g(A.generators().begin(), A.generators().end());
    g.insert(g.end(), B.generators().begin(), B.generators().end());
    return Subgroup::generated(A.parent(), g);
}

Subgroup intersection(const Subgroup& A, const Subgroup& B) {
    check_same_parent(A, B);
    std::vector<Elem> out;
    for (Elem x : A.members())
        if (B.contains(x)) out.push_back(x);
    return Subgroup::trusted(A.parent(), std::move(out));
}

Subgroup center(const Subgroup& P) { return centralizer(P, P); }

Subgroup derived_subgroup(const Subgroup& P) {
    const FiniteGroup& G = P.parent();
    std::set<Elem> comms;
    for (Elem a : P.members())
        for (Elem b : P.members()) comms.insert(G.commutator(a, b));
    std::vector<Elem> g(comms.begin(), comms.end());
    return Subgroup::generated(G, g);
}

std::vector<Elem> transporter(const Subgroup& ambient, const Subgroup& P, const Subgroup& Q) {
    check_same_parent(ambient, P);
    check_same_parent(ambient, Q);
    const FiniteGroup& G = ambient.parent();
    std::vector<Elem> out;
    if (P.order() > Q.order()) return out;
    auto gens = P.generators();
    for (Elem g : ambient.members()) {
        const Elem gi = G.inv(g);
        bool ok = true;
        for (Elem x : gens)
            if (!Q.contains(G.mul(G.mul(g, x), gi))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

std::vector<Elem> transporter(const FiniteGroup& G, const Subgroup& P, const Subgroup& Q) {
    return transporter(Subgroup::whole(G), P, Q);
}

std::vector<GroupMap> hom_g(const Subgroup& ambient, const Subgroup& P, const Subgroup& Q) {
    const FiniteGroup& G = ambient.parent();
    std::set<std::vector<Elem>> tables;
    for (Elem g : transporter(ambient, P, Q)) {
        std::vector<Elem> t;
        t.reserve(P.order());
        const Elem gi = G.inv(g);
        for (Elem x : P.members()) t.push_back(G.mul(G.mul(g, x), gi));
        tables.insert(std::move(t));
    }
    std::vector<GroupMap> out;
    for (const auto& t : tables) out.emplace_back(P, Q, t);
    return out;
}

std::vector<GroupMap> hom_g(const FiniteGroup& G, const Subgroup& P, const Subgroup& Q) {
    return hom_g(Subgroup::whole(G), P, Q);
}

Subgroup sylow_containing(const Subgroup& ambient, const Subgroup& P0, unsigned p) {
    check_same_parent(ambient, P0);
    if (!is_prime(p)) fail(ErrorCode::invalid_argument, "p must be prime");
    if (!is_p_group(P0, p)) fail(ErrorCode::not_a_p_group, "starting subgroup is not a p-group");
    if (!ambient.contains(P0)) fail(ErrorCode::not_a_subgroup, "starting subgroup not in ambient");
    const FiniteGroup& G = ambient.parent();
    const std::uint64_t target = p_part(ambient.order(), p);
    Subgroup P = P0;
    while (P.order() < target) {
        auto pg = P.generators();
        std::optional<Elem> found;
        for (Elem g : ambient.members()) {
            if (P.contains(g)) continue;
            const Elem gi = G.inv(g);
            bool norm = true;
            for (Elem x : pg)
                if (!P.contains(G.mul(G.mul(g, x), gi))) {
                    norm = false;
                    break;
                }
            if (!norm) continue;
            // gP must have p-power order in N(P)/P
            Elem y = g;
            for (std::uint64_t k = 1; k <= target; k *= p) {
                if (P.contains(y)) {
                    found = g;
                    break;
                }
                y = G.pow(y, p);
            }
            if (found) break;
        }
        if (!found) fail(ErrorCode::invalid_group, "Sylow growth failed (group is not finite-consistent)");
        std::vector<Elem> gens(pg.begin(), pg.end());
        gens.push_back(*found);
        P = Subgroup::generated(G, gens);
    }
    return P;
}

Subgroup sylow(const FiniteGroup& G, unsigned p) {
    Subgroup all = Subgroup::whole(G);
    return sylow_containing(all, Subgroup::trivial(G), p);
}

std::vector<Subgroup> all_subgroups(const Subgroup& K, const Bounds& bounds) {
    if (K.order() > bounds.max_lattice_order)
        fail(ErrorCode::bound_exceeded, "subgroup lattice requested for order " + std::to_string(K.order()) +
                                            " > " + std::to_string(bounds.max_lattice_order));
    const FiniteGroup& G = K.parent();
    std::map<std::vector<Elem>, Subgroup> seen;
    std::vector<Elem> cyc_reps;
    for (Elem x : K.members()) {
        Elem gx[1] = {x};
        Subgroup C = Subgroup::generated(G, gx);
        std::vector<Elem> key(C.members().begin(), C.members().end());
        if (!seen.count(key)) {
            seen.emplace(std::move(key), C);
            cyc_reps.push_back(x);
        }
    }
    std::vector<Subgroup> queue;
    for (auto& [k, s] : seen) queue.push_back(s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Subgroup H = queue[i];
        for (Elem c : cyc_reps) {
            if (H.contains(c)) continue;
            std::vector<Elem> gens(H.generators().begin(), H.generators().end());
            gens.push_back(c);
            Subgroup J = Subgroup::generated(G, gens);
            std::vector<Elem> key(J.members().begin(), J.members().end());
            if (seen.count(key)) continue;
            seen.emplace(std::move(key), J);
            queue.push_back(J);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<Subgroup> p_subgroups(const FiniteGroup& G, unsigned p, bool up_to_conjugacy, const Bounds& bounds) {
    Subgroup S = sylow(G, p);
    auto subs = all_subgroups(S, bounds);
    std::set<Subgroup> all;
    std::vector<Subgroup> reps;
    for (const auto& H : subs) {
        if (all.count(H)) continue;
        std::set<Subgroup> cls;
        for (Elem g = 0; g < G.order(); ++g) cls.insert(conjugate(H, g));
        reps.push_back(*cls.begin());
        all.insert(cls.begin(), cls.end());
    }
    std::vector<Subgroup> out = up_to_conjugacy ? reps : std::vector<Subgroup>(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup o_upper_p(const FiniteGroup& G, unsigned p) {
    Subgroup H = Subgroup::trivial(G);
    for (Elem x = 1; x < G.order(); ++x) {
        if (H.contains(x)) continue;
        if (G.element_order(x) % p == 0) continue;
        std::vector<Elem> gens(H.generators().begin(), H.generators().end());
        gens.push_back(x);
        H = Subgroup::generated(G, gens);
    }
    return H;
}

Subgroup o_lower_p(const Subgroup& ambient, unsigned p) {
    const FiniteGroup& G = ambient.parent();
    Subgroup S = sylow_containing(ambient, Subgroup::trivial(G), p);
    std::vector<Elem> core;
    for (Elem x : S.members()) {
        bool ok = true;
        for (Elem g : ambient.members())
            if (!S.contains(G.conj(g, x))) {
                ok = false;
                break;
            }
        if (ok) core.push_back(x);
    }
    return Subgroup::trusted(G, std::move(core));
}

bool has_normal_p_complement(const FiniteGroup& G, unsigned p) { return o_upper_p(G, p).order() % p != 0; }

Quotient quotient(const Subgroup& ambient, const Subgroup& N, const Bounds& bounds) {
    if (!is_normal(ambient, N)) fail(ErrorCode::not_normal, "quotient by a non-normal subgroup");
    const FiniteGroup& G = ambient.parent();
    constexpr Elem unset = ~Elem(0);
    Quotient q;
    q.projection.assign(G.order(), unset);
    for (Elem x : ambient.members()) {
        if (q.projection[x] != unset) continue;
        const Elem label = Elem(q.section.size());
        q.section.push_back(x);
        for (Elem n : N.members()) q.projection[G.mul(x, n)] = label;
    }
    const std::size_t m = q.section.size();
    auto proj = q.projection;
    auto sec = q.section;
    if (m <= bounds.max_table_order) {
        std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) table[a][b] = proj[G.mul(sec[a], sec[b])];
        q.group = FiniteGroup::from_table(table, G.label().empty() ? "" : G.label() + "/N", bounds);
    } else {
        FiniteGroup Gc = G;
        auto mul = [Gc, proj, sec](Elem a, Elem b) { return proj[Gc.mul(sec[a], sec[b])]; };
        auto inv = [Gc, proj, sec](Elem a) { return proj[Gc.inv(sec[a])]; };
        std::vector<Elem> gens;
        for (Elem g : ambient.generators()) gens.push_back(proj[g]);
        q.group = FiniteGroup::from_rule(m, mul, inv, gens, G.label() + "/N");
    }
    return q;
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N, const Bounds& bounds) {
    return quotient(Subgroup::whole(G), N, bounds);
}

Subgroup omega(const Subgroup& A, unsigned i) {
    const FiniteGroup& G = A.parent();
    auto gens = A.generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            if (G.mul(gens[a], gens[b]) != G.mul(gens[b], gens[a]))
                fail(ErrorCode::not_abelian, "omega requires an abelian subgroup");
    if (A.order() == 1) return A;
    auto p = prime_of_power(A.order());
    if (!p) fail(ErrorCode::not_a_p_group, "omega requires a p-group");
    std::uint64_t e = 1;
    for (unsigned k = 0; k < i; ++k) e *= *p;
    std::vector<Elem> out;
    for (Elem x : A.members())
        if (G.pow(x, e) == 0) out.push_back(x);
    return Subgroup::trusted(G, std::move(out));
}

Subgroup frattini(const Subgroup& P) {
    if (P.order() == 1) return P;
    auto p = prime_of_power(P.order());
    if (!p) return frattini_by_lattice(P);
    // For a p-group the Frattini subgroup is generated by commutators and p-th powers.
    const FiniteGroup& G = P.parent();
    std::set<Elem> gens;
    for (Elem a : P.members()) {
        gens.insert(G.pow(a, *p));
        for (Elem b : P.members()) gens.insert(G.commutator(a, b));
    }
    std::vector<Elem> g(gens.begin(), gens.end());
    return Subgroup::generated(G, g);
}

Subgroup frattini_by_lattice(const Subgroup& P, const Bounds& bounds) {
    auto subs = all_subgroups(P, bounds);
    Subgroup result = P;
    for (const auto& M : subs) {
        if (M.order() == P.order()) continue;
        bool maximal = true;
        for (const auto& L : subs)
            if (L.order() > M.order() && L.order() < P.order() && L.contains(M)) {
                maximal = false;
                break;
            }
        if (maximal) result = intersection(result, M);
    }
    return result;
}

namespace {

Matrix mat_mul(const Matrix& A, const Matrix& B, std::size_t d, unsigned q) {
    Matrix C(d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            std::uint64_t a = A[i * d + k];
            if (!a) continue;
            for (std::size_t j = 0; j < d; ++j) C[i * d + j] = std::uint32_t((C[i * d + j] + a * B[k * d + j]) % q);
        }
    return C;
}

bool mat_invertible(Matrix A, std::size_t d, unsigned q) {
    auto inv_mod = [q](std::uint64_t a) {
        std::uint64_t r = 1, b = a % q, e = q - 2;
        while (e) {
            if (e & 1) r = r * b % q;
            b = b * b % q;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = d;
        for (std::size_t r = c; r < d; ++r)
            if (A[r * d + c]) {
                piv = r;
                break;
            }
        if (piv == d) return false;
        for (std::size_t j = 0; j < d; ++j) std::swap(A[c * d + j], A[piv * d + j]);
        std::uint64_t iv = inv_mod(A[c * d + c]);
        for (std::size_t r = c + 1; r < d; ++r) {
            std::uint64_t f = A[r * d + c] * iv % q;
            if (!f) continue;
            for (std::size_t j = 0; j < d; ++j)
                A[r * d + j] = std::uint32_t((A[r * d + j] + (q - f) * A[c * d + j]) % q);
        }
    }
    return true;
}

}  // namespace

FiniteGroup semidirect(unsigned q, std::size_t dim, const FiniteGroup& H, std::span<const Elem> gens,
                       const std::vector<Matrix>& action, std::string label, const Bounds& bounds) {
    if (!is_prime(q)) fail(ErrorCode::invalid_argument, "module field order must be prime");
    if (action.size() != gens.size()) fail(ErrorCode::invalid_argument, "need one matrix per generator");
    for (std::size_t k = 0; k < action.size(); ++k) {
        if (action[k].size() != dim * dim) fail(ErrorCode::invalid_argument, "action matrix has wrong size");
        for (auto v : action[k])
            if (v >= q) fail(ErrorCode::invalid_argument, "matrix entry out of range");
        if (!mat_invertible(action[k], dim, q))
            fail(ErrorCode::non_automorphism, "generator acts by a singular matrix");
    }
    Matrix id(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
    std::vector<Matrix> mats(H.order());
    std::vector<bool> known(H.order(), false);
    mats[0] = id;
    known[0] = true;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Elem x = queue[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Elem y = H.mul(x, gens[k]);
            Matrix m = mat_mul(mats[x], action[k], dim, q);
            if (!known[y]) {
                known[y] = true;
                mats[y] = std::move(m);
                queue.push_back(y);
            } else if (mats[y] != m) {
                fail(ErrorCode::non_automorphism, "action matrices do not define a homomorphism");
            }
        }
    }
    if (queue.size() != H.order()) fail(ErrorCode::invalid_argument, "action generators do not generate H");
    SemidirectInfo info;
    info.q = q;
    info.dim = dim;
    info.acting = std::make_shared<const FiniteGroup>(H);
    info.matrices = std::move(mats);
    return FiniteGroup::from_semidirect(std::move(info), std::move(label), bounds);
}

FiniteGroup semidirect(unsigned q, std::size_t dim, const FiniteGroup& H, const std::vector<Matrix>& action,
                       std::string label, const Bounds& bounds) {
    return semidirect(q, dim, H, H.generators(), action, std::move(label), bounds);
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, std::string label, const Bounds& bounds) {
    const std::size_t a = A.order(), b = B.order();
    if (a * b > bounds.max_group_order) fail(ErrorCode::bound_exceeded, "direct product too large");
    std::vector<Elem> gens;
    for (Elem g : A.generators()) gens.push_back(g);
    for (Elem g : B.generators()) gens.push_back(Elem(a * g));
    if (a * b <= bounds.max_table_order) {
        std::vector<std::vector<Elem>> t(a * b, std::vector<Elem>(a * b));
        for (std::size_t x = 0; x < a * b; ++x)
            for (std::size_t y = 0; y < a * b; ++y)
                t[x][y] = Elem(A.mul(Elem(x % a), Elem(y % a)) + a * B.mul(Elem(x / a), Elem(y / a)));
        return FiniteGroup::from_table(t, std::move(label), bounds);
    }
    auto mul = [A, B, a](Elem x, Elem y) {
        return Elem(A.mul(Elem(x % a), Elem(y % a)) + a * B.mul(Elem(x / a), Elem(y / a)));
    };
    auto inv = [A, B, a](Elem x) { return Elem(A.inv(Elem(x % a)) + a * B.inv(Elem(x / a))); };
    return FiniteGroup::from_rule(a * b, mul, inv, gens, std::move(label));
}

FiniteGroup as_group(const Subgroup& S, std::string label, const Bounds& bounds) {
    const FiniteGroup& G = S.parent();
    const std::size_t n = S.order();
    std::vector<Elem> gens;
    for (Elem g : S.generators()) gens.push_back(Elem(S.position(g)));
    if (n <= bounds.max_table_order) {
        std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
        auto m = S.members();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[i][j] = Elem(S.position(G.mul(m[i], m[j])));
        Bounds b = bounds;
        b.assoc_full_check_order = 0;  // inherited from the parent group
        return FiniteGroup::from_table(t, std::move(label), b);
    }
    auto mul = [S](Elem a, Elem b) {
        return Elem(S.position(S.parent().mul(S.members()[a], S.members()[b])));
    };
    auto inv = [S](Elem a) { return Elem(S.position(S.parent().inv(S.members()[a]))); };
    return FiniteGroup::from_rule(n, mul, inv, gens, std::move(label));
}

Subgroup lift_subgroup(const Subgroup& S, const Subgroup& inner) {
    std::vector<Elem> out;
    out.reserve(inner.order());
    for (Elem i : inner.members()) out.push_back(S.members()[i]);
    return Subgroup::trusted(S.parent(), std::move(out));
}

Subgroup lower_subgroup(const FiniteGroup& universe, const Subgroup& S, const Subgroup& sub) {
    std::vector<Elem> out;
    out.reserve(sub.order());
    for (Elem x : sub.members()) out.push_back(Elem(S.position(x)));
    return Subgroup::trusted(universe, std::move(out));
}

namespace {

// Generators chosen greedily among elements of largest order.
std::vector<Elem> iso_generators(const FiniteGroup& G) {
    std::vector<Elem> elems(G.order());
    std::iota(elems.begin(), elems.end(), Elem(0));
    std::vector<std::uint64_t> ord(G.order());
    for (Elem x : elems) ord[x] = G.element_order(x);
    std::stable_sort(elems.begin(), elems.end(), [&](Elem a, Elem b) { return ord[a] > ord[b]; });
    std::vector<Elem> gens;
    Subgroup H = Subgroup::trivial(G);
    for (Elem x : elems) {
        if (H.contains(x)) continue;
        gens.push_back(x);
        H = Subgroup::generated(G, gens);
        if (H.order() == G.order()) break;
    }
    return gens;
}

}  // namespace

void for_each_isomorphism(const FiniteGroup& G1, const FiniteGroup& G2,
                          const std::function<bool(const GroupMap&)>& visit) {
    if (G1.order() != G2.order()) return;
    const Subgroup W1 = Subgroup::whole(G1), W2 = Subgroup::whole(G2);
    auto gens = iso_generators(G1);
    std::vector<std::uint64_t> ord2(G2.order());
    for (Elem y = 0; y < G2.order(); ++y) ord2[y] = G2.element_order(y);
    std::vector<std::uint64_t> gord;
    for (Elem g : gens) gord.push_back(G1.element_order(g));
    std::vector<Subgroup> prefix;  // <g_0..g_k> in G1
    for (std::size_t k = 0; k < gens.size(); ++k)
        prefix.push_back(Subgroup::generated(G1, std::span<const Elem>(gens.data(), k + 1)));
    std::vector<Elem> images;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (stop) return;
        if (k == gens.size()) {
            GroupMap m = GroupMap::from_generator_images(W1, W2, gens, images);
            if (m.injective() && !visit(m)) stop = true;
            return;
        }
        for (Elem y = 0; y < G2.order() && !stop; ++y) {
            if (ord2[y] != gord[k]) continue;
            images.push_back(y);
            Subgroup imgs = Subgroup::generated(G2, images);
            bool ok = imgs.order() == prefix[k].order();
            if (ok) {
                try {
                    GroupMap::from_generator_images(prefix[k], imgs, std::span<const Elem>(gens.data(), k + 1),
                                                    images);
                } catch (const Error&) {
                    ok = false;
                }
            }
            if (ok) rec(k + 1);
            images.pop_back();
        }
    };
    rec(0);
}

std::optional<GroupMap> find_group_isomorphism(const FiniteGroup& G1, const FiniteGroup& G2) {
    std::optional<GroupMap> out;
    for_each_isomorphism(G1, G2, [&](const GroupMap& m) {
        out = m;
        return false;
    });
    return out;
}

unsigned p_rank(const FiniteGroup& G, unsigned r, const Bounds& bounds) {
    if (G.order() % r != 0) return 0;
    Subgroup S = sylow(G, r);
    unsigned best = 0;
    for (const auto& H : all_subgroups(S, bounds)) {
        bool elem_ab = true;
        for (Elem x : H.generators())
            if (G.pow(x, r) != 0) elem_ab = false;
        auto g = H.generators();
        for (std::size_t i = 0; i < g.size() && elem_ab; ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (G.mul(g[i], g[j]) != G.mul(g[j], g[i])) elem_ab = false;
        if (!elem_ab) continue;
        unsigned rk = 0;
        for (std::size_t o = H.order(); o > 1; o /= r) ++rk;
        best = std::max(best, rk);
    }
    return best;
}

std::uint64_t exponent(const FiniteGroup& G) {
    std::uint64_t e = 1;
    for (Elem x = 0; x < G.order(); ++x) e = std::lcm(e, G.element_order(x));
    return e;
}

}  // namespace plocal
