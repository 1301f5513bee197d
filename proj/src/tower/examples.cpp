#include "plocal/tower_examples.hpp"

#include "plocal/catalog.hpp"
#include "plocal/galois.hpp"

namespace plocal::towers {

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<Elem> table_from_generators(const FiniteGroup& A, const FiniteGroup& B, std::span<const Elem> gens,
                                        std::span<const Elem> images) {
    return GroupMap::from_generator_images(Subgroup::whole(A), Subgroup::whole(B), gens, images).table();
}

}  // namespace

TowerGroup cyclic_p(unsigned p, std::size_t n) {
    if (!is_prime(p) || n == 0) fail(ErrorCode::invalid_argument, "cyclic_p needs a prime and n >= 1");
    std::vector<FiniteGroup> levels;
    std::vector<std::vector<Elem>> emb;
    for (std::size_t i = 1; i <= n; ++i) levels.push_back(catalog::cyclic(ipow(p, i)));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Elem> t(levels[i].order());
        for (Elem x = 0; x < t.size(); ++x) t[x] = Elem(x * p);
        emb.push_back(std::move(t));
    }
    return TowerGroup(std::move(levels), std::move(emb), p, TowerKind::p_tower,
                      "Z/" + std::to_string(p) + "^inf");
}

TowerGroup dihedral_type(unsigned p, std::size_t n) {
    if (!is_prime(p) || n == 0) fail(ErrorCode::invalid_argument, "dihedral_type needs a prime and n >= 1");
    std::vector<FiniteGroup> levels;
    std::vector<std::vector<Elem>> emb;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t m = ipow(p, i);
        levels.push_back(catalog::metacyclic(m, m - 1, 2, "D" + std::to_string(2 * m)));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t m = ipow(p, i + 1), m2 = m * p;
        std::vector<Elem> t(2 * m);
        // a^x b^y = x + m y
        for (Elem e = 0; e < t.size(); ++e) t[e] = Elem((e % m) * p + m2 * (e / m));
        emb.push_back(std::move(t));
    }
    return TowerGroup(std::move(levels), std::move(emb), p, p == 2 ? TowerKind::p_tower : TowerKind::ambient,
                      "Z/" + std::to_string(p) + "^inf:C2");
}

TorusData dihedral_torus(const TowerGroup& G, const SubTower& S) {
    const FiniteGroup& U = G.top();
    std::vector<Elem> rot;
    for (Elem x = 0; x < U.order() / 2; ++x) rot.push_back(x);  // a^x for x < m
    return torus_from_top(G, S, intersection(Subgroup::trusted(U, rot), S.top_image(G.top_index())), 1);
}

TowerGroup symmetric(std::size_t from, std::size_t to, unsigned p) {
    if (from < 2 || to < from) fail(ErrorCode::invalid_argument, "symmetric tower needs 2 <= from <= to");
    std::vector<FiniteGroup> levels;
    std::vector<std::vector<Elem>> emb;
    for (std::size_t n = from; n <= to; ++n) levels.push_back(catalog::symmetric(n));
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        const FiniteGroup& A = levels[i];
        const FiniteGroup& B = levels[i + 1];
        std::vector<Elem> t(A.order());
        for (Elem x = 0; x < A.order(); ++x) {
            auto perm = A.permutation(x);
            std::vector<Point> img(perm.begin(), perm.end());
            img.push_back(Point(A.degree()));
            t[x] = *B.find_permutation(img);
        }
        emb.push_back(std::move(t));
    }
    return TowerGroup(std::move(levels), std::move(emb), p, TowerKind::ambient,
                      "S" + std::to_string(from) + "..S" + std::to_string(to));
}

TowerGroup pgl2_pair(unsigned p, unsigned k, unsigned tower_prime) {
    if (!is_prime(p) || k < 1) fail(ErrorCode::invalid_argument, "pgl2_pair needs a prime and k >= 1");
    const FiniteGroup A = catalog::pgl2(p, 1);
    const FiniteGroup B = catalog::pgl2(p, k);
    const GaloisField Fp(p, 1), Fq(p, k);
    const std::uint32_t g = Fp.primitive();  // a constant, so also an element of F_{p^k}
    auto perm = [](const GaloisField& F, int which, std::uint32_t g) {
        const std::uint32_t inf = F.size();
        std::vector<Point> img(F.size() + 1);
        for (std::uint32_t x = 0; x <= inf; ++x) {
            if (which == 0) img[x] = x == inf ? inf : F.add(x, 1);
            else if (which == 1) img[x] = x == inf ? inf : F.mul(x, g);
            else img[x] = x == inf ? 0 : (x == 0 ? inf : F.inv(x));
        }
        return img;
    };
    std::vector<Elem> gens, images;
    for (int w = 0; w < 3; ++w) {
        gens.push_back(*A.find_permutation(perm(Fp, w, g)));
        images.push_back(*B.find_permutation(perm(Fq, w, g)));
    }
    auto t = table_from_generators(A, B, gens, images);
    return TowerGroup({A, B}, {t}, tower_prime, TowerKind::ambient,
                      "PGL2(" + std::to_string(p) + ")<=PGL2(" + std::to_string(Fq.size()) + ")");
}

TowerGroup direct_sum(const std::vector<FiniteGroup>& factors, unsigned p) {
    if (factors.empty()) fail(ErrorCode::invalid_argument, "direct_sum needs at least one factor");
    std::vector<FiniteGroup> levels{factors.front()};
    std::vector<std::vector<Elem>> emb;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        levels.push_back(direct_product(levels.back(), factors[i]));
        std::vector<Elem> t(levels[i - 1].order());
        for (Elem x = 0; x < t.size(); ++x) t[x] = x;  // first factor in the low digits
        emb.push_back(std::move(t));
    }
    return TowerGroup(std::move(levels), std::move(emb), p, TowerKind::ambient, "sum");
}

TowerGroup build_fqh(const TowerGroup& H, unsigned q) {
    if (!is_prime(q)) fail(ErrorCode::invalid_argument, "q must be prime");
    std::vector<FiniteGroup> levels;
    for (std::size_t i = 0; i < H.size(); ++i) {
        const FiniteGroup& Hi = H.level(i);
        const std::size_t n = Hi.order();
        std::vector<Matrix> mats;
        for (Elem h : Hi.generators()) {
            Matrix M(n * n, 0);
            for (Elem x = 0; x < n; ++x) M[std::size_t(Hi.mul(h, x)) * n + x] = 1;
            mats.push_back(std::move(M));
        }
        levels.push_back(semidirect(q, n, Hi, Hi.generators(), mats,
                                    "F" + std::to_string(q) + "[" + Hi.label() + "]:" + Hi.label()));
    }
    std::vector<std::vector<Elem>> emb;
    for (std::size_t i = 0; i + 1 < H.size(); ++i) {
        const std::size_t n = H.level(i).order(), n2 = H.level(i + 1).order();
        const std::uint64_t mod = ipow(q, n), mod2 = ipow(q, n2);
        std::vector<std::uint64_t> place(n);
        for (Elem x = 0; x < n; ++x) place[x] = ipow(q, H.embedding(i)[x]);
        std::vector<Elem> t(levels[i].order());
        for (Elem e = 0; e < t.size(); ++e) {
            std::uint64_t v = e % mod, image = 0;
            for (Elem x = 0; x < n; ++x, v /= q) image += (v % q) * place[x];
            t[e] = Elem(image + mod2 * H.embedding(i)[e / mod]);
        }
        emb.push_back(std::move(t));
    }
    return TowerGroup(std::move(levels), std::move(emb), H.prime(), TowerKind::ambient,
                      "F" + std::to_string(q) + "[" + H.label() + "]");
}

namespace {

SubTower semidirect_part(const TowerGroup& G, bool module) {
    std::vector<Subgroup> v;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const FiniteGroup& Gi = G.level(i);
        const SemidirectInfo* info = Gi.semidirect_info();
        if (!info) fail(ErrorCode::invalid_argument, "level is not a semidirect product");
        std::vector<Elem> m;
        if (module)
            for (Elem e = 0; e < info->module_order; ++e) m.push_back(e);
        else
            for (Elem h = 0; h < info->acting->order(); ++h) m.push_back(Elem(h * info->module_order));
        v.push_back(Subgroup::trusted(Gi, std::move(m)));
    }
    return SubTower(G, std::move(v));
}

}  // namespace

SubTower fqh_module(const TowerGroup& G) { return semidirect_part(G, true); }
SubTower fqh_complement(const TowerGroup& G) { return semidirect_part(G, false); }

std::vector<bool> fqh_part_a(const TowerGroup& H, const TowerGroup& G, std::size_t depth) {
    if (depth == 0 || depth > H.size() || G.size() != H.size())
        fail(ErrorCode::invalid_argument, "depth must lie in 1..levels of both towers");
    const SubTower SH = weakly_sylow(H, H.prime());
    std::vector<bool> out;
    for (std::size_t i = 0; i < depth; ++i) {
        const SemidirectInfo* info = G.level(i).semidirect_info();
        if (!info) fail(ErrorCode::invalid_argument, "level is not a semidirect product");
        const Subgroup& Si = SH.at(i);
        std::vector<Elem> img;
        for (Elem h : Si.members()) img.push_back(Elem(h * info->module_order));
        const Subgroup SG = Subgroup::from_members(G.level(i), img);
        const auto FH = FusionSystem::realize(H.level(i), Si, H.prime());
        const auto FG = FusionSystem::realize(G.level(i), SG, H.prime());
        out.push_back(is_fusion_preserving(GroupMap(Si, SG, img), FH, FG));
    }
    return out;
}

unsigned lfs_minimal_degree(unsigned p, unsigned q, std::size_t depth) {
    const std::uint64_t pd = ipow(p, depth);
    std::uint64_t r = q % pd;
    for (unsigned m = 1; m <= 64; ++m) {
        if (r % pd == 1 % pd) return m;
        r = r * q % pd;
    }
    fail(ErrorCode::root_of_unity_unavailable, "no field degree up to 64 contains the p^depth-th roots of unity");
}

TowerGroup build_lfs_ext(unsigned p, unsigned q, std::size_t depth, unsigned field_degree) {
    if (!is_prime(p) || !is_prime(q) || p == q) fail(ErrorCode::invalid_argument, "lfs_ext needs distinct primes p, q");
    if (depth == 0) fail(ErrorCode::invalid_argument, "depth must be positive");
    const std::uint64_t pd = ipow(p, depth);
    const unsigned m = field_degree ? field_degree : lfs_minimal_degree(p, q, depth);
    const GaloisField F(q, m);
    if ((std::uint64_t(F.size()) - 1) % pd != 0)
        fail(ErrorCode::root_of_unity_unavailable,
             "F_" + std::to_string(F.size()) + " has no element of order " + std::to_string(pd));
    const std::uint32_t zeta = F.pow(F.primitive(), (F.size() - 1) / pd);
    std::vector<FiniteGroup> levels;
    for (std::size_t i = 1; i <= depth; ++i) {
        const std::size_t dim = i * m;
        const std::uint32_t zi = F.pow(zeta, ipow(p, depth - i));  // generator of Omega_i(K)
        Matrix M(dim * dim, 0);
        for (std::size_t j = 1; j <= i; ++j) {
            const auto block = F.multiplication_matrix(F.pow(zi, ipow(p, j)));
            const std::size_t o = (j - 1) * m;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) M[(o + r) * dim + o + c] = block[r * m + c];
        }
        const FiniteGroup K = catalog::cyclic(ipow(p, i));
        const Elem gen[] = {1};
        levels.push_back(semidirect(q, dim, K, gen, {M}, "lfs_ext level " + std::to_string(i)));
    }
    std::vector<std::vector<Elem>> emb;
    for (std::size_t i = 1; i < depth; ++i) {
        const std::uint64_t mod = ipow(q, i * m), mod2 = ipow(q, (i + 1) * m);
        std::vector<Elem> t(levels[i - 1].order());
        // new coordinates are the high ones, so v keeps its value; u = zeta_{i+1}^p
        for (Elem e = 0; e < t.size(); ++e) t[e] = Elem(e % mod + mod2 * ((e / mod) * p));
        emb.push_back(std::move(t));
    }
    return TowerGroup(std::move(levels), std::move(emb), p, TowerKind::ambient,
                      "lfs_ext(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

}  // namespace plocal::towers
