#include <doctest.h>

#include <chrono>

#include "plocal/catalog.hpp"
#include "plocal/cohomology.hpp"
#include "plocal/tower_examples.hpp"

using namespace plocal;

namespace {

// |Hom(G, C_p)| by trying every assignment of generator images
std::size_t hom_count_to_cp(const FiniteGroup& G, unsigned p) {
    const FiniteGroup C = catalog::cyclic(p);
    const auto gens = G.generators();
    std::vector<Elem> img(gens.size(), 0);
    std::size_t count = 0;
    while (true) {
        try {
            GroupMap::from_generator_images(Subgroup::whole(G), Subgroup::whole(C), gens, img);
            ++count;
        } catch (const Error&) {
        }
        std::size_t i = 0;
        while (i < img.size() && ++img[i] == p) img[i++] = 0;
        if (i == img.size()) break;
    }
    return count;
}

std::size_t log_p(std::size_t n, unsigned p) {
    std::size_t e = 0;
    while (n > 1) n /= p, ++e;
    return e;
}

}  // namespace

TEST_CASE("cohomology of small groups") {
    const auto c2 = h_star(catalog::cyclic(2), 2, 3);
    CHECK(c2.dims() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(h_star(catalog::cyclic(4), 2, 3).dims() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(h_star(catalog::cyclic(3), 3, 3).dims() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(h_star(catalog::elementary_abelian(2, 2), 2, 3).dims() == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(h_star(catalog::symmetric(3), 2, 2).dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(h_star(catalog::symmetric(3), 3, 2).dims() == std::vector<std::size_t>{1, 0, 0});
    CHECK(h_star(catalog::dihedral(8), 2, 2).dims() == std::vector<std::size_t>{1, 2, 3});
    CHECK(h_star(catalog::dicyclic(8), 2, 2).dims() == std::vector<std::size_t>{1, 2, 2});
    CHECK(h_star(catalog::cyclic(3), 2, 3).dims() == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(h_star(FiniteGroup(), 2, 2).dims() == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("H^0 is one dimensional and H^1 counts homomorphisms to C_p") {
    for (const auto& e : catalog::small_corpus()) {
        if (e.group.order() > 30) continue;
        for (unsigned p : prime_divisors(e.group.order())) {
            const auto H = h_star(e.group, p, 1);
            CHECK(H.dims()[0] == 1);
            CHECK_MESSAGE(H.dims()[1] == log_p(hom_count_to_cp(e.group, p), p), e.name, " p=", p);
        }
    }
}

TEST_CASE("d o d = 0") {
    for (const char* name : {"S3", "C4", "V4", "D8", "Q8", "A4"}) {
        const FiniteGroup G = catalog::by_name(name);
        for (unsigned p : {2u, 3u}) CHECK(CochainComplex(Subgroup::whole(G), p, 2).d_squared_zero());
    }
    CHECK(CochainComplex(Subgroup::whole(catalog::cyclic(4)), 2, 4).d_squared_zero());
}

TEST_CASE("coordinates reject non-cocycles") {
    const auto H = h_star(catalog::cyclic(2), 2, 2);
    const FpVec f{1};
    CHECK(H.coordinates(1, f) == FpVec{1});
    const auto V = h_star(catalog::elementary_abelian(2, 2), 2, 1);
    CHECK_THROWS_AS(V.coordinates(1, FpVec{1, 0, 0}), Error);  // not additive
    CHECK(V.coordinates(1, FpVec{1, 0, 1}).size() == 2);
}

TEST_CASE("restriction and induced maps") {
    const FiniteGroup S3 = catalog::symmetric(3);
    const Subgroup W = Subgroup::whole(S3);
    const auto H = h_star(S3, 2, 2);
    const auto id = induced(H, H, GroupMap::identity(W));
    for (std::size_t k = 0; k <= 2; ++k) CHECK(id.matrices[k] == FpMatrix::identity(2, H.dims()[k]));

    const Subgroup C2 = sylow(S3, 2);
    const auto HC = h_star(C2, 2, 2);
    const auto res = restriction(HC, H);
    CHECK(rank(res.matrices[1]) == 1);
    CHECK(rank(res.matrices[2]) == 1);

    // inner automorphisms act trivially
    for (const char* name : {"S4", "D8", "A4"}) {
        const FiniteGroup G = catalog::by_name(name);
        const Subgroup G_ = Subgroup::whole(G);
        const auto HG = h_star(G, 2, 2);
        for (Elem g = 0; g < G.order(); ++g) {
            const auto m = induced(HG, HG, GroupMap::conjugation(G_, G_, g));
            for (std::size_t k = 0; k <= 2; ++k) CHECK(m.matrices[k] == FpMatrix::identity(2, HG.dims()[k]));
        }
    }
    // an outer automorphism of C3 x C3 acts nontrivially on H^1
    const FiniteGroup E = catalog::elementary_abelian(3, 2);
    const Subgroup EW = Subgroup::whole(E);
    const auto HE = h_star(E, 3, 1);
    const auto gens = EW.generators();
    const std::vector<Elem> swapped{gens[1], gens[0]};
    const auto sw = induced(HE, HE, GroupMap::from_generator_images(EW, EW, gens, swapped));
    CHECK_FALSE(sw.matrices[1] == FpMatrix::identity(3, 2));
    CHECK(sw.matrices[1] * sw.matrices[1] == FpMatrix::identity(3, 2));
}

TEST_CASE("restriction is functorial") {
    const FiniteGroup G = catalog::symmetric(4);
    const Subgroup S = sylow(G, 2);
    const auto F = FusionSystem::realize(G, S, 2);
    const auto HG = h_star(G, 2, 2);
    const auto HS = h_star(S, 2, 2);
    const auto rGS = restriction(HS, HG);
    for (const Subgroup& K : F.subgroups()) {
        const auto HK = h_star(K, 2, 2);
        const auto direct = restriction(HK, HG);
        const auto via = compose(restriction(HK, HS), rGS);
        CHECK(direct.matrices == via.matrices);
    }
    // composite of induced maps
    const Subgroup W = Subgroup::whole(G);
    const auto a = GroupMap::conjugation(W, W, 5), b = GroupMap::conjugation(W, W, 17);
    CHECK(induced(HG, HG, b.after(a)).matrices == compose(induced(HG, HG, a), induced(HG, HG, b)).matrices);
}

TEST_CASE("stable subspaces") {
    const FiniteGroup D = catalog::dihedral(8);
    const Subgroup W = Subgroup::whole(D);
    for (std::size_t k = 0; k <= 2; ++k)
        CHECK(stable_subspace(D, W, 2, k, StablePolicy::all_pairs).size() == h_star(D, 2, 2).dims()[k]);

    const FiniteGroup S4 = catalog::symmetric(4);
    CHECK(stable_subspace(S4, sylow(S4, 2), 2, 1, StablePolicy::all_pairs).size() == 1);
    CHECK(stable_subspace(S4, sylow(S4, 2), 2, 1, StablePolicy::alperin_generators).size() == 1);
    CHECK(h_star(S4, 2, 1).dims()[1] == 1);

    const FiniteGroup S3 = catalog::symmetric(3);
    for (std::size_t k = 1; k <= 2; ++k) {
        const auto st = stable_subspace(S3, sylow(S3, 2), 2, k, StablePolicy::all_pairs);
        CHECK(st.size() == 1);
        CHECK(st == stable_subspace(S3, sylow(S3, 2), 2, k, StablePolicy::alperin_generators));
    }
}

TEST_CASE("stable elements") {
    struct Case {
        const char* name;
        std::vector<std::size_t> dims;
    };
    for (const Case& c : {Case{"S3", {1, 1, 1}}, Case{"A4", {1, 0, 1}}, Case{"S4", {1, 1, 2}}}) {
        const FiniteGroup G = catalog::by_name(c.name);
        const auto r = verify_stable_elements(G, sylow(G, 2), 2, 2);
        CHECK_MESSAGE(r.pass, c.name);
        for (const auto& d : r.degrees) {
            CHECK(d.dim_g == c.dims[d.degree]);
            CHECK(d.dim_stable == d.dim_g);
            CHECK(d.res_rank == d.dim_g);
            CHECK(d.policies_agree);
        }
    }
    // A4: H^1(V4) has dimension 2 and no C3-fixed vector
    const FiniteGroup A4 = catalog::alternating(4);
    const auto r = verify_stable_elements(A4, sylow(A4, 2), 2, 2);
    CHECK(r.degrees[1].dim_s == 2);
    CHECK(r.degrees[1].dim_stable == 0);
    CHECK(r.degrees[2].dim_s == 3);
    CHECK(r.degrees[2].dim_stable == 1);

    const FiniteGroup D = catalog::dihedral(8);
    CHECK(verify_stable_elements(D, Subgroup::whole(D), 2, 2).pass);

    // witnesses map onto the stable basis
    const FiniteGroup S4 = catalog::symmetric(4);
    const Subgroup S = sylow(S4, 2);
    const auto rs = verify_stable_elements(S4, S, 2, 2);
    const auto R = restriction(h_star(S, 2, 2), h_star(S4, 2, 2));
    for (std::size_t k = 0; k <= 2; ++k) {
        const auto st = stable_subspace(S4, S, 2, k, StablePolicy::all_pairs);
        const FpMatrix img = R.matrices[k] * rs.degrees[k].witness;
        for (std::size_t s = 0; s < st.size(); ++s) CHECK(img.column(s) == st[s]);
    }
}

TEST_CASE("Cartan-Eilenberg across the corpus") {
    for (const auto& e : catalog::small_corpus()) {
        if (e.group.order() > 30) continue;
        for (unsigned p : prime_divisors(e.group.order())) {
            const std::size_t D = e.group.order() <= 13 ? 3 : 2;
            const auto r = verify_stable_elements(e.group, sylow(e.group, p), p, D);
            CHECK_MESSAGE(r.pass, e.name, " p=", p);
        }
    }
}

TEST_CASE("cohomology bounds") {
    Bounds b;
    b.max_cochain_dim = 100;
    CHECK_THROWS_AS(h_star(catalog::symmetric(4), 2, 2, b), Error);
    try {
        h_star(catalog::symmetric(4), 2, 3);
        FAIL("expected bound_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::bound_exceeded);
    }
}

TEST_CASE("cohomology along towers") {
    const auto c = lim_fin_cohomology(TowerGroup::constant(catalog::symmetric(3), 4, 2), 2, 2, 4);
    CHECK(c.complete);
    CHECK(c.certificate.values == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(c.certificate.stabilized_at == std::optional<std::size_t>(1));

    const auto odd = lim_fin_cohomology(towers::cyclic_p(3, 3), 2, 1, 3);
    CHECK(odd.certificate.values == std::vector<std::uint64_t>{0, 0, 0});
    const auto odd2 = lim_fin_cohomology(towers::cyclic_p(3, 3), 2, 2, 2);
    CHECK(odd2.certificate.values == std::vector<std::uint64_t>{0, 0});

    const auto z = lim_fin_cohomology(towers::cyclic_p(2, 4), 2, 1, 4);
    CHECK(z.complete);
    CHECK(z.certificate.values == std::vector<std::uint64_t>{1, 1, 1, 1});
    for (const auto& M : z.restrictions) CHECK(rank(M) == 0);  // x -> 2x kills Hom(-, F_2)
    CHECK(z.image_ranks == std::vector<std::size_t>{0, 0, 0, 1});

    Bounds b;
    b.max_cochain_rows = 100;
    const auto part = lim_fin_cohomology(towers::cyclic_p(2, 4), 2, 1, 4, 2, b);
    CHECK_FALSE(part.complete);
    CHECK(part.certificate.values.size() == 3);  // 15^2 > 100
    CHECK_FALSE(part.error.empty());
}
