#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "plocal/catalog.hpp"
#include "plocal/linking.hpp"
#include "plocal/tower_examples.hpp"

using namespace plocal;

namespace {

struct Setup {
    FiniteGroup G;
    Subgroup S;
    FusionSystem F;
};

Setup setup(const FiniteGroup& G, unsigned p) {
    const Subgroup S = sylow(G, p);
    return {G, S, FusionSystem::realize(G, S, p)};
}

std::size_t brute_transporter_size(const FiniteGroup& G, const Subgroup& P, const Subgroup& Q) {
    std::size_t n = 0;
    for (Elem g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Elem x : P.members()) ok = ok && Q.contains(G.conj(g, x));
        n += ok;
    }
    return n;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b ? gcd(b, a % b) : a; }

}  // namespace

TEST_CASE("transporter categories") {
    const auto s = setup(catalog::symmetric(4), 2);
    const auto T0 = transporter_category(s.G, s.S, {s.S});
    const Subgroup N = normalizer(s.G, s.S);
    CHECK(T0.morphisms(0, 0) == std::vector<Elem>(N.members().begin(), N.members().end()));

    std::vector<Subgroup> centrics;
    for (const Subgroup& P : s.F.subgroups())
        if (is_centric(s.F, P)) centrics.push_back(P);
    REQUIRE(centrics.size() == 4);
    const auto T = transporter_category(s.G, s.S, centrics);
    std::set<std::size_t> classes;
    for (const Subgroup& P : centrics) classes.insert(s.F.class_of(s.F.index_of(P)));
    CHECK(classes.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(T.morphisms(i, j).size() == brute_transporter_size(s.G, centrics[i], centrics[j]));
            for (Elem g : T.morphisms(i, j))
                for (Elem h : T.morphisms(j, i)) CHECK(std::binary_search(T.morphisms(i, i).begin(), T.morphisms(i, i).end(), T.compose(h, g)));
        }

    // G = S
    const FiniteGroup D = catalog::dihedral(8);
    const auto all = all_subgroups(Subgroup::whole(D));
    const auto TD = transporter_category(D, Subgroup::whole(D), all);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            CHECK(TD.morphisms(i, j) == transporter(Subgroup::whole(D), all[i], all[j]));

    CHECK_THROWS_AS(transporter_category(s.G, s.S, {Subgroup::whole(s.G)}), Error);
}

TEST_CASE("centric linking category of S4") {
    const auto s = setup(catalog::symmetric(4), 2);
    const auto L = linking_category(s.G, s.S, s.F, ObjectPolicy::centric);
    REQUIRE(L.size() == 4);
    const std::size_t d8 = *L.find_object(s.S);
    CHECK(L.morphisms(d8, d8).size() == 8);
    for (std::size_t i = 0; i < L.size(); ++i) CHECK(L.kernel(i).order() == 1);

    const auto r = verify_axioms(L);
    CHECK(r.ok());
    CHECK(r.c_mode == "exhaustive");
    CHECK(r.failures.empty());
    CHECK(epi_mono_check(L));

    // counting identity, recomputed from transporter sizes
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j) {
            const Subgroup& P = L.objects()[i];
            const std::size_t t = brute_transporter_size(s.G, P, L.objects()[j]);
            CHECK(L.morphisms(i, j).size() * L.kernel(i).order() == t);
            const auto st = status(s.F, P);
            if (st.fully_centralized)
                CHECK(L.morphisms(i, j).size() == centralizer(s.S, P).order() * s.F.hom_count(P, L.objects()[j]));
        }
}

TEST_CASE("quasicentric linking categories of S4 and A4") {
    for (const char* name : {"S4", "A4"}) {
        const auto s = setup(catalog::by_name(name), 2);
        for (ObjectPolicy pol : {ObjectPolicy::centric, ObjectPolicy::quasicentric}) {
            const auto L = linking_category(s.G, s.S, s.F, pol);
            const auto r = verify_axioms(L);
            CHECK_MESSAGE(r.ok(), name, " ", object_policy_name(pol));
            CHECK(epi_mono_check(L));
            const auto cls = classify(s.F);
            std::size_t expected = 0;
            for (const auto& c : cls) expected += pol == ObjectPolicy::centric ? c.centric : c.quasicentric;
            CHECK(L.size() == expected);
        }
    }
    const auto a4 = setup(catalog::alternating(4), 2);
    CHECK(linking_category(a4.G, a4.S, a4.F, ObjectPolicy::centric).size() == 1);
    CHECK(linking_category(a4.G, a4.S, a4.F, ObjectPolicy::quasicentric).size() == 4);
}

TEST_CASE("inner linking categories") {
    const FiniteGroup D = catalog::dihedral(8);
    const Subgroup S = Subgroup::whole(D);
    const auto F = FusionSystem::inner(S, 2);
    const auto L = linking_category(D, S, F, ObjectPolicy::quasicentric);
    CHECK(L.size() == all_subgroups(S).size());
    const std::size_t top = *L.find_object(S);
    CHECK(L.morphisms(top, top) == std::vector<Elem>(S.members().begin(), S.members().end()));
    for (std::size_t i = 0; i < L.size(); ++i) CHECK(L.kernel(i).order() == 1);
    CHECK(verify_axioms(L).ok());
    CHECK(epi_mono_check(L));

    const auto T = transporter_category(D, S, L.objects());
    const auto sr = source_regular_check(T, L);
    CHECK(sr.ok);
    for (const auto& o : sr.objects) CHECK(o.kernel_order == 1);
}

TEST_CASE("kernels of centric objects are p' groups across the corpus") {
    for (const char* name : {"S3", "S4", "A4", "D12", "S3xC3", "SL2(3)", "A5"}) {
        const FiniteGroup G = catalog::by_name(name);
        for (unsigned p : prime_divisors(G.order())) {
            const auto s = setup(G, p);
            const auto L = linking_category(s.G, s.S, s.F, ObjectPolicy::centric);
            for (std::size_t i = 0; i < L.size(); ++i) {
                CHECK(gcd(L.kernel(i).order(), p) == 1);
                CHECK(L.kernel(i).order() * centralizer(L.objects()[i], L.objects()[i]).order() ==
                      centralizer(s.G, L.objects()[i]).order());
            }
            CHECK_MESSAGE(verify_axioms(L).ok(), name, " p=", p);
        }
    }
}

TEST_CASE("sabotaged kernels are detected") {
    const auto s = setup(catalog::by_name("S3xC3"), 2);
    const auto good = linking_category(s.G, s.S, s.F, ObjectPolicy::centric);
    REQUIRE(good.kernel(0).order() == 3);
    CHECK(verify_axioms(good).ok());

    const auto bad = linking_category(s.G, s.S, s.F, ObjectPolicy::centric, KernelPolicy::trivial);
    const auto r = verify_axioms(bad);
    CHECK_FALSE(r.axiom_a);
    CHECK_FALSE(r.counting_identity);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.failures.empty());
}

TEST_CASE("merged cosets break epi/mono") {
    const auto s = setup(catalog::symmetric(4), 2);
    const auto merged = linking_category(s.G, s.S, s.F, ObjectPolicy::centric, KernelPolicy::centralizer);
    CHECK_FALSE(epi_mono_check(merged));
    CHECK_FALSE(verify_axioms(merged).axiom_a);
}

TEST_CASE("linking category errors") {
    const auto s = setup(catalog::symmetric(4), 2);
    CHECK_THROWS_AS(linking_category(s.G, s.S, s.F, {Subgroup::trivial(s.G)}, ObjectPolicy::quasicentric), Error);
    try {
        linking_category(s.G, s.S, s.F, {Subgroup::trivial(s.G)}, ObjectPolicy::centric);
        FAIL("expected invalid_object");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_object);
    }
    // not saturated: C4 with an automorphism of order 2
    const FiniteGroup C4 = catalog::cyclic(4);
    const Subgroup W = Subgroup::whole(C4);
    const Elem gen[] = {1}, img[] = {3};
    const auto F = FusionSystem::generate(W, 2, {GroupMap::from_generator_images(W, W, gen, img)});
    try {
        linking_category(C4, W, F, ObjectPolicy::centric);
        FAIL("expected not_saturated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_saturated);
    }
}

TEST_CASE("source regularity") {
    const auto s = setup(catalog::symmetric(4), 2);
    const auto L = linking_category(s.G, s.S, s.F, ObjectPolicy::quasicentric);
    const auto T = transporter_category(s.G, s.S, L.objects());
    const auto r = source_regular_check(T, L);
    CHECK(r.ok);
    for (std::size_t i = 0; i < L.size(); ++i) {
        CHECK(r.objects[i].kernel_order == L.kernel(i).order());
        CHECK(r.objects[i].kernel_order % 2 == 1);
    }

    const auto id = linking_category(s.G, s.S, s.F, ObjectPolicy::quasicentric, KernelPolicy::trivial);
    const auto ri = source_regular_check(T, id);
    CHECK(ri.ok);
    for (const auto& o : ri.objects) CHECK(o.kernel_order == 1);

    // the centralizer quotient has kernels of even order
    const auto merged = linking_category(s.G, s.S, s.F, ObjectPolicy::quasicentric, KernelPolicy::centralizer);
    CHECK_FALSE(source_regular_check(T, merged).ok);
}

namespace {

void check_simplicial_identities(const Nerve& N) {
    for (std::size_t k = 2; k <= N.max_dim; ++k)
        for (const auto& f : N.faces[k])
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j <= k; ++j)
                    CHECK(N.faces[k - 1][f[j]][i] == N.faces[k - 1][f[i]][j - 1]);
    for (std::size_t k = 0; k < N.max_dim; ++k)
        for (std::size_t s = 0; s < N.simplices[k].size(); ++s)
            for (std::size_t j = 0; j <= k; ++j) {
                const std::size_t t = N.degeneracies[k][s][j];
                CHECK(N.faces[k + 1][t][j] == s);
                CHECK(N.faces[k + 1][t][j + 1] == s);
            }
}

}  // namespace

TEST_CASE("nerves") {
    const auto point = export_nerve(one_object_category(FiniteGroup()), 3);
    for (std::size_t k = 0; k <= 3; ++k) CHECK(point.simplices[k].size() == 1);
    CHECK(point.nondegenerate == std::vector<std::size_t>{1, 0, 0, 0});
    check_simplicial_identities(point);

    const auto bc2 = export_nerve(one_object_category(catalog::cyclic(2)), 4);
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(bc2.simplices[k].size() == (std::size_t(1) << k));
        CHECK(bc2.nondegenerate[k] == 1);
    }
    check_simplicial_identities(bc2);

    const auto s = setup(catalog::symmetric(4), 2);
    const auto L = linking_category(s.G, s.S, s.F, ObjectPolicy::centric);
    const auto N = export_nerve(L.as_category(), 2);
    const std::size_t n = L.size();
    std::size_t one = 0, two = 0, nd2 = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            one += L.morphisms(a, b).size();
            for (std::size_t c = 0; c < n; ++c) {
                two += L.morphisms(a, b).size() * L.morphisms(b, c).size();
                nd2 += (L.morphisms(a, b).size() - (a == b)) * (L.morphisms(b, c).size() - (b == c));
            }
        }
    CHECK(N.simplices[0].size() == n);
    CHECK(N.simplices[1].size() == one);
    CHECK(N.simplices[2].size() == two);
    CHECK(N.nondegenerate[2] == nd2);
    check_simplicial_identities(N);

    std::ostringstream os;
    write_nerve(os, bc2, "BC2");
    CHECK(os.str().find("count 3 8 nondegenerate 1") != std::string::npos);

    Bounds tight;
    tight.max_nerve_simplices = 10;
    CHECK_THROWS_AS(export_nerve(L.as_category(), 2, tight), Error);
}

TEST_CASE("linking over a tower truncation") {
    const TowerGroup G = towers::dihedral_type(2, 4);
    const SubTower S = SubTower::whole(G);
    std::vector<Subgroup> rot;
    for (std::size_t i = 0; i < G.size(); ++i) {
        std::vector<Elem> m;
        for (Elem x = 0; x < G.level(i).order() / 2; ++x) m.push_back(x);
        rot.push_back(Subgroup::trusted(G.level(i), m));
    }
    const SubTower T(G, rot);

    const auto q = tower_linking(G, S, {S, T}, 3, ObjectPolicy::quasicentric);
    const auto tq = is_telescopic(q);
    CHECK(tq.value);
    CHECK(tq.witness_level == std::vector<std::optional<std::size_t>>{0, 0});

    const auto c = tower_linking(G, S, {S, T}, 3, ObjectPolicy::centric);
    const auto tc = is_telescopic(c);
    CHECK_FALSE(tc.value);
    CHECK(tc.witness_level[0] == std::optional<std::size_t>(0));
    CHECK_FALSE(tc.witness_level[1].has_value());
    // at full depth the top member of T is centric
    CHECK(is_telescopic(tower_linking(G, S, {T}, 4, ObjectPolicy::centric)).value);

    // families are the cosets at the deepest level, since restriction is onto
    const auto& top = q.top;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            const auto& cert = q.certificates[a * 2 + b];
            const Subgroup& P = q.objects[a].top_image(2);
            const Subgroup& Q = q.objects[b].top_image(G.top_index());
            std::set<Elem> reps;
            for (Elem g : transporter(G.top(), P, Q)) reps.insert(g);  // kernels are trivial in a 2-group
            CHECK(q.families[a * 2 + b].size() == reps.size());
            CHECK(cert.values.back() == reps.size());
        }
    CHECK(top.size() == all_subgroups(Subgroup::whole(G.top())).size());
}
