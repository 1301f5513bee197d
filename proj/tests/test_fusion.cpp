#include <set>

#include "doctest.h"
#include "plocal/catalog.hpp"
#include "plocal/fusion.hpp"

using namespace plocal;

namespace {

Elem perm(const FiniteGroup& G, std::vector<std::vector<Point>> cycles) {
    std::vector<Point> img(G.degree());
    for (Point i = 0; i < img.size(); ++i) img[i] = i;
    for (auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    return *G.find_permutation(img);
}

Subgroup gen(const FiniteGroup& G, std::vector<Elem> gens) { return Subgroup::generated(G, gens); }

// Brute-force oracle: distinct conjugation tables c_g|P with gPg^-1 <= S.
std::set<std::vector<Elem>> brute_homs(const FiniteGroup& G, const Subgroup& P, const Subgroup& S) {
    std::set<std::vector<Elem>> out;
    for (Elem g = 0; g < G.order(); ++g) {
        std::vector<Elem> t;
        bool inside = true;
        for (Elem x : P.members()) {
            Elem y = G.mul(G.mul(g, x), G.inv(g));
            inside = inside && S.contains(y);
            t.push_back(y);
        }
        if (inside) out.insert(t);
    }
    return out;
}

struct S4Setup {
    FiniteGroup S4 = catalog::symmetric(4);
    Subgroup D8 = gen(S4, {perm(S4, {{1, 2, 3, 4}}), perm(S4, {{1, 3}})});
    Subgroup V4n = gen(S4, {perm(S4, {{1, 2}, {3, 4}}), perm(S4, {{1, 3}, {2, 4}})});
    Subgroup V4b = gen(S4, {perm(S4, {{1, 3}}), perm(S4, {{2, 4}})});
    Subgroup C4 = gen(S4, {perm(S4, {{1, 2, 3, 4}})});
    Subgroup Z = gen(S4, {perm(S4, {{1, 3}, {2, 4}})});
    FusionSystem F = FusionSystem::realize(S4, D8, 2);
};

void check_round_trip(const FusionSystem& F) {
    for (std::size_t i = 0; i < F.subgroups().size(); ++i)
        for (std::size_t k = 0; k < F.tables(i).size(); ++k) {
            GroupMap phi = F.map(i, k);
            auto factors = alperin_decompose(F, phi);
            for (const auto& f : factors) {
                CHECK(F.contains(GroupMap(f.Q, F.sylow(), f.alpha.table())));
                if (!(f.Q == F.sylow())) {
                    CHECK(status(F, f.Q).fully_normalized);
                    CHECK(is_centric(F, f.Q));
                    CHECK(is_radical(F, f.Q));
                }
            }
            CHECK(alperin_compose(F, phi.domain(), factors).table() == phi.table());
        }
}

}  // namespace

TEST_CASE("realize matches the brute-force conjugation scan") {
    S4Setup s;
    REQUIRE(s.D8.order() == 8);
    for (std::size_t i = 0; i < s.F.subgroups().size(); ++i) {
        auto oracle = brute_homs(s.S4, s.F.subgroups()[i], s.D8);
        std::set<std::vector<Elem>> got(s.F.tables(i).begin(), s.F.tables(i).end());
        CHECK(got == oracle);
    }
    CHECK(s.F.subgroups().size() == 10);
    CHECK(s.F.aut_order(s.V4n) == 6);
    CHECK(s.F.aut_order(s.V4b) == 2);
    CHECK(s.F.aut_order(s.D8) == 4);
    CHECK(s.F.conjugacy_class(s.Z).size() == 3);
    CHECK(s.F.conjugacy_class(s.D8).size() == 1);
    CHECK(s.F.provenance() == Provenance::realized);

    FiniteGroup S3 = catalog::symmetric(3);
    FusionSystem F3 = FusionSystem::realize(S3, sylow(S3, 3), 3);
    CHECK(F3.aut_order(sylow(S3, 3)) == 2);
    CHECK_THROWS_AS(FusionSystem::realize(s.S4, Subgroup::whole(s.S4), 2), Error);
}

TEST_CASE("status flags") {
    S4Setup s;
    auto st = status(s.F, s.V4n);
    CHECK(st.fully_normalized);
    CHECK(st.fully_centralized);
    CHECK(st.fully_automized);
    CHECK(st.receptive);
    // Z is fully normalized (N_S(Z) = D8) while its conjugates in V4n have normalizer V4n
    auto sz = status(s.F, s.Z);
    CHECK(sz.fully_normalized);
    CHECK(sz.fully_centralized);

    FiniteGroup D8 = catalog::dihedral(8);
    Subgroup C4 = Subgroup::generated(D8, std::vector<Elem>{1});
    REQUIRE(C4.order() == 4);
    FusionSystem F = FusionSystem::realize(D8, C4, 2);
    auto sc = status(F, C4);
    CHECK_FALSE(sc.fully_automized);
    CHECK(out_order_by_index(F, C4) == 2);
}

TEST_CASE("saturation verdicts") {
    S4Setup s;
    auto rep = is_saturated(s.F);
    CHECK(rep.verdict);
    CHECK(rep.classes.size() == s.F.class_count());
    CHECK(is_saturated(FusionSystem::inner(s.D8, 2)).verdict);

    // C4 with the inversion automorphism
    FiniteGroup C4g = catalog::cyclic(4);
    Subgroup C4 = Subgroup::whole(C4g);
    GroupMap inversion(C4, C4, {0, 3, 2, 1});
    FusionSystem G = FusionSystem::generate(C4, 2, {inversion});
    CHECK(G.aut_order(C4) == 2);
    auto r = is_saturated(G);
    CHECK_FALSE(r.verdict);
    bool named = false;
    for (const auto& c : r.classes)
        if (!c.ok) {
            CHECK(c.failing_axiom == "sylow:fully_automized");
            CHECK(c.failing_member == C4);
            REQUIRE(c.counterexample.has_value());
            CHECK(c.counterexample->table() == inversion.table());
            named = true;
        }
    CHECK(named);
}

TEST_CASE("a single V4 <-> V4 isomorphism in D8 breaks saturation") {
    S4Setup s;
    Elem z = perm(s.S4, {{1, 3}, {2, 4}});
    Elem a = perm(s.S4, {{1, 2}, {3, 4}});
    Elem b = perm(s.S4, {{1, 3}});
    // V4n = {1, z, a, az} -> V4b = {1, z, b, bz}, fixing z
    std::vector<Elem> t;
    for (Elem x : s.V4n.members()) {
        Elem y = x == 0 ? 0 : x == z ? z : x == a ? b : s.S4.mul(b, z);
        t.push_back(y);
    }
    GroupMap phi = GroupMap::checked(s.V4n, s.V4b, t);
    FusionSystem G = FusionSystem::generate(s.D8, 2, {phi});
    CHECK(G.conjugacy_class(s.V4n).size() == 2);
    auto r = is_saturated(G);
    CHECK_FALSE(r.verdict);
    std::size_t failures = 0;
    for (const auto& c : r.classes)
        if (!c.ok) {
            ++failures;
            CHECK_FALSE(c.failing_axiom.empty());
            CHECK(c.counterexample.has_value());
        }
    CHECK(failures >= 1);
}

TEST_CASE("generate reproduces F_D8(S4) from an order-3 automorphism of V4") {
    S4Setup s;
    Elem c = perm(s.S4, {{1, 2, 3}});
    GroupMap c3 = GroupMap::conjugation(s.V4n, s.V4n, c);
    FusionSystem G = FusionSystem::generate(s.D8, 2, {c3});
    CHECK(G.aut_order(s.V4n) == 6);
    CHECK(G == s.F);
    // closure operator: idempotent, extensive, monotone
    std::vector<GroupMap> all;
    for (std::size_t i = 0; i < G.subgroups().size(); ++i)
        for (std::size_t k = 0; k < G.tables(i).size(); ++k) all.push_back(G.map(i, k));
    CHECK(FusionSystem::generate(s.D8, 2, all) == G);
    FusionSystem I = FusionSystem::generate(s.D8, 2, {});
    CHECK(I == FusionSystem::inner(s.D8, 2));
    for (std::size_t i = 0; i < I.subgroups().size(); ++i)
        for (const auto& t : I.tables(i)) CHECK(G.contains(GroupMap(I.subgroups()[i], s.D8, t)));
    CHECK_THROWS_AS(FusionSystem::generate(s.D8, 2, {GroupMap(s.V4n, s.V4n, {0, 0, 0, 0})}), Error);
}

TEST_CASE("classification of F_D8(S4)") {
    S4Setup s;
    auto cls = classify(s.F);
    std::set<std::vector<Elem>> centric, oracle;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const Subgroup& P = s.F.subgroups()[i];
        if (cls[i].centric) centric.insert({P.members().begin(), P.members().end()});
        // oracle: C_S(Q) <= Q for every S4-conjugate Q of P inside D8
        bool all = true;
        for (Elem g = 0; g < s.S4.order(); ++g) {
            Subgroup Q = conjugate(P, g);
            if (!s.D8.contains(Q)) continue;
            for (Elem y : s.D8.members()) {
                bool commutes = true;
                for (Elem x : Q.members()) commutes = commutes && s.S4.mul(x, y) == s.S4.mul(y, x);
                if (commutes && !Q.contains(y)) all = false;
            }
        }
        if (all) oracle.insert({P.members().begin(), P.members().end()});
        if (cls[i].centric) CHECK(cls[i].quasicentric);
        if (cls[i].strongly_closed) CHECK(cls[i].weakly_closed);
    }
    CHECK(centric == oracle);
    CHECK(centric.size() == 4);
    const auto iD8 = s.F.index_of(s.D8);
    CHECK(cls[iD8].centric);
    CHECK(cls[iD8].weakly_closed);
    CHECK(cls[iD8].radical);
    CHECK_FALSE(cls[s.F.index_of(s.Z)].centric);
    CHECK(cls[s.F.index_of(s.V4n)].radical);
    CHECK_FALSE(cls[s.F.index_of(s.V4b)].radical);
    CHECK_FALSE(cls[s.F.index_of(s.C4)].radical);
    CHECK(is_strongly_closed(s.F, s.V4n));
    CHECK_FALSE(is_weakly_closed(s.F, s.Z));
}

TEST_CASE("centralizer systems agree with C_G(Q)") {
    S4Setup s;
    for (const auto& Q : s.F.subgroups()) {
        FusionSystem CF = centralizer_system(s.F, Q);
        Subgroup CS = centralizer(s.D8, Q);
        FusionSystem direct = FusionSystem::realize(s.S4, CS, 2);
        // realize over C_G(Q): restrict conjugators to the centralizer
        Subgroup CG = centralizer(s.S4, Q);
        std::vector<std::vector<std::vector<Elem>>> homs;
        for (const auto& R : direct.subgroups()) {
            std::vector<std::vector<Elem>> h;
            for (const auto& m : hom_g(CG, R, CS)) h.push_back(m.table());
            homs.push_back(h);
        }
        FusionSystem oracle = FusionSystem::from_tables(CS, 2, Provenance::realized, "C_G(Q)", homs);
        CHECK(CF == oracle);
    }
    FusionSystem C1 = centralizer_system(s.F, Subgroup::trivial(s.S4));
    CHECK(C1 == s.F);
    CHECK(is_inner(centralizer_system(s.F, s.V4n)));
}

TEST_CASE("quasicentric subgroups") {
    FiniteGroup S3 = catalog::symmetric(3);
    Subgroup C2 = sylow(S3, 2);
    FusionSystem F = FusionSystem::realize(S3, C2, 2);
    CHECK(is_quasicentric(F, C2));
    CHECK(is_quasicentric(F, Subgroup::trivial(S3)));
    CHECK(inner_criterion(F));
    CHECK(is_inner(F));

    FusionSystem F3 = FusionSystem::realize(S3, sylow(S3, 3), 3);
    CHECK_FALSE(inner_criterion(F3));
    CHECK_FALSE(is_inner(F3));

    FiniteGroup C4g = catalog::cyclic(4);
    FusionSystem bad = FusionSystem::generate(Subgroup::whole(C4g), 2,
                                              {GroupMap(Subgroup::whole(C4g), Subgroup::whole(C4g), {0, 3, 2, 1})});
    try {
        is_quasicentric(bad, Subgroup::whole(C4g));
        FAIL("expected not_saturated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_saturated);
    }
    CHECK_THROWS_AS(inner_criterion(bad), Error);
}

TEST_CASE("Alperin round trip") {
    S4Setup s;
    check_round_trip(s.F);
    FiniteGroup GL = catalog::gl2(3);
    Subgroup SD = sylow(GL, 2);
    REQUIRE(SD.order() == 16);
    check_round_trip(FusionSystem::realize(GL, SD, 2));

    // a morphism fusing a non-central involution of V4n into Z goes through Aut_F(V4n)
    Elem a = perm(s.S4, {{1, 2}, {3, 4}});
    Subgroup A = gen(s.S4, {a});
    for (const auto& phi : s.F.homs(A, s.Z)) {
        auto f = alperin_decompose(s.F, phi);
        REQUIRE(f.size() == 1);
        CHECK(f[0].Q == s.V4n);
    }
    CHECK(alperin_decompose(s.F, GroupMap::inclusion(s.C4, s.D8)).empty());
}

TEST_CASE("fusion preserving isomorphisms") {
    S4Setup s;
    GroupMap id = GroupMap::identity(s.D8);
    CHECK(is_fusion_preserving(id, s.F, s.F));
    for (Elem g : s.D8.members()) CHECK(is_fusion_preserving(GroupMap::conjugation(s.D8, s.D8, g), s.F, s.F));
    CHECK_FALSE(find_isomorphism(s.F, FusionSystem::inner(s.D8, 2)).has_value());

    // another Sylow of S4 and the system it carries
    Elem g = perm(s.S4, {{1, 2}});
    Subgroup D8b = conjugate(s.D8, g);
    FusionSystem Fb = FusionSystem::realize(s.S4, D8b, 2);
    auto iso = find_isomorphism(s.F, Fb);
    REQUIRE(iso.has_value());
    CHECK(is_fusion_preserving(*iso, s.F, Fb));
    CHECK(is_fusion_preserving(GroupMap::conjugation(s.D8, D8b, g), s.F, Fb));

    // D8 inside another group: F_D8(S4xC3) is isomorphic to F_D8(S4)
    FiniteGroup G = catalog::by_name("S4xC3");
    FusionSystem H = FusionSystem::realize(G, sylow(G, 2), 2);
    CHECK(find_isomorphism(s.F, H).has_value());
    FiniteGroup D8 = catalog::dihedral(8);
    CHECK_FALSE(find_isomorphism(H, FusionSystem::realize(D8, sylow(D8, 2), 2)));
}

TEST_CASE("corpus invariants") {
    for (const auto& entry : catalog::small_corpus()) {
        const FiniteGroup& G = entry.group;
        for (unsigned p : prime_divisors(G.order())) {
            CAPTURE(entry.name);
            CAPTURE(p);
            Subgroup S = sylow(G, p);
            FusionSystem F = FusionSystem::realize(G, S, p);
            REQUIRE(is_saturated(F).verdict);
            CHECK(is_inner(F) == has_normal_p_complement(G, p));
            CHECK(inner_criterion(F) == is_inner(F));
            for (std::size_t c = 0; c < F.class_count(); ++c) {
                bool fn = false, fc = false;
                for (std::size_t m : F.class_members(c)) {
                    auto st = status(F, F.subgroups()[m]);
                    fn = fn || st.fully_normalized;
                    fc = fc || st.fully_centralized;
                }
                CHECK(fn);
                CHECK(fc);
            }
            auto cls = classify(F);
            for (std::size_t i = 0; i < cls.size(); ++i) {
                const Subgroup& P = F.subgroups()[i];
                CHECK(out_order_by_index(F, P) == out_order_by_orbits(F, P));
                if (cls[i].centric) CHECK(cls[i].quasicentric);
                if (cls[i].strongly_closed) CHECK(cls[i].weakly_closed);
                CHECK(is_strongly_quasicentric(F, P).value == cls[i].quasicentric);
                if (!cls[i].quasicentric) continue;
                for (std::size_t j = i + 1; j < cls.size(); ++j)
                    if (F.subgroups()[j].contains(P)) CHECK(cls[j].quasicentric);
            }
            if (S.order() <= 16) check_round_trip(F);
        }
    }
}
