#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "plocal/catalog.hpp"
#include "plocal/group_io.hpp"
#include "plocal/group_ops.hpp"

using namespace plocal;

namespace {

// 1-based cycle notation helper for S_n elements
Elem perm(const FiniteGroup& G, std::vector<std::vector<Point>> cycles) {
    std::vector<Point> img(G.degree());
    for (Point i = 0; i < img.size(); ++i) img[i] = i;
    for (auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    auto e = G.find_permutation(img);
    REQUIRE(e.has_value());
    return *e;
}

// Brute-force oracle: every subset closed under multiplication containing 1.
std::set<std::vector<Elem>> subgroups_by_subsets(const FiniteGroup& G) {
    const std::size_t n = G.order();
    std::set<std::vector<Elem>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); mask += 2) {
        std::vector<Elem> s;
        for (Elem i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        bool closed = true;
        for (Elem a : s)
            for (Elem b : s)
                if (!(mask >> G.mul(a, b) & 1)) closed = false;
        if (closed) out.insert(s);
    }
    return out;
}

std::size_t conj_classes_of_subgroups(const FiniteGroup& G, const std::set<std::vector<Elem>>& subs) {
    std::set<std::vector<Elem>> seen;
    std::size_t classes = 0;
    for (const auto& s : subs) {
        if (seen.count(s)) continue;
        ++classes;
        for (Elem g = 0; g < G.order(); ++g) {
            std::vector<Elem> c;
            for (Elem x : s) c.push_back(G.conj(g, x));
            std::sort(c.begin(), c.end());
            seen.insert(c);
        }
    }
    return classes;
}

std::size_t brute_centralizer_order(const FiniteGroup& G, const Subgroup& P) {
    std::size_t c = 0;
    for (Elem g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Elem x : P.members()) ok = ok && G.mul(g, x) == G.mul(x, g);
        c += ok;
    }
    return c;
}

}  // namespace

TEST_CASE("permutation groups are enumerated in canonical order") {
    FiniteGroup S4 = catalog::symmetric(4);
    CHECK(S4.order() == 24);
    CHECK(S4.representation() == Representation::permutation);
    for (Elem a = 0; a + 1 < S4.order(); ++a) {
        auto x = S4.permutation(a), y = S4.permutation(a + 1);
        CHECK(std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end()));
    }
    for (Elem a = 0; a < S4.order(); ++a) {
        CHECK(S4.mul(a, S4.inv(a)) == 0);
        CHECK(S4.mul(0, a) == a);
    }
}

TEST_CASE("Sylow subgroups") {
    FiniteGroup S4 = catalog::symmetric(4);
    CHECK(sylow(S4, 2).order() == 8);
    CHECK(sylow(S4, 3).order() == 3);
    FiniteGroup A5 = catalog::alternating(5);
    CHECK(sylow(A5, 2).order() == 4);
    CHECK(sylow(A5, 5).order() == 5);
    CHECK_THROWS_AS(sylow(S4, 4), Error);
}

TEST_CASE("subgroup lattice agrees with subset enumeration") {
    for (const char* name : {"D8", "Q8", "S3", "C2xC2", "C6", "C2^3", "A4", "D12"}) {
        FiniteGroup G = catalog::by_name(name);
        auto oracle = subgroups_by_subsets(G);
        auto subs = all_subgroups(Subgroup::whole(G));
        std::set<std::vector<Elem>> got;
        for (auto& H : subs) got.insert(std::vector<Elem>(H.members().begin(), H.members().end()));
        CHECK_MESSAGE(got == oracle, name);
    }
}

TEST_CASE("D8 has 8 conjugacy classes of subgroups") {
    FiniteGroup D8 = catalog::dihedral(8);
    auto classes = p_subgroups(D8, 2, true);
    CHECK(classes.size() == 8);
    CHECK(classes.size() == conj_classes_of_subgroups(D8, subgroups_by_subsets(D8)));
    CHECK(p_subgroups(D8, 2, false).size() == 10);
}

TEST_CASE("centralizers, normalizers and transporters in S4") {
    FiniteGroup S4 = catalog::symmetric(4);
    Elem r = perm(S4, {{1, 2, 3, 4}}), t = perm(S4, {{1, 3}});
    Elem gens[] = {r, t};
    Subgroup D8 = Subgroup::generated(S4, gens);
    REQUIRE(D8.order() == 8);
    Subgroup C = centralizer(S4, D8);
    CHECK(C.order() == 2);
    CHECK(C.order() == brute_centralizer_order(S4, D8));
    Elem c3[] = {perm(S4, {{1, 2, 3}})};
    CHECK(normalizer(S4, Subgroup::generated(S4, c3)).order() == 6);

    Elem z[] = {perm(S4, {{1, 3}, {2, 4}})};
    Subgroup Z = Subgroup::generated(S4, z);
    CHECK(hom_g(S4, Z, D8).size() == 3);
    CHECK(transporter(S4, Z, D8).size() == 24);
    CHECK(transporter(S4, Z, D8).size() == centralizer(S4, Z).order() * 3);
}

TEST_CASE("O^p and normal p-complements") {
    FiniteGroup S3 = catalog::symmetric(3);
    CHECK(o_upper_p(S3, 2).order() == 3);
    CHECK(o_upper_p(S3, 3).order() == 6);
    CHECK(has_normal_p_complement(S3, 2));
    CHECK(has_normal_p_complement(S3, 3) == false);
    CHECK(has_normal_p_complement(catalog::by_name("C7:C3"), 3));
    CHECK(has_normal_p_complement(catalog::dihedral(8), 2));
    CHECK(has_normal_p_complement(catalog::by_name("A4"), 3));
    CHECK_FALSE(has_normal_p_complement(catalog::by_name("A4"), 2));
}

TEST_CASE("quotients") {
    FiniteGroup S4 = catalog::symmetric(4);
    Elem v[] = {perm(S4, {{1, 2}, {3, 4}}), perm(S4, {{1, 3}, {2, 4}})};
    Subgroup V4 = Subgroup::generated(S4, v);
    auto Q = quotient(S4, V4);
    CHECK(Q.group.order() == 6);
    CHECK(find_group_isomorphism(Q.group, catalog::symmetric(3)).has_value());
    for (Elem a = 0; a < S4.order(); ++a)
        for (Elem b = 0; b < S4.order(); ++b)
            CHECK(Q.group.mul(Q.projection[a], Q.projection[b]) == Q.projection[S4.mul(a, b)]);

    FiniteGroup D8 = catalog::dihedral(8);
    Subgroup Z = center(Subgroup::whole(D8));
    CHECK(Z.order() == 2);
    CHECK(find_group_isomorphism(quotient(D8, Z).group, catalog::elementary_abelian(2, 2)).has_value());

    Elem t[] = {perm(S4, {{1, 2}})};
    try {
        quotient(S4, Subgroup::generated(S4, t));
        FAIL("expected not_normal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_normal);
    }
}

TEST_CASE("Frattini and Omega") {
    FiniteGroup D8 = catalog::dihedral(8);
    Subgroup W = Subgroup::whole(D8);
    CHECK(frattini(W) == center(W));
    CHECK(frattini_by_lattice(W) == frattini(W));
    for (const char* name : {"Q8", "C4xC2", "C2^3", "D16", "SD16", "C9", "Heis3"}) {
        FiniteGroup G = catalog::by_name(name);
        Subgroup all = Subgroup::whole(G);
        CHECK_MESSAGE(frattini(all) == frattini_by_lattice(all), name);
    }
    FiniteGroup A = catalog::by_name("C2xC4");
    Subgroup O1 = omega(Subgroup::whole(A), 1);
    CHECK(O1.order() == 4);
    CHECK(find_group_isomorphism(as_group(O1), catalog::elementary_abelian(2, 2)).has_value());
    try {
        omega(W, 1);
        FAIL("expected not_abelian");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_abelian);
    }
}

TEST_CASE("semidirect products") {
    FiniteGroup C2 = catalog::cyclic(2);
    FiniteGroup G = semidirect(3, 1, C2, {Matrix{2}});
    CHECK(G.order() == 6);
    CHECK(find_group_isomorphism(G, catalog::symmetric(3)).has_value());
    CHECK_THROWS_AS(semidirect(3, 1, C2, {Matrix{0}}), Error);
    try {
        semidirect(5, 1, catalog::cyclic(3), {Matrix{4}});  // -1 has order 2, not dividing 3
        FAIL("expected non_automorphism");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::non_automorphism);
    }

    // F_5[S3] x| S3 with left translation
    FiniteGroup S3 = catalog::symmetric(3);
    std::vector<Matrix> mats;
    for (Elem h : S3.generators()) {
        Matrix M(36, 0);
        for (Elem x = 0; x < 6; ++x) M[S3.mul(h, x) * 6 + x] = 1;
        mats.push_back(M);
    }
    FiniteGroup F = semidirect(5, 6, S3, mats);
    CHECK(F.order() == 93750);
    CHECK(F.representation() == Representation::semidirect);
    for (Elem a : {Elem(1), Elem(777), Elem(93749), Elem(15625 * 3 + 12)}) {
        CHECK(F.mul(a, F.inv(a)) == 0);
        CHECK(F.mul(F.inv(a), a) == 0);
    }
    Subgroup S = sylow(F, 2);
    CHECK(S.order() == 2);
}

TEST_CASE("table validation and bounds") {
    std::vector<std::vector<Elem>> bad = {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(bad), Error);
    // a Latin square that is not associative (order 5 loop)
    std::vector<std::vector<Elem>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
        FiniteGroup::from_table(loop);
        FAIL("expected invalid_group");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_group);
    }
    try {
        catalog::symmetric(8);
        FAIL("expected bound_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::bound_exceeded);
    }
    try {
        all_subgroups(Subgroup::whole(catalog::symmetric(6)));
        FAIL("expected bound_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::bound_exceeded);
    }
}

TEST_CASE("invariants over the corpus") {
    for (const auto& entry : catalog::small_corpus()) {
        const FiniteGroup& G = entry.group;
        CAPTURE(entry.name);
        REQUIRE(G.order() <= 100);
        for (unsigned p : prime_divisors(G.order())) {
            Subgroup S = sylow(G, p);
            CHECK(S.order() == p_part(G.order(), p));
            Subgroup N = normalizer(G, S);
            CHECK(N.contains(S));
            CHECK(transporter(G, S, S).size() == N.order());
            // |Hom_G(P,Q)| = |T_G(P,Q)| / |C_G(P)|
            auto subs = all_subgroups(S);
            for (std::size_t i = 0; i < subs.size(); i += 3) {
                auto T = transporter(G, subs[i], S);
                CHECK(hom_g(G, subs[i], S).size() * centralizer(G, subs[i]).order() == T.size());
            }
            Subgroup Op = o_upper_p(G, p);
            CHECK(is_normal(Subgroup::whole(G), Op));
            CHECK(quotient(G, Op).group.order() == G.order() / Op.order());
        }
    }
}

TEST_CASE("json round trip") {
    for (const char* name : {"S4", "D8", "Heis3", "C3^2:C4"}) {
        FiniteGroup G = catalog::by_name(name);
        FiniteGroup H = io::group_from_json(io::group_to_json(G));
        REQUIRE(H.order() == G.order());
        bool same = true;
        for (Elem a = 0; a < G.order(); ++a)
            for (Elem b = 0; b < G.order(); ++b) same = same && G.mul(a, b) == H.mul(a, b);
        CHECK_MESSAGE(same, name);
        for (Elem a = 0; a < G.order(); ++a) CHECK(io::element_from_json(G, io::element_to_json(G, a)) == a);
    }
    try {
        io::group_from_json(io::json::parse(R"({"kind":"perm","degree":3,"generators":[[[1,4]]]})"));
        FAIL("expected parse_error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse_error);
    }
}
