// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "plocal/catalog.hpp"
#include "plocal/cohomology.hpp"
#include "plocal/group_ops.hpp"
#include "plocal/inverse_limit.hpp"
#include "plocal/linking.hpp"
#include "plocal/tower_examples.hpp"

using namespace plocal;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Elem perm(const FiniteGroup& G, std::vector<std::vector<Point>> cycles) {
    std::vector<Point> img(G.degree());
    for (Point i = 0; i < img.size(); ++i) img[i] = i;
    for (auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    return *G.find_permutation(img);
}

Subgroup gen(const FiniteGroup& G, std::vector<Elem> g) { return Subgroup::generated(G, g); }

std::vector<catalog::CorpusEntry> corpus_upto(std::size_t n) {
    std::vector<catalog::CorpusEntry> out;
    for (auto& e : catalog::small_corpus())
        if (e.group.order() <= n) out.push_back(e);
    return out;
}

Outcome c1_saturation() {
    auto groups = corpus_upto(100);
    std::size_t checks = 0, bad = 0;
    for (const auto& e : groups)
        for (unsigned p : prime_divisors(e.group.order())) {
            ++checks;
            if (!is_saturated(FusionSystem::realize(e.group, sylow(e.group, p), p)).verdict) ++bad;
        }
    return {groups.size() >= 40 && bad == 0,
            std::to_string(groups.size()) + " groups, " + std::to_string(checks) + " (G,p), " + std::to_string(bad) +
                " unsaturated"};
}

Outcome c2_frobenius() {
    std::size_t checks = 0, mismatches = 0;
    for (const auto& e : corpus_upto(100))
        for (unsigned p : prime_divisors(e.group.order())) {
            ++checks;
            FusionSystem F = FusionSystem::realize(e.group, sylow(e.group, p), p);
            if (is_inner(F) != has_normal_p_complement(e.group, p)) ++mismatches;
        }
    return {mismatches == 0, std::to_string(checks) + " (G,p), " + std::to_string(mismatches) + " mismatches"};
}

Outcome c3_negative() {
    Outcome o;
    FiniteGroup C4g = catalog::cyclic(4);
    Subgroup C4 = Subgroup::whole(C4g);
    GroupMap inversion(C4, C4, {0, 3, 2, 1});
    auto r1 = is_saturated(FusionSystem::generate(C4, 2, {inversion}));
    bool named1 = false;
    for (const auto& c : r1.classes)
        if (!c.ok && c.failing_axiom == "sylow:fully_automized" && c.failing_member == C4) named1 = true;

    FiniteGroup S4 = catalog::symmetric(4);
    Subgroup D8 = gen(S4, {perm(S4, {{1, 2, 3, 4}}), perm(S4, {{1, 3}})});
    Subgroup V4n = gen(S4, {perm(S4, {{1, 2}, {3, 4}}), perm(S4, {{1, 3}, {2, 4}})});
    Subgroup V4b = gen(S4, {perm(S4, {{1, 3}}), perm(S4, {{2, 4}})});
    Elem z = perm(S4, {{1, 3}, {2, 4}}), a = perm(S4, {{1, 2}, {3, 4}}), b = perm(S4, {{1, 3}});
    std::vector<Elem> t;
    for (Elem x : V4n.members()) t.push_back(x == 0 ? 0 : x == z ? z : x == a ? b : S4.mul(b, z));
    auto r2 = is_saturated(FusionSystem::generate(D8, 2, {GroupMap::checked(V4n, V4b, t)}));
    std::string axiom2;
    for (const auto& c : r2.classes)
        if (!c.ok && axiom2.empty() && c.counterexample) axiom2 = c.failing_axiom;
    o.pass = !r1.verdict && named1 && !r2.verdict && !axiom2.empty();
    o.detail = std::string("C4/inversion: ") + (named1 ? "sylow:fully_automized at S" : "not named") +
               "; D8 with V4<->V4: " + (axiom2.empty() ? "no axiom named" : axiom2);
    return o;
}

// every morphism of F through fully normalized centric radical automorphisms and back
std::size_t round_trip_failures(const FusionSystem& F, std::size_t& morphisms) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < F.subgroups().size(); ++i)
        for (std::size_t k = 0; k < F.tables(i).size(); ++k) {
            ++morphisms;
            GroupMap phi = F.map(i, k);
            auto factors = alperin_decompose(F, phi);
            bool ok = true;
            for (const auto& f : factors) {
                ok = ok && F.contains(GroupMap(f.Q, F.sylow(), f.alpha.table()));
                if (!(f.Q == F.sylow()))
                    ok = ok && status(F, f.Q).fully_normalized && is_centric(F, f.Q) && is_radical(F, f.Q);
            }
            ok = ok && alperin_compose(F, phi.domain(), factors).table() == phi.table();
            bad += !ok;
        }
    return bad;
}

Outcome c4_alperin() {
    FiniteGroup S4 = catalog::symmetric(4), GL = catalog::gl2(3), SD = catalog::semidihedral(16);
    std::size_t morphisms = 0, bad = 0;
    bad += round_trip_failures(FusionSystem::realize(S4, sylow(S4, 2), 2), morphisms);
    Subgroup S = sylow(GL, 2);
    bad += round_trip_failures(FusionSystem::realize(GL, S, 2), morphisms);
    bad += round_trip_failures(FusionSystem::inner(Subgroup::whole(SD), 2), morphisms);
    return {bad == 0 && S.order() == 16,
            "F_D8(S4), F_SD16(GL2(3)), F_SD16(SD16): " + std::to_string(morphisms) + " morphisms, " +
                std::to_string(bad) + " failures"};
}

Outcome c5_stable() {
    Outcome o;
    const std::pair<FiniteGroup, std::string> cases[] = {
        {catalog::symmetric(3), "S3"}, {catalog::alternating(4), "A4"}, {catalog::symmetric(4), "S4"}};
    for (const auto& [G, name] : cases) {
        auto r = verify_stable_elements(G, sylow(G, 2), 2, 2);
        bool inj = true;
        std::string dims;
        for (const auto& d : r.degrees) {
            inj = inj && d.injective && d.res_rank == d.dim_g && d.image_is_stable && d.policies_agree &&
                  d.dim_stable == d.dim_g;
            dims += (dims.empty() ? "" : ",") + std::to_string(d.dim_g);
        }
        o.pass = o.pass && r.pass && inj && r.degrees.size() == 3;
        o.detail += (o.detail.empty() ? "" : "; ") + name + " H^0..2 = " + dims + (inj ? " kernel 0" : " kernel != 0");
    }
    return o;
}

Outcome c6_linking() {
    Outcome o;
    for (auto [G, name] : {std::pair{catalog::symmetric(4), "S4"}, std::pair{catalog::alternating(4), "A4"}}) {
        Subgroup S = sylow(G, 2);
        FusionSystem F = FusionSystem::realize(G, S, 2);
        for (ObjectPolicy pol : {ObjectPolicy::centric, ObjectPolicy::quasicentric}) {
            auto L = linking_category(G, S, F, pol);
            auto r = verify_axioms(L);
            const bool em = epi_mono_check(L);
            const bool ok = r.ok() && em;
            o.pass = o.pass && ok;
            o.detail += std::string(o.detail.empty() ? "" : "; ") + name + "/" + object_policy_name(pol) + " " +
                        std::to_string(L.size()) + " objects " + (ok ? "ok" : "failed");
        }
    }
    return o;
}

Outcome c7_inverse_limits() {
    std::mt19937_64 rng(20261015);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        InverseSystem sys = random_inverse_system(rng, 6, 40, 12);
        auto r = inverse_limit(sys, sys.sizes.size());
        if (!(r.a_holds && r.b_holds && r.c_holds && r.phi_injective && r.phi_surjective)) ++bad;
    }
    return {bad == 0, "1000 systems (6 levels, |X_i| <= 40, |Gamma| <= 12), " + std::to_string(bad) + " failures"};
}

Outcome c8_tower() {
    auto G = towers::dihedral_type(3, 5);
    auto S = weakly_sylow(G, 3);
    auto T = towers::dihedral_torus(G, S);
    auto rep = fin_saturation_check(G, S, 5, 2, T);
    bool certs = rep.certificates_stabilized;
    for (const auto& rec : rep.subgroups) certs = certs && rec.certificate.stabilized_at.has_value();
    auto w = aut_torus(G, T, 5);
    const bool stab = w.certificate.stabilized_at && *w.certificate.stabilized_at <= 2;
    return {rep.fin_saturated && certs && w.W.size() == 2 && stab,
            std::string("depth 5: ") + (rep.fin_saturated ? "Fin(S)-saturated" : "not Fin(S)-saturated") + ", " +
                std::to_string(rep.subgroups.size()) + " certificates" + (certs ? "" : " (unstabilized)") +
                "; |W| = " + std::to_string(w.W.size()) + " stabilized at level " +
                (w.certificate.stabilized_at ? std::to_string(*w.certificate.stabilized_at) : "none")};
}

Outcome c9_examples() {
    auto H = TowerGroup::constant(catalog::symmetric(3), 2, 2);
    auto G = towers::build_fqh(H, 5);
    auto part_a = towers::fqh_part_a(H, G, 2);
    const bool a = part_a.size() == 2 && part_a[0] && part_a[1];
    const bool quot = quotient_fusion_compare(G, towers::fqh_module(G), weakly_sylow(G, 2), 2).verdict;
    auto L = towers::build_lfs_ext(2, 3, 3);
    auto probe = strongly_artinian_probe(L, 2, 3);
    bool decreasing = probe.centralizer_orders.size() == 3;
    for (std::size_t i = 1; decreasing && i < 3; ++i)
        decreasing = probe.centralizer_orders[i] < probe.centralizer_orders[i - 1];
    std::string chain;
    for (auto c : probe.centralizer_orders) chain += (chain.empty() ? "" : ">") + std::to_string(c);
    return {a && quot && probe.counterexample && decreasing,
            std::string("FqH(S3, q=5) part (a) levels 1-2 ") + (a ? "hold" : "fail") + ", quotient " +
                (quot ? "agrees" : "differs") + "; lfs_ext(2,3,3) centralizers " + chain +
                (probe.counterexample ? " detected" : " not detected")};
}

Outcome c10_classifier() {
    auto C2 = catalog::cyclic(2), C3 = catalog::cyclic(3), S3 = catalog::symmetric(3);
    bool fixed = !direct_sum_classifier({{}, {C2}}, 2, 2).strongly_artinian;
    auto w = direct_sum_classifier({{}, {C3}}, 2, 3);
    fixed = fixed && w.strongly_artinian && w.linear_torsion && w.failed_criteria.empty();
    for (unsigned q : {0u, 2u, 3u, 5u, 7u}) {
        auto s = direct_sum_classifier({{}, {S3}}, 2, q);
        fixed = fixed && !s.linear_torsion &&
                std::count(s.failed_criteria.begin(), s.failed_criteria.end(), 2) == 1;
    }

    const std::vector<FiniteGroup> pool{FiniteGroup(),           catalog::cyclic(2), catalog::cyclic(3),
                                        catalog::cyclic(4),      catalog::cyclic(5), catalog::symmetric(3),
                                        catalog::alternating(4), catalog::dihedral(10)};
    std::mt19937_64 rng(50);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    std::size_t mismatches = 0;
    for (int it = 0; it < 50; ++it) {
        SumDescriptor d;
        for (std::size_t k = pick(4); k > 0; --k) d.prefix.push_back(pool[pick(pool.size())]);
        for (std::size_t k = 1 + pick(3); k > 0; --k) d.pattern.push_back(pool[pick(pool.size())]);
        const unsigned p = std::vector<unsigned>{2, 3, 5}[pick(3)];
        // p-rank of the first L summands; I_p is infinite iff one more period adds rank
        auto rank_upto = [&](std::size_t L) {
            unsigned r = 0;
            for (std::size_t i = 0; i < L; ++i)
                r += p_rank(i < d.prefix.size() ? d.prefix[i] : d.pattern[(i - d.prefix.size()) % d.pattern.size()], p);
            return r;
        };
        const std::size_t L = d.prefix.size() + d.pattern.size();
        mismatches += direct_sum_classifier(d, p, 0).strongly_artinian != (rank_upto(2 * L) == rank_upto(L));
    }
    return {fixed && mismatches == 0, std::string("fixed examples ") + (fixed ? "match" : "differ") +
                                          "; 50 random descriptors, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"realization saturation, corpus |G| <= 100", 120, c1_saturation},
        {"inner system iff normal p-complement", 60, c2_frobenius},
        {"negative saturation controls", 60, c3_negative},
        {"Alperin round trip", 60, c4_alperin},
        {"stable elements, degrees <= 2", 300, c5_stable},
        {"linking axioms for S4 and A4 at p = 2", 120, c6_linking},
        {"inverse limits of random Gamma-sets", 120, c7_inverse_limits},
        {"dihedral 3-tower at depth 5", 180, c8_tower},
        {"FqH and lfs_ext examples", 300, c9_examples},
        {"direct sum classifier", 60, c10_classifier},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.pass && s < c.limit_s;
        failed += !pass;
        std::printf("%s %d %s: %s [%.2fs, limit %.0fs]\n", pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), s,
                    c.limit_s);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
