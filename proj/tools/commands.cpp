#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "plocal/catalog.hpp"
#include "plocal/cohomology.hpp"
#include "plocal/group_io.hpp"
#include "plocal/linking.hpp"
#include "plocal/tower_examples.hpp"
#include "plocal/tower_io.hpp"

namespace plocal::cli {

namespace {

json members(const Subgroup& P) { return json(std::vector<Elem>(P.members().begin(), P.members().end())); }

json certificate_json(const StabilizationCertificate& c) {
    json j{{"quantity", c.quantity}, {"values", c.values}, {"window", c.window}};
    j["stabilized_at"] = c.stabilized_at ? json(*c.stabilized_at) : json(nullptr);
    if (!c.bijective.empty()) j["bijective"] = std::vector<bool>(c.bijective.begin(), c.bijective.end());
    return j;
}

FiniteGroup need_group(const JobConfig& c) {
    if (c.group.empty()) fail(ErrorCode::invalid_argument, "--group is required");
    return io::load_group(c.group);
}

Subgroup pick_sylow(const FiniteGroup& G, const JobConfig& c, const std::string& which) {
    if (which == "auto") return sylow(G, c.p);
    return io::load_subgroup(G, which);
}

io::LoadedTower need_tower(const std::string& path, const char* flag) {
    if (path.empty()) fail(ErrorCode::invalid_argument, std::string(flag) + " is required");
    return io::load_tower(path);
}

json saturation_json(const SaturationReport& r) {
    json classes = json::array();
    for (const ClassRecord& c : r.classes) {
        json j{{"representative", members(c.representative)},
               {"class_size", c.class_size},
               {"aut_order", c.aut_order},
               {"out_order", c.out_order},
               {"fully_normalized", c.status.fully_normalized},
               {"fully_centralized", c.status.fully_centralized},
               {"ok", c.ok}};
        if (!c.ok) {
            j["failing_axiom"] = c.failing_axiom;
            j["failing_member"] = members(c.failing_member);
        }
        classes.push_back(std::move(j));
    }
    return json{{"verdict", r.verdict}, {"classes", classes}};
}

json fusion_cmd(const JobConfig& c) {
    const FiniteGroup G = need_group(c);
    if (c.verb == "frobenius") {
        const auto F = FusionSystem::realize(G, sylow(G, c.p), c.p, c.bounds);
        const bool inner = is_inner(F), npc = has_normal_p_complement(G, c.p);
        return json{{"inner", inner}, {"normal_p_complement", npc}, {"agree", inner == npc}};
    }
    const Subgroup S = pick_sylow(G, c, c.sylow);
    const auto F = FusionSystem::realize(G, S, c.p, c.bounds);
    if (c.verb == "saturate-check") return saturation_json(is_saturated(F));
    if (c.verb == "classify") {
        const auto cls = classify(F);
        json subs = json::array();
        for (std::size_t i = 0; i < cls.size(); ++i)
            subs.push_back({{"members", members(F.subgroups()[i])},
                            {"centric", cls[i].centric},
                            {"radical", cls[i].radical},
                            {"quasicentric", cls[i].quasicentric},
                            {"weakly_closed", cls[i].weakly_closed},
                            {"strongly_closed", cls[i].strongly_closed}});
        return json{{"subgroups", subs}, {"classes", F.class_count()}};
    }
    if (c.verb == "alperin") {
        std::size_t total = 0, failures = 0, longest = 0;
        for (const Subgroup& P : F.subgroups())
            for (const GroupMap& phi : F.homs(P)) {
                const auto factors = alperin_decompose(F, phi);
                longest = std::max(longest, factors.size());
                ++total;
                if (!(alperin_compose(F, P, factors) == phi)) ++failures;
            }
        return json{{"morphisms", total}, {"failures", failures}, {"longest_decomposition", longest},
                    {"verdict", failures == 0}};
    }
    fail(ErrorCode::invalid_argument, "unknown fusion verb '" + c.verb + "'");
}

ObjectPolicy parse_policy(const std::string& s) {
    if (s == "centric") return ObjectPolicy::centric;
    if (s == "quasicentric") return ObjectPolicy::quasicentric;
    fail(ErrorCode::invalid_argument, "--policy must be centric or quasicentric");
}

json linking_cmd(const JobConfig& c) {
    const FiniteGroup G = need_group(c);
    const Subgroup S = pick_sylow(G, c, c.sylow);
    const auto F = FusionSystem::realize(G, S, c.p, c.bounds);
    const auto L = linking_category(G, S, F, parse_policy(c.policy));
    if (c.verb == "verify") {
        const auto r = verify_axioms(L, c.bounds);
        const auto T = transporter_category(G, S, L.objects());
        const auto sr = source_regular_check(T, L);
        json objects = json::array();
        for (std::size_t i = 0; i < L.size(); ++i)
            objects.push_back({{"members", members(L.objects()[i])},
                               {"aut_order", L.morphisms(i, i).size()},
                               {"kernel_order", L.kernel(i).order()}});
        return json{{"policy", c.policy},
                    {"objects", objects},
                    {"morphisms", L.morphism_count()},
                    {"composition_well_defined", r.composition_well_defined},
                    {"axiom_a", r.axiom_a},
                    {"axiom_b", r.axiom_b},
                    {"axiom_c", r.axiom_c},
                    {"axiom_c_mode", r.c_mode},
                    {"counting_identity", r.counting_identity},
                    {"pi_surjective", r.pi_surjective},
                    {"fully_centralized_objects", r.fully_centralized_objects},
                    {"failures", r.failures},
                    {"epi_mono", epi_mono_check(L, c.bounds)},
                    {"source_regular", sr.ok},
                    {"verdict", r.ok()}};
    }
    if (c.verb == "nerve") {
        const auto N = export_nerve(L.as_category(), c.max_dim, c.bounds);
        if (!c.nerve_out.empty()) {
            std::ofstream out(c.nerve_out);
            if (!out) fail(ErrorCode::invalid_argument, "cannot write '" + c.nerve_out + "'");
            write_nerve(out, N, G.label() + " " + c.policy + " linking category");
        }
        json counts = json::array();
        for (std::size_t k = 0; k <= c.max_dim; ++k)
            counts.push_back({{"dim", k}, {"simplices", N.simplices[k].size()}, {"nondegenerate", N.nondegenerate[k]}});
        return json{{"policy", c.policy}, {"max_dim", c.max_dim}, {"counts", counts}};
    }
    fail(ErrorCode::invalid_argument, "unknown linking verb '" + c.verb + "'");
}

std::vector<FiniteGroup> parse_group_list(const std::string& s) {
    std::vector<FiniteGroup> out;
    std::stringstream in(s);
    std::string name;
    while (std::getline(in, name, ','))
        if (!name.empty()) out.push_back(catalog::by_name(name));
    return out;
}

json tower_cmd(const JobConfig& c) {
    if (c.verb == "inverse-limit") {
        std::mt19937_64 rng(c.seed);
        std::size_t a = 0, b = 0, cc = 0;
        for (std::size_t k = 0; k < c.count; ++k) {
            const auto sys = random_inverse_system(rng, c.levels, c.max_points, c.max_gamma);
            const auto r = inverse_limit(sys, sys.sizes.size());
            a += r.a_holds;
            b += r.b_holds;
            cc += r.c_holds;
        }
        return json{{"systems", c.count}, {"a_holds", a}, {"b_holds", b}, {"c_holds", cc},
                    {"verdict", a == c.count && b == c.count && cc == c.count}};
    }
    if (c.verb == "classify-sum") {
        const SumDescriptor d{parse_group_list(c.prefix), parse_group_list(c.pattern)};
        const auto v = direct_sum_classifier(d, c.p, c.q);
        return json{{"strongly_artinian", v.strongly_artinian},
                    {"linear_torsion", v.linear_torsion},
                    {"failed_criteria", v.failed_criteria},
                    {"infinite_primes", v.infinite_primes}};
    }
    const auto lt = need_tower(c.tower, "--tower");
    const TowerGroup& G = lt.tower;
    if (c.verb == "probe") {
        const auto r = strongly_artinian_probe(G, c.p, c.depth, c.window);
        return json{{"counterexample", r.counterexample},
                    {"centralizer_orders", r.centralizer_orders},
                    {"strict_decreases", r.strict_decreases},
                    {"status", r.status}};
    }
    const SubTower S = weakly_sylow(G, G.prime());
    const auto torus = io::torus_of(lt, S);
    if (c.verb == "fin-saturation") {
        const auto r = fin_saturation_check(G, S, c.depth, c.window, torus);
        json subs = json::array();
        for (const auto& s : r.subgroups)
            subs.push_back({{"level", s.level},
                            {"members", members(s.subgroup)},
                            {"ok", s.ok},
                            {"failing_axiom", s.failing_axiom},
                            {"certificate", certificate_json(s.certificate)}});
        json chains = json::array();
        for (const auto& ch : r.chains) chains.push_back(certificate_json(ch));
        json j{{"status", r.status},
               {"fin_saturated", r.fin_saturated},
               {"certificates_stabilized", r.certificates_stabilized},
               {"saturated_conditional", r.saturated_conditional},
               {"subgroups", subs},
               {"chains", chains}};
        if (r.continuity)
            j["continuity"] = {{"centralizer_orders", r.continuity->centralizer_orders},
                               {"realizing_counts", r.continuity->realizing_counts},
                               {"label", r.continuity->label}};
        return j;
    }
    if (c.verb == "aut-torus") {
        if (!torus) fail(ErrorCode::inconsistent_torus, "the tower file declares no torus");
        const auto r = aut_torus(G, *torus, c.depth, c.window);
        return json{{"W_order", r.W.size()},
                    {"certificate", certificate_json(r.certificate)},
                    {"kernel_orders", r.kernel_orders},
                    {"conclusive", r.conclusive},
                    {"status", truncation_status(c.depth, c.window)}};
    }
    if (c.verb == "realizability") {
        const auto w = seq_realizability_witness(G, S, c.depth);
        return json{{"nested", std::vector<bool>(w.nested.begin(), w.nested.end())},
                    {"appearance_level", w.appearance_level},
                    {"union_certified", w.union_certified}};
    }
    fail(ErrorCode::invalid_argument, "unknown tower verb '" + c.verb + "'");
}

json stable_json(const StableElementsReport& r) {
    json degs = json::array();
    for (const auto& d : r.degrees)
        degs.push_back({{"degree", d.degree},
                        {"dim_G", d.dim_g},
                        {"dim_S", d.dim_s},
                        {"dim_stable", d.dim_stable},
                        {"res_rank", d.res_rank},
                        {"kernel_rank", d.dim_g - d.res_rank},
                        {"injective", d.injective},
                        {"image_is_stable", d.image_is_stable},
                        {"policies_agree", d.policies_agree}});
    return json{{"pass", r.pass}, {"degrees", degs}};
}

json cohomology_cmd(const JobConfig& c) {
    if (c.verb == "lim") {
        const auto lt = need_tower(c.tower, "--tower");
        const auto r = lim_fin_cohomology(lt.tower, c.p, c.deg, c.depth, c.window, c.bounds);
        return json{{"certificate", certificate_json(r.certificate)},
                    {"image_ranks", r.image_ranks},
                    {"complete", r.complete},
                    {"error", r.error}};
    }
    const FiniteGroup G = need_group(c);
    if (c.verb == "hstar") return json{{"dims", h_star(G, c.p, c.maxdeg, c.bounds).dims()}};
    if (c.verb == "stable") return stable_json(verify_stable_elements(G, pick_sylow(G, c, c.sub), c.p, c.maxdeg, c.bounds));
    fail(ErrorCode::invalid_argument, "unknown cohomology verb '" + c.verb + "'");
}

json examples_cmd(const JobConfig& c) {
    if (c.verb == "fqh") {
        const auto H = need_tower(c.h_tower, "--H").tower;
        if (c.q == 0) fail(ErrorCode::invalid_argument, "-q is required");
        const TowerGroup G = towers::build_fqh(H, c.q);
        if (c.check == "part-a") {
            const auto v = towers::fqh_part_a(H, G, c.depth);
            json levels = json::array();
            for (std::size_t i = 0; i < v.size(); ++i) levels.push_back({{"level", i + 1}, {"equal", bool(v[i])}});
            return json{{"levels", levels}, {"verdict", std::all_of(v.begin(), v.end(), [](bool b) { return b; })}};
        }
        if (c.check == "quotient") {
            const auto r = quotient_fusion_compare(G, towers::fqh_module(G), weakly_sylow(G, H.prime()), c.depth);
            json levels = json::array();
            for (const auto& l : r.levels) levels.push_back({{"level", l.level}, {"fusion_preserving", l.fusion_preserving}});
            return json{{"levels", levels}, {"verdict", r.verdict}};
        }
        fail(ErrorCode::invalid_argument, "--check must be part-a or quotient");
    }
    if (c.verb == "lfs-ext") {
        if (c.q == 0) fail(ErrorCode::invalid_argument, "-q is required");
        const TowerGroup G = towers::build_lfs_ext(c.p, c.q, c.depth);
        const auto r = strongly_artinian_probe(G, c.p, c.depth, c.window);
        json orders = json::array();
        for (std::size_t i = 0; i < G.size(); ++i) orders.push_back(G.level(i).order());
        return json{{"level_orders", orders},
                    {"centralizer_orders", r.centralizer_orders},
                    {"counterexample", r.counterexample},
                    {"status", r.status}};
    }
    fail(ErrorCode::invalid_argument, "unknown examples verb '" + c.verb + "'");
}

json corpus_cmd(const JobConfig& c) {
    std::vector<std::filesystem::path> files;
    if (c.dir.empty()) fail(ErrorCode::invalid_argument, "--dir is required");
    if (!std::filesystem::is_directory(c.dir)) fail(ErrorCode::invalid_argument, "not a directory: " + c.dir);
    for (const auto& e : std::filesystem::directory_iterator(c.dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    json results = json::array();
    std::size_t failures = 0, checks = 0;
    for (const auto& f : files) {
        const FiniteGroup G = io::load_group(f);
        if (G.order() > c.max_order) continue;
        for (unsigned p : prime_divisors(G.order())) {
            bool ok;
            if (c.suite == "frobenius") {
                ok = is_inner(FusionSystem::realize(G, sylow(G, p), p, c.bounds)) == has_normal_p_complement(G, p);
            } else if (c.suite == "saturation") {
                ok = is_saturated(FusionSystem::realize(G, sylow(G, p), p, c.bounds)).verdict;
            } else if (c.suite == "cartan-eilenberg") {
                ok = verify_stable_elements(G, sylow(G, p), p, c.maxdeg, c.bounds).pass;
            } else {
                fail(ErrorCode::invalid_argument, "--suite must be frobenius, saturation or cartan-eilenberg");
            }
            ++checks;
            failures += !ok;
            results.push_back({{"input", f.filename().string()}, {"order", G.order()}, {"p", p}, {"ok", ok}});
        }
    }
    return json{{"suite", c.suite}, {"inputs", files.size()}, {"checks", checks}, {"failures", failures},
                {"results", results}};
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

json run(const JobConfig& c) {
    if (c.area != "tower" && c.area != "corpus" && !is_prime(c.p)) fail(ErrorCode::invalid_argument, "-p must be a prime");
    if (c.depth == 0) fail(ErrorCode::invalid_argument, "--depth must be at least 1");
    if (c.area == "fusion") return fusion_cmd(c);
    if (c.area == "linking") return linking_cmd(c);
    if (c.area == "tower") return tower_cmd(c);
    if (c.area == "cohomology") return cohomology_cmd(c);
    if (c.area == "examples") return examples_cmd(c);
    if (c.area == "corpus") return corpus_cmd(c);
    fail(ErrorCode::invalid_argument, "unknown command '" + c.area + "'");
}

std::string render_human(const json& report) {
    std::ostringstream out;
    flatten(report, "", out);
    return out.str();
}

}  // namespace plocal::cli
