#include "plocal/linking.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plocal {

TransporterCategory::TransporterCategory(const FiniteGroup& G, std::vector<Subgroup> objects)
    : G_(G), objects_(std::move(objects)) {
    for (const Subgroup& P : objects_)
        if (!P.parent().same_as(G_)) fail(ErrorCode::mismatched_parent, "transporter object in a different group");
    mor_.resize(size() * size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) mor_[i * size() + j] = transporter(G_, objects_[i], objects_[j]);
}

TransporterCategory transporter_category(const FiniteGroup& G, const Subgroup& S, std::vector<Subgroup> objects) {
    for (const Subgroup& P : objects)
        if (!S.contains(P)) fail(ErrorCode::not_a_subgroup, "transporter object is not contained in S");
    return TransporterCategory(G, std::move(objects));
}

SmallCategory one_object_category(const FiniteGroup& M) {
    SmallCategory C;
    C.objects = 1;
    C.source.assign(M.order(), 0);
    C.target.assign(M.order(), 0);
    C.identity = {0};
    C.compose = [M](std::size_t g, std::size_t f) { return std::size_t(M.mul(Elem(g), Elem(f))); };
    return C;
}

const char* object_policy_name(ObjectPolicy p) {
    return p == ObjectPolicy::centric ? "centric" : "quasicentric";
}

std::optional<std::size_t> LinkingCategory::find_object(const Subgroup& P) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == P) return i;
    return std::nullopt;
}

std::size_t LinkingCategory::morphism_count() const {
    std::size_t n = 0;
    for (const auto& m : mor_) n += m.size();
    return n;
}

Elem LinkingCategory::canonical(std::size_t i, Elem g) const {
    Elem best = g;
    for (Elem k : kernels_[i].members()) best = std::min(best, G_.mul(g, k));
    return best;
}

SmallCategory LinkingCategory::as_category() const {
    auto L = std::make_shared<const LinkingCategory>(*this);
    const std::size_t n = size();
    // offset[i*n+j] = first morphism number of Mor(i,j)
    auto offset = std::make_shared<std::vector<std::size_t>>(n * n + 1, 0);
    SmallCategory C;
    C.objects = n;
    C.identity.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& m = morphisms(i, j);
            (*offset)[i * n + j + 1] = (*offset)[i * n + j] + m.size();
            for (std::size_t k = 0; k < m.size(); ++k) {
                C.source.push_back(i);
                C.target.push_back(j);
            }
            if (i == j) C.identity[i] = (*offset)[i * n + i] + (std::lower_bound(m.begin(), m.end(), Elem(0)) - m.begin());
        }
    auto src = std::make_shared<std::vector<std::size_t>>(C.source);
    auto tgt = std::make_shared<std::vector<std::size_t>>(C.target);
    C.compose = [L, offset, src, tgt, n](std::size_t g, std::size_t f) {
        const std::size_t i = (*src)[f], j = (*tgt)[f], k = (*tgt)[g];
        const Elem phi = L->morphisms(i, j)[f - (*offset)[i * n + j]];
        const Elem psi = L->morphisms(j, k)[g - (*offset)[j * n + k]];
        const auto& m = L->morphisms(i, k);
        const Elem c = L->compose(i, psi, phi);
        return (*offset)[i * n + k] + std::size_t(std::lower_bound(m.begin(), m.end(), c) - m.begin());
    };
    return C;
}

namespace {

Subgroup kernel_for(const FiniteGroup& G, const Subgroup& P, unsigned p, KernelPolicy policy) {
    switch (policy) {
    case KernelPolicy::trivial: return Subgroup::trivial(G);
    case KernelPolicy::centralizer: return centralizer(G, P);
    case KernelPolicy::o_p_centralizer: break;
    }
    const Subgroup C = centralizer(G, P);
    return lift_subgroup(C, o_upper_p(as_group(C), p));
}

std::vector<Subgroup> policy_objects(const FusionSystem& F, ObjectPolicy policy) {
    const auto cls = classify(F);
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (policy == ObjectPolicy::centric ? cls[i].centric : cls[i].quasicentric) out.push_back(F.subgroups()[i]);
    return out;
}

bool fully_centralized(const FusionSystem& F, std::size_t idx) {
    std::size_t best = 0;
    for (std::size_t m : F.class_members(F.class_of(idx))) best = std::max(best, F.centralizer_order(m));
    return F.centralizer_order(idx) == best;
}

std::string name_of(const Subgroup& P) {
    std::string s = "{";
    for (std::size_t k = 0; k < P.members().size(); ++k) s += (k ? "," : "") + std::to_string(P.members()[k]);
    return s + "}";
}

}  // namespace

LinkingCategory linking_category(const FiniteGroup& G, const Subgroup& S, const FusionSystem& F,
                                 std::vector<Subgroup> objects, ObjectPolicy policy, KernelPolicy kernel) {
    if (!(F.sylow() == S)) fail(ErrorCode::invalid_argument, "fusion system is not over S");
    if (!S.parent().same_as(G)) fail(ErrorCode::mismatched_parent, "S is not a subgroup of G");
    if (!(F == FusionSystem::realize(G, S, F.prime(), F.bounds())))
        fail(ErrorCode::invalid_argument, "fusion system is not realized by G");
    if (!is_saturated(F).verdict) fail(ErrorCode::not_saturated, "linking category needs a saturated fusion system");
    const auto cls = classify(F);
    for (const Subgroup& P : objects) {
        const std::size_t idx = F.index_of(P);
        if (policy == ObjectPolicy::centric ? !cls[idx].centric : !cls[idx].quasicentric)
            fail(ErrorCode::invalid_object,
                 std::string("object is not ") + object_policy_name(policy) + ": " + name_of(P));
    }
    LinkingCategory L;
    L.G_ = G;
    L.F_ = F;
    L.policy_ = policy;
    L.kpolicy_ = kernel;
    L.objects_ = std::move(objects);
    const std::size_t n = L.objects_.size();
    for (const Subgroup& P : L.objects_) L.kernels_.push_back(kernel_for(G, P, F.prime(), kernel));
    L.mor_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::set<Elem> reps;
            for (Elem g : transporter(G, L.objects_[i], L.objects_[j])) reps.insert(L.canonical(i, g));
            L.mor_[i * n + j].assign(reps.begin(), reps.end());
        }
    return L;
}

LinkingCategory linking_category(const FiniteGroup& G, const Subgroup& S, const FusionSystem& F,
                                 ObjectPolicy policy, KernelPolicy kernel) {
    if (!is_saturated(F).verdict) fail(ErrorCode::not_saturated, "linking category needs a saturated fusion system");
    return linking_category(G, S, F, policy_objects(F, policy), policy, kernel);
}

AxiomReport verify_axioms(const LinkingCategory& L, const Bounds& bounds) {
    AxiomReport r;
    const FiniteGroup& G = L.group();
    const FusionSystem& F = L.fusion();
    const Subgroup& S = L.sylow();
    const std::size_t n = L.size();
    auto note = [&](bool& flag, std::string msg) {
        flag = false;
        r.failures.push_back(std::move(msg));
    };

    std::size_t c_pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c_pairs += L.morphisms(i, j).size() * L.objects()[i].order();
    const bool c_full = c_pairs <= bounds.max_linking_pairs;
    r.c_mode = c_full ? "exhaustive" : "generators";

    std::vector<bool> fc(n);
    for (std::size_t i = 0; i < n; ++i) fc[i] = fully_centralized(F, F.index_of(L.objects()[i]));

    for (std::size_t i = 0; i < n; ++i) {
        const Subgroup& P = L.objects()[i];
        const Subgroup CS = centralizer(S, P);
        for (std::size_t j = 0; j < n; ++j) {
            const Subgroup& Q = L.objects()[j];
            const auto& mor = L.morphisms(i, j);
            const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";

            for (Elem g : mor) {
                const Elem gi = G.inv(g);
                for (Elem k : L.kernel(j).members())
                    if (!L.kernel(i).contains(G.mul(G.mul(gi, k), g))) {
                        note(r.composition_well_defined, "kernel containment fails for " + pair);
                        break;
                    }
            }

            std::set<std::vector<Elem>> images;
            for (Elem g : mor) images.insert(L.pi(i, j, g).table());
            std::set<std::vector<Elem>> homs;
            for (const GroupMap& phi : F.homs(P, Q)) homs.insert(phi.table());
            if (images != homs) note(r.pi_surjective, "pi(Mor" + pair + ") differs from Hom_F");

            if (fc[i]) {
                // orbits of C_S(P) acting by [g] -> [g z]
                std::map<Elem, std::size_t> orbit;
                std::size_t orbits = 0;
                bool free = true, fibers = true;
                std::map<std::vector<Elem>, std::size_t> fiber_orbit;
                for (Elem g : mor) {
                    if (orbit.count(g)) continue;
                    for (Elem z : CS.members()) {
                        const Elem gz = L.canonical(i, G.mul(g, z));
                        if (z != 0 && gz == g) free = false;
                        orbit[gz] = orbits;
                    }
                    auto [it, fresh] = fiber_orbit.emplace(L.pi(i, j, g).table(), orbits);
                    if (!fresh) fibers = false;  // two orbits over one morphism of F
                    ++orbits;
                }
                for (Elem g : mor)
                    if (fiber_orbit.at(L.pi(i, j, g).table()) != orbit.at(g)) fibers = false;
                if (!free) note(r.axiom_a, "C_S(P) does not act freely on Mor" + pair);
                if (!fibers || orbits != homs.size()) note(r.axiom_a, "Mor" + pair + "/C_S(P) is not Hom_F");
                if (mor.size() != CS.order() * homs.size())
                    note(r.counting_identity, "|Mor" + pair + "| != |C_S(P)| |Hom_F|");
            }

            for (Elem s : transporter(S, P, Q))
                if (!(L.pi(i, j, L.delta(i, s)) == GroupMap::conjugation(P, Q, s))) {
                    note(r.axiom_b, "pi(delta(s)) != c_s on " + pair);
                    break;
                }

            const std::vector<Elem> gens = c_full ? std::vector<Elem>(P.members().begin(), P.members().end())
                                                  : std::vector<Elem>(P.generators().begin(), P.generators().end());
            bool c_ok = true;
            for (Elem psi : mor) {
                const GroupMap f = L.pi(i, j, psi);
                for (Elem g : gens)
                    if (L.compose(i, psi, L.delta(i, g)) != L.compose(i, L.delta(j, f(g)), psi)) c_ok = false;
            }
            if (!c_ok) note(r.axiom_c, "psi o delta(g) != delta(pi(psi)(g)) o psi on " + pair);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j)
            found = fc[j] && L.objects()[i].order() == L.objects()[j].order() && !L.morphisms(i, j).empty();
        if (!found) note(r.fully_centralized_objects, "object " + std::to_string(i) + " has no fully centralized iso");
    }
    return r;
}

bool epi_mono_check(const SmallCategory& C, const Bounds& bounds) {
    const std::size_t m = C.morphism_count();
    std::vector<std::vector<std::size_t>> by_pair(C.objects * C.objects);
    for (std::size_t f = 0; f < m; ++f) by_pair[C.source[f] * C.objects + C.target[f]].push_back(f);
    std::size_t work = 0;
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t r = 0; r < C.objects; ++r)
            work += by_pair[r * C.objects + C.source[f]].size() + by_pair[C.target[f] * C.objects + r].size();
    if (work > bounds.max_linking_pairs) fail(ErrorCode::bound_exceeded, "epi/mono check exceeds max_linking_pairs");
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t r = 0; r < C.objects; ++r) {
            std::set<std::size_t> seen;
            for (std::size_t g : by_pair[r * C.objects + C.source[f]])
                if (!seen.insert(C.compose(f, g)).second) return false;  // not mono
            seen.clear();
            for (std::size_t h : by_pair[C.target[f] * C.objects + r])
                if (!seen.insert(C.compose(h, f)).second) return false;  // not epi
        }
    return true;
}

bool epi_mono_check(const LinkingCategory& L, const Bounds& bounds) { return epi_mono_check(L.as_category(), bounds); }

SourceRegularReport source_regular_check(const TransporterCategory& T, const LinkingCategory& L) {
    if (T.objects() != L.objects()) fail(ErrorCode::invalid_argument, "transporter and linking objects differ");
    SourceRegularReport r;
    const std::size_t n = L.size();
    for (std::size_t i = 0; i < n; ++i) {
        SourceRegularObject o;
        const Elem one = L.canonical(i, 0);
        std::vector<Elem> K;
        for (Elem g : T.morphisms(i, i))
            if (L.canonical(i, g) == one) K.push_back(g);
        o.kernel_order = K.size();
        o.p_prime = K.size() % L.prime() != 0;
        o.free = true;
        o.orbit_map = true;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& mor = T.morphisms(i, j);
            std::set<Elem> image;
            for (Elem g : mor) {
                const Elem t = L.canonical(i, g);
                image.insert(t);
                for (Elem k : K) {
                    const Elem gk = T.compose(g, k);
                    if (k != 0 && gk == g) o.free = false;
                    if (L.canonical(i, gk) != t) o.orbit_map = false;
                }
            }
            // distinct orbits have distinct images
            if (mor.size() != K.size() * image.size()) o.orbit_map = false;
            if (image != std::set<Elem>(L.morphisms(i, j).begin(), L.morphisms(i, j).end())) o.orbit_map = false;
        }
        r.ok = r.ok && o.p_prime && o.free && o.orbit_map;
        r.objects.push_back(o);
    }
    return r;
}

TowerLinking tower_linking(const TowerGroup& G, const SubTower& S, std::vector<SubTower> objects, std::size_t depth,
                           ObjectPolicy policy, std::size_t window) {
    if (depth == 0 || depth > G.size()) fail(ErrorCode::invalid_argument, "depth must lie in 1..levels");
    const FiniteGroup& top = G.top();
    const Subgroup& S_top = S.top_image(G.top_index());
    for (const SubTower& P : objects)
        if (!S.contains(P)) fail(ErrorCode::not_a_subgroup, "tower object is not contained in S");
    const FusionSystem F = FusionSystem::realize(top, S_top, G.prime());
    TowerLinking T;
    T.depth = depth;
    T.window = window;
    T.policy = policy;
    T.top = linking_category(top, S_top, F, policy);
    const std::size_t n = objects.size();
    const unsigned p = G.prime();
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Subgroup> kernels;
        for (std::size_t i = 0; i < depth; ++i)
            kernels.push_back(kernel_for(top, objects[a].top_image(i), p, KernelPolicy::o_p_centralizer));
        auto canon = [&](std::size_t i, Elem g) {
            Elem best = g;
            for (Elem k : kernels[i].members()) best = std::min(best, top.mul(g, k));
            return best;
        };
        for (std::size_t b = 0; b < n; ++b) {
            const Subgroup& Q = objects[b].top_image(G.top_index());
            InverseSystem sys;
            std::vector<std::vector<Elem>> points(depth);
            for (std::size_t i = 0; i < depth; ++i) {
                std::set<Elem> reps;
                for (Elem g : transporter(top, objects[a].top_image(i), Q)) reps.insert(canon(i, g));
                points[i].assign(reps.begin(), reps.end());
                sys.sizes.push_back(points[i].size());
                sys.action.push_back({std::vector<std::size_t>(points[i].size())});
                std::iota(sys.action.back()[0].begin(), sys.action.back()[0].end(), std::size_t(0));
            }
            std::vector<bool> bij;
            for (std::size_t i = 0; i + 1 < depth; ++i) {
                std::vector<std::size_t> m;
                for (Elem g : points[i + 1]) {
                    const Elem c = canon(i, g);
                    m.push_back(std::lower_bound(points[i].begin(), points[i].end(), c) - points[i].begin());
                }
                bij.push_back(std::set<std::size_t>(m.begin(), m.end()).size() == points[i].size() &&
                              m.size() == points[i].size());
                sys.maps.push_back(std::move(m));
            }
            const auto lim = inverse_limit(sys, depth);
            std::vector<std::vector<Elem>> fams;
            for (const auto& f : lim.families) {
                std::vector<Elem> v;
                for (std::size_t i = 0; i < depth; ++i) v.push_back(points[i][f[i]]);
                fams.push_back(std::move(v));
            }
            T.families.push_back(std::move(fams));
            std::vector<std::uint64_t> values;
            for (std::size_t s : sys.sizes) values.push_back(s);
            T.certificates.push_back(StabilizationCertificate::from_values(
                "|Mor(P_i, Q)| for objects " + std::to_string(a) + "," + std::to_string(b), std::move(values), window,
                std::move(bij)));
        }
    }
    T.objects = std::move(objects);
    return T;
}

TelescopicReport is_telescopic(const TowerLinking& L) {
    TelescopicReport r;
    for (const SubTower& P : L.objects) {
        std::optional<std::size_t> w;
        for (std::size_t i = 0; i < L.depth && !w; ++i)
            if (L.top.find_object(P.top_image(i))) w = i;
        r.value = r.value && w.has_value();
        r.witness_level.push_back(w);
    }
    return r;
}

}  // namespace plocal
