#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plocal/fusion.hpp"
#include "plocal/tower.hpp"

namespace plocal {

// Objects are subgroups of G; Mor(P,Q) = {g : g P g^-1 <= Q}, composed by multiplication.
class TransporterCategory {
public:
    TransporterCategory() = default;
    TransporterCategory(const FiniteGroup& G, std::vector<Subgroup> objects);

    const FiniteGroup& group() const { return G_; }
    const std::vector<Subgroup>& objects() const { return objects_; }
    std::size_t size() const { return objects_.size(); }
    // sorted
    const std::vector<Elem>& morphisms(std::size_t i, std::size_t j) const { return mor_[i * size() + j]; }
    // h o g
    Elem compose(Elem h, Elem g) const { return G_.mul(h, g); }

private:
    FiniteGroup G_;
    std::vector<Subgroup> objects_;
    std::vector<std::vector<Elem>> mor_;
};

// Every object must be a subgroup of S (not_a_subgroup otherwise).
TransporterCategory transporter_category(const FiniteGroup& G, const Subgroup& S, std::vector<Subgroup> objects);

// Morphisms are numbered 0..n-1; compose(g, f) = g o f needs target(f) = source(g).
struct SmallCategory {
    std::size_t objects = 0;
    std::vector<std::size_t> source, target;
    std::vector<std::size_t> identity;  // per object
    std::function<std::size_t(std::size_t, std::size_t)> compose;

    std::size_t morphism_count() const { return source.size(); }
};

// The monoid M as a one-object category.
SmallCategory one_object_category(const FiniteGroup& M);

enum class ObjectPolicy { quasicentric, centric };
const char* object_policy_name(ObjectPolicy p);

// The subgroup divided out of T_G(P,Q). Only o_p_centralizer gives a linking
// system; the other two exist for mutation tests.
enum class KernelPolicy { o_p_centralizer, trivial, centralizer };

// Mor(P,Q) = T_G(P,Q) / K_P with K_P = O^p(C_G(P)). A coset g K_P is stored as
// its least element.
class LinkingCategory {
public:
    LinkingCategory() = default;

    const FiniteGroup& group() const { return G_; }
    const Subgroup& sylow() const { return F_.sylow(); }
    const FusionSystem& fusion() const { return F_; }
    unsigned prime() const { return F_.prime(); }
    ObjectPolicy policy() const { return policy_; }
    KernelPolicy kernel_policy() const { return kpolicy_; }

    const std::vector<Subgroup>& objects() const { return objects_; }
    std::size_t size() const { return objects_.size(); }
    std::optional<std::size_t> find_object(const Subgroup& P) const;
    const Subgroup& kernel(std::size_t i) const { return kernels_[i]; }

    // sorted coset representatives
    const std::vector<Elem>& morphisms(std::size_t i, std::size_t j) const { return mor_[i * size() + j]; }
    std::size_t morphism_count() const;
    // least element of g K_i
    Elem canonical(std::size_t i, Elem g) const;
    // [psi] o [phi] for phi in Mor(i,j), psi in Mor(j,k)
    Elem compose(std::size_t i, Elem psi, Elem phi) const { return canonical(i, G_.mul(psi, phi)); }
    Elem delta(std::size_t i, Elem s) const { return canonical(i, s); }
    GroupMap pi(std::size_t i, std::size_t j, Elem rep) const {
        return GroupMap::conjugation(objects_[i], objects_[j], rep);
    }

    SmallCategory as_category() const;

private:
    friend LinkingCategory linking_category(const FiniteGroup&, const Subgroup&, const FusionSystem&,
                                            std::vector<Subgroup>, ObjectPolicy, KernelPolicy);
    FiniteGroup G_;
    FusionSystem F_;
    ObjectPolicy policy_ = ObjectPolicy::centric;
    KernelPolicy kpolicy_ = KernelPolicy::o_p_centralizer;
    std::vector<Subgroup> objects_;
    std::vector<Subgroup> kernels_;
    std::vector<std::vector<Elem>> mor_;
};

// F must be realize(G, S, p) and saturated (not_saturated otherwise).
// Objects are all F-centric or all F-quasicentric subgroups of S.
LinkingCategory linking_category(const FiniteGroup& G, const Subgroup& S, const FusionSystem& F,
                                 ObjectPolicy policy, KernelPolicy kernel = KernelPolicy::o_p_centralizer);
// Explicit objects; each must satisfy the policy (invalid_object otherwise).
LinkingCategory linking_category(const FiniteGroup& G, const Subgroup& S, const FusionSystem& F,
                                 std::vector<Subgroup> objects, ObjectPolicy policy,
                                 KernelPolicy kernel = KernelPolicy::o_p_centralizer);

struct AxiomReport {
    bool composition_well_defined = true;  // g^-1 K_Q g <= K_P for every morphism
    bool axiom_a = true;
    bool axiom_b = true;
    bool axiom_c = true;
    bool counting_identity = true;
    bool pi_surjective = true;
    bool fully_centralized_objects = true;
    std::string c_mode = "exhaustive";  // or "generators"
    std::vector<std::string> failures;

    bool ok() const {
        return composition_well_defined && axiom_a && axiom_b && axiom_c && counting_identity && pi_surjective &&
               fully_centralized_objects;
    }
};

AxiomReport verify_axioms(const LinkingCategory& L, const Bounds& bounds = Bounds::defaults());

// Every morphism is a monomorphism and an epimorphism. bound_exceeded if the
// number of compositions is above max_linking_pairs.
bool epi_mono_check(const SmallCategory& C, const Bounds& bounds = Bounds::defaults());
bool epi_mono_check(const LinkingCategory& L, const Bounds& bounds = Bounds::defaults());

struct SourceRegularObject {
    std::size_t kernel_order = 0;
    bool p_prime = false;
    bool free = false;
    bool orbit_map = false;
};
struct SourceRegularReport {
    bool ok = true;
    std::vector<SourceRegularObject> objects;
};
// tau: T -> L, g -> [g]. T and L must have the same objects.
SourceRegularReport source_regular_check(const TransporterCategory& T, const LinkingCategory& L);

// Linking data over a tower truncated at depth: Mor(P,Q) is the set of compatible
// families ([g_1], ..., [g_depth]) with g_i in T_{G_N}(P_i, Q_N) / O^p(C_{G_N}(P_i)).
struct TowerLinking {
    std::size_t depth = 0;
    std::size_t window = 2;
    ObjectPolicy policy = ObjectPolicy::quasicentric;
    std::vector<SubTower> objects;
    LinkingCategory top;  // finite linking category of G_N
    // indexed a * objects.size() + b; each family lists coset representatives per level
    std::vector<std::vector<std::vector<Elem>>> families;
    std::vector<StabilizationCertificate> certificates;
};
TowerLinking tower_linking(const TowerGroup& G, const SubTower& S, std::vector<SubTower> objects, std::size_t depth,
                           ObjectPolicy policy, std::size_t window = 2);

struct TelescopicReport {
    bool value = true;
    // least level i < depth with P_i an object of the top category
    std::vector<std::optional<std::size_t>> witness_level;
};
TelescopicReport is_telescopic(const TowerLinking& L);

// k-simplices are chains f_1, ..., f_k with target(f_i) = source(f_{i+1});
// 0-simplices are objects.
struct Nerve {
    std::size_t max_dim = 0;
    std::vector<std::vector<std::vector<std::size_t>>> simplices;
    // faces[k][s][i] indexes d_i(s) among the (k-1)-simplices
    std::vector<std::vector<std::vector<std::size_t>>> faces;
    // degeneracies[k][s][i] indexes s_i(s) among the (k+1)-simplices, k < max_dim
    std::vector<std::vector<std::vector<std::size_t>>> degeneracies;
    std::vector<std::size_t> nondegenerate;
};
Nerve export_nerve(const SmallCategory& C, std::size_t max_dim, const Bounds& bounds = Bounds::defaults());
void write_nerve(std::ostream& out, const Nerve& N, const std::string& name);

}  // namespace plocal
