#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plocal/group_ops.hpp"

namespace plocal {

enum class Provenance { realized, generated, centralizer, truncation };
const char* provenance_name(Provenance p);

// A fusion system over a finite p-group S. S is a subgroup of some universe
// group U and every morphism is a GroupMap between subgroups of U lying in S.
// Hom_F(P,S) is stored per source P; Hom_F(P,Q) is the subset with image in Q.
class FusionSystem {
public:
    FusionSystem() = default;

    // F_S(G). S must be a p-subgroup of G (not necessarily Sylow).
    static FusionSystem realize(const FiniteGroup& G, const Subgroup& S, unsigned p,
                                const Bounds& bounds = Bounds::defaults());
    // F_S(S)
    static FusionSystem inner(const Subgroup& S, unsigned p, const Bounds& bounds = Bounds::defaults());
    // Smallest fusion system over S containing the seeds.
    static FusionSystem generate(const Subgroup& S, unsigned p, const std::vector<GroupMap>& seeds,
                                 const Bounds& bounds = Bounds::defaults());
    // Raw builder; homs[i] are image tables of maps subgroups()[i] -> S (any order, deduplicated here).
    // The caller is responsible for the fusion system axioms.
    static FusionSystem from_tables(const Subgroup& S, unsigned p, Provenance prov, std::string detail,
                                    std::vector<std::vector<std::vector<Elem>>> homs,
                                    const Bounds& bounds = Bounds::defaults());

    const Subgroup& sylow() const { return S_; }
    unsigned prime() const { return p_; }
    Provenance provenance() const { return prov_; }
    const std::string& provenance_detail() const { return detail_; }

    // All subgroups of S sorted by (order, members).
    const std::vector<Subgroup>& subgroups() const { return subs_; }
    std::size_t index_of(const Subgroup& P) const;  // throws not_a_subgroup
    std::optional<std::size_t> find_index(std::span<const Elem> sorted_members) const;

    // Hom_F(P,S) with codomain S, sorted by table.
    std::vector<GroupMap> homs(const Subgroup& P) const;
    std::vector<GroupMap> homs(const Subgroup& P, const Subgroup& Q) const;
    std::vector<GroupMap> automorphisms(const Subgroup& P) const;
    std::size_t hom_count(const Subgroup& P, const Subgroup& Q) const;
    std::size_t aut_order(const Subgroup& P) const;
    bool contains(const GroupMap& phi) const;
    std::size_t morphism_count() const;  // sum over P of |Hom_F(P,S)|

    // index-level access
    const std::vector<std::vector<Elem>>& tables(std::size_t i) const { return homs_[i]; }
    const std::vector<std::size_t>& images(std::size_t i) const { return images_[i]; }
    std::size_t normalizer_order(std::size_t i) const { return nS_[i]; }
    std::size_t centralizer_order(std::size_t i) const { return cS_[i]; }
    std::size_t class_of(std::size_t i) const { return class_id_[i]; }
    std::size_t class_count() const { return class_reps_.size(); }
    // representative: max |N_S(P)|, then least member list
    std::size_t class_representative(std::size_t c) const { return class_reps_[c]; }
    std::vector<std::size_t> class_members(std::size_t c) const;

    std::vector<Subgroup> conjugacy_class(const Subgroup& P) const;
    GroupMap map(std::size_t source, std::size_t k) const;

    const Bounds& bounds() const { return bounds_; }

private:
    void finish();

    Subgroup S_;
    unsigned p_ = 0;
    Provenance prov_ = Provenance::generated;
    std::string detail_;
    Bounds bounds_;
    std::vector<Subgroup> subs_;
    std::map<std::vector<Elem>, std::size_t> index_;
    std::vector<std::vector<std::vector<Elem>>> homs_;
    std::vector<std::vector<std::size_t>> images_;
    std::vector<std::size_t> nS_, cS_;
    std::vector<std::size_t> class_id_, class_reps_;
};

// Same S (same universe) and identical morphism sets.
bool operator==(const FusionSystem& a, const FusionSystem& b);

struct SubgroupStatus {
    bool fully_normalized = false;
    bool fully_centralized = false;
    bool fully_automized = false;
    bool receptive = false;
};

struct ReceptivityFailure {
    GroupMap phi;        // phi in Iso_F(Q,P) without extension
    Subgroup n_phi;      // its extension control subgroup
};

SubgroupStatus status(const FusionSystem& F, const Subgroup& P);
// nullopt if receptive
std::optional<ReceptivityFailure> receptivity_failure(const FusionSystem& F, const Subgroup& P);

struct ClassRecord {
    Subgroup representative;
    std::size_t class_size = 0;
    std::size_t aut_order = 0;
    std::size_t out_order = 0;
    SubgroupStatus status;            // of the representative
    Subgroup fully_centralized_witness;
    bool ok = true;
    std::string failing_axiom;        // "sylow:fully_automized", "sylow:fully_centralized", "extension:receptive"
    Subgroup failing_member;
    std::optional<GroupMap> counterexample;
};

struct SaturationReport {
    bool verdict = true;
    std::vector<ClassRecord> classes;
};

SaturationReport is_saturated(const FusionSystem& F);

struct SubgroupClass {
    bool centric = false;
    bool radical = false;
    bool quasicentric = false;
    bool weakly_closed = false;
    bool strongly_closed = false;
};
// Indexed like F.subgroups(). The quasicentric bit is only filled for saturated F.
std::vector<SubgroupClass> classify(const FusionSystem& F);

bool is_centric(const FusionSystem& F, const Subgroup& P);
bool is_radical(const FusionSystem& F, const Subgroup& P);
bool is_weakly_closed(const FusionSystem& F, const Subgroup& P);
bool is_strongly_closed(const FusionSystem& F, const Subgroup& P);

// |Out_F(P)| as |Aut_F(P)| / |Inn(P)| and as the number of Inn(P)-orbits on Aut_F(P).
std::size_t out_order_by_index(const FusionSystem& F, const Subgroup& P);
std::size_t out_order_by_orbits(const FusionSystem& F, const Subgroup& P);

// C_F(Q) over C_S(Q).
FusionSystem centralizer_system(const FusionSystem& F, const Subgroup& Q);

// Both require a saturated F (not_saturated otherwise).
bool is_quasicentric(const FusionSystem& F, const Subgroup& P);
struct StrongQuasicentricity {
    bool value = false;
    bool collapsed = true;  // decided through quasicentric subgroups of P, valid since S is finite
    Subgroup witness;
};
StrongQuasicentricity is_strongly_quasicentric(const FusionSystem& F, const Subgroup& P);

struct AlperinFactor {
    Subgroup Q;        // fully normalized, centric and radical (or S)
    GroupMap alpha;    // in Aut_F(Q)
    Subgroup source;   // alpha is applied to this subgroup of Q
};
// phi = (alpha_k|...) o ... o (alpha_1|source_1). Identity gives an empty list.
std::vector<AlperinFactor> alperin_decompose(const FusionSystem& F, const GroupMap& phi);
GroupMap alperin_compose(const FusionSystem& F, const Subgroup& P, const std::vector<AlperinFactor>& factors);

// alpha: S1 -> S2 an isomorphism; checks alpha F1 alpha^-1 = F2.
bool is_fusion_preserving(const GroupMap& alpha, const FusionSystem& F1, const FusionSystem& F2);
std::optional<GroupMap> find_isomorphism(const FusionSystem& F1, const FusionSystem& F2);

// Aut_F(P) is a p-group for every fully normalized P. Requires saturation.
bool inner_criterion(const FusionSystem& F);
// F = F_S(S), by comparing morphism sets.
bool is_inner(const FusionSystem& F);

}  // namespace plocal
