#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "plocal/fusion.hpp"
#include "plocal/inverse_limit.hpp"

namespace plocal {

enum class TowerKind { ambient, p_tower };
const char* tower_kind_name(TowerKind k);

// G_1 <= G_2 <= ... <= G_N given by injective embeddings G_i -> G_{i+1}.
// Levels are indexed from 0 in the API; reports print them from 1.
class TowerGroup {
public:
    TowerGroup() = default;
    // embeddings[i][x] is the image in G_{i+1} of x in G_i.
    TowerGroup(std::vector<FiniteGroup> levels, std::vector<std::vector<Elem>> embeddings, unsigned p, TowerKind kind,
               std::string label = {});
    static TowerGroup constant(const FiniteGroup& G, std::size_t n, unsigned p, std::string label = {});

    std::size_t size() const { return levels_.size(); }
    std::size_t top_index() const { return levels_.size() - 1; }
    const FiniteGroup& level(std::size_t i) const { return levels_.at(i); }
    const FiniteGroup& top() const { return levels_.back(); }
    const std::vector<Elem>& embedding(std::size_t i) const { return emb_.at(i); }
    unsigned prime() const { return p_; }
    TowerKind kind() const { return kind_; }
    const std::string& label() const { return label_; }

    Elem embed(Elem x, std::size_t from, std::size_t to) const;
    Elem to_top(Elem x, std::size_t from) const { return top_[from][x]; }
    // preimage of y in G_to under the composite embedding, if any
    std::optional<Elem> pull(Elem y, std::size_t from, std::size_t to) const;
    Subgroup push(const Subgroup& P, std::size_t from, std::size_t to) const;
    Subgroup push_top(const Subgroup& P, std::size_t from) const { return push(P, from, top_index()); }
    // {x in G_to : image of x at level from lies in P}
    Subgroup pull(const Subgroup& P, std::size_t from, std::size_t to) const;

private:
    std::vector<FiniteGroup> levels_;
    std::vector<std::vector<Elem>> emb_;
    std::vector<std::vector<Elem>> top_;
    std::vector<std::vector<Elem>> from_top_;  // top element -> level element, or no_elem
    unsigned p_ = 0;
    TowerKind kind_ = TowerKind::ambient;
    std::string label_;
};

inline constexpr Elem no_elem = ~Elem(0);

// Level-wise subgroups P_i <= G_i with the image of P_i inside P_{i+1}.
class SubTower {
public:
    SubTower() = default;
    SubTower(const TowerGroup& G, std::vector<Subgroup> levels);
    static SubTower whole(const TowerGroup& G);
    static SubTower trivial(const TowerGroup& G);
    // P_i = pull of a top-level subgroup
    static SubTower from_top(const TowerGroup& G, const Subgroup& top);

    std::size_t size() const { return levels_.size(); }
    const Subgroup& at(std::size_t i) const { return levels_.at(i); }
    const std::vector<Subgroup>& levels() const { return levels_; }
    // images in the top level
    const Subgroup& top_image(std::size_t i) const { return tops_.at(i); }
    bool contains(const SubTower& other) const;

private:
    std::vector<Subgroup> levels_;
    std::vector<Subgroup> tops_;
};

// Declared torus approximants T_i <= S_i and the rank of the limit torus.
struct TorusData {
    SubTower torus;
    unsigned rank = 0;
};
// T_i = S_i meet the pull of T_top.
TorusData torus_from_top(const TowerGroup& G, const SubTower& S, const Subgroup& T_top, unsigned rank);
// The unique cyclic subgroup of P of the given order; invalid_argument if absent or not unique.
Subgroup unique_cyclic_subgroup(const Subgroup& P, std::size_t order);

struct POrder {
    unsigned rank = 0;
    std::uint64_t index = 1;
    friend auto operator<=>(const POrder&, const POrder&) = default;
};

// values[k] belongs to level k+1. stabilized_at is 1-based: the least k with
// values constant on levels k..n and k + window <= n.
struct StabilizationCertificate {
    std::string quantity;
    std::vector<std::uint64_t> values;
    std::vector<bool> bijective;  // restriction from level k+2 to level k+1 bijective; empty if not tracked
    std::optional<std::size_t> stabilized_at;
    std::size_t window = 2;

    static StabilizationCertificate from_values(std::string quantity, std::vector<std::uint64_t> values,
                                                std::size_t window, std::vector<bool> bijective = {});
};

std::string truncation_status(std::size_t depth, std::size_t window);

POrder p_order(const TowerGroup& G, const SubTower& S, const TorusData& torus, std::size_t at);

// S_1 in Syl_p(G_1), S_{i+1} a Sylow subgroup of G_{i+1} containing the image of S_i.
SubTower weakly_sylow(const TowerGroup& G, unsigned p);
// The sub-tower as a p-tower in its own right.
TowerGroup restrict_tower(const TowerGroup& G, const SubTower& P, TowerKind kind = TowerKind::p_tower);

// Compatible phi_i in Hom_{G_N}(P_i, Q_N), i < depth, found through inverse_limit.
std::optional<std::vector<GroupMap>> local_conjugation(const TowerGroup& G, const SubTower& P, const SubTower& Q,
                                                       std::size_t depth);

struct ClosureHom {
    // each family lists phi_1..phi_depth as maps at the top level
    std::vector<std::vector<GroupMap>> families;
    StabilizationCertificate certificate;
};
// X_i = Hom_{G_N}(P_i, Q); families at depth that extend to every level.
ClosureHom closure_hom(const TowerGroup& G, const SubTower& P, const Subgroup& Q, std::size_t depth,
                       std::size_t window = 2);

struct ContinuityWitness {
    std::vector<std::size_t> chain_orders;
    std::vector<std::size_t> centralizer_orders;  // |C_{G_N}(P_i)|, strictly decreasing
    std::vector<std::size_t> hom_counts;          // |Hom_{G_N}(P_i, G_N)|
    std::vector<std::size_t> min_fiber;           // least point inverse of X_{i+1} -> X_i
    std::vector<GroupMap> family;                 // phi_i, diverging from the first branch at every step
    std::vector<std::size_t> realizing_counts;    // |{g in G_N : c_g = phi_i on P_i}|
    std::string label = "non-realization verified at top level only";
};
// Uses the chain A_i = images of S_i; nullopt when centralizers do not strictly decrease.
std::optional<ContinuityWitness> continuity_witness(const TowerGroup& G, const SubTower& S, std::size_t depth);

struct FinSubgroupRecord {
    std::size_t level = 0;  // first level (1-based) whose Sylow contains the subgroup
    Subgroup subgroup;      // at the top level
    SubgroupStatus status;
    bool ok = true;
    std::string failing_axiom;
    StabilizationCertificate certificate;  // |Hom(P meet S_i, S_N)| along the tower
};

struct FinSaturationReport {
    std::size_t depth = 0;
    std::size_t window = 2;
    bool fin_saturated = true;
    bool certificates_stabilized = true;
    bool saturated_conditional = false;  // fin_saturated and every certificate stabilized
    std::string status;
    std::vector<FinSubgroupRecord> subgroups;
    std::vector<StabilizationCertificate> chains;  // S and, if declared, T
    std::optional<ContinuityWitness> continuity;
};
FinSaturationReport fin_saturation_check(const TowerGroup& G, const SubTower& S, std::size_t depth,
                                         std::size_t window = 2, const std::optional<TorusData>& torus = {});

struct AutTorusResult {
    std::vector<GroupMap> W;  // Aut_F(T_k) at the stabilization level, on the top-level image
    StabilizationCertificate certificate;                // |Aut_F(T_i)|
    std::vector<bool> restriction_surjective;            // R_{i,1}
    std::vector<std::size_t> kernel_orders;              // |Ker R_{i,1}|
    std::vector<bool> kernel_p_group;
    std::vector<std::size_t> step_kernel_orders;         // |Ker R_{i+1,i}|, i >= 1
    bool conclusive = false;
};
AutTorusResult aut_torus(const TowerGroup& G, const TorusData& torus, std::size_t depth, std::size_t window = 2);

struct EntryLevel {
    std::optional<std::size_t> level;
    std::size_t depth = 0;
    std::vector<std::size_t> failures;  // per n = 1..depth, number of (P, phi) with phi(P) outside T
};
EntryLevel torus_entry_level(const TowerGroup& G, const SubTower& S, const TorusData& torus, const SubTower& U,
                             std::size_t depth);

struct ArtinianProbe {
    bool counterexample = false;
    std::vector<Subgroup> chain;  // top-level images A_1 <= A_2 <= ...
    std::vector<std::size_t> centralizer_orders;
    std::size_t strict_decreases = 0;
    std::string status;
};
ArtinianProbe strongly_artinian_probe(const TowerGroup& G, unsigned p, std::size_t depth, std::size_t window = 2);

struct SumDescriptor {
    std::vector<FiniteGroup> prefix;
    std::vector<FiniteGroup> pattern;  // repeats forever, must be nonempty
};
struct SumVerdict {
    bool strongly_artinian = false;
    bool linear_torsion = false;
    std::vector<int> failed_criteria;  // among 1, 2, 3
    std::vector<unsigned> infinite_primes;  // primes r with I_r infinite
};
// q = 0 means characteristic zero.
SumVerdict direct_sum_classifier(const SumDescriptor& d, unsigned p, unsigned q);

struct QuotientLevel {
    std::size_t level = 0;
    bool fusion_preserving = false;
};
struct QuotientComparison {
    bool verdict = true;
    std::vector<QuotientLevel> levels;
};
QuotientComparison quotient_fusion_compare(const TowerGroup& G, const SubTower& N, const SubTower& S,
                                           std::size_t depth);

struct RealizabilityWitness {
    std::vector<FusionSystem> systems;  // F_i = F_{S_i}(G_i)
    std::vector<bool> nested;           // F_i <= F_{i+1} under the embedding
    // per subgroup of the image of S_depth at the top: least level whose system realizes all its top morphisms
    std::vector<std::size_t> appearance_level;
    bool union_certified = false;
};
RealizabilityWitness seq_realizability_witness(const TowerGroup& G, const SubTower& S, std::size_t depth);

}  // namespace plocal
