#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plocal/bounds.hpp"
#include "plocal/error.hpp"

namespace plocal {

// Elements of a finite group are canonical indices 0..|G|-1; 0 is the identity.
using Elem = std::uint32_t;
using Point = std::uint32_t;

enum class Representation { permutation, table, semidirect, rule };

const char* representation_name(Representation r);

namespace detail {
struct GroupData;
struct SubgroupData;
}  // namespace detail

class FiniteGroup;

// F_q^dim x| H with elements (v, h) encoded as v + q^dim * h, v read in base q
// with coordinate 0 least significant.
struct SemidirectInfo {
    unsigned q = 0;
    std::size_t dim = 0;
    std::uint64_t module_order = 1;
    std::shared_ptr<const FiniteGroup> acting;
    // one dim x dim matrix (row-major, acting on column vectors) per element of H
    std::vector<std::vector<std::uint32_t>> matrices;
};

class FiniteGroup {
public:
    using MulFn = std::function<Elem(Elem, Elem)>;
    using InvFn = std::function<Elem(Elem)>;

    FiniteGroup();  // trivial group

    // Generators are images of points 0..degree-1. Elements are ordered with the
    // identity first, then lexicographically by image list.
    static FiniteGroup from_permutations(std::size_t degree,
                                         const std::vector<std::vector<Point>>& generators,
                                         std::string label = {},
                                         const Bounds& bounds = Bounds::defaults());
    // table[a][b] = a*b, element 0 must be the identity.
    static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table, std::string label = {},
                                  const Bounds& bounds = Bounds::defaults());
    static FiniteGroup from_rule(std::size_t order, MulFn mul, InvFn inv, std::vector<Elem> generators,
                                 std::string label = {});
    static FiniteGroup from_semidirect(SemidirectInfo info, std::string label = {},
                                       const Bounds& bounds = Bounds::defaults());

    std::size_t order() const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t k) const;
    Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
    std::uint64_t element_order(Elem a) const;

    std::span<const Elem> generators() const;
    Representation representation() const;
    const std::string& label() const;
    bool same_as(const FiniteGroup& other) const { return d_ == other.d_; }
    bool is_abelian() const;

    // permutation representation only
    std::size_t degree() const;
    std::span<const Point> permutation(Elem a) const;
    std::optional<Elem> find_permutation(std::span<const Point> images) const;

    // semidirect representation only
    const SemidirectInfo* semidirect_info() const;

private:
    explicit FiniteGroup(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::GroupData> d_;
};

class Subgroup {
public:
    Subgroup() = default;
    static Subgroup generated(const FiniteGroup& G, std::span<const Elem> gens);
    // Validates closure; throws not_a_subgroup otherwise.
    static Subgroup from_members(const FiniteGroup& G, std::vector<Elem> members);
    // No closure check; members must already form a subgroup.
    static Subgroup trusted(const FiniteGroup& G, std::vector<Elem> members);
    static Subgroup whole(const FiniteGroup& G);
    static Subgroup trivial(const FiniteGroup& G);

    const FiniteGroup& parent() const;
    std::span<const Elem> members() const;  // sorted
    std::size_t order() const;
    bool contains(Elem x) const;
    bool contains(const Subgroup& other) const;
    // A small generating set, computed greedily from the sorted members.
    std::span<const Elem> generators() const;
    // position of x in members(); x must be a member
    std::size_t position(Elem x) const;
    bool valid() const { return d_ != nullptr; }

    friend bool operator==(const Subgroup& a, const Subgroup& b);
    // order first, then member list
    friend bool operator<(const Subgroup& a, const Subgroup& b);

private:
    std::shared_ptr<const detail::SubgroupData> d_;
    friend struct SubgroupBuilder;
};

// A homomorphism between subgroups, stored as the image of each domain member
// in the order of domain.members().
class GroupMap {
public:
    GroupMap() = default;
    GroupMap(Subgroup domain, Subgroup codomain, std::vector<Elem> table);
    // Same as the constructor but verifies the table is a homomorphism into codomain.
    static GroupMap checked(Subgroup domain, Subgroup codomain, std::vector<Elem> table);
    // Extends generator images to a homomorphism; throws invalid_argument if not well defined.
    static GroupMap from_generator_images(const Subgroup& domain, const Subgroup& codomain,
                                          std::span<const Elem> gens, std::span<const Elem> images);
    static GroupMap conjugation(const Subgroup& P, const Subgroup& Q, Elem g);
    static GroupMap inclusion(const Subgroup& P, const Subgroup& Q);
    static GroupMap identity(const Subgroup& P) { return inclusion(P, P); }

    const Subgroup& domain() const { return domain_; }
    const Subgroup& codomain() const { return codomain_; }
    const std::vector<Elem>& table() const { return table_; }
    Elem operator()(Elem x) const { return table_[domain_.position(x)]; }
    bool injective() const;
    bool is_homomorphism() const;
    Subgroup image() const;
    // this o first ; first.codomain elements must lie in this->domain
    GroupMap after(const GroupMap& first) const;
    GroupMap restrict_to(const Subgroup& sub) const;
    GroupMap with_codomain(const Subgroup& cod) const;
    // inverse of an injective map, as a map image() -> domain()
    GroupMap inverse() const;

    friend bool operator==(const GroupMap& a, const GroupMap& b) {
        return a.domain_ == b.domain_ && a.table_ == b.table_;
    }

private:
    Subgroup domain_;
    Subgroup codomain_;
    std::vector<Elem> table_;
};

}  // namespace plocal
