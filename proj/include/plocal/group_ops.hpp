#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plocal/group.hpp"

namespace plocal {

// Prime utilities
bool is_prime(std::uint64_t n);
std::vector<unsigned> prime_divisors(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, unsigned p);
// p if n is a power of a single prime p (n > 1), nullopt otherwise
std::optional<unsigned> prime_of_power(std::uint64_t n);
bool is_p_group(const Subgroup& P, unsigned p);

Subgroup centralizer(const Subgroup& ambient, const Subgroup& P);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& P);
Subgroup normalizer(const Subgroup& ambient, const Subgroup& P);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& P);
Subgroup conjugate(const Subgroup& P, Elem g);  // g P g^-1
bool is_normal(const Subgroup& ambient, const Subgroup& N);
Subgroup join(const Subgroup& A, const Subgroup& B);
Subgroup intersection(const Subgroup& A, const Subgroup& B);
Subgroup center(const Subgroup& P);
Subgroup derived_subgroup(const Subgroup& P);

// {g in ambient : g P g^-1 <= Q}, sorted
std::vector<Elem> transporter(const Subgroup& ambient, const Subgroup& P, const Subgroup& Q);
std::vector<Elem> transporter(const FiniteGroup& G, const Subgroup& P, const Subgroup& Q);
// Distinct conjugation maps P -> Q by elements of the ambient, sorted by table.
std::vector<GroupMap> hom_g(const Subgroup& ambient, const Subgroup& P, const Subgroup& Q);
std::vector<GroupMap> hom_g(const FiniteGroup& G, const Subgroup& P, const Subgroup& Q);

Subgroup sylow(const FiniteGroup& G, unsigned p);
// A Sylow p-subgroup of the ambient containing the p-subgroup P.
Subgroup sylow_containing(const Subgroup& ambient, const Subgroup& P, unsigned p);

// All subgroups of K (lattice), sorted by (order, members). K.order() <= max_lattice_order.
std::vector<Subgroup> all_subgroups(const Subgroup& K, const Bounds& bounds = Bounds::defaults());
std::vector<Subgroup> p_subgroups(const FiniteGroup& G, unsigned p, bool up_to_conjugacy,
                                  const Bounds& bounds = Bounds::defaults());

Subgroup o_upper_p(const FiniteGroup& G, unsigned p);
Subgroup o_lower_p(const Subgroup& ambient, unsigned p);  // largest normal p-subgroup
bool has_normal_p_complement(const FiniteGroup& G, unsigned p);

struct Quotient {
    FiniteGroup group;
    std::vector<Elem> projection;  // element of G -> element of G/N
    std::vector<Elem> section;     // minimal coset representative of each element of G/N
};
Quotient quotient(const FiniteGroup& G, const Subgroup& N, const Bounds& bounds = Bounds::defaults());
Quotient quotient(const Subgroup& ambient, const Subgroup& N, const Bounds& bounds = Bounds::defaults());

Subgroup omega(const Subgroup& A, unsigned i);
Subgroup frattini(const Subgroup& P);
// Intersection of maximal subgroups through the lattice; used as an independent route.
Subgroup frattini_by_lattice(const Subgroup& P, const Bounds& bounds = Bounds::defaults());

using Matrix = std::vector<std::uint32_t>;  // row-major, square

// F_q^dim x| H; action[k] is the matrix of gens[k], acting on column vectors.
FiniteGroup semidirect(unsigned q, std::size_t dim, const FiniteGroup& H, std::span<const Elem> gens,
                       const std::vector<Matrix>& action, std::string label = {},
                       const Bounds& bounds = Bounds::defaults());
// Same with gens = H.generators().
FiniteGroup semidirect(unsigned q, std::size_t dim, const FiniteGroup& H, const std::vector<Matrix>& action,
                       std::string label = {}, const Bounds& bounds = Bounds::defaults());
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, std::string label = {},
                           const Bounds& bounds = Bounds::defaults());

// The subgroup as a group in its own right: element i <-> S.members()[i].
FiniteGroup as_group(const Subgroup& S, std::string label = {}, const Bounds& bounds = Bounds::defaults());
// Image of a subgroup of as_group(S) back in S.parent().
Subgroup lift_subgroup(const Subgroup& S, const Subgroup& inner);
// Subgroup of as_group(S) corresponding to a subgroup of S.parent() contained in S.
Subgroup lower_subgroup(const FiniteGroup& universe, const Subgroup& S, const Subgroup& sub);

// Isomorphisms G1 -> G2 (whole groups), enumerated by generator images.
void for_each_isomorphism(const FiniteGroup& G1, const FiniteGroup& G2,
                          const std::function<bool(const GroupMap&)>& visit);
std::optional<GroupMap> find_group_isomorphism(const FiniteGroup& G1, const FiniteGroup& G2);

// max rank of an elementary abelian r-subgroup
unsigned p_rank(const FiniteGroup& G, unsigned r, const Bounds& bounds = Bounds::defaults());

std::uint64_t exponent(const FiniteGroup& G);

}  // namespace plocal
