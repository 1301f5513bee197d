#pragma once

#include <algorithm>
#include <vector>

#include "plocal/fusion.hpp"

namespace plocal::fusion_detail {

// t is aligned with P.members(); returns t(x) for x in P
inline Elem apply(const Subgroup& P, const std::vector<Elem>& t, Elem x) { return t[P.position(x)]; }

inline std::vector<Elem> sorted_copy(const std::vector<Elem>& t) {
    std::vector<Elem> s = t;
    std::sort(s.begin(), s.end());
    return s;
}

// Tables of Aut_F(P), sorted; the identity comes first.
std::vector<std::vector<Elem>> aut_tables(const FusionSystem& F, std::size_t i);
// Aut_F(P) as an abstract group, element k <-> aut_tables(F,i)[k], mul(a,b) = a o b.
FiniteGroup aut_group(const FusionSystem& F, std::size_t i);
// Tables of Aut_S(P) = conjugations by N_S(P), sorted.
std::vector<std::vector<Elem>> aut_s_tables(const FusionSystem& F, std::size_t i);

std::size_t inn_order(const Subgroup& P);
bool centric_in_s(const FusionSystem& F, std::size_t i);  // C_S(P) <= P
bool centric_index(const FusionSystem& F, std::size_t i);
bool radical_index(const FusionSystem& F, std::size_t i);
bool fully_normalized_index(const FusionSystem& F, std::size_t i);
bool fully_centralized_index(const FusionSystem& F, std::size_t i);
bool quasicentric_unchecked(const FusionSystem& F, std::size_t i);
void require_saturated(const FusionSystem& F, const char* what);

}  // namespace plocal::fusion_detail
