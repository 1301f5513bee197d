#pragma once

#include "plocal/tower.hpp"

namespace plocal::towers {

// C_p <= C_{p^2} <= ... <= C_{p^n}
TowerGroup cyclic_p(unsigned p, std::size_t n);
// C_{p^i} x| C_2 with inversion, i = 1..n. A 2-tower for p = 2.
TowerGroup dihedral_type(unsigned p, std::size_t n);
// Rotations of the top level met with S, as the torus of a dihedral_type tower.
TorusData dihedral_torus(const TowerGroup& G, const SubTower& S);
// S_from <= ... <= S_to, fixing the new points
TowerGroup symmetric(std::size_t from, std::size_t to, unsigned p);
// PGL_2(p) <= PGL_2(p^k) as the subfield subgroup
TowerGroup pgl2_pair(unsigned p, unsigned k, unsigned tower_prime);
// G_1 <= G_1 x G_2 <= G_1 x G_2 x G_3 ...
TowerGroup direct_sum(const std::vector<FiniteGroup>& factors, unsigned p);

// Level i is F_q[H_i] x| H_i with H_i acting by left translation.
TowerGroup build_fqh(const TowerGroup& H, unsigned q);
// elements (v, 1) and (0, h)
SubTower fqh_module(const TowerGroup& G);
SubTower fqh_complement(const TowerGroup& G);
// Per level i < depth: h -> (0, h) is fusion preserving from F_{S_i}(H_i) to
// F_{S_i}(G_i), S the weakly Sylow chain of H. G = build_fqh(H, q).
std::vector<bool> fqh_part_a(const TowerGroup& H, const TowerGroup& G, std::size_t depth);

// Least m with p^depth | q^m - 1.
unsigned lfs_minimal_degree(unsigned p, unsigned q, std::size_t depth);
// Level i is (F_{q^m})^i x| Omega_i(K), u acting on coordinate j by u^{p^j}.
// field_degree 0 picks lfs_minimal_degree.
TowerGroup build_lfs_ext(unsigned p, unsigned q, std::size_t depth, unsigned field_degree = 0);

}  // namespace plocal::towers
