#pragma once

#include <string>
#include <vector>

#include "plocal/group.hpp"

namespace plocal::catalog {

FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t order);  // order 2n
// C_m x| C_s, generator b acting by a -> a^r (r^s = 1 mod m); elements a^i b^j <-> i + m*j
FiniteGroup metacyclic(std::size_t m, std::size_t r, std::size_t s, std::string label = {});
FiniteGroup dicyclic(std::size_t order);  // Q_8 = dicyclic(8)
FiniteGroup semidihedral(std::size_t order);
FiniteGroup modular(std::size_t order);  // M_{2^n}
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup elementary_abelian(unsigned p, unsigned rank);
FiniteGroup sl2(unsigned q);
FiniteGroup gl2(unsigned q);
FiniteGroup pgl2(unsigned p, unsigned k);  // PGL_2(p^k) on the projective line
FiniteGroup heisenberg(unsigned p);        // order p^3, exponent p for odd p

// Names such as "S4", "D8", "C2xC4", "SD16", "GL2(3)", "C7:C3", "A4xC2".
FiniteGroup by_name(const std::string& name);

struct CorpusEntry {
    std::string name;
    FiniteGroup group;
};
// Bundled corpus of small groups (orders <= 100).
std::vector<CorpusEntry> small_corpus();

}  // namespace plocal::catalog
