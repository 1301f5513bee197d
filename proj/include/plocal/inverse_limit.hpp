#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plocal/group.hpp"

namespace plocal {

// Finite Gamma-sets X_1, ..., X_n with equivariant maps chi_i: X_{i+1} -> X_i.
// Points of X_i are 0..sizes[i]-1.
struct InverseSystem {
    FiniteGroup gamma;
    std::vector<std::size_t> sizes;
    std::vector<std::vector<std::size_t>> maps;                  // maps[i][x] = chi_i(x), x in X_{i+1}
    std::vector<std::vector<std::vector<std::size_t>>> action;   // action[i][g][x] = g.x in X_i
};

// Throws not_equivariant or invalid_argument.
void validate(const InverseSystem& sys);

struct InverseLimitResult {
    std::size_t depth = 0;
    // compatible families (x_1, ..., x_depth) extending to every level of the system
    std::vector<std::vector<std::size_t>> families;
    bool nonempty = false;
    bool empty_level = false;
    std::size_t family_orbits = 0;  // |lim(X_i) / Gamma|
    std::size_t orbit_families = 0; // |lim(X_i / Gamma)|
    bool phi_surjective = false;
    bool phi_injective = false;
    bool lift_ok = false;           // the telescoping lift works for every orbit family
    bool free_on_levels = false;
    bool free_on_limit = false;
    // (a) surjective and nonempty, (b) free levels give a free limit, (c) bijective since Gamma is finite
    bool a_holds = false;
    bool b_holds = false;
    bool c_holds = false;
};

InverseLimitResult inverse_limit(const InverseSystem& sys, std::size_t depth);

// Gamma from the small corpus (|Gamma| <= max_gamma), X_i unions of coset spaces.
InverseSystem random_inverse_system(std::mt19937_64& rng, std::size_t levels, std::size_t max_points,
                                    std::size_t max_gamma);

}  // namespace plocal
