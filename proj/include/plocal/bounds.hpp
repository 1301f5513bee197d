#pragma once

#include <cstddef>
#include <string>

namespace plocal {

// Size limits for every exhaustive computation. Defaults can be overridden
// through PLOCAL_* environment variables (see README).
struct Bounds {
    std::size_t max_group_order = 10000;        // full element enumeration
    std::size_t max_semidirect_order = 2000000; // structural products, scanned not tabled
    std::size_t max_lattice_order = 512;        // full subgroup lattice
    std::size_t max_table_order = 1500;         // multiplication table materialized
    std::size_t assoc_full_check_order = 128;   // exhaustive associativity check for tables
    std::size_t max_iso_search_order = 64;      // fusion isomorphism search
    std::size_t max_cochain_dim = 2048;         // dim C^D of the bar complex
    std::size_t max_cochain_rows = 60000;       // dim C^{D+1}
    std::size_t max_alperin_depth = 16;
    std::size_t max_nerve_simplices = 500000;
    std::size_t max_linking_pairs = 2000000;    // exhaustive checks in verify_axioms

    static const Bounds& defaults();
    static Bounds from_environment();
};

}  // namespace plocal
