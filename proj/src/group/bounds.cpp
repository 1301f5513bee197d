#include "plocal/bounds.hpp"

#include <cstdlib>
#include <string>

#include "plocal/error.hpp"

namespace plocal {

namespace {

void read_env(const char* name, std::size_t& slot) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (*end != '\0' || x == 0) fail(ErrorCode::invalid_argument, std::string("bad value for ") + name);
    slot = static_cast<std::size_t>(x);
}

}  // namespace

Bounds Bounds::from_environment() {
    Bounds b;
    read_env("PLOCAL_MAX_GROUP_ORDER", b.max_group_order);
    read_env("PLOCAL_MAX_SEMIDIRECT_ORDER", b.max_semidirect_order);
    read_env("PLOCAL_MAX_LATTICE_ORDER", b.max_lattice_order);
    read_env("PLOCAL_MAX_TABLE_ORDER", b.max_table_order);
    read_env("PLOCAL_ASSOC_FULL_CHECK_ORDER", b.assoc_full_check_order);
    read_env("PLOCAL_MAX_ISO_SEARCH_ORDER", b.max_iso_search_order);
    read_env("PLOCAL_MAX_COCHAIN_DIM", b.max_cochain_dim);
    read_env("PLOCAL_MAX_COCHAIN_ROWS", b.max_cochain_rows);
    read_env("PLOCAL_MAX_ALPERIN_DEPTH", b.max_alperin_depth);
    read_env("PLOCAL_MAX_NERVE_SIMPLICES", b.max_nerve_simplices);
    read_env("PLOCAL_MAX_LINKING_PAIRS", b.max_linking_pairs);
    return b;
}

const Bounds& Bounds::defaults() {
    static const Bounds b = from_environment();
    return b;
}

}  // namespace plocal
