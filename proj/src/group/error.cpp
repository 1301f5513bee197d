#include "plocal/error.hpp"

namespace plocal {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::bound_exceeded: return "bound_exceeded";
        case ErrorCode::invalid_group: return "invalid_group";
        case ErrorCode::mismatched_parent: return "mismatched_parent";
        case ErrorCode::not_a_subgroup: return "not_a_subgroup";
        case ErrorCode::not_a_p_group: return "not_a_p_group";
        case ErrorCode::not_normal: return "not_normal";
        case ErrorCode::not_abelian: return "not_abelian";
        case ErrorCode::non_injective: return "non_injective";
        case ErrorCode::non_automorphism: return "non_automorphism";
        case ErrorCode::not_saturated: return "not_saturated";
        case ErrorCode::decomposition_not_found: return "decomposition_not_found";
        case ErrorCode::invalid_tower: return "invalid_tower";
        case ErrorCode::inconsistent_torus: return "inconsistent_torus";
        case ErrorCode::invalid_object: return "invalid_object";
        case ErrorCode::invalid_descriptor: return "invalid_descriptor";
        case ErrorCode::root_of_unity_unavailable: return "root_of_unity_unavailable";
        case ErrorCode::not_equivariant: return "not_equivariant";
        case ErrorCode::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

int exit_code_for(ErrorCode c) { return 10 + static_cast<int>(c); }

}  // namespace plocal
