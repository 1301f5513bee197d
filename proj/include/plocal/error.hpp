#pragma once

#include <stdexcept>
#include <string>

namespace plocal {

enum class ErrorCode {
    parse_error = 1,
    bound_exceeded,
    invalid_group,
    mismatched_parent,
    not_a_subgroup,
    not_a_p_group,
    not_normal,
    not_abelian,
    non_injective,
    non_automorphism,
    not_saturated,
    decomposition_not_found,
    invalid_tower,
    inconsistent_torus,
    invalid_object,
    invalid_descriptor,
    root_of_unity_unavailable,
    not_equivariant,
    invalid_argument,
};

const char* error_code_name(ErrorCode c);

// Distinct process exit code for each error kind; 0 is reserved for computed verdicts.
int exit_code_for(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace plocal
