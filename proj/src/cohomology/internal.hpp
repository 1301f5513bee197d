#pragma once

#include "plocal/cohomology.hpp"

namespace plocal {

std::uint32_t fp_inv(std::uint32_t a, unsigned p);
// y += c x
void fp_axpy(FpVec& y, std::uint32_t c, const FpVec& x, unsigned p);
std::vector<FpVec> reduced_echelon(std::vector<FpVec> rows, unsigned p);

}  // namespace plocal
