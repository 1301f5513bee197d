#pragma once

#include <cstdint>
#include <vector>

namespace plocal {

// GF(p^k). Elements are 0..q-1, read as polynomials in base p (coefficient of x^0 least significant).
class GaloisField {
public:
    GaloisField(unsigned p, unsigned k);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t size() const { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t primitive() const { return gen_; }
    std::uint64_t mult_order(std::uint32_t a) const;
    // Matrix over F_p (k x k, row-major, acting on coordinate columns) of x -> c*x.
    std::vector<std::uint32_t> multiplication_matrix(std::uint32_t c) const;
    // Coordinates of a in base p.
    std::vector<std::uint32_t> coords(std::uint32_t a) const;

private:
    unsigned p_, k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;  // monic irreducible, degree k, low to high
    std::uint32_t gen_ = 1;
    std::vector<std::uint32_t> log_, exp_;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
};

}  // namespace plocal
