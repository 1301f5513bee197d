#include "plocal/galois.hpp"

#include "plocal/error.hpp"
#include "plocal/group_ops.hpp"

namespace plocal {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t a, unsigned p, unsigned k) {
    std::vector<std::uint32_t> d(k);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, unsigned p) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

}  // namespace

GaloisField::GaloisField(unsigned p, unsigned k) : p_(p), k_(k), q_(1) {
    if (!is_prime(p) || k == 0) fail(ErrorCode::invalid_argument, "GF(p^k) needs prime p and k >= 1");
    for (unsigned i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > (1u << 22)) fail(ErrorCode::bound_exceeded, "field too large");
    }
    // search a monic polynomial of degree k for which some element generates the unit group
    modulus_.assign(k + 1, 0);
    modulus_[k] = 1;
    const std::uint32_t n_low = q_;
    for (std::uint32_t low = 0; low < n_low; ++low) {
        auto d = digits(low, p, k);
        for (unsigned i = 0; i < k; ++i) modulus_[i] = d[i];
        if (k > 1 && modulus_[0] == 0) continue;
        // find an element of multiplicative order q-1 under this modulus
        bool field_ok = false;
        for (std::uint32_t g = 1; g < q_ && !field_ok; ++g) {
            std::uint32_t x = g;
            std::uint64_t ord = 1;
            while (x != 1 && ord < q_) {
                x = mul_slow(x, g);
                ++ord;
            }
            if (x == 1 && ord == q_ - 1) {
                gen_ = g;
                field_ok = true;
            }
        }
        if (field_ok || q_ == 2) break;
    }
    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_slow(x, gen_);
    }
}

std::uint32_t GaloisField::mul_slow(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a, p_, k_), db = digits(b, p_, k_);
    std::vector<std::uint64_t> prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
    for (std::size_t deg = 2 * k_ - 1; deg >= k_; --deg) {
        std::uint64_t c = prod[deg] % p_;
        if (c) {
            for (unsigned i = 0; i <= k_; ++i)
                prod[deg - k_ + i] = (prod[deg - k_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        if (deg == k_) break;
    }
    std::vector<std::uint32_t> r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = std::uint32_t(prod[i] % p_);
    return undigits(r, p_);
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a, p_, k_), db = digits(b, p_, k_);
    for (unsigned i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da, p_);
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
    auto da = digits(a, p_, k_);
    for (unsigned i = 0; i < k_; ++i) da[i] = (p_ - da[i]) % p_;
    return undigits(da, p_);
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) fail(ErrorCode::invalid_argument, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::uint64_t GaloisField::mult_order(std::uint32_t a) const {
    if (a == 0) fail(ErrorCode::invalid_argument, "order of zero");
    std::uint64_t ord = 1;
    std::uint32_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

std::vector<std::uint32_t> GaloisField::coords(std::uint32_t a) const { return digits(a, p_, k_); }

std::vector<std::uint32_t> GaloisField::multiplication_matrix(std::uint32_t c) const {
    std::vector<std::uint32_t> M(k_ * k_, 0);
    std::uint32_t basis = 1;
    for (unsigned j = 0; j < k_; ++j, basis *= p_) {
        auto col = digits(mul(c, basis), p_, k_);
        for (unsigned i = 0; i < k_; ++i) M[i * k_ + j] = col[i];
    }
    return M;
}

}  // namespace plocal
