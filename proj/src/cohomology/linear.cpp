#include <algorithm>

#include "plocal/cohomology.hpp"
#include "internal.hpp"

namespace plocal {

std::uint32_t fp_inv(std::uint32_t a, unsigned p) {
    std::uint64_t r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return std::uint32_t(r);
}

void fp_axpy(FpVec& y, std::uint32_t c, const FpVec& x, unsigned p) {
    if (c == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i]) y[i] = std::uint32_t((y[i] + std::uint64_t(c) * x[i]) % p);
}

std::vector<FpVec> reduced_echelon(std::vector<FpVec> rows, unsigned p) {
    std::vector<FpVec> out;
    if (rows.empty()) return out;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::uint32_t inv = fp_inv(rows[r][c], p);
        for (auto& x : rows[r]) x = std::uint32_t(std::uint64_t(x) * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c]) fp_axpy(rows[i], p - rows[i][c], rows[r], p);
        ++r;
    }
    rows.resize(r);
    return rows;
}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
    FpMatrix M(p, n, n);
    for (std::size_t i = 0; i < n; ++i) M.at(i, i) = 1;
    return M;
}

FpVec FpMatrix::column(std::size_t j) const {
    FpVec v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

FpMatrix operator*(const FpMatrix& A, const FpMatrix& B) {
    if (A.cols != B.rows || A.p != B.p) fail(ErrorCode::invalid_argument, "matrix dimensions do not match");
    FpMatrix C(A.p, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k)
            if (const std::uint64_t a = A.at(i, k))
                for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) = std::uint32_t((C.at(i, j) + a * B.at(k, j)) % A.p);
    return C;
}

std::size_t rank(const FpMatrix& A) {
    std::vector<FpVec> rows;
    for (std::size_t i = 0; i < A.rows; ++i) rows.emplace_back(A.a.begin() + i * A.cols, A.a.begin() + (i + 1) * A.cols);
    return reduced_echelon(std::move(rows), A.p).size();
}

std::vector<FpVec> null_space(const FpMatrix& A) {
    std::vector<FpVec> rows;
    for (std::size_t i = 0; i < A.rows; ++i) rows.emplace_back(A.a.begin() + i * A.cols, A.a.begin() + (i + 1) * A.cols);
    const auto R = reduced_echelon(std::move(rows), A.p);
    std::vector<std::size_t> pivot_of(A.cols, A.cols);
    for (std::size_t r = 0; r < R.size(); ++r) {
        const std::size_t c = std::find_if(R[r].begin(), R[r].end(), [](auto x) { return x != 0; }) - R[r].begin();
        pivot_of[c] = r;
    }
    std::vector<FpVec> basis;
    for (std::size_t f = 0; f < A.cols; ++f) {
        if (pivot_of[f] != A.cols) continue;
        FpVec v(A.cols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < A.cols; ++c)
            if (pivot_of[c] != A.cols) v[c] = (A.p - R[pivot_of[c]][f]) % A.p;
        basis.push_back(std::move(v));
    }
    return reduced_echelon(std::move(basis), A.p);
}

std::optional<std::pair<FpVec, FpVec>> FpEchelon::reduce(FpVec v) const {
    FpVec coeff(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (const std::uint32_t c = v[pivots_[i]]) {
            fp_axpy(v, p_ - c, rows_[i], p_);
            coeff[i] = c;
        }
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return std::nullopt;
    return std::make_pair(std::move(v), std::move(coeff));
}

bool FpEchelon::add(FpVec v) {
    if (v.size() != dim_) fail(ErrorCode::invalid_argument, "vector of the wrong length");
    const std::size_t k = rows_.size();
    auto red = reduce(std::move(v));
    if (!red) return false;
    auto& [w, coeff] = *red;
    // w = v - sum coeff_i rows_i, and rows_i = sum combo_i[j] input_j
    FpVec combo(k + 1, 0);
    combo[k] = 1;
    for (std::size_t i = 0; i < k; ++i)
        if (coeff[i])
            for (std::size_t j = 0; j < combo_[i].size(); ++j)
                combo[j] = std::uint32_t((combo[j] + std::uint64_t(p_ - coeff[i]) * combo_[i][j]) % p_);
    const std::size_t piv = std::find_if(w.begin(), w.end(), [](auto x) { return x != 0; }) - w.begin();
    const std::uint32_t inv = fp_inv(w[piv], p_);
    for (auto& x : w) x = std::uint32_t(std::uint64_t(x) * inv % p_);
    for (auto& x : combo) x = std::uint32_t(std::uint64_t(x) * inv % p_);
    for (auto& c : combo_) c.push_back(0);
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    combo_.push_back(std::move(combo));
    return true;
}

std::optional<FpVec> FpEchelon::coordinates(FpVec v) const {
    FpVec coeff(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (const std::uint32_t c = v[pivots_[i]]) {
            fp_axpy(v, p_ - c, rows_[i], p_);
            coeff[i] = c;
        }
    if (!std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return std::nullopt;
    FpVec out(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (coeff[i])
            for (std::size_t j = 0; j < combo_[i].size(); ++j)
                out[j] = std::uint32_t((out[j] + std::uint64_t(coeff[i]) * combo_[i][j]) % p_);
    return out;
}

}  // namespace plocal
