#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plocal/fusion.hpp"
#include "plocal/tower.hpp"

namespace plocal {

using FpVec = std::vector<std::uint32_t>;

struct FpMatrix {
    unsigned p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a;  // row-major

    FpMatrix() = default;
    FpMatrix(unsigned p, std::size_t rows, std::size_t cols) : p(p), rows(rows), cols(cols), a(rows * cols, 0) {}
    static FpMatrix identity(unsigned p, std::size_t n);
    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    FpVec column(std::size_t j) const;
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix operator*(const FpMatrix& A, const FpMatrix& B);
std::size_t rank(const FpMatrix& A);
// basis of {x : A x = 0}, in reduced echelon form
std::vector<FpVec> null_space(const FpMatrix& A);

// Incremental row echelon form that remembers how each row arose from the
// accepted inputs. Pivots are the first nonzero entries, in insertion order.
class FpEchelon {
public:
    FpEchelon(unsigned p, std::size_t dim) : p_(p), dim_(dim) {}
    // true if v was independent of the vectors added so far
    bool add(FpVec v);
    std::size_t rank() const { return rows_.size(); }
    bool contains(FpVec v) const { return !reduce(std::move(v)).has_value(); }
    // coefficients of v over the accepted inputs, nullopt if v is outside the span
    std::optional<FpVec> coordinates(FpVec v) const;

private:
    // the reduced remainder if nonzero, with the combination subtracted so far
    std::optional<std::pair<FpVec, FpVec>> reduce(FpVec v) const;
    unsigned p_;
    std::size_t dim_;
    std::vector<FpVec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<FpVec> combo_;
};

// Normalized bar complex of P with trivial F_p coefficients: C^k has a basis
// indexed by k-tuples of non-identity elements, read in base |P|-1 with the
// first entry least significant.
class CochainComplex {
public:
    CochainComplex(const Subgroup& P, unsigned p, std::size_t max_degree);

    const Subgroup& group() const { return P_; }
    unsigned prime() const { return p_; }
    std::size_t max_degree() const { return D_; }
    std::size_t dim(std::size_t k) const;
    // row of d_k : C^k -> C^{k+1} at a (k+1)-tuple, as (column, coefficient) pairs
    std::vector<std::pair<std::size_t, std::uint32_t>> row(std::size_t k, std::size_t tuple) const;
    FpVec apply(std::size_t k, const FpVec& f) const;
    // d_{k+1} o d_k = 0 for k + 1 <= max_degree, checked row by row
    bool d_squared_zero() const;

    std::size_t element_index(Elem x) const { return P_.position(x) - 1; }  // x != 1
    Elem element(std::size_t i) const { return P_.members()[i + 1]; }

private:
    Subgroup P_;
    unsigned p_;
    std::size_t D_;
    std::size_t b_;
};

class GradedCohomology {
public:
    GradedCohomology(const Subgroup& P, unsigned p, std::size_t max_degree, const Bounds& bounds);

    const Subgroup& group() const { return C_.group(); }
    unsigned prime() const { return C_.prime(); }
    std::size_t max_degree() const { return C_.max_degree(); }
    const CochainComplex& complex() const { return C_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    // cocycles whose classes form a basis of H^k
    const std::vector<FpVec>& representatives(std::size_t k) const { return reps_[k]; }
    // coordinates of the class of a cocycle; invalid_argument if f is not a cocycle
    FpVec coordinates(std::size_t k, const FpVec& f) const;
    bool is_cocycle(std::size_t k, const FpVec& f) const;

private:
    CochainComplex C_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<FpVec>> reps_;
    std::vector<FpEchelon> classes_;  // B^k first, then the representatives
    std::vector<std::size_t> boundary_rank_;
};

// bound_exceeded when (|P|-1)^D > max_cochain_dim or (|P|-1)^(D+1) > max_cochain_rows
GradedCohomology h_star(const Subgroup& P, unsigned p, std::size_t D, const Bounds& bounds = Bounds::defaults());
GradedCohomology h_star(const FiniteGroup& G, unsigned p, std::size_t D, const Bounds& bounds = Bounds::defaults());

// phi^*: H^*(target) -> H^*(source); matrices[k] is dim H^k(source) x dim H^k(target).
struct CohMap {
    std::vector<FpMatrix> matrices;
};

// phi: P -> Q with P = source.group() and the image of phi inside target.group().
CohMap induced(const GradedCohomology& source, const GradedCohomology& target, const GroupMap& phi);
CohMap induced(const GroupMap& phi, unsigned p, std::size_t D, const Bounds& bounds = Bounds::defaults());
// Res^G_H
CohMap restriction(const GradedCohomology& H, const GradedCohomology& G);
CohMap restriction(const Subgroup& G, const Subgroup& H, unsigned p, std::size_t D,
                   const Bounds& bounds = Bounds::defaults());
// first, then second
CohMap compose(const CohMap& second, const CohMap& first);

enum class StablePolicy { all_pairs, alperin_generators };
const char* stable_policy_name(StablePolicy p);

// {x in H^deg(S) : Res_P(x) = phi^*(x) for the selected (P, phi)}, as coordinate
// vectors in the basis of h_star(S), reduced echelon form.
std::vector<FpVec> stable_subspace(const FiniteGroup& G, const Subgroup& S, unsigned p, std::size_t deg,
                                   StablePolicy policy, const Bounds& bounds = Bounds::defaults());

struct StableDegree {
    std::size_t degree = 0;
    std::size_t dim_g = 0;
    std::size_t dim_s = 0;
    std::size_t dim_stable = 0;
    std::size_t res_rank = 0;
    bool injective = false;
    bool image_is_stable = false;
    bool policies_agree = false;
    // Res * witness = stable basis (as columns)
    FpMatrix witness;
};
struct StableElementsReport {
    bool pass = true;
    std::vector<StableDegree> degrees;  // 0..D
};
StableElementsReport verify_stable_elements(const FiniteGroup& G, const Subgroup& S, unsigned p, std::size_t D,
                                            const Bounds& bounds = Bounds::defaults());

struct LimFinCohomology {
    StabilizationCertificate certificate;  // dim H^deg(G_i), bijective = restriction G_{i+1} -> G_i invertible
    std::vector<FpMatrix> restrictions;    // H^deg(G_{i+1}) -> H^deg(G_i)
    std::vector<std::size_t> image_ranks;  // rank of H^deg(G_depth) -> H^deg(G_i)
    bool complete = true;
    std::string error;                     // set when a level exceeds the bounds
};
LimFinCohomology lim_fin_cohomology(const TowerGroup& G, unsigned p, std::size_t deg, std::size_t depth,
                                    std::size_t window = 2, const Bounds& bounds = Bounds::defaults());

}  // namespace plocal
