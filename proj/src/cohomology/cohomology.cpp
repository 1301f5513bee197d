#include <algorithm>
#include <map>

#include "internal.hpp"

namespace plocal {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

bool is_zero(const FpVec& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

CochainComplex::CochainComplex(const Subgroup& P, unsigned p, std::size_t max_degree)
    : P_(P), p_(p), D_(max_degree), b_(P.order() - 1) {
    if (!is_prime(p)) fail(ErrorCode::invalid_argument, "coefficient prime must be prime");
}

std::size_t CochainComplex::dim(std::size_t k) const { return ipow(b_, k); }

std::vector<std::pair<std::size_t, std::uint32_t>> CochainComplex::row(std::size_t k, std::size_t tuple) const {
    const FiniteGroup& G = P_.parent();
    std::vector<std::size_t> a(k + 1);
    for (std::size_t i = 0; i <= k; ++i, tuple /= b_) a[i] = tuple % b_;
    auto index = [&](const std::vector<std::size_t>& t) {
        std::size_t r = 0;
        for (std::size_t i = t.size(); i-- > 0;) r = r * b_ + t[i];
        return r;
    };
    std::vector<std::pair<std::size_t, std::uint32_t>> terms;
    const std::uint32_t minus = p_ - 1;
    terms.emplace_back(index(std::vector<std::size_t>(a.begin() + 1, a.end())), 1);
    for (std::size_t i = 1; i <= k; ++i) {
        const Elem prod = G.mul(element(a[i - 1]), element(a[i]));
        if (prod == 0) continue;
        std::vector<std::size_t> t(a.begin(), a.begin() + (i - 1));
        t.push_back(element_index(prod));
        t.insert(t.end(), a.begin() + i + 1, a.end());
        terms.emplace_back(index(t), i % 2 ? minus : 1);
    }
    terms.emplace_back(index(std::vector<std::size_t>(a.begin(), a.end() - 1)), (k + 1) % 2 ? minus : 1);
    std::sort(terms.begin(), terms.end());
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    for (const auto& [c, v] : terms) {
        if (!out.empty() && out.back().first == c)
            out.back().second = (out.back().second + v) % p_;
        else
            out.emplace_back(c, v % p_);
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

FpVec CochainComplex::apply(std::size_t k, const FpVec& f) const {
    FpVec out(dim(k + 1), 0);
    for (std::size_t t = 0; t < out.size(); ++t) {
        std::uint64_t s = 0;
        for (const auto& [c, v] : row(k, t)) s += std::uint64_t(v) * f[c];
        out[t] = std::uint32_t(s % p_);
    }
    return out;
}

bool CochainComplex::d_squared_zero() const {
    for (std::size_t k = 0; k + 1 <= D_; ++k)
        for (std::size_t t = 0; t < dim(k + 2); ++t) {
            std::map<std::size_t, std::uint64_t> acc;
            for (const auto& [u, c] : row(k + 1, t))
                for (const auto& [v, c2] : row(k, u)) acc[v] += std::uint64_t(c) * c2;
            for (const auto& [v, s] : acc)
                if (s % p_) return false;
        }
    return true;
}

namespace {

// ker d_k, shrinking the whole space by one sparse row at a time
std::vector<FpVec> cocycles(const CochainComplex& C, std::size_t k) {
    const unsigned p = C.prime();
    const std::size_t n = C.dim(k);
    std::vector<FpVec> K(n, FpVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) K[i][i] = 1;
    std::vector<std::uint32_t> val;
    for (std::size_t t = 0; t < C.dim(k + 1) && !K.empty(); ++t) {
        const auto r = C.row(k, t);
        if (r.empty()) continue;
        val.assign(K.size(), 0);
        std::size_t piv = K.size();
        for (std::size_t w = 0; w < K.size(); ++w) {
            std::uint64_t s = 0;
            for (const auto& [c, v] : r) s += std::uint64_t(v) * K[w][c];
            val[w] = std::uint32_t(s % p);
            if (val[w] && piv == K.size()) piv = w;
        }
        if (piv == K.size()) continue;
        const std::uint32_t inv = fp_inv(val[piv], p);
        for (std::size_t w = piv + 1; w < K.size(); ++w)
            if (val[w]) fp_axpy(K[w], std::uint32_t(std::uint64_t(p - val[w]) * inv % p), K[piv], p);
        K.erase(K.begin() + piv);
    }
    return reduced_echelon(std::move(K), p);
}

}  // namespace

GradedCohomology::GradedCohomology(const Subgroup& P, unsigned p, std::size_t D, const Bounds& bounds)
    : C_(P, p, D) {
    if (C_.dim(D) > bounds.max_cochain_dim || C_.dim(D + 1) > bounds.max_cochain_rows)
        fail(ErrorCode::bound_exceeded, "bar complex of a group of order " + std::to_string(P.order()) +
                                            " in degree " + std::to_string(D) + " exceeds the cochain bounds");
    for (std::size_t k = 0; k <= D; ++k) {
        FpEchelon E(p, C_.dim(k));
        if (k > 0) {
            std::vector<FpVec> images(C_.dim(k - 1), FpVec(C_.dim(k), 0));
            for (std::size_t t = 0; t < C_.dim(k); ++t)
                for (const auto& [c, v] : C_.row(k - 1, t)) images[c][t] = v;
            for (auto& v : images) E.add(std::move(v));
        }
        boundary_rank_.push_back(E.rank());
        std::vector<FpVec> reps;
        for (auto& z : cocycles(C_, k))
            if (E.add(z)) reps.push_back(std::move(z));
        dims_.push_back(reps.size());
        reps_.push_back(std::move(reps));
        classes_.push_back(std::move(E));
    }
}

bool GradedCohomology::is_cocycle(std::size_t k, const FpVec& f) const {
    return f.size() == C_.dim(k) && is_zero(C_.apply(k, f));
}

FpVec GradedCohomology::coordinates(std::size_t k, const FpVec& f) const {
    if (!is_cocycle(k, f)) fail(ErrorCode::invalid_argument, "not a cocycle");
    const auto c = classes_[k].coordinates(f);
    if (!c) fail(ErrorCode::invalid_argument, "cocycle outside the computed span");
    return FpVec(c->begin() + boundary_rank_[k], c->end());
}

GradedCohomology h_star(const Subgroup& P, unsigned p, std::size_t D, const Bounds& bounds) {
    return GradedCohomology(P, p, D, bounds);
}

GradedCohomology h_star(const FiniteGroup& G, unsigned p, std::size_t D, const Bounds& bounds) {
    return GradedCohomology(Subgroup::whole(G), p, D, bounds);
}

CohMap induced(const GradedCohomology& source, const GradedCohomology& target, const GroupMap& phi) {
    if (!(phi.domain() == source.group())) fail(ErrorCode::invalid_argument, "map domain is not the source group");
    if (!phi.codomain().parent().same_as(target.group().parent()) || !target.group().contains(phi.image()))
        fail(ErrorCode::invalid_argument, "map image is not inside the target group");
    if (source.prime() != target.prime()) fail(ErrorCode::invalid_argument, "coefficient primes differ");
    const CochainComplex& CP = source.complex();
    const CochainComplex& CQ = target.complex();
    const std::size_t b = source.group().order() - 1, bq = target.group().order() - 1;
    const std::size_t none = ~std::size_t(0);
    std::vector<std::size_t> img(b);
    for (std::size_t a = 0; a < b; ++a) {
        const Elem y = phi(CP.element(a));
        img[a] = y == 0 ? none : CQ.element_index(y);
    }
    CohMap M;
    const std::size_t D = std::min(source.max_degree(), target.max_degree());
    for (std::size_t k = 0; k <= D; ++k) {
        FpMatrix A(source.prime(), source.dims()[k], target.dims()[k]);
        for (std::size_t j = 0; j < target.dims()[k]; ++j) {
            const FpVec& f = target.representatives(k)[j];
            FpVec g(CP.dim(k), 0);
            for (std::size_t t = 0; t < g.size(); ++t) {
                std::size_t rest = t, idx = 0, scale = 1;
                bool zero = false;
                for (std::size_t i = 0; i < k; ++i, rest /= b, scale *= bq) {
                    const std::size_t y = img[rest % b];
                    if (y == none) {
                        zero = true;
                        break;
                    }
                    idx += y * scale;
                }
                if (!zero) g[t] = f[idx];
            }
            const FpVec c = source.coordinates(k, g);
            for (std::size_t i = 0; i < c.size(); ++i) A.at(i, j) = c[i];
        }
        M.matrices.push_back(std::move(A));
    }
    return M;
}

CohMap induced(const GroupMap& phi, unsigned p, std::size_t D, const Bounds& bounds) {
    return induced(h_star(phi.domain(), p, D, bounds), h_star(phi.codomain(), p, D, bounds), phi);
}

CohMap restriction(const GradedCohomology& H, const GradedCohomology& G) {
    if (!G.group().contains(H.group())) fail(ErrorCode::not_a_subgroup, "restriction needs H <= G");
    return induced(H, G, GroupMap::inclusion(H.group(), G.group()));
}

CohMap restriction(const Subgroup& G, const Subgroup& H, unsigned p, std::size_t D, const Bounds& bounds) {
    return restriction(h_star(H, p, D, bounds), h_star(G, p, D, bounds));
}

CohMap compose(const CohMap& second, const CohMap& first) {
    if (second.matrices.size() != first.matrices.size()) fail(ErrorCode::invalid_argument, "degree ranges differ");
    CohMap M;
    for (std::size_t k = 0; k < first.matrices.size(); ++k) M.matrices.push_back(second.matrices[k] * first.matrices[k]);
    return M;
}

const char* stable_policy_name(StablePolicy p) {
    return p == StablePolicy::all_pairs ? "all_pairs" : "alperin_generators";
}

namespace {

struct StableContext {
    FusionSystem F;
    const GradedCohomology& HS;
    const Bounds& bounds;
    std::map<std::size_t, GradedCohomology> cache;  // by subgroup index

    const GradedCohomology& of(std::size_t i) {
        auto it = cache.find(i);
        if (it == cache.end())
            it = cache.emplace(i, h_star(F.subgroups()[i], HS.prime(), HS.max_degree(), bounds)).first;
        return it->second;
    }
};

std::vector<FpVec> stable_in(StableContext& ctx, std::size_t deg, StablePolicy policy) {
    const FusionSystem& F = ctx.F;
    const unsigned p = ctx.HS.prime();
    const std::size_t n = ctx.HS.dims()[deg];
    const Subgroup& S = F.sylow();
    std::vector<std::vector<std::uint32_t>> eqs;
    auto add = [&](std::size_t idx, const std::vector<GroupMap>& maps) {
        const GradedCohomology& HP = ctx.of(idx);
        const FpMatrix R = restriction(HP, ctx.HS).matrices[deg];
        for (const GroupMap& phi : maps) {
            const FpMatrix M = induced(HP, ctx.HS, phi).matrices[deg];
            for (std::size_t i = 0; i < R.rows; ++i) {
                std::vector<std::uint32_t> e(n);
                for (std::size_t j = 0; j < n; ++j) e[j] = (R.at(i, j) + p - M.at(i, j)) % p;
                eqs.push_back(std::move(e));
            }
        }
    };
    if (policy == StablePolicy::all_pairs) {
        for (std::size_t i = 0; i < F.subgroups().size(); ++i) add(i, F.homs(F.subgroups()[i]));
    } else {
        const auto cls = classify(F);
        for (std::size_t i = 0; i < F.subgroups().size(); ++i) {
            const Subgroup& Q = F.subgroups()[i];
            const bool generator = Q == S || (cls[i].centric && cls[i].radical && status(F, Q).fully_normalized);
            if (generator) add(i, F.automorphisms(Q));
        }
    }
    FpMatrix A(p, eqs.size(), n);
    for (std::size_t i = 0; i < eqs.size(); ++i)
        std::copy(eqs[i].begin(), eqs[i].end(), A.a.begin() + i * n);
    return null_space(A);
}

}  // namespace

std::vector<FpVec> stable_subspace(const FiniteGroup& G, const Subgroup& S, unsigned p, std::size_t deg,
                                   StablePolicy policy, const Bounds& bounds) {
    const GradedCohomology HS = h_star(S, p, deg, bounds);
    StableContext ctx{FusionSystem::realize(G, S, p, bounds), HS, bounds, {}};
    return stable_in(ctx, deg, policy);
}

StableElementsReport verify_stable_elements(const FiniteGroup& G, const Subgroup& S, unsigned p, std::size_t D,
                                            const Bounds& bounds) {
    const GradedCohomology HG = h_star(G, p, D, bounds);
    const GradedCohomology HS = h_star(S, p, D, bounds);
    const CohMap R = restriction(HS, HG);
    StableContext ctx{FusionSystem::realize(G, S, p, bounds), HS, bounds, {}};
    StableElementsReport rep;
    for (std::size_t k = 0; k <= D; ++k) {
        StableDegree d;
        d.degree = k;
        d.dim_g = HG.dims()[k];
        d.dim_s = HS.dims()[k];
        const FpMatrix& Rk = R.matrices[k];
        d.res_rank = rank(Rk);
        d.injective = d.res_rank == d.dim_g;
        const auto stable = stable_in(ctx, k, StablePolicy::all_pairs);
        d.policies_agree = stable == stable_in(ctx, k, StablePolicy::alperin_generators);
        d.dim_stable = stable.size();
        std::vector<FpVec> cols;
        for (std::size_t j = 0; j < Rk.cols; ++j) cols.push_back(Rk.column(j));
        d.image_is_stable = reduced_echelon(cols, p) == stable;
        d.witness = FpMatrix(p, d.dim_g, stable.size());
        if (d.injective && d.image_is_stable) {
            FpEchelon E(p, d.dim_s);
            for (const auto& c : cols) E.add(c);
            for (std::size_t s = 0; s < stable.size(); ++s) {
                const FpVec w = *E.coordinates(stable[s]);
                for (std::size_t i = 0; i < w.size(); ++i) d.witness.at(i, s) = w[i];
            }
        }
        rep.pass = rep.pass && d.injective && d.image_is_stable && d.policies_agree;
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

LimFinCohomology lim_fin_cohomology(const TowerGroup& G, unsigned p, std::size_t deg, std::size_t depth,
                                    std::size_t window, const Bounds& bounds) {
    if (depth == 0 || depth > G.size()) fail(ErrorCode::invalid_argument, "depth must lie in 1..levels");
    LimFinCohomology out;
    std::vector<GradedCohomology> H;
    for (std::size_t i = 0; i < depth; ++i) {
        try {
            H.push_back(h_star(G.level(i), p, deg, bounds));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::bound_exceeded) throw;
            out.complete = false;
            out.error = "level " + std::to_string(i + 1) + ": " + e.what();
            break;
        }
    }
    std::vector<std::uint64_t> values;
    std::vector<bool> bij;
    for (const auto& h : H) values.push_back(h.dims()[deg]);
    for (std::size_t i = 0; i + 1 < H.size(); ++i) {
        const GroupMap e(Subgroup::whole(G.level(i)), Subgroup::whole(G.level(i + 1)), G.embedding(i));
        FpMatrix M = induced(H[i], H[i + 1], e).matrices[deg];
        bij.push_back(M.rows == M.cols && rank(M) == M.rows);
        out.restrictions.push_back(std::move(M));
    }
    if (!H.empty()) {
        out.image_ranks.assign(H.size(), 0);
        FpMatrix acc = FpMatrix::identity(p, H.back().dims()[deg]);
        out.image_ranks.back() = rank(acc);
        for (std::size_t i = H.size() - 1; i-- > 0;) {
            acc = out.restrictions[i] * acc;
            out.image_ranks[i] = rank(acc);
        }
    }
    out.certificate = StabilizationCertificate::from_values("dim H^" + std::to_string(deg), std::move(values), window,
                                                            std::move(bij));
    return out;
}

}  // namespace plocal
