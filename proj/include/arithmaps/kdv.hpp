#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "arithmaps/errors.hpp"
#include "arithmaps/maps.hpp"
#include "arithmaps/proj.hpp"
#include "arithmaps/ratfunc.hpp"

namespace arithmaps {

// The lattice evolution (y_1^t; x_1^t..x_N^t) -> (x_1^{t+1}..x_N^{t+1};
// y_{N+1}^t), swept left to right. x holds rows t = 0..steps, y holds rows
// t = 0..steps-1 of y_1..y_{N+1} (the right boundary is emitted, not
// consumed).
template <FieldElement F>
struct KdvGrid {
    std::vector<std::vector<F>> x;
    std::vector<std::vector<F>> y;
};

template <FieldElement F>
KdvGrid<F> kdv_evolve(const F& delta, const std::vector<F>& x0, const std::vector<F>& boundary) {
    KdvGrid<F> g;
    g.x.push_back(x0);
    for (const F& yb : boundary) {
        const auto& xr = g.x.back();
        std::vector<F> xnext;
        std::vector<F> yrow{yb};
        xnext.reserve(xr.size());
        for (const F& xv : xr) {
            auto [xn, yn] = kdv_step(xv, yrow.back(), delta);
            xnext.push_back(xn);
            yrow.push_back(yn);
        }
        g.x.push_back(std::move(xnext));
        g.y.push_back(std::move(yrow));
    }
    return g;
}

// Strategy [I] of the worked example: evolve with delta symbolic over
// F_r(delta). SymbolicSingular if 1 + delta*x*y is identically zero for some
// cell (possible for special initial data; reported, never skipped).
KdvGrid<RatFunc<Fq>> kdv_evolve_symbolic(const FqCtx& ctx, const std::vector<Fq>& x0,
                                         const std::vector<Fq>& boundary);

// Strategy [II]: substitute delta = delta0 entrywise through the
// order-of-vanishing reduction; every value is determined on PF_r.
struct ProjGrid {
    std::vector<std::vector<ProjValue>> x;
    std::vector<std::vector<ProjValue>> y;
};
ProjGrid kdv_reduce(const KdvGrid<RatFunc<Fq>>& grid, const Fq& delta0);

// Stepwise evolution directly over PF_r with indeterminacy propagation; the
// cells where this and kdv_reduce disagree are exactly the deadlocks the
// function-field detour resolves.
struct PExtGrid {
    std::vector<std::vector<EvalOutcome>> x;
    std::vector<std::vector<EvalOutcome>> y;
};
PExtGrid kdv_evolve_projective(const FqCtx& ctx, const std::vector<Fq>& x0,
                               const std::vector<Fq>& boundary, const Fq& delta0);

// ---------------------------------------------------------------------------
// N-soliton solutions:
//   sigma_n^t = det(delta_ij + gamma_i/(l_i+l_j-1) * ((1-l_i)/l_i)^t *
//               ((l_i+delta)/(1+delta-l_i))^n),   x_n^t = sigma_n^t
//               sigma_{n+1}^{t-1} / (sigma_{n+1}^t sigma_n^{t-1}).
// ---------------------------------------------------------------------------

struct SolitonParams {
    std::vector<long> l, gamma;  // same length N; l_i distinct
};

// sigma over any field; conv embeds small integers. SingularEntry when an
// entry denominator vanishes in F.
template <FieldElement F, class Conv>
F soliton_sigma(const SolitonParams& sp, long n, long t, const F& delta, Conv&& conv) {
    const size_t N = sp.l.size();
    if (sp.gamma.size() != N) throw BadCoefficients("soliton: |l| != |gamma|");
    const F one = delta.one();
    std::vector<F> rows;  // matrix entries, row-major
    rows.reserve(N * N);
    for (size_t i = 0; i < N; ++i) {
        const F li = conv(sp.l[i]);
        const F phaseT = field_pow((one - li) / li, t);
        const F denomN = one + delta - li;
        if (denomN.is_zero()) throw SingularEntry("soliton: 1 + delta - l_i = 0");
        const F phaseN = field_pow((li + delta) / denomN, n);
        const F gi = conv(sp.gamma[i]);
        for (size_t j = 0; j < N; ++j) {
            const F lj = conv(sp.l[j]);
            const F den = li + lj - one;
            if (den.is_zero()) throw SingularEntry("soliton: l_i + l_j - 1 = 0");
            F e = gi / den * phaseT * phaseN;
            if (i == j) e = e + one;
            rows.push_back(std::move(e));
        }
    }
    // Laplace along the first row; N stays tiny (1 or 2 in the paper).
    struct Det {
        static F go(const std::vector<F>& m, size_t N) {
            if (N == 1) return m[0];
            F acc = m[0].zero();
            for (size_t j = 0; j < N; ++j) {
                std::vector<F> sub;
                sub.reserve((N - 1) * (N - 1));
                for (size_t i = 1; i < N; ++i)
                    for (size_t c = 0; c < N; ++c)
                        if (c != j) sub.push_back(m[i * N + c]);
                F term = m[j] * go(sub, N - 1);
                acc = (j % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    };
    return Det::go(rows, N);
}

template <FieldElement F, class Conv>
F soliton_x(const SolitonParams& sp, long n, long t, const F& delta, Conv&& conv) {
    const F s00 = soliton_sigma(sp, n, t, delta, conv);
    const F s11 = soliton_sigma(sp, n + 1, t - 1, delta, conv);
    const F s10 = soliton_sigma(sp, n + 1, t, delta, conv);
    const F s01 = soliton_sigma(sp, n, t - 1, delta, conv);
    if (s10.is_zero() || s01.is_zero()) throw ZeroSigma();
    return s00 * s11 / (s10 * s01);
}

// Reduced soliton grid over PF_r at a numeric delta0 (goes through F_r(delta)
// and reduce_at, exactly like the lattice itself). Cached sigmas keep the
// grid cost linear in its area.
std::vector<std::vector<ProjValue>> soliton_grid(const FqCtx& ctx, const SolitonParams& sp,
                                                 const Fq& delta0, long n_count, long t_count);

// Minimal positive period T (with at least two full periods visible) of the
// sequence, or nullopt within the window.
std::optional<long> period_detect(const std::vector<ProjValue>& seq);

}  // namespace arithmaps
