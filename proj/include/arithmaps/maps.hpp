#pragma once

#include <cstdint>
#include <utility>

#include "arithmaps/errors.hpp"
#include "arithmaps/field.hpp"
#include "arithmaps/proj.hpp"
#include "arithmaps/rational.hpp"

namespace arithmaps {

template <FieldElement F>
struct MapState {
    F x, y;
};

// ---------------------------------------------------------------------------
// dP_II:  x' = alpha_n/(1-x) + beta_n/(1+x) - y,  y' = x.
// ---------------------------------------------------------------------------

template <FieldElement F>
struct Dp2Coeffs {
    F alpha, beta;
};

namespace detail {
template <FieldElement F>
MapState<F> dp2_apply(const MapState<F>& s, const Dp2Coeffs<F>& c) {
    const F one = s.x.one();
    const F t1 = c.alpha / (one - s.x);
    const F t2 = c.beta / (one + s.x);
    return {t1 + t2 - s.y, s.x};
}
}  // namespace detail

// Strict mode: the poles x = +-1 are errors. Projective propagation goes
// through the PExt overload below instead.
template <FieldElement F>
MapState<F> dp2_step(const MapState<F>& s, const Dp2Coeffs<F>& c) {
    const F one = s.x.one();
    if ((one - s.x).is_zero() || (one + s.x).is_zero()) throw SingularInput("dp2: x = +-1");
    return detail::dp2_apply(s, c);
}

inline MapState<PExt> dp2_step(const MapState<PExt>& s, const Dp2Coeffs<PExt>& c) {
    return detail::dp2_apply(s, c);
}

// Exact coefficient schedule over Q. The paper's periodic redefinition makes
// alpha_n, beta_n period-p with one exact zero in each period; the plain
// linear form keeps z_n = delta*n + z0. Both are needed: the periodic one for
// the reduction theory, the linear one for the tau-function solutions (and
// for the a = -delta confinement stratum, where the periodic shifts break the
// exact relation alpha_n + beta_n = a the cancellation relies on).
class Dp2ScheduleQ {
public:
    static Dp2ScheduleQ linear(Rational a, Rational delta, Rational z0) {
        Dp2ScheduleQ s;
        s.a_ = std::move(a);
        s.delta_ = std::move(delta);
        s.z0_ = std::move(z0);
        s.periodic_ = false;
        return s;
    }

    // The periodic redefinition: alpha_{i+mp} = (i*delta+z0+a+n_alpha*p)/2
    // with n_alpha chosen so some alpha_i vanishes exactly (same for beta).
    // Requires delta != 0 mod p unless the zero already happens.
    static Dp2ScheduleQ periodic(long a, long delta, long z0, uint64_t p);

    Rational alpha(long n) const {
        const Rational two(2);
        if (!periodic_) return (delta_ * Rational(n) + z0_ + a_) / two;
        long i = imod(n);
        return (delta_ * Rational(i) + z0_ + a_ + Rational(n_alpha_) * Rational(static_cast<long>(p_))) / two;
    }
    Rational beta(long n) const {
        const Rational two(2);
        if (!periodic_) return (-(delta_ * Rational(n) + z0_) + a_) / two;
        long i = imod(n);
        return (-(delta_ * Rational(i) + z0_) + a_ + Rational(n_beta_) * Rational(static_cast<long>(p_))) / two;
    }

    const Rational& a() const { return a_; }
    const Rational& delta() const { return delta_; }
    const Rational& z0() const { return z0_; }
    bool is_periodic() const { return periodic_; }
    uint64_t p() const { return p_; }
    long n_alpha() const { return n_alpha_; }
    long n_beta() const { return n_beta_; }
    // Residues i in 0..p-1 where the coefficient vanishes exactly.
    long alpha_zero_index() const { return i_alpha_; }
    long beta_zero_index() const { return i_beta_; }

private:
    long imod(long n) const {
        long i = n % static_cast<long>(p_);
        return i < 0 ? i + static_cast<long>(p_) : i;
    }
    Rational a_, delta_, z0_;
    bool periodic_ = false;
    uint64_t p_ = 0;
    long n_alpha_ = 0, n_beta_ = 0, i_alpha_ = -1, i_beta_ = -1;
};

inline Dp2ScheduleQ Dp2ScheduleQ::periodic(long a, long delta, long z0, uint64_t p) {
    Dp2ScheduleQ s;
    s.a_ = Rational(a);
    s.delta_ = Rational(delta);
    s.z0_ = Rational(z0);
    s.periodic_ = true;
    s.p_ = p;
    const auto P = static_cast<long>(p);
    auto findZero = [&](long c0, long step) -> std::pair<long, long> {
        for (long i = 0; i < P; ++i) {
            long num = c0 + i * step;
            if (((num % P) + P) % P == 0) return {i, -num / P};
        }
        throw NoZeroAchievable();
    };
    auto [ia, na] = findZero(z0 + a, delta);
    auto [ib, nb] = findZero(-z0 + a, -delta);
    s.i_alpha_ = ia;
    s.n_alpha_ = na;
    s.i_beta_ = ib;
    s.n_beta_ = nb;
    return s;
}

// Instantiate the exact schedule in any field through a Rational->F embed.
template <FieldElement F, class Conv>
Dp2Coeffs<F> dp2_coeffs_at(const Dp2ScheduleQ& sched, long n, Conv&& conv) {
    return {conv(sched.alpha(n)), conv(sched.beta(n))};
}

// ---------------------------------------------------------------------------
// Psi_gamma:  x' = (a*x + 1)/(x^gamma * y),  y' = x.
// ---------------------------------------------------------------------------

template <FieldElement F>
struct PsiParams {
    F a;
    unsigned gamma;
};

namespace detail {
template <FieldElement F>
MapState<F> psi_apply(const MapState<F>& s, const PsiParams<F>& p) {
    const F one = s.x.one();
    F den = s.y;
    for (unsigned i = 0; i < p.gamma; ++i) den = den * s.x;
    return {(p.a * s.x + one) / den, s.x};
}
}  // namespace detail

template <FieldElement F>
MapState<F> psi_step(const MapState<F>& s, const PsiParams<F>& p) {
    if (s.x.is_zero() || s.y.is_zero()) throw SingularInput("psi: x = 0 or y = 0");
    return detail::psi_apply(s, p);
}

inline MapState<PExt> psi_step(const MapState<PExt>& s, const PsiParams<PExt>& p) {
    return detail::psi_apply(s, p);
}

// ---------------------------------------------------------------------------
// qP_I:  x' = (a*q^n*x + b)/(x^2*y),  y' = x.
// ---------------------------------------------------------------------------

template <FieldElement F>
struct QP1Params {
    F a, b, q;
};

namespace detail {
template <FieldElement F>
MapState<F> qp1_apply(const MapState<F>& s, long n, const QP1Params<F>& p) {
    const F qn = field_pow(p.q, n);
    return {(p.a * qn * s.x + p.b) / (s.x * s.x * s.y), s.x};
}
}  // namespace detail

template <FieldElement F>
MapState<F> qp1_step(const MapState<F>& s, long n, const QP1Params<F>& p) {
    if (s.x.is_zero() || s.y.is_zero()) throw SingularInput("qp1: x = 0 or y = 0");
    return detail::qp1_apply(s, n, p);
}

inline MapState<PExt> qp1_step(const MapState<PExt>& s, long n, const QP1Params<PExt>& p) {
    return detail::qp1_apply(s, n, p);
}

// ---------------------------------------------------------------------------
// qP_II:  x' = (a*tau^2*x - (tau-x)(1+x*y)) / (x*(tau-x)(x*y+1)),  y' = x,
// with tau = q^n * tau0.
// ---------------------------------------------------------------------------

template <FieldElement F>
struct QP2Params {
    F a, q, tau0;
    F tau(long n) const { return tau0 * field_pow(q, n); }
};

namespace detail {
template <FieldElement F>
MapState<F> qp2_apply(const MapState<F>& s, long n, const QP2Params<F>& p) {
    const F one = s.x.one();
    const F tau = p.tau(n);
    const F tmx = tau - s.x;
    const F xy1 = s.x * s.y + one;
    const F num = p.a * tau * tau * s.x - tmx * xy1;
    return {num / (s.x * tmx * xy1), s.x};
}
}  // namespace detail

template <FieldElement F>
MapState<F> qp2_step(const MapState<F>& s, long n, const QP2Params<F>& p) {
    const F one = s.x.one();
    if (s.x.is_zero()) throw SingularInput("qp2: x = 0");
    if ((p.tau(n) - s.x).is_zero()) throw SingularInput("qp2: x = q^n*tau0");
    if ((s.x * s.y + one).is_zero()) throw SingularInput("qp2: x*y + 1 = 0");
    return detail::qp2_apply(s, n, p);
}

inline MapState<PExt> qp2_step(const MapState<PExt>& s, long n, const QP2Params<PExt>& p) {
    return detail::qp2_apply(s, n, p);
}

// ---------------------------------------------------------------------------
// Discrete KdV coupling:
//   x_n^{t+1} = (1+delta)*y_n^t / (1 + delta*x_n^t*y_n^t)
//   y_{n+1}^t = (1 + delta*x_n^t*y_n^t)*x_n^t / (1+delta)
// ---------------------------------------------------------------------------

namespace detail {
template <FieldElement F>
std::pair<F, F> kdv_apply(const F& x, const F& y, const F& delta) {
    const F one = x.one();
    const F onePlus = one + delta;
    const F core = one + delta * x * y;
    return {onePlus * y / core, core * x / onePlus};
}
}  // namespace detail

template <FieldElement F>
std::pair<F, F> kdv_step(const F& x, const F& y, const F& delta) {
    const F one = x.one();
    if ((one + delta).is_zero()) throw SingularInput("kdv: 1 + delta = 0");
    if ((one + delta * x * y).is_zero()) throw SingularInput("kdv: 1 + delta*x*y = 0");
    return detail::kdv_apply(x, y, delta);
}

inline std::pair<PExt, PExt> kdv_step(const PExt& x, const PExt& y, const PExt& delta) {
    return detail::kdv_apply(x, y, delta);
}

}  // namespace arithmaps
