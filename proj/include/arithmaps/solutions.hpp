#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "arithmaps/proj.hpp"
#include "arithmaps/rational.hpp"

namespace arithmaps {

// ---------------------------------------------------------------------------
// dP_II rational solutions via Laguerre-type tau determinants.
//
//   L_k^{(nu)}(lambda) = sum_{r=0}^k (-1)^r C(k+nu, k-r) lambda^r / r!   (k>=0)
//   tau_N^n = det | L_{N+1-2i+j}^{(n)} |_{1<=i,j<=N},   tau_0^n = 1
//   u_n = tau_{N+1}^{n+1} tau_N^{n-1} / (tau_{N+1}^n tau_N^n) - 1
//
// solving u_{n+1}+u_{n-1} = (z_n u_n + a)/(1-u_n^2) with a = -2(N+1)/lambda,
// delta = z0 = 2/lambda. The binomial with shifted (possibly negative) upper
// index is the falling-factorial polynomial in nu, which keeps L exact for
// every integer superscript.
// ---------------------------------------------------------------------------

Rational laguerre(long k, long nu, const Rational& lambda);

// Caches tau determinants for one lambda; entries explode without
// fraction-free elimination, which Matrix::det provides.
class LaguerreTau {
public:
    explicit LaguerreTau(Rational lambda) : lambda_(std::move(lambda)) {}
    const Rational& lambda() const { return lambda_; }
    Rational tau(long N, long n) const;

private:
    Rational lambda_;
    mutable std::map<std::pair<long, long>, Rational> cache_;
};

// u_n for the (N, lambda) rational solution; ZeroTau if a denominator tau
// vanishes over Q.
Rational dp2_rational_solution(const LaguerreTau& tau, long N, long n);

// The reduced solution sequence u_start..u_{start+count-1} over PF_p.
std::vector<ProjValue> dp2_reduced_sequence(const LaguerreTau& tau, long N, uint64_t p,
                                            long start, long count);

// Eq (taucond): tau_{N+1}^{-N-1} tau_N^{-N-3} != 0 and
// tau_{N+1}^{N+1} tau_N^{N-1} / (tau_{N+1}^N tau_N^N) != 2 after reduction,
// superscripts taken modulo p. Advisory only: the p = 11 table row violates
// it and still yields a period-11 sequence.
struct TauCondReport {
    bool satisfied;
    ProjValue first;        // reduced tau_{N+1}^{-N-1} tau_N^{-N-3}
    ProjValue second;       // reduced ratio (infinity when the denominator reduces to 0)
    bool second_defined;    // false when the ratio is 0/0 after reduction
    std::vector<ProjValue> reduced_taus;  // diagnostics: the four taus entering the ratio
};
TauCondReport taucond_check(const LaguerreTau& tau, long N, uint64_t p);

// ---------------------------------------------------------------------------
// q-Airy / qP_II determinant solutions.
//
//   P_n(x;q): tridiagonal determinant with diagonal qx, q^2 x, ..., q^n x and
//   -1 off-diagonals; P_0 = 1, and the recurrence P_{n+1} = q^{n+1} x P_n -
//   P_{n-1} extends it to negative n.
//   w(q^{n+1} tau0) = c1 P_n(tau0;q) + c0 P_{n-1}(q tau0;q) solves
//   w(q tau) - tau w(tau) + w(q^{-1} tau) = 0.
//   g^{(N)}(tau) = det w(q^{-i+2j-1} tau) (N>0), 1 (N=0), det w(q^{i-2j} tau)
//   (N<0); z^{(N)} = g^{(N)}(tau) g^{(N+1)}(q tau) / (q^s g^{(N)}(q tau)
//   g^{(N+1)}(tau)), s = N for N>=0 and N+1 for N<0, solves qP_II with
//   a = q^{2N+1}.
// ---------------------------------------------------------------------------

Rational qairy_P(long n, const Rational& x, const Rational& q);
// Independent tridiagonal-determinant route, kept as the oracle for the
// recurrence (n >= 0).
Rational qairy_P_det(long n, const Rational& x, const Rational& q);

struct QAirySolution {
    Rational q, tau0, c0, c1;
    // w(q^m tau0)
    Rational w(long m) const;
};

// g^{(N)}(q^s tau0)
Rational qp2_solution_g(const QAirySolution& sol, long N, long s);
// z^{(N)}(q^s tau0); ZeroDeterminant when a g in the denominator vanishes.
Rational qp2_solution_z(const QAirySolution& sol, long N, long s);

}  // namespace arithmaps
