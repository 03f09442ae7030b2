#include "arithmaps/solutions.hpp"

#include "arithmaps/errors.hpp"
#include "arithmaps/matrix.hpp"
#include "arithmaps/padic.hpp"

namespace arithmaps {

Rational laguerre(long k, long nu, const Rational& lambda) {
    if (k < 0) return Rational(0);
    Rational sum(0);
    Rational lamPow(1);
    Rational rFact(1);
    for (long r = 0; r <= k; ++r) {
        if (r > 0) {
            lamPow *= lambda;
            rFact *= Rational(r);
        }
        // C(k+nu, k-r) as a falling factorial in the upper index
        Rational binom(1);
        for (long j = 0; j < k - r; ++j) binom *= Rational(k + nu - j);
        Rational fact(1);
        for (long j = 2; j <= k - r; ++j) fact *= Rational(j);
        Rational term = binom / fact * lamPow / rFact;
        sum = (r % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

Rational LaguerreTau::tau(long N, long n) const {
    if (N == 0) return Rational(1);
    auto it = cache_.find({N, n});
    if (it != cache_.end()) return it->second;
    std::vector<Rational> e;
    e.reserve(static_cast<size_t>(N * N));
    for (long i = 1; i <= N; ++i)
        for (long j = 1; j <= N; ++j) e.push_back(laguerre(N + 1 - 2 * i + j, n, lambda_));
    Rational d = det(Matrix<Rational>(static_cast<size_t>(N), static_cast<size_t>(N), std::move(e)));
    cache_.emplace(std::make_pair(N, n), d);
    return d;
}

Rational dp2_rational_solution(const LaguerreTau& tau, long N, long n) {
    const Rational dn = tau.tau(N + 1, n) * tau.tau(N, n);
    if (dn.is_zero()) throw ZeroTau();
    return tau.tau(N + 1, n + 1) * tau.tau(N, n - 1) / dn - Rational(1);
}

std::vector<ProjValue> dp2_reduced_sequence(const LaguerreTau& tau, long N, uint64_t p,
                                            long start, long count) {
    const FqCtx ctx = FqContext::make(p);
    std::vector<ProjValue> out;
    out.reserve(static_cast<size_t>(count));
    for (long n = start; n < start + count; ++n)
        out.push_back(reduce_qp(dp2_rational_solution(tau, N, n), ctx));
    return out;
}

TauCondReport taucond_check(const LaguerreTau& tau, long N, uint64_t p) {
    const FqCtx ctx = FqContext::make(p);
    const auto P = static_cast<long>(p);
    auto mod = [&](long n) { return ((n % P) + P) % P; };
    TauCondReport rep{true, ProjValue::infinity(), ProjValue::infinity(), true, {}};

    const Rational q1 = tau.tau(N + 1, mod(-N - 1)) * tau.tau(N, mod(-N - 3));
    rep.first = reduce_qp(q1, ctx);

    const Rational tA = tau.tau(N + 1, mod(N + 1));
    const Rational tB = tau.tau(N, mod(N - 1));
    const Rational tC = tau.tau(N + 1, mod(N));
    const Rational tD = tau.tau(N, mod(N));
    for (const Rational& t : {tA, tB, tC, tD}) rep.reduced_taus.push_back(reduce_qp(t, ctx));

    const Rational den = tC * tD;
    if (den.is_zero()) {
        rep.second_defined = false;
        rep.satisfied = !rep.first.is_zero();
        return rep;
    }
    rep.second = reduce_qp(tA * tB / den, ctx);
    const ProjValue two = ProjValue::finite(Fq::from_int(ctx, 2));
    rep.satisfied = !rep.first.is_zero() && rep.second != two;
    return rep;
}

Rational qairy_P(long n, const Rational& x, const Rational& q) {
    if (n == 0) return Rational(1);
    if (n == -1) return Rational(0);
    if (n > 0) {
        Rational pm1(0), p0(1);  // P_{-1}, P_0
        Rational qk(1);
        for (long k = 1; k <= n; ++k) {
            qk *= q;  // q^k
            Rational next = qk * x * p0 - pm1;
            pm1 = p0;
            p0 = next;
        }
        return p0;
    }
    // run the recurrence backward: P_{k} = q^{k+2} x P_{k+1} - P_{k+2}
    Rational p1(0), p2(1);  // P_{-1}, P_0
    for (long k = -2; k >= n; --k) {
        Rational next = q.pow(k + 2) * x * p1 - p2;
        p2 = p1;
        p1 = next;
    }
    return p1;
}

Rational qairy_P_det(long n, const Rational& x, const Rational& q) {
    if (n == 0) return Rational(1);
    auto m = Matrix<Rational>::filled(static_cast<size_t>(n), static_cast<size_t>(n), Rational(0));
    for (long i = 0; i < n; ++i) {
        m.at(static_cast<size_t>(i), static_cast<size_t>(i)) = q.pow(i + 1) * x;
        if (i + 1 < n) {
            m.at(static_cast<size_t>(i), static_cast<size_t>(i + 1)) = Rational(-1);
            m.at(static_cast<size_t>(i + 1), static_cast<size_t>(i)) = Rational(-1);
        }
    }
    return det(m);
}

Rational QAirySolution::w(long m) const {
    return c1 * qairy_P(m - 1, tau0, q) + c0 * qairy_P(m - 2, q * tau0, q);
}

Rational qp2_solution_g(const QAirySolution& sol, long N, long s) {
    if (N == 0) return Rational(1);
    const long M = N > 0 ? N : -N;
    auto m = Matrix<Rational>::filled(static_cast<size_t>(M), static_cast<size_t>(M), Rational(0));
    for (long i = 1; i <= M; ++i)
        for (long j = 1; j <= M; ++j) {
            const long shift = N > 0 ? -i + 2 * j - 1 : i - 2 * j;
            m.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = sol.w(shift + s);
        }
    return det(m);
}

Rational qp2_solution_z(const QAirySolution& sol, long N, long s) {
    const Rational den = qp2_solution_g(sol, N, s + 1) * qp2_solution_g(sol, N + 1, s);
    if (den.is_zero()) throw ZeroDeterminant();
    const Rational num = qp2_solution_g(sol, N, s) * qp2_solution_g(sol, N + 1, s + 1);
    const long e = N >= 0 ? N : N + 1;
    return num / (sol.q.pow(e) * den);
}

}  // namespace arithmaps
