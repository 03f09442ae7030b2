#include "arithmaps/padic.hpp"

#include <algorithm>

#include "arithmaps/errors.hpp"

namespace arithmaps {

Integer PAdic::ppow(uint64_t p, int k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
    return r;
}

PAdic PAdic::zero(uint64_t p) { return PAdic(p, 0, 0, 0, true); }

PAdic PAdic::from_integer(uint64_t p, long long v, int precision) {
    return from_rational(Rational(static_cast<long>(v)), p, precision);
}

PAdic PAdic::from_rational(const Rational& q, uint64_t p, int precision) {
    if (precision < 1) throw BadCoefficients("precision must be >= 1");
    if (q.is_zero()) return zero(p);
    const long v = arithmaps::valuation(q, p);
    auto [n, d] = unit_part(q, p);
    const Integer mod = ppow(p, precision);
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw DivisionByZero("denominator not invertible mod p^k");
    Integer u = (n * dinv) % mod;
    if (u < 0) u += mod;
    return PAdic(p, v, std::move(u), precision, false);
}

long PAdic::valuation() const {
    if (zero_) throw MathError("valuation of exact zero (sentinel +infinity)");
    return v_;
}

std::vector<uint64_t> PAdic::digits() const {
    if (zero_) return {};
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(prec_));
    Integer u = u_;
    for (int i = 0; i < prec_; ++i) {
        out.push_back(mpz_fdiv_ui(u.get_mpz_t(), p_));
        mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), p_);
    }
    return out;
}

PAdic PAdic::operator-() const {
    if (zero_) return *this;
    Integer mod = ppow(p_, prec_);
    Integer u = (mod - u_) % mod;
    return PAdic(p_, v_, std::move(u), prec_, false);
}

PAdic PAdic::operator+(const PAdic& o) const {
    if (p_ != o.p_) throw MathError("mixed primes in p-adic arithmetic");
    if (zero_) return o;
    if (o.zero_) return *this;
    const PAdic& lo = (v_ <= o.v_) ? *this : o;
    const PAdic& hi = (v_ <= o.v_) ? o : *this;
    // The higher-valuation term is invisible inside the window of the lower
    // one once the gap exceeds the precision; never materialize p^gap then.
    if (hi.v_ >= lo.v_ + lo.prec_) {
        long hiAbs = hi.v_ + hi.prec_;
        int k = static_cast<int>(std::min<long>(lo.prec_, hiAbs - lo.v_));
        Integer u = lo.u_ % ppow(p_, k);
        return PAdic(p_, lo.v_, std::move(u), k, false);
    }
    const long v = lo.v_;
    const long absPrec = std::min(v_ + static_cast<long>(prec_), o.v_ + static_cast<long>(o.prec_));
    const int K = static_cast<int>(absPrec - v);
    if (K <= 0) throw PrecisionExhausted();
    const Integer mod = ppow(p_, K);
    Integer s = (lo.u_ + hi.u_ * ppow(p_, static_cast<int>(hi.v_ - v))) % mod;
    if (s == 0) throw PrecisionExhausted();
    int t = 0;
    while (mpz_divisible_ui_p(s.get_mpz_t(), p_)) {
        mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), p_);
        ++t;
    }
    if (K - t <= 0) throw PrecisionExhausted();
    s %= ppow(p_, K - t);
    return PAdic(p_, v + t, std::move(s), K - t, false);
}

PAdic PAdic::operator-(const PAdic& o) const { return *this + (-o); }

PAdic PAdic::operator*(const PAdic& o) const {
    if (p_ != o.p_) throw MathError("mixed primes in p-adic arithmetic");
    if (zero_ || o.zero_) return zero(p_);
    const int K = std::min(prec_, o.prec_);
    Integer u = (u_ * o.u_) % ppow(p_, K);
    return PAdic(p_, v_ + o.v_, std::move(u), K, false);
}

PAdic PAdic::operator/(const PAdic& o) const {
    if (p_ != o.p_) throw MathError("mixed primes in p-adic arithmetic");
    if (o.zero_) throw DivisionByZero();
    if (zero_) return zero(p_);
    const int K = std::min(prec_, o.prec_);
    const Integer mod = ppow(p_, K);
    Integer oinv;
    mpz_invert(oinv.get_mpz_t(), o.u_.get_mpz_t(), mod.get_mpz_t());
    Integer u = (u_ * oinv) % mod;
    return PAdic(p_, v_ - o.v_, std::move(u), K, false);
}

bool PAdic::operator==(const PAdic& o) const {
    if (p_ != o.p_ || zero_ != o.zero_) return false;
    if (zero_) return true;
    if (v_ != o.v_) return false;
    const int K = std::min(prec_, o.prec_);
    const Integer mod = ppow(p_, K);
    return (u_ % mod) == (o.u_ % mod);
}

Fq PAdic::reduce_zp(const FqCtx& ctx) const {
    if (zero_) return Fq::from_int(ctx, 0);
    if (v_ < 0) throw NotPAdicInteger();
    if (v_ > 0) return Fq::from_int(ctx, 0);
    return Fq::from_int(ctx, static_cast<long long>(mpz_fdiv_ui(u_.get_mpz_t(), p_)));
}

ProjValue PAdic::reduce_qp(const FqCtx& ctx) const {
    if (!zero_ && v_ < 0) return ProjValue::infinity();
    return ProjValue::finite(reduce_zp(ctx));
}

std::string PAdic::to_string() const {
    if (zero_) return "0";
    std::string s = std::to_string(p_) + "^" + std::to_string(v_) + " * (";
    auto d = digits();
    for (size_t i = 0; i < d.size() && i < 6; ++i) {
        if (i) s += " + " + std::to_string(d[i]) + "*" + std::to_string(p_) + "^" + std::to_string(i);
        else s += std::to_string(d[i]);
    }
    if (d.size() > 6) s += " + ...";
    s += ") [" + std::to_string(prec_) + " digits]";
    return s;
}

Fq reduce_zp(const Rational& x, const FqCtx& ctx) {
    if (x.is_zero()) return Fq::from_int(ctx, 0);
    if (valuation(x, ctx->p()) < 0) throw NotPAdicInteger();
    auto [n, d] = unit_part(x, ctx->p());
    const Integer p(static_cast<unsigned long>(ctx->p()));
    Integer dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    Integer r = (n * dinv) % p;
    if (r < 0) r += p;
    if (valuation(x, ctx->p()) > 0) return Fq::from_int(ctx, 0);
    return Fq::from_int(ctx, static_cast<long long>(r.get_ui()));
}

ProjValue reduce_qp(const Rational& x, const FqCtx& ctx) {
    if (!x.is_zero() && valuation(x, ctx->p()) < 0) return ProjValue::infinity();
    return ProjValue::finite(reduce_zp(x, ctx));
}

}  // namespace arithmaps
