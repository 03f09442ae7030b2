#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arithmaps/finite_field.hpp"
#include "arithmaps/proj.hpp"
#include "arithmaps/rational.hpp"

namespace arithmaps {

// Truncated p-adic number x = p^v * u with the valuation tracked exactly and
// the unit u known modulo p^precision (first digit nonzero). Exact zero is a
// distinguished state with infinite precision. Addition that cancels every
// known digit throws PrecisionExhausted: the valuation, and so any reduction,
// is unknowable at that precision. Callers retry at higher precision (see
// with_precision_retry in agr.hpp for the driver policy).
class PAdic {
public:
    static constexpr int kDefaultPrecision = 64;
    static constexpr int kMaxPrecision = 1024;

    static PAdic zero(uint64_t p);
    static PAdic from_integer(uint64_t p, long long v, int precision = kDefaultPrecision);
    static PAdic from_rational(const Rational& q, uint64_t p, int precision = kDefaultPrecision);

    uint64_t p() const { return p_; }
    bool is_zero() const { return zero_; }
    // v_p(x); the zero sentinel is reported through is_zero(), not here.
    long valuation() const;
    int precision() const { return prec_; }
    // Base-p digits of the unit part, lowest first; digits()[0] != 0.
    std::vector<uint64_t> digits() const;

    PAdic zero() const { return zero(p_); }
    PAdic one() const { return from_integer(p_, 1, prec_ > 0 ? prec_ : kDefaultPrecision); }

    PAdic operator-() const;
    PAdic operator+(const PAdic& o) const;
    PAdic operator-(const PAdic& o) const;
    PAdic operator*(const PAdic& o) const;
    PAdic operator/(const PAdic& o) const;

    bool operator==(const PAdic& o) const;

    // Z_p -> F_p residue (ring homomorphism). NotPAdicInteger if v < 0.
    Fq reduce_zp(const FqCtx& ctx) const;
    // Q_p^x -> PF_p: negative valuation goes to infinity (no longer a
    // homomorphism); zero and positive valuation go to 0.
    ProjValue reduce_qp(const FqCtx& ctx) const;

    // Debug form "p^v * (d0 + d1*p + ...) [k digits]".
    std::string to_string() const;

private:
    PAdic(uint64_t p, long v, Integer u, int prec, bool zero)
        : p_(p), v_(v), u_(std::move(u)), prec_(prec), zero_(zero) {}
    static Integer ppow(uint64_t p, int k);
    uint64_t p_ = 0;
    long v_ = 0;
    Integer u_ = 0;
    int prec_ = 0;
    bool zero_ = true;
};

// Exact-rational counterparts of the two reduction maps; preferred whenever
// the orbit actually lives in Q (the special-solution pipelines).
Fq reduce_zp(const Rational& x, const FqCtx& ctx);
ProjValue reduce_qp(const Rational& x, const FqCtx& ctx);

}  // namespace arithmaps
