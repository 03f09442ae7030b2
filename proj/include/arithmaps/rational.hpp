#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "arithmaps/errors.hpp"

namespace arithmaps {

using Integer = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (canonical form makes equality exact and cheap). Thin value
// wrapper over GMP's mpq_class so the rest of the library sees one fixed
// field interface: +,-,*,/ (exact, / throws DivisionByZero), is_zero(),
// zero()/one() context constructors.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : q_(n, d) { requireNonzeroDen(); }
    Rational(Integer n, Integer d) : q_(std::move(n), std::move(d)) { requireNonzeroDen(); }
    explicit Rational(const Integer& n) : q_(n) {}
    explicit Rational(const std::string& s) : q_(s) {
        if (q_.get_den() == 0) throw DivisionByZero();
        q_.canonicalize();
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1 / q_));
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r(1), b(q_);
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r *= b;
            if (k > 1) b *= b;
        }
        return Rational(r);
    }

    std::string to_string() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    void requireNonzeroDen() {
        if (q_.get_den() == 0) throw DivisionByZero();
        q_.canonicalize();
    }
    mpq_class q_;
};

// p-adic valuation v_p of a nonzero rational; exact, never rounds.
inline long valuation(const Rational& x, unsigned long p) {
    if (x.is_zero()) throw DivisionByZero("valuation of zero");
    long v = 0;
    Integer n = x.num(), d = x.den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
        --v;
    }
    return v;
}

// The prime-to-p part (u, w) of x = p^v * u/w, both coprime to p.
inline std::pair<Integer, Integer> unit_part(const Rational& x, unsigned long p) {
    Integer n = x.num(), d = x.den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    return {n, d};
}

}  // namespace arithmaps
