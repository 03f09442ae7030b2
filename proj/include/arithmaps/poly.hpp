#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "arithmaps/errors.hpp"
#include "arithmaps/field.hpp"

namespace arithmaps {

// Dense univariate polynomial over a field, coefficients lowest degree
// first. Degrees in this library stay small, so density keeps gcd and
// evaluation simple and exact. The zero polynomial has no coefficients and
// degree() == -1.
template <FieldElement F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const F& a) {
        if (a.is_zero()) return Poly();
        return Poly(std::vector<F>{a});
    }
    // c * x^k
    static Poly monomial(const F& c, int k) {
        if (c.is_zero()) return Poly();
        std::vector<F> v(static_cast<size_t>(k) + 1, c.zero());
        v.back() = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](size_t i) const { return c_[i]; }
    const F& leading() const { return c_.back(); }

    Poly operator-() const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const F& a : c_) r.push_back(-a);
        return Poly(std::move(r));
    }

    Poly operator+(const Poly& o) const {
        const auto& a = c_;
        const auto& b = o.c_;
        std::vector<F> r(std::max(a.size(), b.size()),
                         a.empty() ? (b.empty() ? F() : b[0].zero()) : a[0].zero());
        for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<F> r(c_.size() + o.c_.size() - 1, c_[0].zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly operator*(const F& s) const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const F& a : c_) r.push_back(a * s);
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    F eval(const F& x) const {
        if (is_zero()) return x.zero();
        F acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (degree() < d.degree()) return {Poly(), *this};
        const F lcinv = d.leading().one() / d.leading();
        std::vector<F> rem = c_;
        std::vector<F> quo(static_cast<size_t>(degree() - d.degree()) + 1, c_[0].zero());
        for (int k = degree() - d.degree(); k >= 0; --k) {
            const size_t top = static_cast<size_t>(k + d.degree());
            if (rem[top].is_zero()) continue;
            F q = rem[top] * lcinv;
            quo[static_cast<size_t>(k)] = q;
            for (int i = 0; i <= d.degree(); ++i)
                rem[static_cast<size_t>(k + i)] = rem[static_cast<size_t>(k + i)] - q * d.c_[static_cast<size_t>(i)];
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (leading().one() / leading());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

// Monic gcd by the Euclidean algorithm.
template <FieldElement F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace arithmaps
