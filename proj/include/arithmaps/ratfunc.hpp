#pragma once

#include <optional>
#include <string>
#include <utility>

#include "arithmaps/errors.hpp"
#include "arithmaps/poly.hpp"
#include "arithmaps/proj.hpp"

namespace arithmaps {

// Element of the rational function field F(delta), kept normalized: numerator
// and denominator coprime, denominator monic, zero is 0/1. Unique
// representatives make equality testing exact.
template <FieldElement F>
class RatFunc {
public:
    RatFunc() = default;  // zero
    explicit RatFunc(Poly<F> num) : num_(std::move(num)) {
        if (!num_.is_zero()) den_ = Poly<F>::constant(num_.leading().one());
    }
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        normalize();
    }
    static RatFunc constant(const F& c) { return RatFunc(Poly<F>::constant(c)); }
    // The indeterminate delta itself.
    static RatFunc variable(const F& one) { return RatFunc(Poly<F>::monomial(one.one(), 1)); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc zero() const { return RatFunc(); }
    RatFunc one() const {
        F e = unit();
        return constant(e);
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, already_normal{}); }
    RatFunc operator+(const RatFunc& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return RatFunc();
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw DivisionByZero();
        if (is_zero()) return RatFunc();
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Order of vanishing at delta0 (negative at poles) by repeated exact
    // division by (delta - delta0); branch-free and exact at these degrees.
    int order_at(const F& at) const {
        if (is_zero()) throw MathError("order of the zero function");
        return order_of(num_, at) - order_of(den_, at);
    }

    // The reduction F(delta)^x -> PF: s > 0 -> 0, s < 0 -> infinity, s = 0 ->
    // the finite ratio of the deflated parts (0/0 cannot appear: deflation
    // removes every (delta - delta0) factor). Zero maps to 0.
    std::optional<F> reduce_at(const F& at) const {
        if (is_zero()) return num_is_zero_value(at);
        Poly<F> n = num_, d = den_;
        int s = deflate(n, at) - deflate(d, at);
        if (s > 0) return at.zero();
        if (s < 0) return std::nullopt;  // infinity
        return n.eval(at) / d.eval(at);
    }

    std::string to_string() const;

private:
    struct already_normal {};
    RatFunc(Poly<F> num, Poly<F> den, already_normal) : num_(std::move(num)), den_(std::move(den)) {}

    F unit() const {
        if (!den_.is_zero()) return den_.leading().one();
        return num_.leading().one();
    }
    static std::optional<F> num_is_zero_value(const F& at) { return at.zero(); }

    static int order_of(const Poly<F>& p, const F& at) {
        Poly<F> w = p;
        return deflate(w, at);
    }
    // Divides out (delta - at)^k in place; returns k.
    static int deflate(Poly<F>& p, const F& at) {
        const Poly<F> lin({-at, at.one()});
        int k = 0;
        while (!p.is_zero() && p.eval(at).is_zero()) {
            auto [q, r] = p.divmod(lin);
            p = std::move(q);
            ++k;
        }
        return k;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<F>::constant(den_.leading().one());
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        const F scale = den_.leading().one() / den_.leading();
        num_ = num_ * scale;
        den_ = den_ * scale;
    }

    Poly<F> num_;
    Poly<F> den_ = Poly<F>();
};

// "c*(poly)/(poly)" with both polynomials scaled so their lowest nonzero
// coefficient is 1, matching the shape the worked examples are printed in.
template <FieldElement F>
std::string poly_display(const Poly<F>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const F& c = p[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) s += "+";
        first = false;
        if (i == 0) {
            s += c.to_string();
        } else {
            if (!(c == c.one())) s += c.to_string() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

template <FieldElement F>
std::string RatFunc<F>::to_string() const {
    if (is_zero()) return "0";
    // factor out the lowest nonzero numerator coefficient
    size_t low = 0;
    while (num_[low].is_zero()) ++low;
    F c = num_[low];
    size_t dlow = 0;
    while (den_[dlow].is_zero()) ++dlow;
    c = c / den_[dlow];
    Poly<F> n = num_ * (num_[low].one() / num_[low]);
    Poly<F> d = den_ * (den_[dlow].one() / den_[dlow]);
    std::string s;
    if (!(c == c.one()) || n.degree() == 0) s += c.to_string();
    if (n.degree() > 0) {
        if (!s.empty()) s += "*";
        s += "(" + poly_display(n, "d") + ")";
    }
    if (d.degree() > 0) s += "/(" + poly_display(d, "d") + ")";
    return s;
}

// PF_r-typed reduction for the finite-field instantiation.
inline ProjValue reduce_at(const RatFunc<Fq>& x, const Fq& delta0) {
    auto v = x.reduce_at(delta0);
    return v ? ProjValue::finite(*v) : ProjValue::infinity();
}

}  // namespace arithmaps
