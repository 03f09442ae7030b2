#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithmaps/errors.hpp"
#include "arithmaps/field.hpp"

namespace arithmaps {

// Truncated Laurent series c0*h^v + c1*h^(v+1) + ... over a coefficient
// field, c0 != 0, with the same exactness contract as PAdic: the order v is
// exact, coefficients are known up to a finite window, and full cancellation
// in addition throws PrecisionExhausted. Exact zero is distinguished and
// keeps a prototype coefficient so identities stay constructible.
//
// This is the downstairs engine of the AGR search: a curve germ through a
// reduced point, pushed through the map, reads off the composed reduced
// map's value at h = 0 without symbolic composition.
template <FieldElement F>
class LaurentSeries {
public:
    static LaurentSeries zero(const F& proto) { return LaurentSeries(proto.zero()); }
    static LaurentSeries constant(const F& c, int window) { return monomial(c, 0, window); }
    // c * h^order
    static LaurentSeries monomial(const F& c, int order, int window) {
        if (c.is_zero()) return zero(c);
        std::vector<F> w(static_cast<size_t>(window), c.zero());
        w[0] = c;
        return LaurentSeries(c.zero(), order, std::move(w));
    }

    bool is_zero() const { return c_.empty(); }
    int order() const {
        if (is_zero()) throw MathError("order of exact zero series");
        return v_;
    }
    int window() const { return static_cast<int>(c_.size()); }

    LaurentSeries zero() const { return LaurentSeries(proto_); }
    LaurentSeries one() const { return constant(proto_.one(), is_zero() ? 1 : window()); }

    LaurentSeries operator-() const {
        if (is_zero()) return *this;
        std::vector<F> w;
        w.reserve(c_.size());
        for (const F& a : c_) w.push_back(-a);
        return LaurentSeries(proto_, v_, std::move(w));
    }

    LaurentSeries operator+(const LaurentSeries& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const LaurentSeries& lo = (v_ <= o.v_) ? *this : o;
        const LaurentSeries& hi = (v_ <= o.v_) ? o : *this;
        if (hi.v_ >= lo.v_ + lo.window()) {
            int k = std::min<int>(lo.window(), hi.v_ + hi.window() - lo.v_);
            std::vector<F> w(lo.c_.begin(), lo.c_.begin() + k);
            return LaurentSeries(proto_, lo.v_, std::move(w));
        }
        const int v = lo.v_;
        const int K = std::min(v_ + window(), o.v_ + o.window()) - v;
        if (K <= 0) throw PrecisionExhausted();
        std::vector<F> w(static_cast<size_t>(K), proto_);
        for (int i = 0; i < lo.window() && i < K; ++i) w[static_cast<size_t>(i)] = lo.c_[static_cast<size_t>(i)];
        const int off = hi.v_ - v;
        for (int i = 0; i < hi.window() && i + off < K; ++i)
            w[static_cast<size_t>(i + off)] = w[static_cast<size_t>(i + off)] + hi.c_[static_cast<size_t>(i)];
        int t = 0;
        while (t < K && w[static_cast<size_t>(t)].is_zero()) ++t;
        if (t == K) throw PrecisionExhausted();
        w.erase(w.begin(), w.begin() + t);
        return LaurentSeries(proto_, v + t, std::move(w));
    }

    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

    LaurentSeries operator*(const LaurentSeries& o) const {
        if (is_zero() || o.is_zero()) return LaurentSeries(proto_);
        const int K = std::min(window(), o.window());
        std::vector<F> w(static_cast<size_t>(K), proto_);
        for (int i = 0; i < K; ++i) {
            if (i >= window() || c_[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j < K && j < o.window(); ++j)
                w[static_cast<size_t>(i + j)] =
                    w[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
        return LaurentSeries(proto_, v_ + o.v_, std::move(w));
    }

    LaurentSeries inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero series");
        const int K = window();
        std::vector<F> w(static_cast<size_t>(K), proto_);
        const F c0inv = c_[0].one() / c_[0];
        w[0] = c0inv;
        for (int i = 1; i < K; ++i) {
            F s = proto_;
            for (int j = 1; j <= i && j < window(); ++j)
                s = s + c_[static_cast<size_t>(j)] * w[static_cast<size_t>(i - j)];
            w[static_cast<size_t>(i)] = -(s * c0inv);
        }
        return LaurentSeries(proto_, -v_, std::move(w));
    }

    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }

    bool operator==(const LaurentSeries& o) const {
        if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
        if (v_ != o.v_) return false;
        const int K = std::min(window(), o.window());
        for (int i = 0; i < K; ++i)
            if (!(c_[static_cast<size_t>(i)] == o.c_[static_cast<size_t>(i)])) return false;
        return true;
    }

    // Value at h = 0 on the projective line: order > 0 -> 0, order < 0 ->
    // infinity (nullopt), order 0 -> leading coefficient. Exact zero -> 0.
    std::optional<F> reduce() const {
        if (is_zero() || v_ > 0) return proto_.zero();
        if (v_ < 0) return std::nullopt;
        return c_[0];
    }

private:
    explicit LaurentSeries(F proto) : proto_(std::move(proto)) {}
    LaurentSeries(const F& proto, int v, std::vector<F> c)
        : proto_(proto.zero()), v_(v), c_(std::move(c)) {}
    F proto_;  // zero of the coefficient field, kept for context
    int v_ = 0;
    std::vector<F> c_;  // empty = exact zero
};

}  // namespace arithmaps
