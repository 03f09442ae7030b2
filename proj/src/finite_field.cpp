#include "arithmaps/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace arithmaps {
namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t pow_u64_checked(uint64_t p, unsigned m) {
    uint64_t r = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (r > UINT64_MAX / p) throw std::overflow_error("p^m does not fit in 64 bits");
        r *= p;
    }
    return r;
}

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b % p) % p; }
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t invm(uint64_t a, uint64_t p) {
    // extended Euclid in Z
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw DivisionByZero("no inverse mod p");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p) : t);
}

// Small polynomial helpers over F_p on raw coefficient vectors (low->high).
using PVec = std::vector<uint64_t>;

void trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
    return r;
}

// a mod b, b monic-led (any nonzero leading coefficient works).
PVec pmod(PVec a, const PVec& b, uint64_t p) {
    trim(a);
    const uint64_t lcinv = invm(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t c = mulm(a.back(), lcinv, p);
        size_t k = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[k + i] = subm(a[k + i], mulm(c, b[i], p), p);
        trim(a);
    }
    return a;
}

PVec pgcd(PVec a, PVec b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const PVec& f, uint64_t p) {
    // trial division by every monic polynomial of degree 1..deg(f)/2
    const size_t m = f.size() - 1;
    for (size_t d = 1; 2 * d <= m; ++d) {
        // enumerate monic degree-d polys via base-p counter on low coefficients
        PVec g(d + 1, 0);
        g[d] = 1;
        uint64_t total = 1;
        for (size_t i = 0; i < d; ++i) total *= p;
        for (uint64_t k = 0; k < total; ++k) {
            uint64_t t = k;
            for (size_t i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<uint64_t> find_irreducible(uint64_t p, unsigned m) {
    if (!is_prime(p)) throw BadCoefficients("p is not prime");
    if (m < 2) throw BadCoefficients("find_irreducible requires m >= 2");
    uint64_t total = pow_u64_checked(p, m);
    PVec f(m + 1, 0);
    f[m] = 1;
    for (uint64_t k = 0; k < total; ++k) {
        uint64_t t = k;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = t % p;
            t /= p;
        }
        if (is_irreducible(f, p)) return PVec(f.begin(), f.end() - 1);
    }
    throw std::logic_error("unreachable: an irreducible of every degree exists");
}

std::shared_ptr<const FqContext> FqContext::make(uint64_t p, unsigned m) {
    if (!is_prime(p)) throw BadCoefficients("p is not prime");
    if (m == 0) throw BadCoefficients("m must be positive");
    uint64_t r = pow_u64_checked(p, m);
    std::vector<uint64_t> modulus;
    if (m >= 2) {
        modulus = find_irreducible(p, m);
        modulus.push_back(1);  // monic leading coefficient
    }
    return std::shared_ptr<const FqContext>(new FqContext(p, m, r, std::move(modulus)));
}

Fq Fq::from_int(const FqCtx& ctx, long long v) {
    const auto p = static_cast<long long>(ctx->p());
    long long res = v % p;
    if (res < 0) res += p;
    std::vector<uint64_t> c(ctx->m(), 0);
    c[0] = static_cast<uint64_t>(res);
    return Fq(ctx, std::move(c));
}

Fq Fq::from_coeffs(const FqCtx& ctx, const std::vector<long long>& coeffs) {
    if (coeffs.size() != ctx->m()) throw BadCoefficients("coefficient list length != m");
    const auto p = static_cast<long long>(ctx->p());
    std::vector<uint64_t> c(ctx->m());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long long res = coeffs[i] % p;
        if (res < 0) res += p;
        c[i] = static_cast<uint64_t>(res);
    }
    return Fq(ctx, std::move(c));
}

Fq Fq::from_index(const FqCtx& ctx, uint64_t index) {
    std::vector<uint64_t> c(ctx->m());
    for (unsigned i = 0; i < ctx->m(); ++i) {
        c[i] = index % ctx->p();
        index /= ctx->p();
    }
    return Fq(ctx, std::move(c));
}

uint64_t Fq::index() const {
    uint64_t k = 0;
    for (size_t i = c_.size(); i-- > 0;) k = k * ctx_->p() + c_[i];
    return k;
}

bool Fq::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint64_t x) { return x == 0; });
}

bool Fq::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint64_t x) { return x == 0; });
}

Fq Fq::operator-() const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = subm(0, c_[i], ctx_->p());
    return Fq(ctx_, std::move(c));
}

Fq Fq::operator+(const Fq& o) const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = addm(c_[i], o.c_[i], ctx_->p());
    return Fq(ctx_, std::move(c));
}

Fq Fq::operator-(const Fq& o) const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = subm(c_[i], o.c_[i], ctx_->p());
    return Fq(ctx_, std::move(c));
}

Fq Fq::operator*(const Fq& o) const {
    const uint64_t p = ctx_->p();
    if (ctx_->m() == 1) return Fq(ctx_, {mulm(c_[0], o.c_[0], p)});
    PVec prod = pmul(c_, o.c_, p);
    prod = pmod(std::move(prod), ctx_->modulus(), p);
    prod.resize(ctx_->m(), 0);
    return Fq(ctx_, std::move(prod));
}

Fq Fq::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const uint64_t p = ctx_->p();
    if (ctx_->m() == 1) return Fq(ctx_, {invm(c_[0], p)});
    // extended Euclid in F_p[t] against the modulus
    PVec r0 = ctx_->modulus(), r1 = c_;
    trim(r1);
    PVec s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // r0 = q*r1 + rem
        PVec rem = r0;
        PVec q;
        const uint64_t lcinv = invm(r1.back(), p);
        trim(rem);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint64_t cq = mulm(rem.back(), lcinv, p);
            size_t k = rem.size() - r1.size();
            q[k] = cq;
            for (size_t i = 0; i < r1.size(); ++i) rem[k + i] = subm(rem[k + i], mulm(cq, r1[i], p), p);
            trim(rem);
        }
        // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
        PVec qs = pmul(q, s1, p);
        PVec s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = subm(s2[i], qs[i], p);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd, a nonzero constant (modulus irreducible)
    const uint64_t scale = invm(r0[0], p);
    PVec inv = s0;
    for (auto& x : inv) x = mulm(x, scale, p);
    inv = pmod(std::move(inv), ctx_->modulus(), p);
    inv.resize(ctx_->m(), 0);
    return Fq(ctx_, std::move(inv));
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inverse(); }

bool Fq::operator<(const Fq& o) const { return index() < o.index(); }

std::string Fq::to_string() const {
    if (ctx_->m() == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    s += ']';
    return s;
}

}  // namespace arithmaps
