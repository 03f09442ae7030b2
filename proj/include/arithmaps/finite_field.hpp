#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "arithmaps/errors.hpp"

namespace arithmaps {

// Immutable description of F_{p^m}: the prime, the extension degree, and
// (for m >= 2) the monic irreducible modulus polynomial. The modulus is the
// lexicographically smallest one so that serialized elements are bit-stable
// across runs. Share by shared_ptr; elements keep their context alive.
class FqContext {
public:
    static std::shared_ptr<const FqContext> make(uint64_t p, unsigned m = 1);

    uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    uint64_t r() const { return r_; }  // p^m
    // Modulus coefficients c0..cm (cm = 1); empty for m == 1.
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    FqContext(const FqContext&) = delete;
    FqContext& operator=(const FqContext&) = delete;

private:
    FqContext(uint64_t p, unsigned m, uint64_t r, std::vector<uint64_t> modulus)
        : p_(p), m_(m), r_(r), modulus_(std::move(modulus)) {}
    uint64_t p_;
    unsigned m_;
    uint64_t r_;
    std::vector<uint64_t> modulus_;
};

using FqCtx = std::shared_ptr<const FqContext>;

// Coefficients c0..c_{m-1} of the lexicographically smallest monic
// irreducible polynomial of degree m over F_p (the leading 1 is implicit in
// position m). Requires m >= 2; one always exists.
std::vector<uint64_t> find_irreducible(uint64_t p, unsigned m);

// An element of F_{p^m}: m coefficients over the fixed modulus.
class Fq {
public:
    Fq() = default;  // invalid placeholder; any arithmetic on it is UB by contract

    // Integer value -> element of the prime subfield (reduced residue).
    static Fq from_int(const FqCtx& ctx, long long v);
    // Coefficient list c0..c_{m-1}; must have exactly m entries.
    static Fq from_coeffs(const FqCtx& ctx, const std::vector<long long>& coeffs);
    // Enumeration index 0..r-1 via base-p digits; bijective.
    static Fq from_index(const FqCtx& ctx, uint64_t index);

    const FqCtx& ctx() const { return ctx_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t residue() const { return c_[0]; }  // the value for m == 1
    uint64_t index() const;                     // inverse of from_index

    bool is_zero() const;
    bool is_one() const;
    Fq zero() const { return from_int(ctx_, 0); }
    Fq one() const { return from_int(ctx_, 1); }

    Fq operator-() const;
    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;  // DivisionByZero
    Fq inverse() const;

    bool operator==(const Fq& o) const { return c_ == o.c_; }
    bool operator!=(const Fq& o) const { return c_ != o.c_; }
    bool operator<(const Fq& o) const;  // ordering for containers

    // m == 1: the residue as decimal; m > 1: "[c0,c1,...]".
    std::string to_string() const;

private:
    Fq(FqCtx ctx, std::vector<uint64_t> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}
    FqCtx ctx_;
    std::vector<uint64_t> c_;
};

}  // namespace arithmaps
