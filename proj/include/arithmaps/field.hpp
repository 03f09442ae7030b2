#pragma once

#include <concepts>

namespace arithmaps {

// The single field interface everything generic in this library is written
// against. zero()/one() are member constructors so that runtime-contexted
// fields (F_{p^m}, truncated series) can hand out identities of the right
// context; for context-free fields they ignore *this.
template <class F>
concept FieldElement = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero() } -> std::convertible_to<F>;
    { a.one() } -> std::convertible_to<F>;
};

// b^e with integer (possibly negative) exponent by binary powering.
template <FieldElement F>
F field_pow(const F& b, long e) {
    if (e < 0) return field_pow(b.one() / b, -e);
    F r = b.one();
    F base = b;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * base;
        if (k > 1) base = base * base;
    }
    return r;
}

}  // namespace arithmaps
