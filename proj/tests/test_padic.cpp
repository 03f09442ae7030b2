#include <doctest.h>

#include <random>

#include "arithmaps/padic.hpp"

using namespace arithmaps;

namespace {
Rational rnd_rational(std::mt19937_64& rng) {
    long n = static_cast<long>(rng() % 2001) - 1000;
    long d = 1 + static_cast<long>(rng() % 97);
    if (n == 0) n = 1;
    return Rational(n, d);
}
}  // namespace

TEST_CASE("construction pins valuation and unit digits") {
    PAdic a = PAdic::from_rational(Rational(1, 7), 7, 8);
    CHECK(a.valuation() == -1);
    CHECK(a.digits()[0] == 1);
    for (size_t i = 1; i < a.digits().size(); ++i) CHECK(a.digits()[i] == 0);

    // 2/3 in Q_7 at 4 digits: the unit u satisfies 3u = 2 mod 7^4
    PAdic b = PAdic::from_rational(Rational(2, 3), 7, 4);
    CHECK(b.valuation() == 0);
    Integer u = 0;
    auto d = b.digits();
    for (size_t i = d.size(); i-- > 0;) u = u * 7 + static_cast<long>(d[i]);
    Integer mod = 7 * 7 * 7 * 7;
    CHECK((u * 3 - 2) % mod == 0);

    CHECK(PAdic::from_rational(Rational(0), 5, 4).is_zero());
}

TEST_CASE("ultrametric inequality on random pairs") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        std::mt19937_64 rng(p * 17);
        for (int i = 0; i < 1000; ++i) {
            Rational qa = rnd_rational(rng), qb = rnd_rational(rng);
            PAdic a = PAdic::from_rational(qa, p, 32);
            PAdic b = PAdic::from_rational(qb, p, 32);
            Rational sum = qa + qb;
            long lhs = sum.is_zero() ? LONG_MAX : valuation(sum, p);
            // |x+y|_p <= max(|x|,|y|) ie v(x+y) >= min(v(x),v(y))
            CHECK(lhs >= std::min(a.valuation(), b.valuation()));
            if (!sum.is_zero()) {
                PAdic s = a + b;
                CHECK(s.valuation() == lhs);  // exact valuation tracking
            }
        }
    }
}

TEST_CASE("cancellation: (1 + p*e) - 1 recovers the small term exactly") {
    const uint64_t p = 5;
    for (long ev : {1L, 2L, 3L}) {
        Rational e(12, 7);  // |e|_5 = 1
        Rational x = Rational(1) + Rational(static_cast<long>(p)).pow(ev) * e;
        PAdic a = PAdic::from_rational(x, p, 20);
        PAdic diff = a - PAdic::from_integer(p, 1, 20);
        CHECK(diff.valuation() == ev);
    }
    PAdic x = PAdic::from_rational(Rational(22, 7), 5, 24);
    CHECK((x / x).valuation() == 0);
    CHECK((x / x).digits()[0] == 1);
}

TEST_CASE("full cancellation exhausts precision rather than guessing") {
    const uint64_t p = 7;
    // 1 + p^70 agrees with 1 on all 64 known digits
    Rational x = Rational(1) + Rational(7).pow(70);
    PAdic a = PAdic::from_rational(x, p, 64);
    PAdic one = PAdic::from_integer(p, 1, 64);
    CHECK_THROWS_AS(a - one, PrecisionExhausted);
    CHECK_THROWS_AS(one - one, PrecisionExhausted);  // exact-looking zero is unknowable too
    CHECK_THROWS_AS(one / PAdic::zero(p), DivisionByZero);
}

TEST_CASE("valuations are additive and reductions homomorphic") {
    const uint64_t p = 5;
    const FqCtx ctx = FqContext::make(p);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        Rational qa = rnd_rational(rng), qb = rnd_rational(rng);
        PAdic a = PAdic::from_rational(qa, p, 32);
        PAdic b = PAdic::from_rational(qb, p, 32);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        if (a.valuation() != b.valuation())
            CHECK((a + b).valuation() == std::min(a.valuation(), b.valuation()));
        // Z_p pairs: the residue map is a ring homomorphism
        if (a.valuation() >= 0 && b.valuation() >= 0) {
            CHECK((a + b).reduce_zp(ctx) == a.reduce_zp(ctx) + b.reduce_zp(ctx));
            CHECK((a * b).reduce_zp(ctx) == a.reduce_zp(ctx) * b.reduce_zp(ctx));
        }
    }
}

TEST_CASE("digit round trip reproduces the rational modulo p^precision") {
    const uint64_t p = 3;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Rational q = rnd_rational(rng);
        const int prec = 12;
        PAdic a = PAdic::from_rational(q, p, prec);
        Integer u = 0;
        auto d = a.digits();
        for (size_t k = d.size(); k-- > 0;) u = u * 3 + static_cast<long>(d[k]);
        Rational rec = Rational(u) * Rational(3).pow(a.valuation());
        Rational diff = q - rec;
        if (!diff.is_zero()) CHECK(valuation(diff, p) >= a.valuation() + prec);
    }
}

TEST_CASE("reduction maps") {
    const FqCtx f7 = FqContext::make(7);
    // 2/3 = 2 * 3^{-1} = 2*5 = 10 = 3 mod 7
    CHECK(PAdic::from_rational(Rational(2, 3), 7, 8).reduce_zp(f7) == Fq::from_int(f7, 3));
    CHECK(PAdic::from_rational(Rational(14, 3), 7, 8).reduce_zp(f7) == Fq::from_int(f7, 0));
    CHECK_THROWS_AS(PAdic::from_rational(Rational(1, 7), 7, 8).reduce_zp(f7), NotPAdicInteger);
    CHECK(PAdic::from_rational(Rational(1, 7), 7, 8).reduce_qp(f7) == ProjValue::infinity());
    CHECK(PAdic::from_rational(Rational(7, 3), 7, 8).reduce_qp(f7) ==
          ProjValue::finite(Fq::from_int(f7, 0)));
    CHECK(PAdic::from_integer(7, 13, 8).reduce_qp(f7) == ProjValue::finite(Fq::from_int(f7, 6)));
    // the exact-rational counterparts agree
    CHECK(reduce_zp(Rational(2, 3), f7) == Fq::from_int(f7, 3));
    CHECK(reduce_qp(Rational(1, 7), f7) == ProjValue::infinity());
    CHECK(reduce_qp(Rational(0), f7) == ProjValue::finite(Fq::from_int(f7, 0)));
}

TEST_CASE("debug serialization shape") {
    PAdic a = PAdic::from_rational(Rational(10), 5, 6);
    CHECK(a.to_string().substr(0, 3) == "5^1");
}
