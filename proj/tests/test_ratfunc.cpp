#include <doctest.h>

#include <random>

#include "arithmaps/maps.hpp"
#include "arithmaps/ratfunc.hpp"
#include "arithmaps/series.hpp"

using namespace arithmaps;

namespace {
using RF = RatFunc<Fq>;

struct F7 {
    FqCtx ctx = FqContext::make(7);
    Fq c(long v) const { return Fq::from_int(ctx, v); }
    RF C(long v) const { return RF::constant(c(v)); }
    // polynomial c0 + c1 d + c2 d^2 ...
    RF P(std::vector<long> coeffs) const {
        std::vector<Fq> v;
        for (long x : coeffs) v.push_back(c(x));
        return RF(Poly<Fq>(v));
    }
};
}  // namespace

TEST_CASE("normalized arithmetic with cancellation") {
    F7 f;
    // 2(1+d)/(1+5d) * (1+5d)/2 = 1+d
    RF a = f.C(2) * f.P({1, 1}) / f.P({1, 5});
    RF b = f.P({1, 5}) / f.C(2);
    CHECK(a * b == f.P({1, 1}));
    CHECK((a + (-a)).is_zero());
    CHECK_THROWS_AS(a / RF(), DivisionByZero);
    // canonical form: coprime, monic denominator
    RF c = f.P({0, 2}) / f.P({0, 0, 4});
    CHECK(c.num() == Poly<Fq>({f.c(4)}));  // 2d/(4d^2) = 4/(... ) monic den: d
    CHECK(c.den() == Poly<Fq>({f.c(0), f.c(1)}));
}

TEST_CASE("the worked dKdV chain reproduces x_2^1 over F_7(delta)") {
    F7 f;
    const RF delta = RF::variable(f.c(1));
    // two lattice steps from x_1^0=6, x_2^0=5, y_1^0=2
    auto [x11, y20] = kdv_step(f.C(6), f.C(2), delta);
    auto [x21, y30] = kdv_step(f.C(5), y20, delta);
    CHECK(x11 == f.C(2) * f.P({1, 1}) / f.P({1, 5}));
    CHECK(y20 == f.C(6) * f.P({1, 5}) / f.P({1, 1}));
    CHECK(x21 == f.C(6) * f.P({1, 1}) * f.P({1, 5}) / f.P({1, 3, 3}));
}

TEST_CASE("reduce_at: order of vanishing at delta0 = 1 over F_7") {
    F7 f;
    const Fq one = f.c(1);
    // x_2^1 = 6(1+d)(1+5d)/(1+3d+3d^2) -> 72/7 -> infinity
    RF x21 = f.C(6) * f.P({1, 1}) * f.P({1, 5}) / f.P({1, 3, 3});
    CHECK(reduce_at(x21, one) == ProjValue::infinity());
    // y_2^1 = 2(1+2d+4d^2)/(1+5d)^2 -> 14/36 -> 0
    RF y21 = f.C(2) * f.P({1, 2, 4}) / (f.P({1, 5}) * f.P({1, 5}));
    CHECK(reduce_at(y21, one) == ProjValue::finite(f.c(0)));
    // x_2^2 = 4(1+d)(2+d)(3+2d)/((1+5d)(5+5d+2d^2)) -> 120/72 -> 4
    RF x22 = f.C(4) * f.P({1, 1}) * f.P({2, 1}) * f.P({3, 2}) / (f.P({1, 5}) * f.P({5, 5, 2}));
    CHECK(reduce_at(x22, one) == ProjValue::finite(f.c(4)));
}

TEST_CASE("reduce_at is multiplicative where the projective product is determinate") {
    F7 f;
    std::mt19937_64 rng(9);
    auto rnd = [&]() {
        std::vector<Fq> n, d;
        for (int i = 0; i <= static_cast<int>(rng() % 3); ++i) n.push_back(f.c(static_cast<long>(rng() % 7)));
        for (int i = 0; i <= static_cast<int>(rng() % 3); ++i) d.push_back(f.c(static_cast<long>(rng() % 7)));
        Poly<Fq> pn(n), pd(d);
        if (pd.is_zero()) pd = Poly<Fq>({f.c(1)});
        return RF(pn, pd);
    };
    const Fq at = f.c(1);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        RF a = rnd(), b = rnd();
        if (a.is_zero() || b.is_zero()) continue;
        EvalOutcome prod = proj_mul(reduce_at(a, at), reduce_at(b, at));
        if (!prod.is_determinate()) continue;
        CHECK(reduce_at(a * b, at) == prod.value());
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("order zero means direct substitution; normalization idempotent") {
    F7 f;
    RF x = f.P({2, 3, 1}) / f.P({1, 1});
    const Fq at = f.c(2);
    REQUIRE(x.order_at(at) == 0);
    auto v = x.reduce_at(at);
    REQUIRE(v.has_value());
    CHECK(*v == f.P({2, 3, 1}).num().eval(at) / f.P({1, 1}).num().eval(at));
    RF renorm(x.num(), x.den());
    CHECK(renorm.num() == x.num());
    CHECK(renorm.den() == x.den());
}

TEST_CASE("serialization in the c*(poly)/(poly) shape") {
    F7 f;
    RF x21 = f.C(6) * f.P({1, 1}) * f.P({1, 5}) / f.P({1, 3, 3});
    CHECK(x21.to_string() == "6*(1+6*d+5*d^2)/(1+3*d+3*d^2)");
    CHECK(RF().to_string() == "0");
    CHECK(f.C(3).to_string() == "3");
}

TEST_CASE("laurent series mirror the p-adic exactness contract") {
    const FqCtx ctx = FqContext::make(7);
    using S = LaurentSeries<Fq>;
    auto c = [&](long v) { return Fq::from_int(ctx, v); };
    S one = S::constant(c(1), 8);
    S h = S::monomial(c(1), 1, 8);
    S x = one + h;  // 1 + h
    S y = (x * x - one);
    CHECK(y.order() == 1);  // 2h + h^2
    CHECK(*(y / h).reduce() == c(2));
    CHECK((one / x).order() == 0);
    CHECK_THROWS_AS(one - one, PrecisionExhausted);
    CHECK(!(x - one).is_zero());
    S z = S::zero(c(0));
    CHECK((z * x).is_zero());
    CHECK(*(z + x).reduce() == c(1));
    CHECK_THROWS_AS(x / z, DivisionByZero);
    // visibility window: h^{-3} dominates additions with far-larger orders
    S big = S::monomial(c(2), -3, 8);
    CHECK((big + S::monomial(c(1), 30, 8)).order() == -3);
    CHECK(big.reduce() == std::nullopt);
}
