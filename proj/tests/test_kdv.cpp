#include <doctest.h>

#include "arithmaps/kdv.hpp"

using namespace arithmaps;

namespace {
using RF = RatFunc<Fq>;

struct F7 {
    FqCtx ctx = FqContext::make(7);
    Fq c(long v) const { return Fq::from_int(ctx, v); }
    RF C(long v) const { return RF::constant(c(v)); }
    RF P(std::vector<long> coeffs) const {
        std::vector<Fq> v;
        for (long x : coeffs) v.push_back(c(x));
        return RF(Poly<Fq>(v));
    }
};
}  // namespace

TEST_CASE("the full worked example over F_7(delta) and its reduction at delta = 1") {
    F7 f;
    // x_1^0=6, x_2^0=5, y_1^0=2, y_1^1=2
    auto grid = kdv_evolve_symbolic(f.ctx, {f.c(6), f.c(5)}, {f.c(2), f.c(2)});
    const RF x11 = grid.x[1][0], x21 = grid.x[1][1];
    const RF x12 = grid.x[2][0], x22 = grid.x[2][1];
    const RF y20 = grid.y[0][1], y21 = grid.y[1][1], y31 = grid.y[1][2];

    CHECK(x11 == f.C(2) * f.P({1, 1}) / f.P({1, 5}));
    CHECK(y20 == f.C(6) * f.P({1, 5}) / f.P({1, 1}));
    CHECK(x21 == f.C(6) * f.P({1, 1}) * f.P({1, 5}) / f.P({1, 3, 3}));
    CHECK(y21 == f.C(2) * f.P({1, 2, 4}) / (f.P({1, 5}) * f.P({1, 5})));
    CHECK(x12 == f.C(2) * f.P({1, 1}) * f.P({1, 5}) / f.P({1, 2, 4}));
    CHECK(x22 == f.C(4) * f.P({1, 1}) * f.P({2, 1}) * f.P({3, 2}) / (f.P({1, 5}) * f.P({5, 5, 2})));
    CHECK(y31 == f.C(2) * f.P({5, 5, 2}) / (f.P({2, 1}) * f.P({2, 1})));

    auto red = kdv_reduce(grid, f.c(1));
    CHECK(red.x[1][0] == ProjValue::finite(f.c(3)));   // x_1^1 = 3
    CHECK(red.y[0][1] == ProjValue::finite(f.c(4)));   // y_2^0 = 4
    CHECK(red.x[1][1] == ProjValue::infinity());       // x_2^1 = inf
    CHECK(red.y[1][1] == ProjValue::finite(f.c(0)));   // y_2^1 = 0
    CHECK(red.x[2][0] == ProjValue::infinity());       // x_1^2 = inf
    CHECK(red.x[2][1] == ProjValue::finite(f.c(4)));   // x_2^2 = 4
    CHECK(red.y[1][2] == ProjValue::finite(f.c(5)));   // y_3^1 = 5
}

TEST_CASE("stepwise projective evolution deadlocks exactly where the paper says") {
    F7 f;
    auto pg = kdv_evolve_projective(f.ctx, {f.c(6), f.c(5)}, {f.c(2), f.c(2)}, f.c(1));
    // first row fine, x_2^1 = inf, then x_2^2 indeterminate
    CHECK(pg.x[1][0] == EvalOutcome::determinate(ProjValue::finite(f.c(3))));
    CHECK(pg.x[1][1] == EvalOutcome::determinate(ProjValue::infinity()));
    CHECK(!pg.x[2][1].is_determinate());
    // the function-field route resolves that cell to 4
}

TEST_CASE("symbolic/numeric commutation wherever the stepwise path is determinate") {
    F7 f;
    std::vector<Fq> x0{f.c(6), f.c(5), f.c(4), f.c(3), f.c(2), f.c(2)};
    std::vector<Fq> bnd(8, f.c(2));
    auto sym = kdv_evolve_symbolic(f.ctx, x0, bnd);
    auto red = kdv_reduce(sym, f.c(1));
    auto step = kdv_evolve_projective(f.ctx, x0, bnd, f.c(1));
    int agreed = 0, indet = 0;
    for (size_t t = 0; t < red.x.size(); ++t)
        for (size_t n = 0; n < red.x[t].size(); ++n) {
            if (step.x[t][n].is_determinate()) {
                CHECK(red.x[t][n] == step.x[t][n].value());
                ++agreed;
            } else {
                ++indet;
            }
        }
    CHECK(agreed >= 15);
    CHECK(indet >= 10);
    // the Fig-2 style run resolves completely on the function-field route
    for (const auto& row : red.x) CHECK(row.size() == x0.size());
}

TEST_CASE("delta = 0 degenerates to pure transport") {
    F7 f;
    std::vector<Fq> x0{f.c(6), f.c(5), f.c(4)};
    auto grid = kdv_evolve(f.c(0), x0, std::vector<Fq>{f.c(2), f.c(3)});
    // x' = y, y' = x
    CHECK(grid.x[1][0] == f.c(2));
    CHECK(grid.x[1][1] == f.c(6));
    CHECK(grid.x[1][2] == f.c(5));
    CHECK(grid.y[0][3] == f.c(4));
    CHECK(grid.x[2][0] == f.c(3));
    CHECK(grid.x[2][1] == f.c(2));
}

TEST_CASE("soliton sigma: one-soliton closed form and the trivial phase") {
    F7 f;
    const RF delta = RF::variable(f.c(1));
    auto conv = [&](long v) { return f.C(v); };
    SolitonParams one{{2}, {3}};
    for (long n = 0; n <= 3; ++n)
        for (long t = 0; t <= 3; ++t) {
            RF expect = f.C(1) + f.C(3) / f.C(3) * field_pow(f.C(-1) / f.C(2), t) *
                                     field_pow((f.C(2) + delta) / (f.C(1) + delta - f.C(2)), n);
            CHECK(soliton_sigma(one, n, t, delta, conv) == expect);
        }
    SolitonParams zeroPhase{{2, 3}, {0, 0}};
    CHECK(soliton_sigma(zeroPhase, 3, 5, delta, conv) == f.C(1));
    // l_i + l_j - 1 = 0 in F_7 (i = j = 2: 2*4-1) is rejected even with zero phases
    SolitonParams zeroPhaseSingular{{2, 4}, {0, 0}};
    CHECK_THROWS_AS(soliton_sigma(zeroPhaseSingular, 3, 5, delta, conv), SingularEntry);
    // l_i + l_j - 1 = 0 is rejected
    SolitonParams bad{{4, 4}, {1, 1}};
    CHECK_THROWS_AS(soliton_sigma(bad, 0, 0, delta, conv), SingularEntry);
}

TEST_CASE("soliton solutions satisfy the scalar dKdV equation symbolically") {
    {  // one soliton over F_11(delta), the Fig 3 parameter set
        const FqCtx ctx = FqContext::make(11);
        const Fq one = Fq::from_int(ctx, 1);
        const RatFunc<Fq> delta = RatFunc<Fq>::variable(one);
        auto conv = [&](long v) { return RatFunc<Fq>::constant(Fq::from_int(ctx, v)); };
        SolitonParams sp{{9}, {2}};
        for (long n = 0; n < 4; ++n)
            for (long t = 0; t < 4; ++t) {
                auto xa = soliton_x(sp, n + 1, t + 1, delta, conv);
                auto xb = soliton_x(sp, n, t, delta, conv);
                auto xc = soliton_x(sp, n, t + 1, delta, conv);
                auto xd = soliton_x(sp, n + 1, t, delta, conv);
                auto res = conv(1) / xa - conv(1) / xb + delta / (conv(1) + delta) * (xc - xd);
                CHECK(res.is_zero());
            }
    }
    {  // two solitons over F_19(delta), the Fig 4 parameter set
        const FqCtx ctx = FqContext::make(19);
        const Fq one = Fq::from_int(ctx, 1);
        const RatFunc<Fq> delta = RatFunc<Fq>::variable(one);
        auto conv = [&](long v) { return RatFunc<Fq>::constant(Fq::from_int(ctx, v)); };
        SolitonParams sp{{2, 4}, {15, 9}};
        for (long n = 0; n < 2; ++n)
            for (long t = 0; t < 2; ++t) {
                auto xa = soliton_x(sp, n + 1, t + 1, delta, conv);
                auto xb = soliton_x(sp, n, t, delta, conv);
                auto xc = soliton_x(sp, n, t + 1, delta, conv);
                auto xd = soliton_x(sp, n + 1, t, delta, conv);
                auto res = conv(1) / xa - conv(1) / xb + delta / (conv(1) + delta) * (xc - xd);
                CHECK(res.is_zero());
            }
    }
}

TEST_CASE("reduced soliton time-periods divide r - 1") {
    struct Cfg {
        uint64_t r;
        long delta0;
        SolitonParams sp;
    };
    for (const Cfg& cfg : {Cfg{7, 3, {{3}, {3}}}, Cfg{11, 7, {{9}, {2}}}, Cfg{13, 5, {{4}, {3}}},
                           Cfg{19, 8, {{2, 4}, {15, 9}}}}) {
        const FqCtx ctx = FqContext::make(cfg.r);
        const long T = 2 * static_cast<long>(cfg.r - 1) + 2;
        auto grid = soliton_grid(ctx, cfg.sp, Fq::from_int(ctx, cfg.delta0), 4, T);
        for (long n = 0; n < 4; ++n) {
            std::vector<ProjValue> col;
            for (long t = 0; t < T; ++t) col.push_back(grid[static_cast<size_t>(t)][static_cast<size_t>(n)]);
            auto per = period_detect(col);
            REQUIRE(per.has_value());
            CHECK((cfg.r - 1) % static_cast<uint64_t>(*per) == 0);
        }
    }
}

TEST_CASE("period detection") {
    const FqCtx ctx = FqContext::make(7);
    auto fin = [&](long v) { return ProjValue::finite(Fq::from_int(ctx, v)); };
    std::vector<ProjValue> seq{fin(4), fin(2), fin(3), fin(1), ProjValue::infinity(),
                               fin(4), fin(2), fin(3), fin(1), ProjValue::infinity(),
                               fin(4), fin(2)};
    CHECK(period_detect(seq) == 5);
    std::vector<ProjValue> constant(6, fin(2));
    CHECK(period_detect(constant) == 1);
    std::vector<ProjValue> tooShort{fin(1), fin(2), fin(3)};
    CHECK(!period_detect(tooShort).has_value());
}
