#include "arithmaps/initial_space.hpp"

#include <algorithm>
#include <set>

#include "arithmaps/errors.hpp"
#include "arithmaps/padic.hpp"
#include "arithmaps/ratfunc.hpp"

namespace arithmaps {

namespace {

using RF = RatFunc<Fq>;

struct Germ {
    RF x, y;
};

RF rfc(const FqCtx& ctx, long v) { return RF::constant(Fq::from_int(ctx, v)); }

// h^k as a rational function (k may be negative).
RF hpow(const FqCtx& ctx, int k) {
    const Fq one = Fq::from_int(ctx, 1);
    RF h = RF::variable(one);
    RF r = RF::constant(one);
    for (int i = 0; i < (k > 0 ? k : -k); ++i) r = r * h;
    if (k < 0) return RF::constant(one) / r;
    return r;
}

// Base points and their patches.
bool base_point_patch(const FqCtx& ctx, const ProjValue& x, const ProjValue& y, Patch* out) {
    const Fq one = Fq::from_int(ctx, 1);
    const Fq mone = Fq::from_int(ctx, -1);
    if (y.is_infinity() && !x.is_infinity()) {
        if (x.value() == one) { *out = Patch::p1_inf; return true; }
        if (x.value() == mone) { *out = Patch::m1_inf; return true; }
    }
    if (x.is_infinity() && !y.is_infinity()) {
        if (y.value() == one) { *out = Patch::inf_p1; return true; }
        if (y.value() == mone) { *out = Patch::inf_m1; return true; }
    }
    return false;
}

// Slope of the E2 center on the first exceptional line, per patch.
ProjValue center_slope(const FqCtx& ctx, Patch p, const Dp2Coeffs<Fq>& c) {
    switch (p) {
        case Patch::p1_inf: return ProjValue::finite(-c.alpha);
        case Patch::m1_inf: return ProjValue::finite(c.beta);
        case Patch::inf_p1:
            return c.alpha.is_zero() ? ProjValue::infinity()
                                     : ProjValue::finite(-(c.alpha.one() / c.alpha));
        default:
            return c.beta.is_zero() ? ProjValue::infinity()
                                    : ProjValue::finite(c.beta.one() / c.beta);
    }
}

// A curve germ through the given exceptional-or-line point, transverse enough
// that one map step followed by order-of-vanishing classification reads off
// the image point.
Germ make_germ(const FqCtx& ctx, const OmegaPoint& pt, const Dp2Coeffs<Fq>& c) {
    const Fq one = Fq::from_int(ctx, 1);
    const RF h = RF::variable(one);
    auto C = [&](long v) { return rfc(ctx, v); };
    auto Cf = [&](const Fq& v) { return RF::constant(v); };

    if (pt.kind == OmegaPoint::Kind::affine) {
        // Only the contracted lines x = +-1 need a germ; their y is finite.
        RF x = C(pt.a.value() == one ? 1 : -1) + h;
        RF y = Cf(pt.b.value());
        return {x, y};
    }

    const bool inf_side = pt.patch == Patch::inf_p1 || pt.patch == Patch::inf_m1;
    const long sgn = (pt.patch == Patch::p1_inf || pt.patch == Patch::inf_p1) ? 1 : -1;
    const ProjValue& s = pt.a;

    if (pt.kind == OmegaPoint::Kind::e1) {
        // Slope is (x -+ 1)/y^{-1} on the (+-1, inf) patches and
        // x^{-1}/(y -+ 1) on the (inf, +-1) patches; pick the germ orders so
        // the ratio tends to the requested slope. Slope 0 needs the first
        // member an order smaller, slope infinity the second.
        RF fin, big;
        if (s.is_infinity()) {
            fin = inf_side ? C(sgn) + h * h : C(sgn) + h;
            big = inf_side ? hpow(ctx, -1) : hpow(ctx, -2);
        } else if (s.value().is_zero()) {
            fin = inf_side ? C(sgn) + h : C(sgn) + h * h;
            big = inf_side ? hpow(ctx, -2) : hpow(ctx, -1);
        } else {
            fin = C(sgn) + (inf_side ? h : Cf(s.value()) * h);
            big = inf_side ? RF::constant(one) / (Cf(s.value()) * h) : hpow(ctx, -1);
        }
        return inf_side ? Germ{big, fin} : Germ{fin, big};
    }

    // e2 germs need the coefficient of the patch to be nonzero.
    const Fq coef = (pt.patch == Patch::p1_inf || pt.patch == Patch::inf_p1) ? c.alpha : c.beta;
    if (coef.is_zero()) throw DegenerateSchedule();
    const Fq csgn = (pt.patch == Patch::p1_inf || pt.patch == Patch::inf_p1) ? -coef : coef;
    RF fin, big;
    if (s.is_infinity()) {
        fin = C(sgn) + Cf(csgn) * h * h + C(sgn) * h * h * h;
        big = hpow(ctx, -2);
    } else {
        const Fq t = s.value();
        fin = C(sgn) + Cf(csgn) * h - Cf(csgn * t) * h * h;
        big = hpow(ctx, -1);
    }
    return inf_side ? Germ{big, fin} : Germ{fin, big};
}

// Classify an image germ as a point of the blown-up space at the same step.
OmegaPoint classify(const FqCtx& ctx, const RF& X, const RF& Y, const Dp2Coeffs<Fq>& c) {
    const Fq one = Fq::from_int(ctx, 1);
    const Fq zero = Fq::from_int(ctx, 0);
    const RF rone = RF::constant(one);

    ProjValue xb = reduce_at(X, zero);
    ProjValue yb = reduce_at(Y, zero);
    Patch patch;
    if (!base_point_patch(ctx, xb, yb, &patch)) return OmegaPoint::affine(xb, yb);

    const long sgn = (patch == Patch::p1_inf || patch == Patch::inf_p1) ? 1 : -1;
    const Fq sg = Fq::from_int(ctx, sgn);
    const bool inf_side = patch == Patch::inf_p1 || patch == Patch::inf_m1;
    const Fq coef = (patch == Patch::p1_inf || patch == Patch::inf_p1) ? c.alpha : c.beta;

    // First-level slope.
    RF r1;
    if (!inf_side) {
        r1 = (X - RF::constant(sg)) * Y;  // (x -+ 1)/y^{-1}
    } else {
        r1 = rone / (X * (Y - RF::constant(sg)));  // x^{-1}/(y -+ 1)
    }
    ProjValue slope = reduce_at(r1, zero);
    if (slope != center_slope(ctx, patch, c)) return OmegaPoint::e1(patch, slope);

    // Second level: the u/v ratio of the patch relations.
    //   (1,inf):  ((x-1) + a/y) / ((1-x)/y)    (-1,inf): (-(x+1) + b/y) / ((1+x)/y)
    //   (inf,1):  ((y-1) + a/x) / ((1-y)/x)    (inf,-1): (-(y+1) + b/x) / ((1+y)/x)
    (void)sg;
    RF num, den;
    if (!inf_side) {
        num = (patch == Patch::p1_inf)
                  ? (X - rone) + RF::constant(coef) / Y
                  : RF::constant(-one) * (X + rone) + RF::constant(coef) / Y;
        den = (patch == Patch::p1_inf) ? (rone - X) / Y : (rone + X) / Y;
    } else {
        num = (patch == Patch::inf_p1)
                  ? (Y - rone) + RF::constant(coef) / X
                  : RF::constant(-one) * (Y + rone) + RF::constant(coef) / X;
        den = (patch == Patch::inf_p1) ? (rone - Y) / X : (rone + Y) / X;
    }
    ProjValue t = reduce_at(num / den, zero);
    return OmegaPoint::e2(patch, t);
}

}  // namespace

const char* patch_name(Patch p) {
    switch (p) {
        case Patch::p1_inf: return "(1,inf)";
        case Patch::m1_inf: return "(-1,inf)";
        case Patch::inf_p1: return "(inf,1)";
        default: return "(inf,-1)";
    }
}

std::vector<uint64_t> OmegaPoint::key() const {
    auto enc = [](const ProjValue& v) -> uint64_t {
        return v.is_infinity() ? UINT64_MAX : v.value().index();
    };
    return {static_cast<uint64_t>(kind), static_cast<uint64_t>(patch), enc(a),
            kind == Kind::affine ? enc(b) : 0};
}

std::string OmegaPoint::to_string() const {
    switch (kind) {
        case Kind::affine: return "(" + a.to_string() + "," + b.to_string() + ")";
        case Kind::e1: return std::string("E1") + patch_name(patch) + "[" + a.to_string() + "]";
        default: return std::string("E2") + patch_name(patch) + "[" + a.to_string() + "]";
    }
}

Dp2Coeffs<Fq> FqDp2Schedule::at(long n) const {
    const Fq two = Fq::from_int(alpha0.ctx(), 2);
    const Fq nd2 = Fq::from_int(alpha0.ctx(), n) * delta / two;
    return {alpha0 + nd2, beta0 - nd2};
}

FqDp2Schedule FqDp2Schedule::from_exact(const Dp2ScheduleQ& s, const FqCtx& ctx) {
    // reduce alpha_0, beta_0, delta mod p (coefficients are p-integral by the
    // schedule's construction)
    return {reduce_zp(s.alpha(0), ctx), reduce_zp(s.beta(0), ctx), reduce_zp(s.delta(), ctx)};
}

OmegaSpace OmegaSpace::build(const FqCtx& ctx, long n, const FqDp2Schedule& sched, bool minimal) {
    OmegaSpace sp;
    sp.ctx_ = ctx;
    sp.n_ = n;
    sp.sched_ = sched;
    sp.minimal_ = minimal;
    const Dp2Coeffs<Fq> c = sched.at(n);

    std::vector<ProjValue> line;
    for (uint64_t k = 0; k < ctx->r(); ++k) line.push_back(ProjValue::finite(Fq::from_index(ctx, k)));
    line.push_back(ProjValue::infinity());

    for (const auto& x : line)
        for (const auto& y : line) {
            Patch dummy;
            if (base_point_patch(ctx, x, y, &dummy)) continue;
            sp.points_.push_back(OmegaPoint::affine(x, y));
        }
    // The minimal space keeps the affine part plus the finite points of the
    // four second exceptional lines: those are exactly what the orbit of
    // PF x PF reaches (the x = +-1 lines enter E2 and re-emerge on the
    // y' = +-1 lines three steps later). The first exceptional lines and the
    // [1:0] points only ever map among themselves and are the elements the
    // discrete topology lets us drop.
    for (Patch p : {Patch::p1_inf, Patch::m1_inf, Patch::inf_p1, Patch::inf_m1}) {
        if (!minimal) {
            const ProjValue center = center_slope(ctx, p, c);
            for (const auto& s : line)
                if (s != center) sp.points_.push_back(OmegaPoint::e1(p, s));
        }
        for (const auto& s : line)
            if (!(minimal && s.is_infinity())) sp.points_.push_back(OmegaPoint::e2(p, s));
    }
    std::sort(sp.points_.begin(), sp.points_.end());
    return sp;
}

bool OmegaSpace::contains(const OmegaPoint& pt) const {
    return std::binary_search(points_.begin(), points_.end(), pt);
}

OmegaPoint omega_step(const OmegaPoint& pt, const OmegaSpace& space) {
    const FqCtx& ctx = space.ctx();
    const Dp2Coeffs<Fq> c = space.schedule().at(space.n());
    const Fq one = Fq::from_int(ctx, 1);
    const Fq mone = -one;
    const Fq two = one + one;

    if (pt.kind == OmegaPoint::Kind::affine) {
        const ProjValue& x = pt.a;
        const ProjValue& y = pt.b;
        if (x.is_infinity()) {
            // alpha/(1-x) and beta/(1+x) both vanish; x' = -y
            if (y.is_infinity()) return OmegaPoint::affine(ProjValue::infinity(), ProjValue::infinity());
            return OmegaPoint::affine(ProjValue::finite(-y.value()), ProjValue::infinity());
        }
        const Fq xv = x.value();
        if (xv != one && xv != mone) {
            if (y.is_infinity())
                return OmegaPoint::affine(ProjValue::infinity(), ProjValue::finite(xv));
            const Fq xp = c.alpha / (one - xv) + c.beta / (one + xv) - y.value();
            return OmegaPoint::affine(ProjValue::finite(xp), ProjValue::finite(xv));
        }
        // contracted lines; when the matching coefficient vanishes the line
        // is not contracted and the direct formula applies
        if (xv == one && c.alpha.is_zero())
            return OmegaPoint::affine(ProjValue::finite(c.beta / two - y.value()), ProjValue::finite(one));
        if (xv == mone && c.beta.is_zero())
            return OmegaPoint::affine(ProjValue::finite(c.alpha / two - y.value()), ProjValue::finite(mone));
    }

    Germ g = make_germ(ctx, pt, c);
    const RF rone = RF::constant(one);
    RF t1 = c.alpha.is_zero() ? RF() : RF::constant(c.alpha) / (rone - g.x);
    RF t2 = c.beta.is_zero() ? RF() : RF::constant(c.beta) / (rone + g.x);
    RF xp = t1 + t2 - g.y;
    return classify(ctx, xp, g.x, c);
}

OmegaPoint iota_shift(const OmegaPoint& pt, const Fq& delta) {
    if (pt.kind == OmegaPoint::Kind::affine || pt.kind == OmegaPoint::Kind::e2) return pt;
    const Fq one = delta.one();
    const Fq half = delta / (one + one);
    if (pt.patch == Patch::p1_inf || pt.patch == Patch::m1_inf) {
        // [xi - d/2 eta : eta]: finite slope shifts, [1:0] fixed
        if (pt.a.is_infinity()) return pt;
        return OmegaPoint::e1(pt.patch, ProjValue::finite(pt.a.value() - half));
    }
    // [xi : eta - d/2 xi]: u -> u/(1 - d/2 u), infinity -> -2/delta
    if (pt.a.is_infinity()) {
        if (half.is_zero()) return pt;
        return OmegaPoint::e1(pt.patch, ProjValue::finite(-(one / half)));
    }
    const Fq u = pt.a.value();
    const Fq d = one - half * u;
    if (d.is_zero()) return OmegaPoint::e1(pt.patch, ProjValue::infinity());
    return OmegaPoint::e1(pt.patch, ProjValue::finite(u / d));
}

OmegaPoint phi_step(const OmegaPoint& pt, const OmegaSpace& space) {
    return iota_shift(omega_step(pt, space), space.schedule().delta);
}

std::vector<std::vector<OmegaPoint>> orbit_decomposition(const OmegaSpace& space, bool autonomous) {
    const FqCtx& ctx = space.ctx();
    if (autonomous && !space.schedule().delta.is_zero()) throw NotAutonomous();
    const long period = autonomous ? 1 : static_cast<long>(ctx->p());

    std::vector<OmegaSpace> spaces;
    spaces.push_back(space);
    for (long k = 1; k < period; ++k)
        spaces.push_back(OmegaSpace::build(ctx, space.n() + k, space.schedule(), space.minimal()));
    // reduced schedules have period p, so the composite maps the space to itself
    auto advance = [&](OmegaPoint pt) {
        for (long k = 0; k < period; ++k) pt = phi_step(pt, spaces[static_cast<size_t>(k)]);
        return pt;
    };

    std::vector<std::vector<OmegaPoint>> groups;
    std::set<OmegaPoint> seen;
    for (const OmegaPoint& start : space.points()) {
        if (seen.count(start)) continue;
        std::vector<OmegaPoint> chain;
        OmegaPoint cur = start;
        bool closed = false;
        while (true) {
            chain.push_back(cur);
            seen.insert(cur);
            OmegaPoint next = start;
            try {
                next = advance(cur);
            } catch (const DegenerateSchedule&) {
                // a non-autonomous period always crosses the coefficient
                // zeros; a point stranded on a degenerate exceptional stratum
                // ends its segment here rather than being guessed at
                break;
            }
            if (next == start) {
                closed = true;
                break;
            }
            if (seen.count(next)) break;  // merged into an earlier segment
            cur = next;
        }
        (void)closed;
        groups.push_back(std::move(chain));
    }
    return groups;
}

}  // namespace arithmaps
