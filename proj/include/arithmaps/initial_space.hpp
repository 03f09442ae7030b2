#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arithmaps/finite_field.hpp"
#include "arithmaps/maps.hpp"
#include "arithmaps/proj.hpp"

namespace arithmaps {

// The four blown-up base points of dP_II on PF_r x PF_r.
enum class Patch { p1_inf, m1_inf, inf_p1, inf_m1 };

const char* patch_name(Patch p);

// A point of the blown-up space of initial conditions: an affine point of
// PF_r x PF_r away from the four base points, or a point of the first or
// second exceptional line over one of them. Exceptional coordinates are
// stored as a single P^1 slope (xi/eta resp. u/v), canonical because the
// representative with last nonzero homogeneous coordinate 1 is unique.
struct OmegaPoint {
    enum class Kind { affine, e1, e2 };
    Kind kind;
    Patch patch;     // e1/e2 only
    ProjValue a, b;  // affine: (x, y); e1/e2: (slope, unused)

    static OmegaPoint affine(ProjValue x, ProjValue y) {
        return {Kind::affine, Patch::p1_inf, std::move(x), std::move(y)};
    }
    static OmegaPoint e1(Patch p, ProjValue slope) {
        return {Kind::e1, p, std::move(slope), ProjValue::infinity()};
    }
    static OmegaPoint e2(Patch p, ProjValue slope) {
        return {Kind::e2, p, std::move(slope), ProjValue::infinity()};
    }

    bool operator==(const OmegaPoint& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::affine) return a == o.a && b == o.b;
        return patch == o.patch && a == o.a;
    }
    bool operator!=(const OmegaPoint& o) const { return !(*this == o); }
    bool operator<(const OmegaPoint& o) const { return key() < o.key(); }

    std::string to_string() const;

private:
    // (kind, patch, a-index, b-index) with infinity mapped past the field
    std::vector<uint64_t> key() const;
};

// Schedule reduced into F_p: alpha_n = alpha0 + n*delta/2, beta_n = beta0 -
// n*delta/2. Automatically period p in characteristic p.
struct FqDp2Schedule {
    Fq alpha0, beta0, delta;
    Dp2Coeffs<Fq> at(long n) const;
    static FqDp2Schedule from_exact(const Dp2ScheduleQ& s, const FqCtx& ctx);
};

// The space of initial conditions at one time step. minimal=false is the full
// patched space (|.| = r^2+10r+1); minimal=true is the smallest subset
// containing PF x PF and closed under the step (|.| = r^2+6r-3): the affine
// part plus the finite points of the four second exceptional lines. The first
// exceptional lines and the [1:0] points only map among themselves and are
// dropped.
class OmegaSpace {
public:
    static OmegaSpace build(const FqCtx& ctx, long n, const FqDp2Schedule& sched, bool minimal);

    const FqCtx& ctx() const { return ctx_; }
    long n() const { return n_; }
    const FqDp2Schedule& schedule() const { return sched_; }
    bool minimal() const { return minimal_; }
    const std::vector<OmegaPoint>& points() const { return points_; }
    size_t size() const { return points_.size(); }
    bool contains(const OmegaPoint& pt) const;

private:
    FqCtx ctx_;
    long n_ = 0;
    FqDp2Schedule sched_;
    bool minimal_ = false;
    std::vector<OmegaPoint> points_;
};

// One application of the automorphism omega~_n (the blown-up dP_II step,
// before the time shift). When alpha_n = 0 (resp beta_n = 0) the x = 1
// (x = -1) line is no longer contracted and maps by direct evaluation;
// stepping a second-exceptional point of the degenerate patches then has no
// consistent image (the blow-up structure itself collapses there) and throws
// DegenerateSchedule.
OmegaPoint omega_step(const OmegaPoint& pt, const OmegaSpace& space);

// The natural isomorphism iota_n identifying step-n with step-(n+1)
// coordinates (shifts exceptional slopes by delta/2 so centers track).
OmegaPoint iota_shift(const OmegaPoint& pt, const Fq& delta);

// phi~_n = iota_n . omega~_n : Omega^(n) -> Omega^(n+1).
OmegaPoint phi_step(const OmegaPoint& pt, const OmegaSpace& space);

// Cycle decomposition. autonomous=true requires delta = 0 (the step then maps
// the space to itself); otherwise decomposes the period-p composite
// phi_{n+p-1} . ... . phi_n, which maps Omega^(n) to itself since the reduced
// schedule has period p.
std::vector<std::vector<OmegaPoint>> orbit_decomposition(const OmegaSpace& space, bool autonomous);

}  // namespace arithmaps
