#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arithmaps/maps.hpp"
#include "arithmaps/padic.hpp"
#include "arithmaps/proj.hpp"
#include "arithmaps/rational.hpp"

namespace arithmaps {

// Integer-exact map parameters, instantiated into whichever backend field a
// computation runs in (Q, Q_p, F_p, Laurent series over F_p).
struct Dp2ParamsZ {
    Dp2ScheduleQ sched;
};
struct PsiParamsZ {
    long a;
    unsigned gamma;
};
struct QP1ParamsZ {
    long a, b, q;
};
struct QP2ParamsZ {
    long a, q, tau0;
};
using MapParamsZ = std::variant<Dp2ParamsZ, PsiParamsZ, QP1ParamsZ, QP2ParamsZ>;

const char* map_name(const MapParamsZ& params);

// One step of whichever map the params describe, in any backend field; conv
// embeds exact rational constants into the field.
template <FieldElement F, class Conv>
MapState<F> apply_map_step(const MapParamsZ& params, const MapState<F>& s, long n, Conv&& conv) {
    if (const auto* d = std::get_if<Dp2ParamsZ>(&params))
        return dp2_step(s, dp2_coeffs_at<F>(d->sched, n, conv));
    if (const auto* ps = std::get_if<PsiParamsZ>(&params))
        return psi_step(s, PsiParams<F>{conv(Rational(ps->a)), ps->gamma});
    if (const auto* q1 = std::get_if<QP1ParamsZ>(&params))
        return qp1_step(s, n, QP1Params<F>{conv(Rational(q1->a)), conv(Rational(q1->b)),
                                           conv(Rational(q1->q))});
    const auto& q2 = std::get<QP2ParamsZ>(params);
    return qp2_step(s, n, QP2Params<F>{conv(Rational(q2.a)), conv(Rational(q2.q)),
                                       conv(Rational(q2.tau0))});
}

// One almost-good-reduction query: an exact point of the map's domain D
// (given by rationals, lifted internally to truncated p-adics), the starting
// time step, and the search bound.
struct AgrQuery {
    MapParamsZ params;
    MapState<Rational> point;
    long n0 = 0;
    int m_max = 32;
    uint64_t seed = 1;  // drives the downstairs curve direction only
};

struct AgrReport {
    bool found = false;
    int m = 0;
    // Reduced values at the confinement step (when found).
    std::optional<std::pair<ProjValue, ProjValue>> upstairs, downstairs;
    // v_p of each upstairs component per step; kValZero marks exact zero.
    static constexpr long kValZero = LONG_MAX;
    std::vector<std::pair<long, long>> valuation_trace;
    // Downstairs h-curve state per step ("(v,w)" reduced pair, or a marker
    // once the curve evaluation degenerates).
    std::vector<std::string> downstairs_trace;
    std::string note;
};

// Search for the confinement exponent: the minimal m <= m_max at which the
// upstairs orbit has returned to Z_p x Z_p and its reduction equals the
// composed reduced map's value at the reduced point (computed along a generic
// curve germ; stepwise PF_p iteration is stuck at the intermediate
// indeterminate states, which is the phenomenon being measured).
// DomainViolation if the point is outside the map's stated domain. Upstairs
// runs at the given p-adic precision and retries with doubled precision up to
// PAdic::kMaxPrecision when cancellation exhausts it.
AgrReport agr_search(const AgrQuery& query, uint64_t p,
                     int precision = PAdic::kDefaultPrecision);

// Bulk validation of the proposition case tables: for each singular stratum
// of the map, `samples` pseudorandom lifts x = x~ + p*e (|e|_p = 1), the
// observed m histogram and the match rate against the predicted closed form.
struct ScanStratum {
    std::string name;
    int samples = 0;
    int found = 0;    // AGR confinement found within m_max
    int matched = 0;  // found and (m, value) equal the prediction
    std::map<int, int> m_histogram;
    std::string expected;  // human-readable prediction ("m=3", "diverge", ...)
};

std::vector<ScanStratum> agr_scan_psi(unsigned gamma, long a, uint64_t p, int samples,
                                      uint64_t seed, int m_max = 32);
std::vector<ScanStratum> agr_scan_dp2(uint64_t p, int samples, uint64_t seed, int m_max = 32);
std::vector<ScanStratum> agr_scan_qp1(long a, long b, long q, uint64_t p, int samples,
                                      uint64_t seed, int m_max = 32);
std::vector<ScanStratum> agr_scan_qp2(long a, long q, long tau0, uint64_t p, int samples,
                                      uint64_t seed, int m_max = 32);

}  // namespace arithmaps
