#include "arithmaps/kdv.hpp"

#include <map>
#include <utility>

namespace arithmaps {

KdvGrid<RatFunc<Fq>> kdv_evolve_symbolic(const FqCtx& ctx, const std::vector<Fq>& x0,
                                         const std::vector<Fq>& boundary) {
    using RF = RatFunc<Fq>;
    const Fq one = Fq::from_int(ctx, 1);
    const RF delta = RF::variable(one);
    std::vector<RF> xr, br;
    for (const Fq& v : x0) xr.push_back(RF::constant(v));
    for (const Fq& v : boundary) br.push_back(RF::constant(v));
    try {
        return kdv_evolve(delta, xr, br);
    } catch (const SingularInput&) {
        throw SymbolicSingular();
    }
}

ProjGrid kdv_reduce(const KdvGrid<RatFunc<Fq>>& grid, const Fq& delta0) {
    ProjGrid out;
    for (const auto& row : grid.x) {
        std::vector<ProjValue> r;
        r.reserve(row.size());
        for (const auto& v : row) r.push_back(reduce_at(v, delta0));
        out.x.push_back(std::move(r));
    }
    for (const auto& row : grid.y) {
        std::vector<ProjValue> r;
        r.reserve(row.size());
        for (const auto& v : row) r.push_back(reduce_at(v, delta0));
        out.y.push_back(std::move(r));
    }
    return out;
}

PExtGrid kdv_evolve_projective(const FqCtx& ctx, const std::vector<Fq>& x0,
                               const std::vector<Fq>& boundary, const Fq& delta0) {
    const PExt delta = PExt::finite(ctx, delta0);
    std::vector<PExt> xr, br;
    for (const Fq& v : x0) xr.push_back(PExt::finite(ctx, v));
    for (const Fq& v : boundary) br.push_back(PExt::finite(ctx, v));
    KdvGrid<PExt> g = kdv_evolve(delta, xr, br);
    PExtGrid out;
    for (auto& row : g.x) {
        std::vector<EvalOutcome> r;
        for (auto& v : row) r.push_back(v.outcome());
        out.x.push_back(std::move(r));
    }
    for (auto& row : g.y) {
        std::vector<EvalOutcome> r;
        for (auto& v : row) r.push_back(v.outcome());
        out.y.push_back(std::move(r));
    }
    return out;
}

std::vector<std::vector<ProjValue>> soliton_grid(const FqCtx& ctx, const SolitonParams& sp,
                                                 const Fq& delta0, long n_count, long t_count) {
    using RF = RatFunc<Fq>;
    const Fq one = Fq::from_int(ctx, 1);
    const RF delta = RF::variable(one);
    auto conv = [&](long v) { return RF::constant(Fq::from_int(ctx, v)); };
    std::map<std::pair<long, long>, RF> sig;
    auto sigma = [&](long n, long t) -> const RF& {
        auto it = sig.find({n, t});
        if (it == sig.end())
            it = sig.emplace(std::make_pair(n, t), soliton_sigma(sp, n, t, delta, conv)).first;
        return it->second;
    };
    std::vector<std::vector<ProjValue>> grid;
    for (long t = 0; t < t_count; ++t) {
        std::vector<ProjValue> row;
        for (long n = 0; n < n_count; ++n) {
            const RF num = sigma(n, t) * sigma(n + 1, t - 1);
            const RF den = sigma(n + 1, t) * sigma(n, t - 1);
            if (den.is_zero() || num.is_zero()) throw ZeroSigma();
            row.push_back(reduce_at(num / den, delta0));
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

std::optional<long> period_detect(const std::vector<ProjValue>& seq) {
    const long len = static_cast<long>(seq.size());
    for (long T = 1; 2 * T <= len; ++T) {
        bool ok = true;
        for (long i = 0; i + T < len; ++i)
            if (seq[static_cast<size_t>(i)] != seq[static_cast<size_t>(i + T)]) {
                ok = false;
                break;
            }
        if (ok) return T;
    }
    return std::nullopt;
}

}  // namespace arithmaps
