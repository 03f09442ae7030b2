#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "arithmaps/finite_field.hpp"

namespace arithmaps {

// A point of the projective line PF_r = F_r + {inf}.
class ProjValue {
public:
    static ProjValue finite(Fq v) { return ProjValue(std::move(v)); }
    static ProjValue infinity() { return ProjValue(); }

    bool is_infinity() const { return !v_.has_value(); }
    bool is_zero() const { return v_.has_value() && v_->is_zero(); }
    const Fq& value() const { return *v_; }  // finite only

    bool operator==(const ProjValue& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return *v_ == *o.v_;
    }
    bool operator!=(const ProjValue& o) const { return !(*this == o); }

    std::string to_string() const { return is_infinity() ? "inf" : v_->to_string(); }

private:
    ProjValue() = default;
    explicit ProjValue(Fq v) : v_(std::move(v)) {}
    std::optional<Fq> v_;
};

// Result of projective-line arithmetic: a determinate PF_r value, or the
// marker for the forbidden forms 0/0, inf/inf, 0*inf, inf+-inf. The dynamics
// deliberately run into both, so this is a value, not an error.
class EvalOutcome {
public:
    static EvalOutcome determinate(ProjValue v) { return EvalOutcome(std::move(v)); }
    static EvalOutcome indeterminate() { return EvalOutcome(); }

    bool is_determinate() const { return v_.has_value(); }
    const ProjValue& value() const { return *v_; }

    bool operator==(const EvalOutcome& o) const {
        if (is_determinate() != o.is_determinate()) return false;
        return !is_determinate() || *v_ == *o.v_;
    }

    std::string to_string() const { return is_determinate() ? v_->to_string() : "indet"; }

private:
    EvalOutcome() = default;
    explicit EvalOutcome(ProjValue v) : v_(std::move(v)) {}
    std::optional<ProjValue> v_;
};

// Projective-line conventions: a+inf = inf, a*inf = inf (a != 0),
// a/0 = inf (a != 0), a/inf = 0, inf*inf = inf; indeterminate exactly for
// inf+-inf, 0*inf, 0/0, inf/inf.
inline EvalOutcome proj_add(const ProjValue& a, const ProjValue& b) {
    if (a.is_infinity() && b.is_infinity()) return EvalOutcome::indeterminate();
    if (a.is_infinity() || b.is_infinity()) return EvalOutcome::determinate(ProjValue::infinity());
    return EvalOutcome::determinate(ProjValue::finite(a.value() + b.value()));
}

inline EvalOutcome proj_sub(const ProjValue& a, const ProjValue& b) {
    if (a.is_infinity() && b.is_infinity()) return EvalOutcome::indeterminate();
    if (a.is_infinity() || b.is_infinity()) return EvalOutcome::determinate(ProjValue::infinity());
    return EvalOutcome::determinate(ProjValue::finite(a.value() - b.value()));
}

inline EvalOutcome proj_mul(const ProjValue& a, const ProjValue& b) {
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_zero() || b.is_zero()) return EvalOutcome::indeterminate();
        return EvalOutcome::determinate(ProjValue::infinity());
    }
    return EvalOutcome::determinate(ProjValue::finite(a.value() * b.value()));
}

inline EvalOutcome proj_div(const ProjValue& a, const ProjValue& b) {
    if (a.is_infinity() && b.is_infinity()) return EvalOutcome::indeterminate();
    if (a.is_infinity()) return EvalOutcome::determinate(ProjValue::infinity());
    if (b.is_infinity()) return EvalOutcome::determinate(ProjValue::finite(a.value().zero()));
    if (b.is_zero()) {
        if (a.is_zero()) return EvalOutcome::indeterminate();
        return EvalOutcome::determinate(ProjValue::infinity());
    }
    return EvalOutcome::determinate(ProjValue::finite(a.value() / b.value()));
}

// Rational expression tree over PF_r leaves, evaluated with the conventions
// above. Indeterminacy in any subexpression poisons the whole evaluation.
struct ProjExpr {
    enum class Op { leaf, add, sub, mul, div };
    Op op = Op::leaf;
    std::optional<ProjValue> leaf;
    std::shared_ptr<const ProjExpr> lhs, rhs;

    static ProjExpr value(ProjValue v) {
        ProjExpr e;
        e.leaf = std::move(v);
        return e;
    }
    static ProjExpr node(Op op, ProjExpr l, ProjExpr r) {
        ProjExpr e;
        e.op = op;
        e.lhs = std::make_shared<ProjExpr>(std::move(l));
        e.rhs = std::make_shared<ProjExpr>(std::move(r));
        return e;
    }
};

inline EvalOutcome proj_eval(const ProjExpr& e) {
    if (e.op == ProjExpr::Op::leaf) return EvalOutcome::determinate(*e.leaf);
    EvalOutcome l = proj_eval(*e.lhs);
    EvalOutcome r = proj_eval(*e.rhs);
    if (!l.is_determinate() || !r.is_determinate()) return EvalOutcome::indeterminate();
    switch (e.op) {
        case ProjExpr::Op::add: return proj_add(l.value(), r.value());
        case ProjExpr::Op::sub: return proj_sub(l.value(), r.value());
        case ProjExpr::Op::mul: return proj_mul(l.value(), r.value());
        default: return proj_div(l.value(), r.value());
    }
}

// Checked projective number: the field-shaped wrapper that lets the generic
// map steps run in projective mode. Indeterminacy propagates through all
// operations instead of aborting. Carries its context so zero()/one() work
// in any state.
class PExt {
public:
    PExt(FqCtx ctx, EvalOutcome v) : ctx_(std::move(ctx)), v_(std::move(v)) {}
    static PExt finite(const FqCtx& ctx, Fq v) {
        return PExt(ctx, EvalOutcome::determinate(ProjValue::finite(std::move(v))));
    }
    static PExt infinity(const FqCtx& ctx) {
        return PExt(ctx, EvalOutcome::determinate(ProjValue::infinity()));
    }

    const EvalOutcome& outcome() const { return v_; }
    bool is_indeterminate() const { return !v_.is_determinate(); }

    bool is_zero() const { return v_.is_determinate() && v_.value().is_zero(); }
    PExt zero() const { return finite(ctx_, Fq::from_int(ctx_, 0)); }
    PExt one() const { return finite(ctx_, Fq::from_int(ctx_, 1)); }

    PExt operator-() const {
        if (!v_.is_determinate() || v_.value().is_infinity()) return *this;
        return finite(ctx_, -v_.value().value());
    }
    PExt operator+(const PExt& o) const { return combine(o, proj_add); }
    PExt operator-(const PExt& o) const { return combine(o, proj_sub); }
    PExt operator*(const PExt& o) const { return combine(o, proj_mul); }
    PExt operator/(const PExt& o) const { return combine(o, proj_div); }

    bool operator==(const PExt& o) const { return v_ == o.v_; }

    std::string to_string() const { return v_.to_string(); }

private:
    template <class F2>
    PExt combine(const PExt& o, F2&& f) const {
        if (!v_.is_determinate() || !o.v_.is_determinate())
            return PExt(ctx_, EvalOutcome::indeterminate());
        return PExt(ctx_, f(v_.value(), o.v_.value()));
    }
    FqCtx ctx_;
    EvalOutcome v_;
};

}  // namespace arithmaps
