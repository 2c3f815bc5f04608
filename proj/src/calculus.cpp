#include "nda/calculus.hpp"

#include <cmath>

namespace nda {

namespace {

void require_ctx(const Bijection& ctx, const UpperReal& v) {
    if (v.ctx() != ctx) {
        throw ContextMismatch("operand from context " + v.ctx().spec() +
                              " used under context " + ctx.spec());
    }
}

double derivative_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

// Central difference quotient of the lower shadow.
double lower_derivative(const std::function<double(double)>& a, double x) {
    const double h = derivative_step(x);
    return (a(x + h) - a(x - h)) / (2.0 * h);
}

// Composite Simpson rule; panels must be even and >= 2. Accumulation is
// compensated: difference quotients downstream divide by steps ~1e-6, so
// summation noise has to stay near ulp.
double simpson(const std::function<double(double)>& a, double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    double sum = 0.0;
    double comp = 0.0;
    const auto accumulate = [&](double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    const double fa = a(lo);
    const double fb = a(hi);
    if (!std::isfinite(fa) || !std::isfinite(fb)) {
        throw QuadratureFailure("integrand is not finite at an endpoint");
    }
    accumulate(fa);
    accumulate(fb);
    for (int i = 1; i < panels; ++i) {
        const double v = a(lo + i * h);
        if (!std::isfinite(v)) {
            throw QuadratureFailure("integrand is not finite at x = " +
                                    std::to_string(lo + i * h));
        }
        accumulate((i % 2 ? 4.0 : 2.0) * v);
    }
    return sum * (h / 3.0);
}

}  // namespace

UpperReal UpperFunction::operator()(const UpperReal& x) const {
    require_ctx(ctx, x);
    return ctx.from_lower(lower(x.lower()));
}

UpperReal nd_derivative_limit(const UpperFunction& fn, const UpperReal& x,
                              const UpperReal& step) {
    require_ctx(fn.ctx, x);
    require_ctx(fn.ctx, step);
    if (step.lower() == 0.0) {
        throw DivisionByZeroPrime("difference quotient with step H = 0'");
    }
    const UpperReal ahead = fn(add(fn.ctx, x, step));
    const UpperReal base = fn(x);
    return div(fn.ctx, sub(fn.ctx, ahead, base), step);
}

UpperReal nd_derivative(const UpperFunction& fn, const UpperReal& x) {
    require_ctx(fn.ctx, x);
    const double d = lower_derivative(fn.lower, x.lower());
    if (!std::isfinite(d)) {
        throw NonFiniteDerivative("lower difference quotient is not finite at f(X) = " +
                                  std::to_string(x.lower()));
    }
    return fn.ctx.from_lower(d);
}

UpperReal nd_integral(const UpperFunction& fn, const UpperReal& from, const UpperReal& to,
                      int panels) {
    require_ctx(fn.ctx, from);
    require_ctx(fn.ctx, to);
    if (panels < 1) throw ConfigError("nd_integral needs at least one panel");
    const double lo = from.lower();
    const double hi = to.lower();
    if (lo == hi) return fn.ctx.from_lower(0.0);
    return fn.ctx.from_lower(simpson(fn.lower, lo, hi, panels + panels % 2));
}

FundamentalTheoremResiduals verify_fundamental_theorem(const UpperFunction& fn,
                                                       const UpperReal& x,
                                                       const UpperReal& y) {
    require_ctx(fn.ctx, x);
    require_ctx(fn.ctx, y);

    // D/DX of the accumulated integral vs the function itself. The
    // accumulated map's lower shadow is t -> ∫_{f(Y)}^{t} a.
    const double base = y.lower();
    const UpperFunction accumulated{
        fn.ctx, [a = fn.lower, base](double t) {
            return t == base ? 0.0 : simpson(a, base, t, 1024);
        }};
    const double lhs1 = nd_derivative(accumulated, x).lower();
    const double rhs1 = fn(x).lower();

    // Integral of DA/DX' vs A(X) ⊖ A(Y). The derivative's lower shadow is
    // a' itself.
    const UpperFunction derivative_shadow{
        fn.ctx, [a = fn.lower](double t) { return lower_derivative(a, t); }};
    const double lhs2 = nd_integral(derivative_shadow, y, x).lower();
    const double rhs2 = sub(fn.ctx, fn(x), fn(y)).lower();

    return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
}

}  // namespace nda
