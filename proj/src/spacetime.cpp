#include "nda/spacetime.hpp"

#include <cmath>

#include "nda/numeric_format.hpp"

namespace nda {

namespace {

void require_ctx(const Bijection& ctx, const Bijection& other) {
    if (ctx != other) {
        throw ContextMismatch("mixed contexts: " + ctx.spec() + " vs " + other.spec());
    }
}

double linspace(double lo, double hi, int i, int n) {
    return n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
}

}  // namespace

UpperReal metric_component(const Bijection& ctx, int a, int b) {
    if (a < 0 || a > 3 || b < 0 || b > 3) throw ConfigError("metric index out of range");
    return ctx.from_lower(a == b ? kMetricDiag[a] : 0.0);
}

FourVector::FourVector(const Bijection& ctx, const std::array<double, 4>& components,
                       Variance variance)
    : ctx_(ctx), components_(components), variance_(variance) {
    for (const double c : components_) {
        if (!ctx_.contains(c)) {
            throw DomainError("component " + format_double(c) + " outside the domain of " +
                              ctx_.spec());
        }
    }
}

FourVector FourVector::of(const std::array<UpperReal, 4>& components, Variance variance) {
    const Bijection& ctx = components[0].ctx();
    for (const auto& c : components) require_ctx(ctx, c.ctx());
    return FourVector(
        ctx, {components[0].value(), components[1].value(), components[2].value(),
              components[3].value()},
        variance);
}

double FourVector::raw(int a) const { return components_.at(a); }

UpperReal FourVector::component(int a) const { return UpperReal(ctx_, components_.at(a)); }

double FourVector::lower(int a) const { return ctx_.forward(components_.at(a)); }

std::array<double, 4> FourVector::lower_all() const {
    return {lower(0), lower(1), lower(2), lower(3)};
}

UpperReal quadratic_form(const FourVector& v) {
    const auto x = v.lower_all();
    return v.ctx().from_lower(x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3]);
}

FourVector lower_index(const FourVector& v) {
    const Bijection& ctx = v.ctx();
    // Time component passes through: f(X_0) = f(X^0) and f is a bijection.
    const std::array<double, 4> flipped{v.raw(0), ctx.inverse(-v.lower(1)),
                                        ctx.inverse(-v.lower(2)), ctx.inverse(-v.lower(3))};
    const Variance toggled = v.variance() == Variance::Contravariant ? Variance::Covariant
                                                                     : Variance::Contravariant;
    return FourVector(ctx, flipped, toggled);
}

UpperReal hyperbolic_cosine(const Bijection& ctx, const UpperReal& phi) {
    require_ctx(ctx, phi.ctx());
    return ctx.from_lower(std::cosh(phi.lower()));
}

UpperReal hyperbolic_sine(const Bijection& ctx, const UpperReal& phi) {
    require_ctx(ctx, phi.ctx());
    return ctx.from_lower(std::sinh(phi.lower()));
}

FourVector boost(const BoostParameters& params, const FourVector& v) {
    const Bijection& ctx = v.ctx();
    require_ctx(ctx, params.rapidity.ctx());
    const double c = std::cosh(params.rapidity.lower());
    const double s = std::sinh(params.rapidity.lower());
    // Contravariant rows are [[c,-s],[-s,c]]; lowering both indices flips
    // the sign of the off-diagonal entries.
    const double k = v.variance() == Variance::Contravariant ? -s : s;
    const auto x = v.lower_all();
    const std::array<double, 4> boosted{ctx.inverse(c * x[0] + k * x[1]),
                                        ctx.inverse(k * x[0] + c * x[1]),
                                        ctx.inverse(x[2]), ctx.inverse(x[3])};
    return FourVector(ctx, boosted, v.variance());
}

FourVector four_velocity(const Bijection& ctx, const UpperReal& phi) {
    require_ctx(ctx, phi.ctx());
    const double fphi = phi.lower();
    const double zero = neutral_zero(ctx).value();
    return FourVector(ctx, {ctx.inverse(std::cosh(fphi)), ctx.inverse(std::sinh(fphi)),
                            zero, zero});
}

UpperReal lightcone_time(const Bijection& ctx, const FourVector& apex,
                         const std::array<UpperReal, 3>& spatial, ConeBranch branch) {
    require_ctx(ctx, apex.ctx());
    double radial = 0.0;
    for (int i = 0; i < 3; ++i) {
        require_ctx(ctx, spatial[i].ctx());
        const double d = spatial[i].lower() - apex.lower(i + 1);
        radial += d * d;
    }
    const double root = std::sqrt(radial);
    const double t = apex.lower(0) + (branch == ConeBranch::Future ? root : -root);
    return ctx.from_lower(t);
}

EffectiveMetric effective_metric(const Bijection& ctx, const FourVector& base) {
    require_ctx(ctx, base.ctx());
    std::array<double, 4> diag{};
    for (int a = 0; a < 4; ++a) {
        const double fp = ctx.derivative(base.raw(a));
        if (!std::isfinite(fp) || fp == 0.0) {
            throw SingularMetric("f' is " + format_double(fp) + " at component " +
                                 std::to_string(a));
        }
        diag[a] = kMetricDiag[a] * fp * fp;
    }
    return {base, diag};
}

SeriesTable lightcone_surface(const Bijection& ctx, const FourVector& apex,
                              const SurfaceGrid& grid) {
    require_ctx(ctx, apex.ctx());
    if (grid.n1 < 1 || grid.n2 < 1) throw ConfigError("surface grid needs n1, n2 >= 1");

    SeriesTable table({"x1", "x2", "x0_future", "x0_past"});
    table.add_comment("f: " + ctx.spec());
    table.add_comment("apex: " + format_double(apex.raw(0)) + "," + format_double(apex.raw(1)) +
                      "," + format_double(apex.raw(2)) + "," + format_double(apex.raw(3)));

    const auto branch_time = [&](double x1, double x2,
                                 ConeBranch branch) -> std::optional<double> {
        try {
            const std::array<UpperReal, 3> spatial{ctx.upper(x1), ctx.upper(x2),
                                                   apex.component(3)};
            return lightcone_time(ctx, apex, spatial, branch).value();
        } catch (const DomainError&) {
            return std::nullopt;
        } catch (const OverflowToBoundary&) {
            return std::nullopt;
        }
    };

    for (int i = 0; i < grid.n1; ++i) {
        const double x1 = linspace(grid.x1_lo, grid.x1_hi, i, grid.n1);
        for (int j = 0; j < grid.n2; ++j) {
            const double x2 = linspace(grid.x2_lo, grid.x2_hi, j, grid.n2);
            table.add_row({x1, x2, branch_time(x1, x2, ConeBranch::Future),
                           branch_time(x1, x2, ConeBranch::Past)});
        }
    }
    return table;
}

}  // namespace nda
