#include "nda/fields.hpp"

#include <cmath>
#include <numbers>

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

ChargeConfig::ChargeConfig(Bijection ctx, UpperReal coupling, UpperReal rapidity,
                           FourVector source)
    : ctx_(std::move(ctx)),
      coupling_(std::move(coupling)),
      rapidity_(std::move(rapidity)),
      source_(std::move(source)) {}

ChargeConfig ChargeConfig::make(const Bijection& ctx, const UpperReal& coupling,
                                const UpperReal& rapidity, const UpperReal& y1) {
    require_ctx(ctx, coupling.ctx());
    require_ctx(ctx, rapidity.ctx());
    require_ctx(ctx, y1.ctx());
    // Null and past-pointing: f(Y^0) = -|f(Y^1)|.
    const double y0 = ctx.inverse(-std::abs(y1.lower()));
    const double zero = neutral_zero(ctx).value();
    return ChargeConfig(ctx, coupling, rapidity,
                        FourVector(ctx, {y0, y1.value(), zero, zero}));
}

UpperReal potential_at_origin(const ChargeConfig& cfg) {
    const double fy1 = cfg.source().lower(1);
    if (fy1 == 0.0) {
        throw SourceAtObserver("source event sits on the observer (f(Y^1) = 0)");
    }
    const double sign = fy1 > 0.0 ? 1.0 : -1.0;
    const double denom = std::abs(fy1) * std::exp(sign * cfg.rapidity().lower());
    return cfg.ctx().from_lower(cfg.coupling().lower() / denom);
}

RapidityResult rapidity_from_ratio(double rho, int sign) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw DomainError("rapidity ratio must be a positive finite number, got " +
                          format_double(rho));
    }
    const double f_phi = sign * std::log(rho);
    return {f_phi, std::tanh(f_phi)};
}

double apparent_beta_tan(double length, double y1) {
    if (!(length > 0.0)) throw ConfigError("apparent_beta_tan needs a positive length");
    if (y1 == 0.0 || std::abs(y1) >= 0.5 * length) {
        throw DomainError("coordinate must satisfy 0 < |Y^1| < L/2");
    }
    const double z = std::numbers::pi * y1 / length;
    const double rho = std::tan(z) / z;  // even in y1
    return rapidity_from_ratio(rho, y1 > 0.0 ? 1 : -1).beta;
}

double apparent_beta_artanh(double length, double y1) {
    if (!(length > 0.0)) throw ConfigError("apparent_beta_artanh needs a positive length");
    if (y1 == 0.0 || std::abs(y1) >= 0.5 * length) {
        throw DomainError("coordinate must satisfy 0 < |Y^1| < L/2");
    }
    const double w = 2.0 * y1 / length;
    const double rho = std::atanh(w) / w;
    return rapidity_from_ratio(rho, y1 > 0.0 ? 1 : -1).beta;
}

double apparent_beta_fechner(double r_over_zero) {
    if (!(r_over_zero > -1.0) || r_over_zero == 0.0) {
        throw DomainError("r/0' must lie in (-1, 0) or (0, inf)");
    }
    const double rho = std::log1p(r_over_zero) / r_over_zero;
    return rapidity_from_ratio(rho, r_over_zero > 0.0 ? 1 : -1).beta;
}

SeriesTable beta_curve(const BetaCurveSpec& spec) {
    if (spec.samples < 1) throw ConfigError("beta_curve needs at least one sample");

    const bool fechner = spec.kind == BetaKind::Fechner;
    SeriesTable table({fechner ? std::string("r_over_zero") : std::string("y1"), "beta"});

    double lo = 0.0;
    double hi = 0.0;
    switch (spec.kind) {
        case BetaKind::Tan:
            table.add_comment("kind: tan");
            table.add_comment("L: " + format_double(spec.length));
            lo = -0.5 * spec.length;
            hi = 0.5 * spec.length;
            break;
        case BetaKind::Artanh:
            table.add_comment("kind: artanh");
            table.add_comment("L: " + format_double(spec.length));
            lo = -0.5 * spec.length;
            hi = 0.5 * spec.length;
            break;
        case BetaKind::Fechner:
            table.add_comment("kind: fechner");
            lo = spec.u_lo;
            hi = spec.u_hi;
            break;
    }

    for (int i = 0; i < spec.samples; ++i) {
        const double coord = linspace(lo, hi, i, spec.samples);
        std::optional<double> beta;
        try {
            switch (spec.kind) {
                case BetaKind::Tan:
                    beta = apparent_beta_tan(spec.length, coord);
                    break;
                case BetaKind::Artanh:
                    beta = apparent_beta_artanh(spec.length, coord);
                    break;
                case BetaKind::Fechner:
                    beta = apparent_beta_fechner(coord);
                    break;
            }
        } catch (const DomainError&) {
            beta = std::nullopt;  // origin or horizon sample
        }
        table.add_row({coord, beta});
    }
    return table;
}

}  // namespace nda
