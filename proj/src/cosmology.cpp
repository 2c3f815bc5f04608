#include "nda/cosmology.hpp"

#include <cmath>

#include "nda/numeric_format.hpp"

namespace nda {

namespace {

void require_ctx(const Bijection& ctx, const Bijection& other) {
    if (ctx != other) {
        throw ContextMismatch("mixed contexts: " + ctx.spec() + " vs " + other.spec());
    }
}

}  // namespace

double FriedmanConfig::default_classical_t0(const Bijection& ctx, const UpperReal& t0_upper) {
    require_ctx(ctx, t0_upper.ctx());
    const double raw = t0_upper.value();
    const double f_t0 = t0_upper.lower();
    if (f_t0 == 0.0) throw ConfigError("reference time T0 must differ from 0'");
    // Match d/dt (t/t0)^{2/3} to dA/dT at T0; dA/dT(T0) = (2/3) f'(T0) / (f(T0) f'(1')).
    const double ratio = f_t0 * ctx.derivative(neutral_one(ctx).value()) /
                         ctx.derivative(raw);
    if (!(ratio > 0.0) || !(raw > 0.0)) {
        throw ConfigError("no positive default t0 for this configuration; pass t0 explicitly");
    }
    return std::pow(ratio, 1.5) / std::sqrt(raw);
}

FriedmanConfig FriedmanConfig::make(const Bijection& ctx, const UpperReal& reference_time,
                                    std::vector<double> grid,
                                    std::optional<double> classical_t0) {
    require_ctx(ctx, reference_time.ctx());
    if (reference_time.lower() == 0.0) {
        throw ConfigError("reference time T0 must differ from 0'");
    }
    const double t0 = classical_t0 ? *classical_t0
                                   : default_classical_t0(ctx, reference_time);
    if (!(t0 != 0.0) || !std::isfinite(t0)) {
        throw ConfigError("classical reference time t0 must be finite and nonzero");
    }
    return FriedmanConfig{ctx, reference_time, t0, std::move(grid)};
}

double classical_scale_factor(double t, double t0) {
    if (t0 == 0.0) throw ConfigError("classical reference time t0 must be nonzero");
    const double ratio = t / t0;
    if (ratio < 0.0) {
        throw NegativeRatio("t/t0 = " + format_double(ratio) + " has no real 2/3 power");
    }
    return std::pow(ratio, 2.0 / 3.0);
}

UpperReal scale_factor(const FriedmanConfig& cfg, const UpperReal& t) {
    require_ctx(cfg.ctx, t.ctx());
    require_ctx(cfg.ctx, cfg.reference_time.ctx());
    const double f_t0 = cfg.reference_time.lower();
    if (f_t0 == 0.0) throw ConfigError("reference time T0 must differ from 0'");
    const double ratio = t.lower() / f_t0;
    if (ratio < 0.0) {
        throw NegativeRatio("f(T)/f(T0) = " + format_double(ratio) + " has no real 2/3 power");
    }
    // T = T0 gives ratio exactly 1 and pow(1, 2/3) = 1, so A(T0) is
    // bit-for-bit the neutral element f^{-1}(1).
    return cfg.ctx.from_lower(std::pow(ratio, 2.0 / 3.0));
}

FriedmanComparison friedman_comparison(const FriedmanConfig& cfg) {
    if (cfg.grid.size() < 3) throw ConfigError("friedman comparison needs at least 3 samples");

    SeriesTable table({"T", "A", "a_classical"});
    table.add_comment("f: " + cfg.ctx.spec());
    table.add_comment("T0: " + format_double(cfg.reference_time.value()));
    table.add_comment("t0: " + format_double(cfg.classical_t0));

    const std::size_t n = cfg.grid.size();
    std::vector<double> upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = cfg.grid[i];
        upper[i] = scale_factor(cfg, cfg.ctx.upper(t)).value();
        table.add_row({t, upper[i], classical_scale_factor(t, cfg.classical_t0)});
    }

    // Maximal tail of strictly positive second differences; its first grid
    // time is where the sampled curve starts bending up.
    const auto second_diff = [&](std::size_t i) {
        return upper[i + 1] - 2.0 * upper[i] + upper[i - 1];
    };
    std::size_t k = n - 2;  // last interior index, scanned backwards
    while (k >= 1 && second_diff(k) > 0.0) --k;

    std::optional<double> onset;
    if (k + 1 <= n - 2) onset = cfg.grid[k + 1];
    table.add_comment("T_star: " + (onset ? format_double(*onset) : std::string("none")));

    return {std::move(table), onset};
}

}  // namespace nda
