#include "nda/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "nda/calculus.hpp"
#include "nda/cosmology.hpp"
#include "nda/fields.hpp"
#include "nda/numeric_format.hpp"
#include "nda/spacetime.hpp"

namespace nda {

namespace {

constexpr double kRelTol = 1e-9;
constexpr double kAbsFloor = 1e-12;

bool close(double a, double b, double rel = kRelTol, double abs = kAbsFloor) {
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

std::vector<Bijection> catalog() {
    return {Bijection::identity(), Bijection::power(3), Bijection::fechner(10.0, -20.0),
            Bijection::tangent(1.0), Bijection::artanh(1.0)};
}

// Sample an upper value through a uniform lower image; keeps every catalog
// domain happy and the magnitudes comparable across contexts.
UpperReal sample(const Bijection& ctx, std::mt19937_64& rng, double lo = -3.0,
                 double hi = 3.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return ctx.from_lower(dist(rng));
}

// Half-width of the lower-image sampling window for randomized laws. The
// artanh preimage saturates into the boundary guard band once |x| exceeds
// artanh(1 - 2e-12) ~ 13.8, so intermediates like f(X)(f(Y)+f(Z)) must stay
// below that; a +/-2 operand window keeps them at <= 8.
double law_half_range(const Bijection& ctx) {
    return ctx.kind() == Bijection::Kind::Artanh ? 2.0 : 3.0;
}

struct Failure {
    std::string detail;
};

using CheckFn = std::function<void(std::mt19937_64&)>;

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

// ---------------------------------------------------------------------------
// arithmetic

void check_field_axioms(const Bijection& ctx, std::mt19937_64& rng, int triples) {
    const UpperReal zero = neutral_zero(ctx);
    const UpperReal one = neutral_one(ctx);
    const double r = law_half_range(ctx);
    for (int i = 0; i < triples; ++i) {
        const UpperReal x = sample(ctx, rng, -r, r);
        const UpperReal y = sample(ctx, rng, -r, r);
        const UpperReal z = sample(ctx, rng, -r, r);

        expect(close(add(ctx, x, y).lower(), add(ctx, y, x).lower()),
               "commutativity of + failed under " + ctx.spec());
        expect(close(mul(ctx, x, y).lower(), mul(ctx, y, x).lower()),
               "commutativity of * failed under " + ctx.spec());
        expect(close(add(ctx, add(ctx, x, y), z).lower(), add(ctx, x, add(ctx, y, z)).lower()),
               "associativity of + failed under " + ctx.spec());
        expect(close(mul(ctx, mul(ctx, x, y), z).lower(), mul(ctx, x, mul(ctx, y, z)).lower()),
               "associativity of * failed under " + ctx.spec());
        expect(close(mul(ctx, x, add(ctx, y, z)).lower(),
                     add(ctx, mul(ctx, x, y), mul(ctx, x, z)).lower()),
               "distributivity failed under " + ctx.spec());
        expect(close(add(ctx, x, zero).lower(), x.lower()),
               "0' is not neutral under " + ctx.spec());
        expect(close(mul(ctx, x, one).lower(), x.lower()),
               "1' is not neutral under " + ctx.spec());
        expect(close(add(ctx, x, neg(ctx, x)).lower(), 0.0),
               "additive inverse failed under " + ctx.spec());
        if (std::abs(x.lower()) > 0.1) {
            expect(close(div(ctx, x, x).lower(), 1.0),
                   "multiplicative inverse failed under " + ctx.spec());
        }
        expect(close(mul(ctx, zero, x).lower(), 0.0),
               "0' * X is not 0' under " + ctx.spec());
    }
}

void check_fechner_closed_forms(std::mt19937_64& rng) {
    const Bijection ctx = Bijection::fechner(10.0, -20.0);
    const double scale = std::exp(ctx.nu() / ctx.mu());
    for (int i = 0; i < 1000; ++i) {
        const UpperReal x = sample(ctx, rng);
        const UpperReal y = sample(ctx, rng);
        expect(close(add(ctx, x, y).value(), x.value() * y.value() * scale, 1e-12, 0.0),
               "X + Y != X Y e^{nu/mu}");
        expect(close(sub(ctx, x, y).value(), x.value() / y.value() / scale, 1e-12, 0.0),
               "X - Y != e^{-nu/mu} X / Y");
        expect(close(neg(ctx, x).value(), 1.0 / (scale * scale) / x.value(), 1e-12, 0.0),
               "-X != e^{-2 nu/mu} / X");
    }
}

void check_weber(std::mt19937_64&) {
    const Bijection ctx = Bijection::fechner(2.0, 3.0);
    const double expected = 1.5 * std::exp(-ctx.nu() / ctx.mu());  // 0' * (1 + k)
    for (const double x : {1.0, 10.0, 1000.0}) {
        const double got = weber_increment(ctx, ctx.upper(x), 0.5).value();
        expect(close(got, expected),
               "weber increment drifted with the stimulus: " + format_double(got));
    }
    const Bijection unit = Bijection::fechner(1.0, 0.0);
    expect(close(weber_increment(unit, unit.upper(1.0), 0.1).value(),
                 weber_increment(unit, unit.upper(100.0), 0.1).value()),
           "weber increment depends on x for mu=1, nu=0");
}

// ---------------------------------------------------------------------------
// calculus

void check_conjugation(std::mt19937_64&) {
    for (const auto& ctx : catalog()) {
        const UpperFunction fn{ctx, [](double t) { return std::exp(0.5 * t); }};
        const UpperReal x = ctx.from_lower(0.7);
        const double direct = nd_derivative(fn, x).lower();

        // First-order convergence of the finite quotient toward the
        // conjugated derivative as f(H) -> 0.
        double prev_err = -1.0;
        for (const double h : {1e-2, 1e-3, 1e-4}) {
            const double quotient =
                nd_derivative_limit(fn, x, ctx.from_lower(h)).lower();
            const double err = std::abs(quotient - direct);
            if (prev_err > 0.0) {
                const double order = std::log10(prev_err / err);
                expect(order > 0.8 && order < 1.2,
                       "convergence order " + format_double(order) + " under " + ctx.spec());
            }
            prev_err = err;
        }
    }
}

void check_fundamental_theorem(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (const auto& ctx : catalog()) {
        const double c0 = coeff(rng);
        const double c1 = coeff(rng);
        const double c2 = coeff(rng);
        const UpperFunction fn{
            ctx, [=](double t) { return c0 + c1 * t + c2 * t * t + std::sin(t); }};
        const UpperReal x = sample(ctx, rng, 0.5, 2.0);
        const UpperReal y = sample(ctx, rng, -2.0, -0.5);
        const auto res = verify_fundamental_theorem(fn, x, y);
        expect(res.derivative_of_integral < 1e-6 && res.integral_of_derivative < 1e-6,
               "residuals " + format_double(res.derivative_of_integral) + ", " +
                   format_double(res.integral_of_derivative) + " under " + ctx.spec());
    }
}

void check_exponential_ode(std::mt19937_64&) {
    // A(x) = e^{f(x)/p} with f(x) = x^p has lower shadow exp and satisfies
    // DA/DX = A with A(0) = 1.
    for (const int p : {3, 5}) {
        const Bijection ctx = Bijection::power(p);
        const UpperFunction fn{ctx, [](double t) { return std::exp(t); }};
        for (int i = 0; i < 50; ++i) {
            const double x = -1.5 + 3.0 * i / 49.0;
            const UpperReal at = ctx.upper(x);
            const double lhs = nd_derivative(fn, at).lower();
            const double rhs = fn(at).lower();
            expect(std::abs(lhs - rhs) < 1e-6,
                   "ODE residual " + format_double(std::abs(lhs - rhs)) + " at x = " +
                       format_double(x) + " for p = " + std::to_string(p));
        }
        expect(close(fn(ctx.upper(0.0)).value(), 1.0), "A(0) != 1 for p = " + std::to_string(p));
    }
}

void check_covariant_triviality(std::mt19937_64&) {
    // The conjugated derivative must not consult f': hand the context a
    // deliberately wrong derivative and demand identical results.
    const auto cube = [](double x) { return x * x * x; };
    const auto cube_root = [](double x) { return std::cbrt(x); };
    const Bijection honest =
        Bijection::custom("cube", cube, cube_root, [](double x) { return 3.0 * x * x; },
                          -100.0, 100.0);
    const Bijection lying =
        Bijection::custom("cube-wrong-derivative", cube, cube_root,
                          [](double) { return 42.0; }, -100.0, 100.0);
    const UpperFunction fa{honest, [](double t) { return std::exp(t); }};
    const UpperFunction fb{lying, [](double t) { return std::exp(t); }};
    for (const double x : {-1.2, -0.3, 0.4, 1.1}) {
        const double a = nd_derivative(fa, honest.upper(x)).value();
        const double b = nd_derivative(fb, lying.upper(x)).value();
        expect(a == b, "derivative consulted f' (results differ at x = " + format_double(x) + ")");
    }
}

// ---------------------------------------------------------------------------
// spacetime

void check_boost_invariance(std::mt19937_64& rng) {
    for (const auto& ctx : catalog()) {
        // Keep c*x0 + s*x1 inside the representable lower image (artanh
        // saturates near +/-13.8).
        const bool narrow = ctx.kind() == Bijection::Kind::Artanh;
        const double r = narrow ? 2.0 : 3.0;
        std::uniform_real_distribution<double> rap(narrow ? -1.0 : -2.0, narrow ? 1.0 : 2.0);
        for (int i = 0; i < 300; ++i) {
            const FourVector v =
                FourVector::of({sample(ctx, rng, -r, r), sample(ctx, rng, -r, r),
                                sample(ctx, rng, -r, r), sample(ctx, rng, -r, r)});
            const BoostParameters boost_params{ctx.from_lower(rap(rng))};
            const double before = quadratic_form(v).lower();
            const double after = quadratic_form(boost(boost_params, v)).lower();
            const auto x = v.lower_all();
            const double scale = 1.0 + x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
            expect(std::abs(after - before) < 1e-9 * scale,
                   "quadratic form drifted by " + format_double(after - before) + " under " +
                       ctx.spec());
        }
        // The four-velocity is normalized and boosts to rest.
        const UpperReal phi = ctx.from_lower(1.3);
        const FourVector u = four_velocity(ctx, phi);
        expect(close(quadratic_form(u).lower(), 1.0), "U_a U^a != 1' under " + ctx.spec());
        const FourVector rest = boost(BoostParameters{phi}, u);
        expect(std::abs(rest.lower(0) - 1.0) < 1e-9 && std::abs(rest.lower(1)) < 1e-9 &&
                   std::abs(rest.lower(2)) < 1e-9 && std::abs(rest.lower(3)) < 1e-9,
               "boosted four-velocity is not (1',0',0',0') under " + ctx.spec());
    }
}

void check_hyperbolic_identity(std::mt19937_64&) {
    for (const auto& ctx : catalog()) {
        // Cosh^2' materializes f^{-1}(cosh^2 f(phi)); the artanh image
        // cannot hold cosh^2(5) ~ 5.5e3, so its sweep stays inside the
        // representable rapidity window.
        const double span = ctx.kind() == Bijection::Kind::Artanh ? 1.8 : 5.0;
        for (int i = 0; i <= 20; ++i) {
            const double f_phi = -span + 2.0 * span * i / 20.0;
            const UpperReal phi = ctx.from_lower(f_phi);
            const UpperReal c = hyperbolic_cosine(ctx, phi);
            const UpperReal s = hyperbolic_sine(ctx, phi);
            const double residual =
                sub(ctx, mul(ctx, c, c), mul(ctx, s, s)).lower() - 1.0;
            expect(std::abs(residual) < 1e-9 * std::cosh(f_phi) * std::cosh(f_phi),
                   "Cosh^2' - Sinh^2' != 1' at f(phi) = " + format_double(f_phi) + " under " +
                       ctx.spec());
        }
    }
}

void check_lightcone_nulls(std::mt19937_64&) {
    struct Case {
        Bijection ctx;
        FourVector apex;
        SurfaceGrid grid;
    };
    const Bijection fech = Bijection::fechner(10.0, -20.0);
    const double zp = neutral_zero(fech).value();
    const Bijection tang = Bijection::tangent(1.0);
    const std::vector<Case> cases{
        {fech, FourVector(fech, {zp, zp, zp, zp}),
         SurfaceGrid{zp * std::exp(-2.0), zp * std::exp(2.0), 9, zp * std::exp(-2.0),
                     zp * std::exp(2.0), 9}},
        {tang, FourVector(tang, {0.0, -0.4, -0.2, 0.0}), SurfaceGrid{-0.45, 0.45, 9, -0.45, 0.45, 9}},
    };
    for (const auto& c : cases) {
        const SeriesTable t = lightcone_surface(c.ctx, c.apex, c.grid);
        for (std::size_t r = 0; r < t.row_count(); ++r) {
            for (const std::size_t col : {2, 3}) {
                const auto x0 = t.at(r, col);
                if (!x0) continue;
                const FourVector point(
                    c.ctx, {*x0, *t.at(r, 0), *t.at(r, 1), c.apex.raw(3)});
                double q = 0.0;
                for (int a = 0; a < 4; ++a) {
                    const double d = point.lower(a) - c.apex.lower(a);
                    q += kMetricDiag[a] * d * d;
                }
                expect(std::abs(q) < 1e-9, "null residual " + format_double(q) + " under " +
                                               c.ctx.spec());
            }
        }
    }
}

void check_effective_metric(std::mt19937_64&) {
    const Bijection tang = Bijection::tangent(1.0);
    const auto em = effective_metric(tang, FourVector(tang, {0.0, 0.0, 0.0, 0.0}));
    const double pi2 = std::numbers::pi * std::numbers::pi;
    expect(close(em.diag[0], pi2, 1e-12, 0.0) && close(em.diag[1], -pi2, 1e-12, 0.0) &&
               close(em.diag[2], -pi2, 1e-12, 0.0) && close(em.diag[3], -pi2, 1e-12, 0.0),
           "tangent effective metric at the origin is not diag(pi^2, -pi^2, ...)");

    // Null raw offsets: the effective quadratic form shrinks like |eps|^3,
    // so halving eps divides the residual by ~8.
    const FourVector base(tang, {0.05, -0.1, 0.07, 0.02});
    const auto residual = [&](double scale) {
        const std::array<double, 3> eps{1.5e-3 * scale, -1.0e-3 * scale, 0.75e-3 * scale};
        const std::array<UpperReal, 3> spatial{tang.upper(base.raw(1) + eps[0]),
                                               tang.upper(base.raw(2) + eps[1]),
                                               tang.upper(base.raw(3) + eps[2])};
        const double x0 = lightcone_time(tang, base, spatial, ConeBranch::Future).value();
        const auto em2 = effective_metric(tang, base);
        const std::array<double, 4> d{x0 - base.raw(0), eps[0], eps[1], eps[2]};
        double q = 0.0;
        for (int a = 0; a < 4; ++a) q += em2.diag[a] * d[a] * d[a];
        return std::abs(q);
    };
    const double ratio = residual(1.0) / residual(0.5);
    expect(ratio > 6.0 && ratio < 10.0,
           "cubic residual scaling off: halving ratio = " + format_double(ratio));
}

// ---------------------------------------------------------------------------
// fields & cosmology

void check_beta_factorization(std::mt19937_64&) {
    const double L = 1.0;
    for (int i = 1; i < 200; ++i) {
        const double y1 = -0.5 + i * (1.0 / 200.0);
        if (y1 == 0.0) continue;
        const double z = std::numbers::pi * y1 / L;
        const double rho = std::tan(z) / z;
        const double through =
            rapidity_from_ratio(rho, y1 > 0.0 ? 1 : -1).beta;
        const double direct = apparent_beta_tan(L, y1);
        expect(std::abs(through - direct) < 1e-12, "beta_tan does not factor through rapidity");
        expect(std::abs(direct) < 1.0, "|beta| >= 1 at y1 = " + format_double(y1));
        expect(std::abs(direct + apparent_beta_tan(L, -y1)) < 1e-12,
               "beta_tan is not odd at y1 = " + format_double(y1));
    }
    for (int i = 1; i <= 200; ++i) {
        const double u = -1.0 + i * (7.0 / 200.0);
        if (u == 0.0 || u <= -1.0) continue;
        const double beta = apparent_beta_fechner(u);
        expect(beta < 0.0 && beta > -1.0,
               "beta_fechner out of (-1, 0) at u = " + format_double(u));
    }
}

void check_coulomb_limit(std::mt19937_64&) {
    struct Case {
        Bijection ctx;
        double q_of_fc;  // q / f(C)
    };
    const double L = 1.0;
    const std::vector<Case> cases{
        {Bijection::tangent(L), L * L / (std::numbers::pi * std::numbers::pi)},
        {Bijection::artanh(L), L * L / 4.0},
    };
    const double f_c = 1e-8;
    const double f_y1 = 1e-4;
    for (const auto& c : cases) {
        const auto cfg = ChargeConfig::make(c.ctx, c.ctx.from_lower(f_c),
                                            neutral_zero(c.ctx), c.ctx.from_lower(f_y1));
        const double got = potential_at_origin(cfg).value();
        const double q = c.q_of_fc * f_c;
        const double want = q / std::abs(cfg.source().raw(1));
        expect(std::abs(got - want) < 1e-3 * std::abs(want),
               "Coulomb limit off under " + c.ctx.spec() + ": got " + format_double(got) +
                   ", want " + format_double(want));
    }
}

void check_friedman(std::mt19937_64&) {
    const Bijection tang = Bijection::tangent(20.0);
    const UpperReal t0 = neutral_one(tang);
    std::vector<double> grid;
    for (int i = 0; i < 201; ++i) grid.push_back(0.5 + (9.8 - 0.5) * i / 200.0);
    const auto cfg = FriedmanConfig::make(tang, t0, grid);
    expect(scale_factor(cfg, t0).value() == neutral_one(tang).value(),
           "A(T0) is not exactly 1'");
    const auto cmp = friedman_comparison(cfg);
    expect(cmp.accel_onset.has_value(), "no acceleration onset found on the tangent grid");

    const Bijection id = Bijection::identity();
    std::vector<double> igrid;
    for (int i = 0; i < 101; ++i) igrid.push_back(0.5 + 0.05 * i);
    const auto icfg = FriedmanConfig::make(id, id.upper(2.0), igrid);
    for (const double t : igrid) {
        expect(close(scale_factor(icfg, id.upper(t)).value(),
                     classical_scale_factor(t, icfg.classical_t0), 1e-12, 0.0),
               "identity-context curve differs from the classical one");
    }
    const auto icmp = friedman_comparison(icfg);
    expect(!icmp.accel_onset.has_value(), "identity context must stay concave");
}

void check_custom_rejection(std::mt19937_64&) {
    bool rejected = false;
    try {
        Bijection::custom("wobble", [](double x) { return std::sin(x); },
                          [](double x) { return std::asin(x); }, -10.0, 10.0);
    } catch (const ConfigError&) {
        rejected = true;
    }
    expect(rejected, "non-monotonic custom bijection slipped past the probe");
}

void check_csv_determinism(std::mt19937_64&) {
    const Bijection tang = Bijection::tangent(1.0);
    const FourVector apex(tang, {0.0, -0.4, -0.2, 0.0});
    const SurfaceGrid grid{-0.5, 0.5, 11, -0.5, 0.5, 11};
    const std::string a = lightcone_surface(tang, apex, grid).to_csv();
    const std::string b = lightcone_surface(tang, apex, grid).to_csv();
    expect(a == b, "repeated surface sampling produced different CSV bytes");
    const SeriesTable reread = SeriesTable::from_csv(a);
    expect(reread.to_csv() == a, "CSV did not survive a read/write round trip");
}

}  // namespace

std::vector<SelfTestResult> run_selftest(std::uint64_t seed) {
    std::vector<std::pair<std::string, CheckFn>> checks;
    for (const auto& ctx : catalog()) {
        checks.emplace_back("arithmetic: field axioms (" + ctx.spec() + ")",
                            [ctx](std::mt19937_64& rng) { check_field_axioms(ctx, rng, 2000); });
    }
    checks.emplace_back("arithmetic: fechner closed forms", check_fechner_closed_forms);
    checks.emplace_back("arithmetic: weber constancy", check_weber);
    checks.emplace_back("calculus: conjugation and limit convergence", check_conjugation);
    checks.emplace_back("calculus: fundamental theorem", check_fundamental_theorem);
    checks.emplace_back("calculus: exponential ODE (p = 3, 5)", check_exponential_ode);
    checks.emplace_back("calculus: derivative never consults f'", check_covariant_triviality);
    checks.emplace_back("spacetime: boost invariance and rest frame", check_boost_invariance);
    checks.emplace_back("spacetime: hyperbolic identity", check_hyperbolic_identity);
    checks.emplace_back("spacetime: light-cone null residuals", check_lightcone_nulls);
    checks.emplace_back("spacetime: effective metric", check_effective_metric);
    checks.emplace_back("fields: beta factorization and bounds", check_beta_factorization);
    checks.emplace_back("fields: coulomb limit", check_coulomb_limit);
    checks.emplace_back("cosmology: friedman identities", check_friedman);
    checks.emplace_back("bijection: monotonicity probe rejects", check_custom_rejection);
    checks.emplace_back("csv: deterministic round trip", check_csv_determinism);

    std::vector<SelfTestResult> results;
    std::mt19937_64 rng(seed);
    for (auto& [name, fn] : checks) {
        try {
            fn(rng);
            results.push_back({name, true, ""});
        } catch (const Failure& f) {
            results.push_back({name, false, f.detail});
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("unexpected error: ") + e.what()});
        }
    }
    return results;
}

bool report_selftest(std::ostream& out, const std::vector<SelfTestResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.passed) out << " — " << r.detail;
        out << '\n';
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    out << passed << "/" << results.size() << " checks passed\n";
    all = passed == results.size();
    return all;
}

}  // namespace nda
