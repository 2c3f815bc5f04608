// Point-charge potential at the origin and the apparent velocity an
// identity-arithmetic observer infers for a charge at rest in the
// generalized description.
#pragma once

#include "nda/spacetime.hpp"

namespace nda {

// Source configuration: coupling C, source rapidity φ (f(φ) = 0 for rest),
// and the null past-pointing source event Y = (Y^0, Y^1, 0', 0') with
// f(Y^0) = -|f(Y^1)|. The observer sits at the origin (0',0',0',0').
class ChargeConfig {
public:
    // Derives Y^0 from the null past-pointing constraint.
    static ChargeConfig make(const Bijection& ctx, const UpperReal& coupling,
                             const UpperReal& rapidity, const UpperReal& y1);

    const Bijection& ctx() const noexcept { return ctx_; }
    const UpperReal& coupling() const noexcept { return coupling_; }
    const UpperReal& rapidity() const noexcept { return rapidity_; }
    const FourVector& source() const noexcept { return source_; }

private:
    ChargeConfig(Bijection ctx, UpperReal coupling, UpperReal rapidity, FourVector source);

    Bijection ctx_;
    UpperReal coupling_;
    UpperReal rapidity_;
    FourVector source_;
};

// The only non-vanishing potential component at the observer:
//   A'^0(0') = f^{-1}( f(C) / (|f(Y^1)| e^{sgn(f(Y^1)) f(φ)}) ).
// SourceAtObserver if f(Y^1) = 0.
UpperReal potential_at_origin(const ChargeConfig& cfg);

// f(φ) = sign * ln ρ and the inferred velocity β = tanh f(φ). The three
// closed-form β functions below all factor through this map.
struct RapidityResult {
    double f_phi;
    double beta;
};
RapidityResult rapidity_from_ratio(double rho, int sign);

// β for f(X) = tan(pi X/L): ρ = tan(pi Y1/L)/(pi Y1/L), sign = sgn(Y1).
// DomainError at Y1 = 0 or |Y1| >= L/2.
double apparent_beta_tan(double length, double y1);

// β for f(X) = artanh(2X/L): ρ = artanh(2 Y1/L)/(2 Y1/L), sign = sgn(Y1).
double apparent_beta_artanh(double length, double y1);

// β for the Fechner channel as a function of u = r/0' (source at Y^1 = 0'+r):
// ρ = ln(1+u)/u, sign = sgn(u). Negative for every valid u; the charge
// appears to drift toward the horizon at Y^1 = 0. DomainError at u <= -1
// or u = 0.
double apparent_beta_fechner(double r_over_zero);

enum class BetaKind { Tan, Artanh, Fechner };

struct BetaCurveSpec {
    BetaKind kind = BetaKind::Tan;
    double length = 1.0;  // L, for Tan/Artanh
    double u_lo = -1.0;   // u range, for Fechner
    double u_hi = 6.0;
    int samples = 101;
};

// Rows (y1, beta) or (r_over_zero, beta). Coordinates where β is undefined
// (origin, horizons) are emitted with a missing β cell.
SeriesTable beta_curve(const BetaCurveSpec& spec);

}  // namespace nda
