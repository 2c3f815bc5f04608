// Minkowski structure over an upper-real coordinate patch: four-vectors,
// the invariant quadratic form, x1-axis boosts, light cones, and the
// effective Lorentzian metric seen through mismatched (identity) arithmetic.
// All types are immutable; surface sampling is pure per cell and may be
// evaluated concurrently row by row.
#pragma once

#include <array>

#include "nda/arithmetic.hpp"
#include "nda/series_table.hpp"

namespace nda {

// Lower-image metric signature, g = diag(+1, -1, -1, -1). The upper metric
// components are G_ab = f^{-1}(g_ab).
inline constexpr std::array<double, 4> kMetricDiag{+1.0, -1.0, -1.0, -1.0};

UpperReal metric_component(const Bijection& ctx, int a, int b);

enum class Variance { Contravariant, Covariant };

class FourVector {
public:
    FourVector(const Bijection& ctx, const std::array<double, 4>& components,
               Variance variance = Variance::Contravariant);
    static FourVector of(const std::array<UpperReal, 4>& components,
                         Variance variance = Variance::Contravariant);

    const Bijection& ctx() const noexcept { return ctx_; }
    Variance variance() const noexcept { return variance_; }

    double raw(int a) const;           // upper-domain value of component a
    UpperReal component(int a) const;  // same, wrapped
    double lower(int a) const;         // f(component a)
    std::array<double, 4> lower_all() const;

private:
    Bijection ctx_;
    std::array<double, 4> components_{};
    Variance variance_ = Variance::Contravariant;
};

// G_ab X^a X^b = f^{-1}(g_ab f(X^a) f(X^b)). g is its own inverse, so the
// scalar is the same formula for either index position.
UpperReal quadratic_form(const FourVector& v);

// Index lowering/raising: f(X_0) = f(X^0), f(X_i) = -f(X^i). The time
// component passes through untouched (f is a bijection), spatial components
// go through the generalized negation. Applying it twice returns the
// original vector up to conjugation round-trip error.
FourVector lower_index(const FourVector& v);

// Conjugated hyperbolic functions, the entries of the explicit boost:
// Cosh φ = f^{-1}(cosh f(φ)), Sinh φ = f^{-1}(sinh f(φ)).
UpperReal hyperbolic_cosine(const Bijection& ctx, const UpperReal& phi);
UpperReal hyperbolic_sine(const Bijection& ctx, const UpperReal& phi);

// Rapidity-parametrized boost along the x1 axis.
struct BoostParameters {
    UpperReal rapidity;  // φ; velocity in the lower image is tanh f(φ)
};

// Matrix action computed in the lower image: f(X'^a) = Σ_b f(Λ^a_b) f(X^b),
// with the sinh signs chosen for the vector's index position. Preserves
// quadratic_form.
FourVector boost(const BoostParameters& params, const FourVector& v);

// U^a = (Cosh φ, Sinh φ, 0', 0'), normalized to U_a U^a = 1'. boost(φ, U)
// is the rest-frame vector (1', 0', 0', 0').
FourVector four_velocity(const Bijection& ctx, const UpperReal& phi);

enum class ConeBranch { Future, Past };

// The X^0 on the requested branch solving G_ab(X ⊖ Y)(X ⊖ Y) = 0' for given
// spatial components (X^1, X^2, X^3) around the apex Y:
//   X^0 = f^{-1}( f(Y^0) ± sqrt(Σ_i (f(X^i) - f(Y^i))^2) ).
// OverflowToBoundary when the lower-image value leaves f's representable
// range near a horizon.
UpperReal lightcone_time(const Bijection& ctx, const FourVector& apex,
                         const std::array<UpperReal, 3>& spatial, ConeBranch branch);

// Local quadratic form seen by an observer who applies identity arithmetic
// to raw coordinate differences near Y: diag entries g_ab f'(Y^a) f'(Y^b)
// (no sum). SingularMetric if any f'(Y^a) is zero or non-finite.
struct EffectiveMetric {
    FourVector base;
    std::array<double, 4> diag;  // lower-real entries, signature (+,-,-,-)
};

EffectiveMetric effective_metric(const Bijection& ctx, const FourVector& base);

// Rectangular sampling grid for a 1+2 dimensional cone section
// (X^3 frozen at the apex value).
struct SurfaceGrid {
    double x1_lo, x1_hi;
    int n1;
    double x2_lo, x2_hi;
    int n2;
};

// Rows (x1, x2, x0_future, x0_past). Cells whose evaluation trips the
// domain guard band or overflows to a boundary are emitted as missing;
// horizons show up as holes, never as clamped values.
SeriesTable lightcone_surface(const Bijection& ctx, const FourVector& apex,
                              const SurfaceGrid& grid);

}  // namespace nda
