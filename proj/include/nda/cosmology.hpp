// Matter-dominated flat FRW scale factor (no radiation, no vacuum term) in
// both arithmetics: classical a(t) = (t/t0)^{2/3} and the conjugated
// A(T) = f^{-1}((f(T)/f(T0))^{2/3}).
#pragma once

#include <optional>
#include <vector>

#include "nda/arithmetic.hpp"
#include "nda/series_table.hpp"

namespace nda {

struct FriedmanConfig {
    Bijection ctx;
    UpperReal reference_time;  // T0, with f(T0) != 0; A(T0) = 1'
    double classical_t0;       // t0 of the comparison curve
    std::vector<double> grid;  // raw upper sample times, uniformly spaced

    // Slope-matching default: t0 such that the classical curve is tangent
    // to A at T = T0, i.e. t0 = (f(T0) f'(1') / f'(T0))^{3/2} / sqrt(T0).
    // Reduces to t0 = T0 for the identity context. ConfigError when no
    // positive solution exists (pass t0 explicitly then).
    static double default_classical_t0(const Bijection& ctx, const UpperReal& t0_upper);

    static FriedmanConfig make(const Bijection& ctx, const UpperReal& reference_time,
                               std::vector<double> grid,
                               std::optional<double> classical_t0 = std::nullopt);
};

// (t/t0)^{2/3}; NegativeRatio if t/t0 < 0.
double classical_scale_factor(double t, double t0);

// A(T) = (T ⊘ T0)^{2'⊘3'} = f^{-1}((f(T)/f(T0))^{2/3}); A(T0) = 1' exactly.
// NegativeRatio if f(T)/f(T0) < 0.
UpperReal scale_factor(const FriedmanConfig& cfg, const UpperReal& t);

struct FriedmanComparison {
    SeriesTable table;  // rows (T, A, a_classical)
    // First grid time of the maximal tail on which second finite
    // differences of A are all positive: the onset of apparent
    // acceleration. Empty when A stays concave (e.g. identity context).
    std::optional<double> accel_onset;
};

FriedmanComparison friedman_comparison(const FriedmanConfig& cfg);

}  // namespace nda
