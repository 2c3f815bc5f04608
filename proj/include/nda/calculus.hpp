// Derivative and integral operators of the conjugated calculus. Functions
// are carried by their lower shadow a: R -> R; the upper map is always the
// conjugate A = f^{-1} ∘ a ∘ f. Everything here is pure and re-entrant;
// callers may evaluate grids from any number of threads.
#pragma once

#include <functional>

#include "nda/arithmetic.hpp"

namespace nda {

struct UpperFunction {
    Bijection ctx;
    std::function<double(double)> lower;  // a, the lower shadow

    // A(X) = f^{-1}(a(f(X))).
    UpperReal operator()(const UpperReal& x) const;
};

// Finite-step difference quotient (A(X ⊕ H) ⊖ A(X)) ⊘ H, computed through
// the generalized operations themselves. The caller drives f(H) -> 0.
// DivisionByZeroPrime when H = 0'.
UpperReal nd_derivative_limit(const UpperFunction& fn, const UpperReal& x,
                              const UpperReal& step);

// DA/DX = f^{-1}(a'(f(X))), with a' from central differences at relative
// step 1e-6. Note no derivative of f or f^{-1} ever enters: the conjugation
// acts like a covariant derivative with a trivial connection.
UpperReal nd_derivative(const UpperFunction& fn, const UpperReal& x);

// ∫_X^Y A(X') DX' = f^{-1}(∫_{f(X)}^{f(Y)} a). Composite Simpson quadrature
// with `panels` panels (rounded up to even); swapping the endpoints negates
// the lower value. QuadratureFailure if a is non-finite anywhere on the grid.
UpperReal nd_integral(const UpperFunction& fn, const UpperReal& from,
                      const UpperReal& to, int panels = 1024);

// Residuals, in the lower image, of the two fundamental-theorem identities:
//   D/DX ∫_Y^X A(X') DX'  vs  A(X)
//   ∫_Y^X (DA/DX') DX'    vs  A(X) ⊖ A(Y)
struct FundamentalTheoremResiduals {
    double derivative_of_integral;
    double integral_of_derivative;
};

FundamentalTheoremResiduals verify_fundamental_theorem(const UpperFunction& fn,
                                                       const UpperReal& x,
                                                       const UpperReal& y);

}  // namespace nda
