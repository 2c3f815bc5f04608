// The four conjugated field operations and their neutral elements. All
// functions are pure; operands must carry exactly the context passed in
// (ContextMismatch otherwise, never coercion).
#pragma once

#include "nda/bijection.hpp"

namespace nda {

// 0' = f^{-1}(0) and 1' = f^{-1}(1).
UpperReal neutral_zero(const Bijection& ctx);
UpperReal neutral_one(const Bijection& ctx);

// X op Y = f^{-1}(f(X) op f(Y)).
UpperReal add(const Bijection& ctx, const UpperReal& x, const UpperReal& y);
UpperReal sub(const Bijection& ctx, const UpperReal& x, const UpperReal& y);
UpperReal mul(const Bijection& ctx, const UpperReal& x, const UpperReal& y);
// DivisionByZeroPrime when y is the additive neutral (f(y) = 0).
UpperReal div(const Bijection& ctx, const UpperReal& x, const UpperReal& y);

// Generalized negation f^{-1}(-f(X)); add(x, neg(x)) = 0'.
UpperReal neg(const Bijection& ctx, const UpperReal& x);

// X ⊙ ... ⊙ X (n times) = f^{-1}(f(X)^n); n >= 1.
UpperReal pow_nat(const Bijection& ctx, const UpperReal& x, int n);

// The order induced by f. Coincides with the raw order for the catalog
// (every catalog f is increasing) but is the defining form for custom maps.
bool upper_less(const UpperReal& x, const UpperReal& y);

// Stimulus increment x -> x + k x as perceived through a Fechner channel:
// returns (x + k x) ⊖ x, where + and * on the left are plain lower-type
// operations on the raw value. Independent of x; equals 0'*(1+k).
// Requires a Fechner context (ConfigError) and k > -1 (DomainError).
UpperReal weber_increment(const Bijection& ctx, const UpperReal& x, double k);

}  // namespace nda
