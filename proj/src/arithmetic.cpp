#include "nda/arithmetic.hpp"

#include <cmath>

namespace nda {

namespace {

void require_ctx(const Bijection& ctx, const UpperReal& v) {
    if (v.ctx() != ctx) {
        throw ContextMismatch("operand from context " + v.ctx().spec() +
                              " used under context " + ctx.spec());
    }
}

}  // namespace

UpperReal neutral_zero(const Bijection& ctx) { return ctx.from_lower(0.0); }

UpperReal neutral_one(const Bijection& ctx) { return ctx.from_lower(1.0); }

UpperReal add(const Bijection& ctx, const UpperReal& x, const UpperReal& y) {
    require_ctx(ctx, x);
    require_ctx(ctx, y);
    return ctx.from_lower(x.lower() + y.lower());
}

UpperReal sub(const Bijection& ctx, const UpperReal& x, const UpperReal& y) {
    require_ctx(ctx, x);
    require_ctx(ctx, y);
    return ctx.from_lower(x.lower() - y.lower());
}

UpperReal mul(const Bijection& ctx, const UpperReal& x, const UpperReal& y) {
    require_ctx(ctx, x);
    require_ctx(ctx, y);
    return ctx.from_lower(x.lower() * y.lower());
}

UpperReal div(const Bijection& ctx, const UpperReal& x, const UpperReal& y) {
    require_ctx(ctx, x);
    require_ctx(ctx, y);
    const double fy = y.lower();
    if (fy == 0.0) {
        throw DivisionByZeroPrime("division by the additive neutral 0' under " + ctx.spec());
    }
    return ctx.from_lower(x.lower() / fy);
}

UpperReal neg(const Bijection& ctx, const UpperReal& x) {
    require_ctx(ctx, x);
    return ctx.from_lower(-x.lower());
}

UpperReal pow_nat(const Bijection& ctx, const UpperReal& x, int n) {
    require_ctx(ctx, x);
    if (n < 1) throw ConfigError("pow_nat needs n >= 1, got " + std::to_string(n));
    return ctx.from_lower(std::pow(x.lower(), static_cast<double>(n)));
}

bool upper_less(const UpperReal& x, const UpperReal& y) {
    require_ctx(x.ctx(), y);
    return x.lower() < y.lower();
}

UpperReal weber_increment(const Bijection& ctx, const UpperReal& x, double k) {
    require_ctx(ctx, x);
    if (ctx.kind() != Bijection::Kind::Fechner) {
        throw ConfigError("weber_increment is defined for the Fechner channel only");
    }
    if (!(k > -1.0)) {
        throw DomainError("weber_increment needs k > -1 to keep x + k x in (0, inf)");
    }
    // x + k x with plain lower-type operations on the raw stimulus value.
    const UpperReal incremented = ctx.upper(x.value() * (1.0 + k));
    return sub(ctx, incremented, x);
}

}  // namespace nda
