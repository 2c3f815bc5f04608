// The bijection f between an interval of "upper" values and the full real
// line of "lower" values, plus the domain-checked UpperReal wrapper. Every
// generalized operation in this library is conjugation through some f, so
// these two types are the context everything else carries around.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "nda/errors.hpp"

namespace nda {

class UpperReal;

class Bijection {
public:
    enum class Kind { Identity, Power, Fechner, Tangent, Artanh, Custom };

    using Fn = std::function<double(double)>;

    // f(X) = X on all of R.
    static Bijection identity();
    // f(X) = X^p, odd p >= 1, on all of R.
    static Bijection power(int exponent);
    // f(X) = mu ln X + nu on (0, inf); mu > 0. The Fechner channel.
    static Bijection fechner(double mu, double nu);
    // f(X) = tan(pi X / L) on (-L/2, L/2); L > 0.
    static Bijection tangent(double length);
    // f(X) = artanh(2 X / L) on (-L/2, L/2); L > 0.
    static Bijection artanh(double length);

    // User-supplied bijection on the open interval (lo, hi). The map is
    // probed for strict monotonicity on 1024 samples before acceptance;
    // ConfigError if the probe fails. The derivative callable is optional
    // (central differences otherwise) and is deliberately never used by the
    // conjugated calculus itself, only where f' genuinely enters (effective
    // metrics).
    static Bijection custom(std::string name, Fn f, Fn f_inverse, Fn f_derivative,
                            double lo, double hi);
    static Bijection custom(std::string name, Fn f, Fn f_inverse, double lo, double hi);

    Kind kind() const noexcept { return kind_; }
    double domain_lo() const noexcept { return lo_; }
    double domain_hi() const noexcept { return hi_; }

    // Interior-of-domain test. Finite interval walls carry a guard band of
    // 1e-12 * L: values that close to a horizon are rejected, not clamped.
    bool contains(double upper) const noexcept;

    // f(X); DomainError if X is outside the domain.
    double forward(double upper) const;
    // f^{-1}(x); OverflowToBoundary if x is non-finite or the preimage
    // cannot be represented inside the domain.
    double inverse(double lower) const;
    // f'(X), analytic for the catalog; DomainError outside the domain.
    double derivative(double upper) const;

    // Domain-checked constructors for values in this context.
    UpperReal upper(double value) const;       // from an upper-domain value
    UpperReal from_lower(double lower) const;  // f^{-1} then wrap

    // Parameters; meaningful only for the matching kind.
    double mu() const noexcept { return mu_; }
    double nu() const noexcept { return nu_; }
    double length() const noexcept { return length_; }
    int exponent() const noexcept { return exponent_; }

    // Canonical text form: "id", "pow:p=3", "fechner:mu=10,nu=-20",
    // "tan:L=1", "artanh:L=1". parse() accepts exactly these, case
    // sensitively; unknown keys are errors.
    std::string spec() const;
    static Bijection parse(std::string_view text);

    // Context identity: same kind and parameters (custom: same underlying
    // object). Operations across distinct contexts throw ContextMismatch.
    friend bool operator==(const Bijection& a, const Bijection& b);
    friend bool operator!=(const Bijection& a, const Bijection& b) { return !(a == b); }

private:
    struct CustomImpl {
        std::string name;
        Fn f;
        Fn f_inverse;
        Fn f_derivative;  // may be empty
    };

    Bijection() = default;

    Kind kind_ = Kind::Identity;
    double mu_ = 0.0;
    double nu_ = 0.0;
    double length_ = 0.0;
    int exponent_ = 1;
    double lo_ = 0.0;
    double hi_ = 0.0;
    std::shared_ptr<const CustomImpl> custom_;
};

// A number in the bijection's upper domain. Immutable; the domain check
// runs once, at construction. Values are always interpreted relative to
// their context and never mix across contexts.
class UpperReal {
public:
    UpperReal(const Bijection& ctx, double value);

    double value() const noexcept { return value_; }
    double lower() const { return ctx_.forward(value_); }  // f(X)
    const Bijection& ctx() const noexcept { return ctx_; }

private:
    Bijection ctx_;
    double value_ = 0.0;
};

}  // namespace nda
