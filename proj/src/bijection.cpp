#include "nda/bijection.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "nda/numeric_format.hpp"

namespace nda {

namespace {

// Fraction of L defining the rejection band at finite interval walls.
constexpr double kBoundaryGuard = 1e-12;

constexpr double kInf = std::numeric_limits<double>::infinity();

double central_difference(const Bijection::Fn& f, double x, double lo, double hi) {
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    double a = x - h;
    double b = x + h;
    // Stay inside an open interval; fall back to a one-sided quotient.
    if (a <= lo) a = x;
    if (b >= hi) b = x;
    if (a == b) return std::numeric_limits<double>::quiet_NaN();
    return (f(b) - f(a)) / (b - a);
}

}  // namespace

Bijection Bijection::identity() {
    Bijection b;
    b.kind_ = Kind::Identity;
    b.lo_ = -kInf;
    b.hi_ = kInf;
    return b;
}

Bijection Bijection::power(int exponent) {
    if (exponent < 1 || exponent % 2 == 0) {
        throw ConfigError("power bijection needs an odd exponent >= 1, got " +
                          std::to_string(exponent));
    }
    Bijection b;
    b.kind_ = Kind::Power;
    b.exponent_ = exponent;
    b.lo_ = -kInf;
    b.hi_ = kInf;
    return b;
}

Bijection Bijection::fechner(double mu, double nu) {
    if (!(mu > 0.0) || !std::isfinite(mu) || !std::isfinite(nu)) {
        throw ConfigError("fechner bijection needs mu > 0 and finite nu");
    }
    Bijection b;
    b.kind_ = Kind::Fechner;
    b.mu_ = mu;
    b.nu_ = nu;
    b.lo_ = 0.0;
    b.hi_ = kInf;
    return b;
}

Bijection Bijection::tangent(double length) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw ConfigError("tangent bijection needs a positive finite length");
    }
    Bijection b;
    b.kind_ = Kind::Tangent;
    b.length_ = length;
    b.lo_ = -0.5 * length;
    b.hi_ = 0.5 * length;
    return b;
}

Bijection Bijection::artanh(double length) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw ConfigError("artanh bijection needs a positive finite length");
    }
    Bijection b;
    b.kind_ = Kind::Artanh;
    b.length_ = length;
    b.lo_ = -0.5 * length;
    b.hi_ = 0.5 * length;
    return b;
}

Bijection Bijection::custom(std::string name, Fn f, Fn f_inverse, Fn f_derivative,
                            double lo, double hi) {
    if (!f || !f_inverse) {
        throw ConfigError("custom bijection needs both f and f_inverse");
    }
    if (!(lo < hi)) {
        throw ConfigError("custom bijection needs an interval lo < hi");
    }

    // Monotonicity probe: strictly increasing finite values on 1024 samples
    // of (a clamped window of) the domain. Arbitrary callables pass or they
    // are rejected here, before any value can be built against them.
    constexpr int kProbeSamples = 1024;
    const double a = std::max(lo, -1e6);
    const double b = std::min(hi, 1e6);
    double prev = -kInf;
    for (int i = 0; i < kProbeSamples; ++i) {
        const double x = a + (i + 0.5) * (b - a) / kProbeSamples;
        const double y = f(x);
        if (!std::isfinite(y) || !(y > prev)) {
            throw ConfigError("custom bijection '" + name +
                              "' failed the monotonicity probe near x = " +
                              format_double(x));
        }
        prev = y;
    }

    Bijection out;
    out.kind_ = Kind::Custom;
    out.lo_ = lo;
    out.hi_ = hi;
    out.custom_ = std::make_shared<const CustomImpl>(CustomImpl{
        std::move(name), std::move(f), std::move(f_inverse), std::move(f_derivative)});
    return out;
}

Bijection Bijection::custom(std::string name, Fn f, Fn f_inverse, double lo, double hi) {
    return custom(std::move(name), std::move(f), std::move(f_inverse), Fn{}, lo, hi);
}

bool Bijection::contains(double upper) const noexcept {
    if (!std::isfinite(upper)) return false;
    switch (kind_) {
        case Kind::Identity:
        case Kind::Power:
            return true;
        case Kind::Fechner:
            return upper > 0.0;
        case Kind::Tangent:
        case Kind::Artanh:
            return std::abs(upper) < 0.5 * length_ - kBoundaryGuard * length_;
        case Kind::Custom:
            return upper > lo_ && upper < hi_;
    }
    return false;
}

double Bijection::forward(double upper) const {
    if (!contains(upper)) {
        throw DomainError("value " + format_double(upper) + " outside the domain of " + spec());
    }
    switch (kind_) {
        case Kind::Identity:
            return upper;
        case Kind::Power:
            return std::copysign(std::pow(std::abs(upper), exponent_), upper);
        case Kind::Fechner:
            return mu_ * std::log(upper) + nu_;
        case Kind::Tangent:
            return std::tan(std::numbers::pi * upper / length_);
        case Kind::Artanh:
            return std::atanh(2.0 * upper / length_);
        case Kind::Custom:
            return custom_->f(upper);
    }
    return 0.0;
}

double Bijection::inverse(double lower) const {
    if (!std::isfinite(lower)) {
        throw OverflowToBoundary("lower-image value is not finite under " + spec());
    }
    double upper = 0.0;
    switch (kind_) {
        case Kind::Identity:
            upper = lower;
            break;
        case Kind::Power:
            upper = std::copysign(std::pow(std::abs(lower), 1.0 / exponent_), lower);
            break;
        case Kind::Fechner:
            upper = std::exp((lower - nu_) / mu_);
            break;
        case Kind::Tangent:
            upper = (length_ / std::numbers::pi) * std::atan(lower);
            break;
        case Kind::Artanh:
            upper = 0.5 * length_ * std::tanh(lower);
            break;
        case Kind::Custom:
            upper = custom_->f_inverse(lower);
            break;
    }
    if (!contains(upper)) {
        throw OverflowToBoundary("preimage of " + format_double(lower) +
                                 " hits the boundary of " + spec());
    }
    return upper;
}

double Bijection::derivative(double upper) const {
    if (!contains(upper)) {
        throw DomainError("value " + format_double(upper) + " outside the domain of " + spec());
    }
    switch (kind_) {
        case Kind::Identity:
            return 1.0;
        case Kind::Power:
            return exponent_ * std::pow(std::abs(upper), exponent_ - 1);
        case Kind::Fechner:
            return mu_ / upper;
        case Kind::Tangent: {
            const double t = std::tan(std::numbers::pi * upper / length_);
            return (std::numbers::pi / length_) * (1.0 + t * t);
        }
        case Kind::Artanh: {
            const double u = 2.0 * upper / length_;
            return (2.0 / length_) / (1.0 - u * u);
        }
        case Kind::Custom:
            if (custom_->f_derivative) return custom_->f_derivative(upper);
            return central_difference(custom_->f, upper, lo_, hi_);
    }
    return 0.0;
}

UpperReal Bijection::upper(double value) const { return UpperReal(*this, value); }

UpperReal Bijection::from_lower(double lower) const { return UpperReal(*this, inverse(lower)); }

std::string Bijection::spec() const {
    switch (kind_) {
        case Kind::Identity:
            return "id";
        case Kind::Power:
            return "pow:p=" + std::to_string(exponent_);
        case Kind::Fechner:
            return "fechner:mu=" + format_double(mu_) + ",nu=" + format_double(nu_);
        case Kind::Tangent:
            return "tan:L=" + format_double(length_);
        case Kind::Artanh:
            return "artanh:L=" + format_double(length_);
        case Kind::Custom:
            return "custom:" + custom_->name;
    }
    return "?";
}

namespace {

// "key=value" pairs split on ','; keys matched case-sensitively, each
// required exactly once, nothing else tolerated.
std::vector<std::pair<std::string, double>> parse_params(std::string_view text,
                                                         std::string_view spec) {
    std::vector<std::pair<std::string, double>> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (item.empty() || eq == std::string_view::npos) {
            throw ConfigError("malformed bijection parameter in '" + std::string(spec) + "'");
        }
        const auto value = parse_double(item.substr(eq + 1));
        if (!value) {
            throw ConfigError("bad numeric value in bijection spec '" + std::string(spec) + "'");
        }
        out.emplace_back(std::string(item.substr(0, eq)), *value);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return out;
}

double take(std::vector<std::pair<std::string, double>>& params, const std::string& key,
            std::string_view spec) {
    for (auto it = params.begin(); it != params.end(); ++it) {
        if (it->first == key) {
            const double v = it->second;
            params.erase(it);
            return v;
        }
    }
    throw ConfigError("bijection spec '" + std::string(spec) + "' is missing key '" + key + "'");
}

}  // namespace

Bijection Bijection::parse(std::string_view text) {
    const std::size_t colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    auto params = (colon == std::string_view::npos)
                      ? std::vector<std::pair<std::string, double>>{}
                      : parse_params(text.substr(colon + 1), text);

    Bijection out;
    if (head == "id") {
        out = identity();
    } else if (head == "pow") {
        const double p = take(params, "p", text);
        if (p != static_cast<int>(p)) {
            throw ConfigError("exponent in '" + std::string(text) + "' must be an integer");
        }
        out = power(static_cast<int>(p));
    } else if (head == "fechner") {
        const double mu = take(params, "mu", text);
        const double nu = take(params, "nu", text);
        out = fechner(mu, nu);
    } else if (head == "tan") {
        out = tangent(take(params, "L", text));
    } else if (head == "artanh") {
        out = artanh(take(params, "L", text));
    } else {
        throw ConfigError("unknown bijection kind '" + std::string(head) + "'");
    }
    if (!params.empty()) {
        throw ConfigError("unknown key '" + params.front().first + "' in bijection spec '" +
                          std::string(text) + "'");
    }
    return out;
}

bool operator==(const Bijection& a, const Bijection& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Bijection::Kind::Identity:
            return true;
        case Bijection::Kind::Power:
            return a.exponent_ == b.exponent_;
        case Bijection::Kind::Fechner:
            return a.mu_ == b.mu_ && a.nu_ == b.nu_;
        case Bijection::Kind::Tangent:
        case Bijection::Kind::Artanh:
            return a.length_ == b.length_;
        case Bijection::Kind::Custom:
            return a.custom_ == b.custom_;
    }
    return false;
}

UpperReal::UpperReal(const Bijection& ctx, double value) : ctx_(ctx), value_(value) {
    if (!ctx_.contains(value_)) {
        throw DomainError("value " + format_double(value_) + " outside the domain of " +
                          ctx_.spec());
    }
}

}  // namespace nda
