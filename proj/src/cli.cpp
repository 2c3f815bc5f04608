#include "nda/cli.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nda/arithmetic.hpp"
#include "nda/cosmology.hpp"
#include "nda/fields.hpp"
#include "nda/numeric_format.hpp"
#include "nda/selftest.hpp"
#include "nda/spacetime.hpp"

namespace nda::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelfTest = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitIo = 3;

// ---------------------------------------------------------------------------
// expression evaluation for `ops`

enum class TokenKind { Number, ZeroPrime, OnePrime, Plus, Minus, Times, Divide,
                       LParen, RParen, UnaryMinus, End };

struct Token {
    TokenKind kind;
    double value = 0.0;
    std::size_t column = 0;  // 1-based
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto column = [&] { return i + 1; };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') {
            if (i + 2 < text.size() && text[i + 2] == ')') {
                const char op = text[i + 1];
                if (op == '+' || op == '-' || op == '*' || op == '/') {
                    const TokenKind kind = op == '+'   ? TokenKind::Plus
                                           : op == '-' ? TokenKind::Minus
                                           : op == '*' ? TokenKind::Times
                                                       : TokenKind::Divide;
                    out.push_back({kind, 0.0, column()});
                    i += 3;
                    continue;
                }
            }
            out.push_back({TokenKind::LParen, 0.0, column()});
            ++i;
            continue;
        }
        if (c == ')') {
            out.push_back({TokenKind::RParen, 0.0, column()});
            ++i;
            continue;
        }
        if (c == '-') {
            out.push_back({TokenKind::UnaryMinus, 0.0, column()});
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            const std::string_view word = text.substr(i, j - i);
            if (word != "one") {
                throw ParseError("unknown word '" + std::string(word) + "'", column());
            }
            out.push_back({TokenKind::OnePrime, 0.0, column()});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.' ||
                    text[j] == 'e' || text[j] == 'E' ||
                    ((text[j] == '+' || text[j] == '-') && j > i &&
                     (text[j - 1] == 'e' || text[j - 1] == 'E')))) {
                ++j;
            }
            std::string_view digits = text.substr(i, j - i);
            // `0p` is the literal for the additive neutral.
            if (digits == "0" && j < text.size() && text[j] == 'p') {
                out.push_back({TokenKind::ZeroPrime, 0.0, column()});
                i = j + 1;
                continue;
            }
            const auto value = parse_double(digits);
            if (!value) {
                throw ParseError("malformed number '" + std::string(digits) + "'", column());
            }
            out.push_back({TokenKind::Number, *value, column()});
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", column());
    }
    out.push_back({TokenKind::End, 0.0, text.size() + 1});
    return out;
}

class Parser {
public:
    Parser(const Bijection& ctx, std::vector<Token> tokens)
        : ctx_(ctx), tokens_(std::move(tokens)) {}

    UpperReal parse() {
        UpperReal value = expression();
        if (peek().kind != TokenKind::End) {
            throw ParseError("unexpected trailing input", peek().column);
        }
        return value;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    UpperReal expression() {
        UpperReal left = term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const Token op = next();
            const UpperReal right = term();
            left = op.kind == TokenKind::Plus ? add(ctx_, left, right) : sub(ctx_, left, right);
        }
        return left;
    }

    UpperReal term() {
        UpperReal left = factor();
        while (peek().kind == TokenKind::Times || peek().kind == TokenKind::Divide) {
            const Token op = next();
            const UpperReal right = factor();
            left = op.kind == TokenKind::Times ? mul(ctx_, left, right) : div(ctx_, left, right);
        }
        return left;
    }

    UpperReal factor() {
        if (peek().kind == TokenKind::UnaryMinus) {
            const Token minus = next();
            const UpperReal inner = factor();
            // Raw-value negation (a negative literal); the generalized
            // negation is spelled `0p (-) X`.
            try {
                return ctx_.upper(-inner.value());
            } catch (const DomainError& e) {
                throw ParseError(std::string("negated value leaves the domain: ") + e.what(),
                                 minus.column);
            }
        }
        return primary();
    }

    UpperReal primary() {
        const Token token = next();
        switch (token.kind) {
            case TokenKind::Number:
                return ctx_.upper(token.value);
            case TokenKind::ZeroPrime:
                return neutral_zero(ctx_);
            case TokenKind::OnePrime:
                return neutral_one(ctx_);
            case TokenKind::LParen: {
                UpperReal inner = expression();
                if (peek().kind != TokenKind::RParen) {
                    throw ParseError("missing ')'", peek().column);
                }
                next();
                return inner;
            }
            default:
                throw ParseError("expected a value", token.column);
        }
    }

    Bijection ctx_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// shared helpers

// An upper-value token: plain number, `0p`, or `one`.
UpperReal parse_upper_token(const Bijection& ctx, const std::string& text) {
    if (text == "0p") return neutral_zero(ctx);
    if (text == "one") return neutral_one(ctx);
    const auto value = parse_double(text);
    if (!value) throw ConfigError("bad upper-value token '" + text + "'");
    return ctx.upper(*value);
}

std::vector<UpperReal> parse_upper_list(const Bijection& ctx, const std::string& text,
                                        std::size_t expected) {
    std::vector<UpperReal> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        out.push_back(parse_upper_token(ctx, text.substr(pos, comma - pos)));
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (out.size() != expected) {
        throw ConfigError("expected " + std::to_string(expected) + " comma-separated values, got " +
                          std::to_string(out.size()));
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.good()) throw std::ios_base::failure("cannot write " + path);
}

std::string drop_extension(const std::string& path) {
    const std::size_t dot = path.rfind('.');
    const std::size_t slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

std::string script_path_for(const std::string& csv_path) {
    return drop_extension(csv_path) + ".py";
}

std::string csv_basename(const std::string& csv_path) {
    const std::size_t slash = csv_path.rfind('/');
    return slash == std::string::npos ? csv_path : csv_path.substr(slash + 1);
}

std::string png_basename(const std::string& csv_path) {
    return drop_extension(csv_basename(csv_path)) + ".png";
}

// ---------------------------------------------------------------------------
// subcommand state

struct LightconeArgs {
    std::string fspec = "fechner:mu=10,nu=-20";
    std::string apex = "0p,0p,0p";
    std::optional<double> x1_lo, x1_hi, x2_lo, x2_hi;
    int samples = 41;
    std::string out = "lightcone.csv";
    bool plot_script = false;
};

struct BetaArgs {
    std::string kind = "tan";
    double length = 1.0;
    double u_lo = -1.0;
    double u_hi = 6.0;
    int samples = 101;
    std::string out = "beta.csv";
    bool plot_script = false;
};

struct FriedmanArgs {
    std::string fspec = "tan:L=20";
    std::string t0_token = "one";
    std::optional<double> classical_t0;
    std::optional<double> t_lo, t_hi;
    int samples = 201;
    std::string out = "friedman.csv";
    bool plot_script = false;
};

// Context-aware default box for the cone sampling grid.
void default_surface_bounds(const Bijection& ctx, double& lo, double& hi) {
    switch (ctx.kind()) {
        case Bijection::Kind::Fechner: {
            const double zero = neutral_zero(ctx).value();
            lo = zero * std::exp(-2.0);
            hi = zero * std::exp(2.0);
            return;
        }
        case Bijection::Kind::Tangent:
        case Bijection::Kind::Artanh:
            // Spanning the closed interval makes horizon cells visible as
            // missing samples at the edges.
            lo = -0.5 * ctx.length();
            hi = 0.5 * ctx.length();
            return;
        default:
            lo = -1.0;
            hi = 1.0;
            return;
    }
}

void default_time_bounds(const Bijection& ctx, const UpperReal& t0, double& lo, double& hi) {
    switch (ctx.kind()) {
        case Bijection::Kind::Fechner: {
            const double zero = neutral_zero(ctx).value();
            lo = zero * std::exp(0.01);
            hi = zero * std::exp(2.0);
            return;
        }
        case Bijection::Kind::Tangent:
        case Bijection::Kind::Artanh:
            lo = 0.025 * ctx.length();
            hi = 0.49 * ctx.length();
            return;
        default:
            lo = 0.1 * t0.value();
            hi = 4.0 * t0.value();
            return;
    }
}

int run_ops(const std::string& fspec, const std::string& expr) {
    const Bijection ctx = Bijection::parse(fspec);
    const UpperReal result = eval_expression(ctx, expr);
    std::cout << "upper: " << format_double(result.value()) << '\n'
              << "lower: " << format_double(result.lower()) << '\n';
    return kExitOk;
}

int run_lightcone(const LightconeArgs& args) {
    const Bijection ctx = Bijection::parse(args.fspec);
    const auto apex_parts = parse_upper_list(ctx, args.apex, 3);
    const double zero = neutral_zero(ctx).value();
    const FourVector apex(ctx, {apex_parts[0].value(), apex_parts[1].value(),
                                apex_parts[2].value(), zero});

    double lo = 0.0;
    double hi = 0.0;
    default_surface_bounds(ctx, lo, hi);
    const SurfaceGrid grid{args.x1_lo.value_or(lo), args.x1_hi.value_or(hi), args.samples,
                           args.x2_lo.value_or(lo), args.x2_hi.value_or(hi), args.samples};

    const SeriesTable table = lightcone_surface(ctx, apex, grid);
    write_file(args.out, table.to_csv());
    std::cout << "wrote " << args.out << " (" << table.row_count() << " rows)\n";

    if (args.plot_script) {
        const std::string script =
            "import matplotlib.pyplot as plt\n"
            "import numpy as np\n"
            "\n"
            "data = np.genfromtxt(\"" + csv_basename(args.out) + "\", delimiter=\",\","
            " names=True, comments=\"#\")\n"
            "fig = plt.figure(figsize=(8, 4))\n"
            "for i, branch in enumerate((\"x0_future\", \"x0_past\")):\n"
            "    ax = fig.add_subplot(1, 2, i + 1, projection=\"3d\")\n"
            "    keep = np.isfinite(data[branch])\n"
            "    ax.scatter(data[\"x1\"][keep], data[\"x2\"][keep], data[branch][keep], s=4)\n"
            "    ax.set_xlabel(\"X1\"); ax.set_ylabel(\"X2\"); ax.set_zlabel(\"X0\")\n"
            "    ax.set_title(branch)\n"
            "plt.tight_layout()\n"
            "plt.savefig(\"" + png_basename(args.out) + "\", dpi=150)\n";
        write_file(script_path_for(args.out), script);
        std::cout << "wrote " << script_path_for(args.out) << '\n';
    }
    return kExitOk;
}

int run_beta(const BetaArgs& args) {
    BetaCurveSpec spec;
    if (args.kind == "tan") {
        spec.kind = BetaKind::Tan;
    } else if (args.kind == "artanh") {
        spec.kind = BetaKind::Artanh;
    } else if (args.kind == "fechner") {
        spec.kind = BetaKind::Fechner;
    } else {
        throw ConfigError("unknown beta kind '" + args.kind + "' (tan, artanh, fechner)");
    }
    spec.length = args.length;
    spec.u_lo = args.u_lo;
    spec.u_hi = args.u_hi;
    spec.samples = args.samples;

    const SeriesTable table = beta_curve(spec);
    write_file(args.out, table.to_csv());
    std::cout << "wrote " << args.out << " (" << table.row_count() << " rows)\n";

    if (args.plot_script) {
        const std::string coord = spec.kind == BetaKind::Fechner ? "r_over_zero" : "y1";
        const std::string script =
            "import matplotlib.pyplot as plt\n"
            "import numpy as np\n"
            "\n"
            "data = np.genfromtxt(\"" + csv_basename(args.out) + "\", delimiter=\",\","
            " names=True, comments=\"#\")\n"
            "plt.plot(data[\"" + coord + "\"], data[\"beta\"])\n"
            "plt.xlabel(\"" + coord + "\"); plt.ylabel(\"beta\")\n"
            "plt.grid(True)\n"
            "plt.savefig(\"" + png_basename(args.out) + "\", dpi=150)\n";
        write_file(script_path_for(args.out), script);
        std::cout << "wrote " << script_path_for(args.out) << '\n';
    }
    return kExitOk;
}

int run_friedman(const FriedmanArgs& args) {
    const Bijection ctx = Bijection::parse(args.fspec);
    const UpperReal t0 = parse_upper_token(ctx, args.t0_token);

    double lo = 0.0;
    double hi = 0.0;
    default_time_bounds(ctx, t0, lo, hi);
    lo = args.t_lo.value_or(lo);
    hi = args.t_hi.value_or(hi);
    if (args.samples < 3) throw ConfigError("friedman needs --n >= 3");
    std::vector<double> grid(args.samples);
    for (int i = 0; i < args.samples; ++i) {
        grid[i] = args.samples == 1 ? lo : lo + (hi - lo) * i / (args.samples - 1);
    }

    const auto cfg = FriedmanConfig::make(ctx, t0, std::move(grid), args.classical_t0);
    const auto cmp = friedman_comparison(cfg);
    write_file(args.out, cmp.table.to_csv());
    std::cout << "wrote " << args.out << " (" << cmp.table.row_count() << " rows)\n";
    std::cout << "t0: " << format_double(cfg.classical_t0) << '\n';
    std::cout << "T_star: "
              << (cmp.accel_onset ? format_double(*cmp.accel_onset) : std::string("none"))
              << '\n';

    if (args.plot_script) {
        const std::string script =
            "import matplotlib.pyplot as plt\n"
            "import numpy as np\n"
            "\n"
            "data = np.genfromtxt(\"" + csv_basename(args.out) + "\", delimiter=\",\","
            " names=True, comments=\"#\")\n"
            "plt.plot(data[\"T\"], data[\"A\"], label=\"A(T)\")\n"
            "plt.plot(data[\"T\"], data[\"a_classical\"], \"--\", label=\"(t/t0)^(2/3)\")\n"
            "plt.xlabel(\"T\"); plt.ylabel(\"scale factor\")\n"
            "plt.legend(); plt.grid(True)\n"
            "plt.savefig(\"" + png_basename(args.out) + "\", dpi=150)\n";
        write_file(script_path_for(args.out), script);
        std::cout << "wrote " << script_path_for(args.out) << '\n';
    }
    return kExitOk;
}

int run_selftest_cmd(std::uint64_t seed) {
    const auto results = run_selftest(seed);
    const bool ok = report_selftest(std::cout, results);
    return ok ? kExitOk : kExitSelfTest;
}

}  // namespace

UpperReal eval_expression(const Bijection& ctx, std::string_view text) {
    return Parser(ctx, lex(text)).parse();
}

int run(int argc, const char* const* argv) {
    CLI::App app{"conjugated (bijection-induced) arithmetic, light cones, apparent "
                 "velocities, and FRW scale factors"};
    app.require_subcommand(1);

    std::string ops_fspec = "id";
    std::string ops_expr;
    auto* ops = app.add_subcommand("ops", "evaluate an infix expression; operators "
                                          "(+) (-) (*) (/) act through f");
    ops->add_option("--f", ops_fspec, "bijection spec (id, pow:p=3, fechner:mu=10,nu=-20, "
                                      "tan:L=1, artanh:L=1)");
    ops->add_option("expr", ops_expr, "expression, e.g. \"1 (+) 1\"")->required();

    LightconeArgs lc;
    auto* lightcone = app.add_subcommand("lightcone", "sample a 1+2 dimensional light cone "
                                                      "around an apex into CSV");
    lightcone->add_option("--f", lc.fspec, "bijection spec");
    lightcone->add_option("--apex", lc.apex, "apex Y0,Y1,Y2 (numbers, 0p, or one)");
    lightcone->add_option("--x1min", lc.x1_lo, "grid lower bound for X1");
    lightcone->add_option("--x1max", lc.x1_hi, "grid upper bound for X1");
    lightcone->add_option("--x2min", lc.x2_lo, "grid lower bound for X2");
    lightcone->add_option("--x2max", lc.x2_hi, "grid upper bound for X2");
    lightcone->add_option("--n", lc.samples, "samples per axis")->check(CLI::PositiveNumber);
    lightcone->add_option("--out", lc.out, "output CSV path");
    lightcone->add_flag("--plot-script", lc.plot_script, "also write a matplotlib script");

    BetaArgs be;
    auto* beta = app.add_subcommand("beta", "apparent-velocity curve for a charge at rest");
    beta->add_option("--kind", be.kind, "tan, artanh, or fechner")->required();
    beta->add_option("--L", be.length, "interval length L (tan/artanh)");
    beta->add_option("--umin", be.u_lo, "lower r/0' bound (fechner)");
    beta->add_option("--umax", be.u_hi, "upper r/0' bound (fechner)");
    beta->add_option("--n", be.samples, "sample count")->check(CLI::PositiveNumber);
    beta->add_option("--out", be.out, "output CSV path");
    beta->add_flag("--plot-script", be.plot_script, "also write a matplotlib script");

    FriedmanArgs fr;
    auto* friedman = app.add_subcommand("friedman", "matter-dominated scale factor vs the "
                                                    "classical (t/t0)^(2/3)");
    friedman->add_option("--f", fr.fspec, "bijection spec");
    friedman->add_option("--T0", fr.t0_token, "reference time (number, 0p, or one)");
    friedman->add_option("--t0", fr.classical_t0,
                         "classical reference time (default: slope match at T0)");
    friedman->add_option("--Tmin", fr.t_lo, "grid lower bound");
    friedman->add_option("--Tmax", fr.t_hi, "grid upper bound");
    friedman->add_option("--n", fr.samples, "sample count")->check(CLI::PositiveNumber);
    friedman->add_option("--out", fr.out, "output CSV path");
    friedman->add_flag("--plot-script", fr.plot_script, "also write a matplotlib script");

    std::uint64_t seed = 12345;
    auto* selftest = app.add_subcommand("selftest", "run the built-in verification suite");
    selftest->add_option("--seed", seed, "RNG seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadParams;
    }

    try {
        if (ops->parsed()) return run_ops(ops_fspec, ops_expr);
        if (lightcone->parsed()) return run_lightcone(lc);
        if (beta->parsed()) return run_beta(be);
        if (friedman->parsed()) return run_friedman(fr);
        if (selftest->parsed()) return run_selftest_cmd(seed);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    }
    return kExitBadParams;
}

}  // namespace nda::cli
