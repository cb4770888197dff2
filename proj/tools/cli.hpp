#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes data to out, diagnostics to err.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "univ/univ.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace univ::cli {

enum class Format { text, json };

struct Options {
    int order = 6;
    int max_weight = 16;
    Format format = Format::text;
    std::string p = "0";
    std::uint64_t seed = 1;
    int index = 1;
    std::string suite = "all";
    std::string relation = "standard";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rational or the symbol p.
using Parameter = std::variant<Rational, Poly>;

inline Parameter parse_parameter(const std::string& text) {
    if (text == "p") {
        return Poly::var(Var(Family::p));
    }
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw UsageError("malformed rational '" + text + "': " + e.what());
    }
}

inline std::string parameter_text(const Parameter& p) {
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) {
                return to_string(v);
            } else {
                return v.to_string();
            }
        },
        p);
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int print_series(const Options& opt, std::ostream& out, const Series& s) {
    if (opt.format == Format::json) {
        emit(out, to_json(s));
    } else {
        out << s.to_string() << '\n';
    }
    return 0;
}

inline int print_polys(const Options& opt, std::ostream& out, const std::string& label,
                       const std::vector<std::pair<long, Poly>>& polys) {
    if (opt.format == Format::json) {
        Json arr = Json::array();
        for (const auto& [n, p] : polys) {
            arr.push_back({{"n", n}, {"poly", to_json(p)}});
        }
        emit(out, arr);
    } else {
        for (const auto& [n, p] : polys) {
            out << label << n << " = " << p.to_string() << '\n';
        }
    }
    return 0;
}

inline int cmd_waring(const Options& opt, std::ostream& out) {
    const auto a = symbols(Family::a, opt.order);
    std::vector<std::pair<long, Poly>> polys;
    for (long n = 0; n <= opt.order; ++n) {
        polys.emplace_back(n, waring_P<Poly>(n, a));
    }
    return print_polys(opt, out, "P", polys);
}

inline int cmd_faber(const Options& opt, std::ostream& out) {
    const auto b = symbols(Family::b, opt.order);
    std::vector<std::pair<long, Poly>> polys;
    for (long n = 1; n <= opt.order; ++n) {
        polys.emplace_back(n, faber_Q<Poly>(n, b));
    }
    return print_polys(opt, out, "Q", polys);
}

inline int cmd_phi(const Options& opt, std::ostream& out) {
    const auto b = symbols(Family::b, opt.order);
    std::vector<std::pair<long, Poly>> polys;
    const Poly z = Poly::var(Var(Family::z));
    for (long n = 1; n <= opt.order; ++n) {
        const auto coeffs = faber_Phi(n, std::span<const Poly>(b).first(static_cast<std::size_t>(n)));
        Poly phi;
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            phi += coeffs[e] * z.pow(static_cast<unsigned>(e));
        }
        polys.emplace_back(n, phi);
    }
    return print_polys(opt, out, "Phi", polys);
}

inline int cmd_expand(const Options& opt, std::ostream& out, bool a_series) {
    const Parameter p = parse_parameter(opt.p);
    const Series s = std::visit(
        [&](const auto& v) { return a_series ? expand_a(v, opt.order) : expand_b(v, opt.order); }, p);
    return print_series(opt, out, s);
}

inline int cmd_grunsky(const Options& opt, std::ostream& out) {
    if (opt.order < 2) {
        throw UsageError("grunsky needs --order >= 2");
    }
    const GrunskyTable t = grunsky_table(opt.order);
    if (opt.format == Format::json) {
        emit(out, to_json(t));
    } else {
        for (const auto& [key, poly] : t.entries) {
            out << "beta(" << key.first << "," << key.second << ") = " << poly.to_string() << '\n';
        }
    }
    return 0;
}

inline int cmd_op(const Options& opt, std::ostream& out) {
    const DiffOp op = build_hat(opt.index, opt.order);
    if (opt.format == Format::json) {
        emit(out, to_json(op));
    } else {
        out << "^L" << opt.index << ": " << op.to_string() << '\n';
    }
    return 0;
}

inline int cmd_verify(const Options& opt, std::ostream& out) {
    SuiteOptions so;
    so.order = opt.order;
    so.seed = opt.seed;
    if (opt.relation == "standard") {
        so.relation = RelationForm::standard;
    } else if (opt.relation == "circle") {
        so.relation = RelationForm::circle_fields;
    } else {
        throw UsageError("unknown relation '" + opt.relation + "' (standard | circle)");
    }
    std::vector<std::string> names;
    if (opt.suite == "all") {
        names = suite_names();
    } else {
        const auto all = suite_names();
        if (std::find(all.begin(), all.end(), opt.suite) == all.end()) {
            throw UsageError("unknown suite '" + opt.suite + "'");
        }
        names = {opt.suite};
    }
    bool ok = true;
    Json reports = Json::array();
    for (const auto& name : names) {
        const SuiteReport r = run_suite(name, so);
        ok = ok && r.pass();
        if (opt.format == Format::json) {
            Json checks = Json::array();
            for (const auto& c : r.checks) {
                Json jc = {{"name", c.name}, {"pass", c.pass}};
                if (!c.pass) {
                    jc["closed"] = c.closed;
                    jc["oracle"] = c.oracle;
                }
                checks.push_back(std::move(jc));
            }
            reports.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", std::move(checks)}});
            continue;
        }
        for (const auto& c : r.checks) {
            out << (c.pass ? "PASS  " : "FAIL  ") << r.suite << "  " << c.name << '\n';
        }
        if (const Check* bad = r.first_failure()) {
            out << "first counterexample in " << r.suite << ": " << bad->name << '\n'
                << "  closed form: " << bad->closed << '\n'
                << "  oracle:      " << bad->oracle << '\n';
        }
    }
    if (opt.format == Format::json) {
        emit(out, reports);
    }
    return ok ? 0 : 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact expansions for univalent functions and the Virasoro algebra", "univ"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--order", opt.order, "truncation order, weight bound or horizon")->check(CLI::NonNegativeNumber);
    app.add_option("--max-weight", opt.max_weight, "upper bound accepted for --order")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--p", opt.p, "rational num/den, or p for a symbolic exponent");
    app.add_option("--seed", opt.seed, "seed for randomized parameter draws");

    auto* waring = app.add_subcommand("waring", "Waring polynomials P_0..P_order");
    auto* faber = app.add_subcommand("faber", "Faber polynomials Q_1..Q_order");
    auto* phi = app.add_subcommand("phi", "one-variable Faber polynomials Phi_1..Phi_order");
    auto* ea = app.add_subcommand("expand-a", "z^{p+2} f'^2 / f^{p+2}");
    auto* eb = app.add_subcommand("expand-b", "z^{p+1} f'' / f^p");
    auto* sch = app.add_subcommand("schwarzian", "z^2 S_f");
    auto* qs = app.add_subcommand("qseries", "sum Q_n z^n");
    auto* gr = app.add_subcommand("grunsky", "Grunsky coefficients for n + k <= order");
    auto* op = app.add_subcommand("op", "the operator ^L_n on components p <= order");
    op->add_option("--n", opt.index, "generator index")->allow_extra_args(false);
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", opt.suite, "lemmas | prop31 | grunsky | virasoro | symfun | all");
    ver->add_option("--relation", opt.relation, "standard ([L_n, L_m] = (n-m) L_{n+m} + ...) or circle ((m-n))");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return 2;
    }
    opt.format = format == "json" ? Format::json : Format::text;

    try {
        if (opt.order > opt.max_weight) {
            throw UsageError("--order " + std::to_string(opt.order) + " exceeds --max-weight " +
                             std::to_string(opt.max_weight));
        }
        if (*waring) {
            return cmd_waring(opt, out);
        }
        if (*faber) {
            return cmd_faber(opt, out);
        }
        if (*phi) {
            return cmd_phi(opt, out);
        }
        if (*ea) {
            return cmd_expand(opt, out, true);
        }
        if (*eb) {
            return cmd_expand(opt, out, false);
        }
        if (*sch) {
            return print_series(opt, out, schwarzian(opt.order));
        }
        if (*qs) {
            return print_series(opt, out, q_series(opt.order));
        }
        if (*gr) {
            return cmd_grunsky(opt, out);
        }
        if (*op) {
            return cmd_op(opt, out);
        }
        if (*ver) {
            return cmd_verify(opt, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace univ::cli
