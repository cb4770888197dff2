#pragma once

// Verification suites: every closed form against its series oracle, plus the
// algebraic identities (Waring theorem, inversion, Faber condition, Grunsky
// symmetry, Virasoro relations). Each check records the first mismatch with
// both values.

#include "expand.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "schlicht.hpp"
#include "series.hpp"
#include "symfun.hpp"
#include "symmetric.hpp"
#include "virasoro.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace univ {

struct Check {
    std::string name;
    bool pass = false;
    std::string closed; ///< closed-form value at the first mismatch
    std::string oracle; ///< oracle value at the first mismatch
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    const Check* first_failure() const {
        for (const auto& c : checks) {
            if (!c.pass) {
                return &c;
            }
        }
        return nullptr;
    }
};

struct SuiteOptions {
    int order = 10;
    std::uint64_t seed = 1;
    int draws = 10;
    RelationForm relation = RelationForm::standard;
};

namespace detail {

inline Check compare_series(std::string name, const Series& closed, const Series& oracle) {
    Check c{std::move(name), true, {}, {}};
    const int top = std::min(closed.trunc(), oracle.trunc());
    for (int n = std::min(closed.low(), oracle.low()); n <= top; ++n) {
        if (!(closed.coeff(n) == oracle.coeff(n))) {
            c.pass = false;
            c.closed = closed.var() + "^" + std::to_string(n) + ": " + closed.coeff(n).to_string();
            c.oracle = oracle.var() + "^" + std::to_string(n) + ": " + oracle.coeff(n).to_string();
            break;
        }
    }
    return c;
}

inline Check compare_bi(std::string name, const BiSeries& closed, const BiSeries& oracle) {
    Check c{std::move(name), true, {}, {}};
    const int top = std::min(closed.max_total(), oracle.max_total());
    for (int d = 0; d <= top && c.pass; ++d) {
        for (int p = 0; p <= d; ++p) {
            if (!(closed.coeff(p, d - p) == oracle.coeff(p, d - p))) {
                c.pass = false;
                const std::string at = "z^" + std::to_string(p) + " u^" + std::to_string(d - p) + ": ";
                c.closed = at + closed.coeff(p, d - p).to_string();
                c.oracle = at + oracle.coeff(p, d - p).to_string();
                break;
            }
        }
    }
    return c;
}

inline Check compare_poly(std::string name, const Poly& closed, const Poly& oracle) {
    const bool ok = closed == oracle;
    return {std::move(name), ok, ok ? "" : closed.to_string(), ok ? "" : oracle.to_string()};
}

inline Check expect(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, ok ? "" : std::move(detail), {}};
}

/// Seeded draws of small rationals num/den, num in [-9, 9], den in [1, 5].
class RationalDraws {
public:
    explicit RationalDraws(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 5);
        const long n = num(rng_);
        const long d = den(rng_);
        return make_rational(n, d);
    }

    long next_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

inline Poly mu_symbol(std::uint32_t j) { return Poly::var(Var(Family::mu, j)); }

inline Poly p_symbol() { return Poly::var(Var(Family::p)); }

} // namespace detail

/// P_n(-p_1, p_2, ..., (-1)^n p_n) = e_n and Q_n(e_1, ..., e_n) = (-1)^n p_n in x_1..x_n.
inline std::pair<Check, Check> waring_theorem(int n) {
    const auto x = symbols(Family::x, n);
    std::vector<SymmetricForm> signed_p;
    std::vector<SymmetricForm> e;
    for (int k = 1; k <= n; ++k) {
        const auto pk = SymmetricForm::from_poly(newton_sum(k, x), n);
        signed_p.push_back(k % 2 == 1 ? -pk : pk);
        e.push_back(SymmetricForm::from_poly(elementary_symmetric(k, x), n));
    }
    const auto en = SymmetricForm::from_poly(elementary_symmetric(n, x), n);
    const auto pn = SymmetricForm::from_poly(newton_sum(n, x), n);
    const auto lhs1 = waring_P<SymmetricForm>(n, signed_p);
    const auto lhs2 = faber_Q<SymmetricForm>(n, e);
    const auto rhs2 = n % 2 == 1 ? -pn : pn;
    const std::string tag = "n=" + std::to_string(n);
    Check c1{"waring P_n(-p) = e_n " + tag, lhs1 == en, {}, {}};
    Check c2{"waring Q_n(e) = (-1)^n p_n " + tag, lhs2 == rhs2, {}, {}};
    if (!c1.pass) {
        c1.closed = lhs1.to_string();
        c1.oracle = en.to_string();
    }
    if (!c2.pass) {
        c2.closed = lhs2.to_string();
        c2.oracle = rhs2.to_string();
    }
    return {c1, c2};
}

/// Q_n(P_1(a), ..., P_n(a)) = a_n and P_n(Q_1(b), ..., Q_n(b)) = b_n.
inline std::pair<Check, Check> inverse_map(int n) {
    const auto a = symbols(Family::a, n);
    const auto b = symbols(Family::b, n);
    std::vector<Poly> pa;
    std::vector<Poly> qb;
    for (int j = 1; j <= n; ++j) {
        pa.push_back(waring_P<Poly>(j, a));
        qb.push_back(faber_Q<Poly>(j, b));
    }
    const std::string tag = " n=" + std::to_string(n);
    return {detail::compare_poly("inverse Q(P(a)) = a" + tag, faber_Q<Poly>(n, pa), a[n - 1]),
            detail::compare_poly("inverse P(Q(b)) = b" + tag, waring_P<Poly>(n, qb), b[n - 1])};
}

/// Phi_n(z h(1/z)) - z^n has no powers z^0, ..., z^n, checked in w = 1/z up to w^trunc.
inline Check faber_condition(int n, int trunc) {
    const auto b = symbols(Family::b, n + trunc);
    const auto coeffs = faber_Phi(n, std::span<const Poly>(b).first(static_cast<std::size_t>(n)));
    const Series s = oracle::faber_in_w(coeffs, b, trunc);
    Check c{"faber condition n=" + std::to_string(n), true, {}, {}};
    for (int e = -n; e <= 0; ++e) {
        const Poly expected = e == -n ? Poly(1) : Poly();
        if (!(s.coeff(e) == expected)) {
            c.pass = false;
            c.closed = "w^" + std::to_string(e) + ": " + s.coeff(e).to_string();
            c.oracle = "w^" + std::to_string(e) + ": " + expected.to_string();
            break;
        }
    }
    return c;
}

inline SuiteReport symfun_suite(const SuiteOptions& opt) {
    SuiteReport r{"symfun", {}};
    const int n_max = std::min(opt.order, 12);
    for (int n = 1; n <= n_max; ++n) {
        auto [c1, c2] = waring_theorem(n);
        r.checks.push_back(c1);
        r.checks.push_back(c2);
    }
    for (int n = 1; n <= n_max; ++n) {
        auto [c1, c2] = inverse_map(n);
        r.checks.push_back(c1);
        r.checks.push_back(c2);
    }
    const int g = std::min(opt.order, 15);
    const auto a = symbols(Family::a, g);
    const auto wg = oracle::waring_generating(a, g);
    const auto fg = oracle::faber_generating(a, g);
    for (int n = 0; n <= g; ++n) {
        r.checks.push_back(
            detail::compare_poly("waring generating n=" + std::to_string(n), waring_P<Poly>(n, a), wg[n]));
        if (n >= 1) {
            r.checks.push_back(
                detail::compare_poly("faber generating n=" + std::to_string(n), faber_Q<Poly>(n, a), fg[n]));
        }
    }
    for (int n = 1; n <= std::min(opt.order, 8); ++n) {
        r.checks.push_back(faber_condition(n, 12));
    }
    return r;
}

inline SuiteReport lemmas_suite(const SuiteOptions& opt) {
    SuiteReport r{"lemmas", {}};
    const int N = opt.order;
    detail::RationalDraws draws(opt.seed);
    for (int d = 0; d < opt.draws; ++d) {
        const std::string tag = " draw=" + std::to_string(d);

        // Product of powers: two numeric exponents, one symbolic.
        std::vector<Rational> alpha{draws.next(), draws.next(), draws.next()};
        std::vector<Poly> mu{Poly(draws.next_int(0, 4)), Poly(draws.next()), detail::mu_symbol(1)};
        r.checks.push_back(detail::compare_series("product powers" + tag, product_powers_expand(alpha, mu, N),
                                                  oracle::product_powers(alpha, mu, N)));
        std::vector<Poly> mu_int{Poly(draws.next_int(0, 5)), Poly(draws.next_int(0, 5))};
        std::vector<Rational> alpha2{draws.next(), draws.next()};
        r.checks.push_back(detail::compare_series("product powers integer" + tag,
                                                  product_powers_expand(alpha2, mu_int, N),
                                                  oracle::product_powers(alpha2, mu_int, N)));

        // Cyclotomic ratio.
        std::map<std::uint32_t, Poly> cyc{{2, Poly(draws.next_int(0, 3))},
                                          {static_cast<std::uint32_t>(draws.next_int(3, 6)), Poly(draws.next())},
                                          {7, detail::mu_symbol(2)}};
        r.checks.push_back(detail::compare_series("cyclotomic ratio" + tag, cyclotomic_ratio_expand(cyc, N),
                                                  oracle::cyclotomic_ratio(cyc, N)));

        // Composition with theta: generic coefficients and the binomial case.
        std::vector<Poly> A;
        for (int i = 0; i <= N; ++i) {
            A.emplace_back(draws.next());
        }
        r.checks.push_back(
            detail::compare_series("compose" + tag, compose_expand(A, N), oracle::compose_theta(A, N)));
        const Rational p = draws.next();
        const auto binom = binomial_coefficients(p, N);
        r.checks.push_back(detail::compare_series("compose binomial p=" + to_string(p) + tag,
                                                  compose_expand(binom, N), oracle::compose_theta(binom, N)));

        // psi^k phi^p.
        std::vector<Rational> weights;
        for (int j = 1; j <= N; ++j) {
            weights.push_back(draws.next());
        }
        const long k = d % 4;
        const Rational q = draws.next();
        r.checks.push_back(detail::compare_series(
            "psi phi k=" + std::to_string(k) + " p=" + to_string(q) + tag,
            psi_phi_expand<Rational>(weights, k, q, N), oracle::psi_phi<Rational>(weights, k, q, N)));

        // Divided difference.
        const int M = std::min(N, 8);
        const Rational s = draws.next();
        const auto hb = binomial_coefficients(s, M);
        r.checks.push_back(detail::compare_bi("divided difference p=" + to_string(s) + tag,
                                              divided_difference_expand(hb, M), oracle::divided_difference(hb, M)));
    }
    // Symbolic exponents.
    const Poly p = detail::p_symbol();
    r.checks.push_back(detail::compare_series("compose binomial symbolic p", compose_expand(binomial_coefficients(p, N), N),
                                              oracle::compose_theta(binomial_coefficients(p, N), N)));
    std::vector<Rational> jj;
    for (int j = 1; j <= N; ++j) {
        jj.emplace_back(j * (j + 1));
    }
    for (long k = 0; k <= 2; ++k) {
        r.checks.push_back(detail::compare_series("psi phi symbolic p k=" + std::to_string(k),
                                                  psi_phi_expand<Poly>(jj, k, p, N),
                                                  oracle::psi_phi<Poly>(jj, k, p, N)));
    }
    return r;
}

/// The parameter values on which the c-expansions are checked.
inline std::vector<Rational> prop31_parameters() {
    return {0, 1, -1, 2, -2, make_rational(1, 2), make_rational(-3, 2), make_rational(7, 5), 5};
}

/// z^2 S_f with c_j = a^j vanishes (f = z/(1 - a z) is a Moebius map).
inline Check moebius_kernel(int N) {
    const Poly a = Poly::var(Var(Family::a, 0));
    std::map<Var, Poly> sub;
    for (int j = 1; j <= N; ++j) {
        sub[cv(static_cast<std::uint32_t>(j))] = a.pow(static_cast<unsigned>(j));
    }
    const Series s = schwarzian(N).map([&](const Poly& c) { return c.substitute(sub); });
    Check c{"schwarzian moebius kernel N=" + std::to_string(N), s.is_zero(), {}, {}};
    if (!c.pass) {
        c.closed = s.to_string();
        c.oracle = "0";
    }
    return c;
}

/// c_j = j + 1 (f = z/(1-z)^2), substituted before and after the expansion.
inline Check koebe_specialization(int N) {
    std::map<Var, Poly> sub;
    Series f(1, N + 2, "z");
    f.set(1, Poly(1));
    for (int j = 1; j <= N + 1; ++j) {
        sub[cv(static_cast<std::uint32_t>(j))] = Poly(j + 1);
        f.set(j + 1, Poly(j + 1));
    }
    const Series closed = schwarzian(N).map([&](const Poly& c) { return c.substitute(sub); });
    return detail::compare_series("schwarzian koebe N=" + std::to_string(N), closed, oracle::schwarzian_of(f));
}

inline SuiteReport prop31_suite(const SuiteOptions& opt) {
    SuiteReport r{"prop31", {}};
    const int N = opt.order;
    for (const Rational& p : prop31_parameters()) {
        r.checks.push_back(detail::compare_series("expand_a p=" + to_string(p), expand_a(p, N), oracle::expand_a(p, N)));
        r.checks.push_back(detail::compare_series("expand_b p=" + to_string(p), expand_b(p, N), oracle::expand_b(p, N)));
    }
    detail::RationalDraws draws(opt.seed);
    for (int d = 0; d < opt.draws; ++d) {
        const Rational p = draws.next();
        r.checks.push_back(detail::compare_series("expand_a random p=" + to_string(p), expand_a(p, N),
                                                  oracle::expand_a(p, N)));
        r.checks.push_back(detail::compare_series("expand_b random p=" + to_string(p), expand_b(p, N),
                                                  oracle::expand_b(p, N)));
    }
    const Poly p = detail::p_symbol();
    const int Ns = std::min(N, 8);
    r.checks.push_back(detail::compare_series("expand_a symbolic p", expand_a(p, Ns), oracle::expand_a(p, Ns)));
    r.checks.push_back(detail::compare_series("expand_b symbolic p", expand_b(p, Ns), oracle::expand_b(p, Ns)));
    r.checks.push_back(detail::compare_series("schwarzian", schwarzian(N), oracle::schwarzian(N)));
    r.checks.push_back(moebius_kernel(N));
    r.checks.push_back(koebe_specialization(N));

    bool homogeneous = true;
    const Series sa = expand_a(make_rational(3, 7), N);
    const Series sb = expand_b(make_rational(-5, 3), N);
    const Series ss = schwarzian(N);
    for (int n = 0; n <= N; ++n) {
        homogeneous = homogeneous && sa.coeff(n).is_homogeneous(n, Family::c) &&
                      sb.coeff(n).is_homogeneous(n, Family::c) && ss.coeff(n).is_homogeneous(n, Family::c);
    }
    r.checks.push_back(detail::expect("weight homogeneity", homogeneous));
    return r;
}

/// The Grunsky coefficients as the negative-power part of Phi_n(g).
inline GrunskyTable grunsky_from_faber(int max_weight) {
    GrunskyTable t{max_weight, {}};
    const auto b = symbols(Family::b, 2 * max_weight);
    for (int n = 1; n < max_weight; ++n) {
        const auto coeffs = faber_Phi(n, std::span<const Poly>(b).first(static_cast<std::size_t>(n)));
        const Series s = oracle::faber_in_w(coeffs, b, max_weight - n);
        for (int k = 1; n + k <= max_weight; ++k) {
            t.entries[{n, k}] = s.coeff(k);
        }
    }
    return t;
}

inline Check compare_tables(std::string name, const GrunskyTable& closed, const GrunskyTable& oracle) {
    Check c{std::move(name), true, {}, {}};
    for (const auto& [key, value] : oracle.entries) {
        auto it = closed.entries.find(key);
        const Poly got = it == closed.entries.end() ? Poly() : it->second;
        if (!(got == value)) {
            const std::string at = "beta(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): ";
            c.pass = false;
            c.closed = at + got.to_string();
            c.oracle = at + value.to_string();
            break;
        }
    }
    if (c.pass && closed.entries.size() != oracle.entries.size()) {
        c.pass = false;
        c.closed = std::to_string(closed.entries.size()) + " entries";
        c.oracle = std::to_string(oracle.entries.size()) + " entries";
    }
    return c;
}

inline SuiteReport grunsky_suite(const SuiteOptions& opt) {
    SuiteReport r{"grunsky", {}};
    const int N = std::max(opt.order, 2);
    const GrunskyTable table = grunsky_table(N);
    const GrunskyTable log_oracle = grunsky_oracle(N);
    r.checks.push_back(compare_tables("closed form vs log expansion", table, log_oracle));
    r.checks.push_back(compare_tables("closed form vs faber", table, grunsky_from_faber(N)));
    r.checks.push_back(detail::compare_poly("beta(1,1) = b2", table.at(1, 1), b_var(2)));

    bool symmetric = true;
    std::string where;
    for (const auto& [key, value] : table.entries) {
        const auto [n, k] = key;
        if (!(value * make_rational(1, n) == table.at(k, n) * make_rational(1, k))) {
            symmetric = false;
            where = "beta(" + std::to_string(n) + "," + std::to_string(k) + ")";
            break;
        }
    }
    r.checks.push_back(detail::expect("symmetry beta(n,k)/n = beta(k,n)/k", symmetric, where));

    bool free_of_b1 = true;
    for (const auto& [key, value] : table.entries) {
        free_of_b1 = free_of_b1 && !value.contains(Var(Family::b, 1));
    }
    auto shifted = symbols(Family::b, N);
    shifted[0] = shifted[0] + Poly(1);
    r.checks.push_back(detail::expect("no b1 in closed form", free_of_b1));
    r.checks.push_back(compare_tables("oracle unchanged by b1 -> b1 + 1", table, grunsky_oracle(N, shifted)));
    return r;
}

inline SuiteReport virasoro_suite(const SuiteOptions& opt) {
    SuiteReport r{"virasoro", {}};
    const int N = opt.order;
    for (int n = -4; n <= 4; ++n) {
        for (int m = -4; m <= 4; ++m) {
            const VirasoroCheck v = verify_virasoro(n, m, N, opt.relation);
            Check c{"[L" + std::to_string(n) + ", L" + std::to_string(m) + "]", v.pass, {}, {}};
            if (!v.pass) {
                c.closed = v.mismatches.front();
            }
            r.checks.push_back(c);
        }
    }
    const DiffOp l0 = build_hat(0, N);
    r.checks.push_back(detail::compare_poly("^L0 . 1 = h", l0.apply(Poly(1)), symbol(Family::h)));
    for (int k = 1; k <= 4; ++k) {
        r.checks.push_back(detail::compare_poly("^L" + std::to_string(k) + " . 1 = 0", build_hat(k, N).apply(Poly(1)), Poly()));
    }
    const VirasoroCheck central = verify_virasoro(2, -2, N, opt.relation);
    r.checks.push_back(
        detail::compare_poly("central term (2,-2) = cc/2", central.central, symbol(Family::cc) * make_rational(1, 2)));

    const int P = std::min(N, 8);
    for (int k = 1; k <= 5; ++k) {
        const DiffOp series_form = build_L_minus(k, P, LMinusForm::series);
        const DiffOp derivative_form = build_L_minus(k, P, LMinusForm::derivative);
        const DiffOp residue = build_L_minus_oracle(k, P);
        const std::string tag = "L-" + std::to_string(k);
        r.checks.push_back(detail::expect(tag + " series form = derivative form", series_form == derivative_form,
                                          series_form.to_string() + " vs " + derivative_form.to_string()));
        r.checks.push_back(detail::expect(tag + " series form = residue oracle", series_form == residue,
                                          series_form.to_string() + " vs " + residue.to_string()));
        r.checks.push_back(detail::expect(tag + " homogeneous", series_form.homogeneous()));
    }
    const Poly spot = build_L_minus(1, P).deriv(1);
    r.checks.push_back(
        detail::compare_poly("L-1 d/dc1 = 3c2 - 2c1^2", spot, c_var(2) * Rational(3) - c_var(1) * c_var(1) * Rational(2)));
    return r;
}

inline std::vector<std::string> suite_names() { return {"symfun", "lemmas", "prop31", "grunsky", "virasoro"}; }

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "symfun") {
        return symfun_suite(opt);
    }
    if (name == "lemmas") {
        return lemmas_suite(opt);
    }
    if (name == "prop31") {
        return prop31_suite(opt);
    }
    if (name == "grunsky") {
        return grunsky_suite(opt);
    }
    if (name == "virasoro") {
        return virasoro_suite(opt);
    }
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace univ
