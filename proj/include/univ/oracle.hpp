#pragma once

// Brute-force counterparts of every closed form, built only from series
// arithmetic: products, reciprocals, exp/log, powers, composition and
// coefficient extraction. Nothing here calls a multi-index formula.

#include "poly.hpp"
#include "series.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace univ::oracle {

/// Coefficients of exp(-sum_j a_j z^j / j) up to z^n.
inline std::vector<Poly> waring_generating(std::span<const Poly> a, int n) {
    Series s(0, n, "z");
    for (int j = 1; j <= n && j <= static_cast<int>(a.size()); ++j) {
        s.set(j, a[j - 1] * make_rational(-1, j));
    }
    const Series e = series_exp(s);
    std::vector<Poly> out;
    for (int k = 0; k <= n; ++k) {
        out.push_back(e.coeff(k));
    }
    return out;
}

/// Coefficients of -z h'(z)/h(z), h = 1 + sum_j b_j z^j, up to z^n (index 0 is 0).
inline std::vector<Poly> faber_generating(std::span<const Poly> b, int n) {
    Series h = Series::constant(1, n, "z");
    for (int j = 1; j <= n && j <= static_cast<int>(b.size()); ++j) {
        h.set(j, b[j - 1]);
    }
    const Series g = -(derivative(h).shifted(1).truncated(n) * reciprocal(h));
    std::vector<Poly> out;
    for (int k = 0; k <= n; ++k) {
        out.push_back(g.coeff(k));
    }
    return out;
}

/// The series phi(z) = 1 + c_1 z + c_2 z^2 + ... to order N.
inline Series unit_series(int N, const char* var = "z") {
    Series phi = Series::constant(1, N, var);
    for (int j = 1; j <= N; ++j) {
        phi.set(j, c_var(static_cast<std::uint32_t>(j)));
    }
    return phi;
}

/// prod_j (1 + alpha_j s)^{mu_j}: repeated multiplication (or reciprocals)
/// when mu_j is an integer constant, exp(mu_j log(1 + alpha_j s)) otherwise.
inline Series product_powers(std::span<const Rational> alpha, std::span<const Poly> mu, int L) {
    if (alpha.size() != mu.size()) {
        throw std::invalid_argument("product_powers: alpha and mu differ in length");
    }
    Series result = Series::constant(1, L, "s");
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        Series factor = Series::constant(1, L, "s");
        if (L >= 1) {
            factor.set(1, Poly(alpha[j]));
        }
        const auto e = mu[j].as_constant();
        Series power = Series::constant(1, L, "s");
        if (e && is_integer(*e)) {
            const long n = e->get_num().get_si();
            const Series base = n >= 0 ? factor : reciprocal(factor);
            for (long i = 0; i < (n >= 0 ? n : -n); ++i) {
                power = power * base;
            }
        } else {
            power = series_exp(mu[j] * series_log(factor));
        }
        result = result * power;
    }
    return result;
}

/// prod_{j >= 2} ((1 - t^j)/(1 - t))^{mu_j}, each ratio by series division.
inline Series cyclotomic_ratio(const std::map<std::uint32_t, Poly>& mu, int L) {
    Series result = Series::constant(1, L, "t");
    Series one_minus_t = Series::constant(1, L, "t");
    if (L >= 1) {
        one_minus_t.set(1, Poly(-1));
    }
    const Series inv = reciprocal(one_minus_t);
    for (const auto& [j, e] : mu) {
        Series num = Series::constant(1, L, "t");
        if (static_cast<int>(j) <= L) {
            num.set(static_cast<int>(j), Poly(-1));
        }
        const Series ratio = num * inv;
        const auto k = e.as_constant();
        if (k && is_integer(*k) && *k >= 0) {
            for (long i = 0; i < k->get_num().get_si(); ++i) {
                result = result * ratio;
            }
        } else {
            result = result * series_pow(ratio, e);
        }
    }
    return result;
}

/// f(theta(z)) with f(xi) = sum_i A_i xi^i and theta = c_1 z + c_2 z^2 + ....
inline Series compose_theta(std::span<const Poly> A, int N) {
    Series outer(0, N, "xi");
    for (int i = 0; i <= N && i < static_cast<int>(A.size()); ++i) {
        outer.set(i, A[i]);
    }
    Series theta(0, N, "z");
    for (int j = 1; j <= N; ++j) {
        theta.set(j, c_var(static_cast<std::uint32_t>(j)));
    }
    return compose(outer, theta);
}

/// psi(z)^k phi(z)^p with phi = 1 + sum c_j z^j, psi = sum alpha_j c_j z^j.
template <class P>
Series psi_phi(std::span<const Rational> alpha, long k, const P& p, int N) {
    const Series phi = unit_series(N);
    Series psi(0, N, "z");
    for (int j = 1; j <= N; ++j) {
        psi.set(j, c_var(static_cast<std::uint32_t>(j)) * alpha[j - 1]);
    }
    Series result = series_pow(phi, p);
    for (long i = 0; i < k; ++i) {
        result = result * psi;
    }
    return result;
}

/// H((theta(z) - theta(u))/(z - u)), theta = z + c_1 z^2 + ..., with the
/// divided difference obtained by exact division of theta(z) - theta(u).
inline BiSeries divided_difference(std::span<const Poly> A, int N) {
    BiSeries diff(N + 1, "z", "u");
    diff.add(1, 0, Poly(1));
    diff.add(0, 1, Poly(-1));
    for (int j = 1; j + 1 <= N + 1; ++j) {
        diff.add(j + 1, 0, c_var(static_cast<std::uint32_t>(j)));
        diff.add(0, j + 1, -c_var(static_cast<std::uint32_t>(j)));
    }
    const BiSeries ratio = divide_by_difference(diff);
    Series outer(0, N, "xi");
    for (int i = 0; i <= N && i < static_cast<int>(A.size()); ++i) {
        outer.set(i, A[i]);
    }
    return compose(outer, ratio - BiSeries::constant(1, N, "z", "u"));
}

/// f(z) = z + c_1 z^2 + ..., f = z phi, known to order N + 1.
inline Series schlicht_f(int N) { return unit_series(N).shifted(1); }

/// z^{p+2} f'^2 / f^{p+2} = f'^2 (f/z)^{-(p+2)}.
template <class P>
Series expand_a(const P& p, int N) {
    const Series phi = unit_series(N);
    const Series df = derivative(schlicht_f(N + 1)).truncated(N);
    return df * df * series_pow(phi, P(-(p + P(2))));
}

/// z^{p+1} f'' / f^p = z f'' (f/z)^{-p}.
template <class P>
Series expand_b(const P& p, int N) {
    const Series phi = unit_series(N);
    const Series zf2 = derivative(derivative(schlicht_f(N + 1))).shifted(1).truncated(N);
    return zf2 * series_pow(phi, P(-p));
}

/// z^2 (2 f'''/f' - 3 (f''/f')^2) from the derivatives of f, f = z + O(z^2).
inline Series schwarzian_of(const Series& f) {
    const int N = f.trunc() - 2;
    const Series d1 = derivative(f);
    const Series d2 = derivative(d1);
    const Series d3 = derivative(d2);
    const Series inv = reciprocal(d1);
    const Series ratio2 = d2 * inv;
    const Series s = Poly(2) * (d3 * inv) - Poly(3) * (ratio2 * ratio2);
    return s.shifted(2).truncated(N);
}

inline Series schwarzian(int N) { return schwarzian_of(schlicht_f(N + 2)); }

/// Phi_n(g) as a Laurent series in w = 1/z, g = z h(1/z) = w^{-1} h(w),
/// h = 1 + b_1 w + b_2 w^2 + ...; coeffs[e] is the z^e coefficient of Phi_n.
/// Known up to w^trunc.
inline Series faber_in_w(std::span<const Poly> coeffs, std::span<const Poly> b, int trunc) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    Series h = Series::constant(1, trunc + n, "w");
    for (int j = 1; j <= trunc + n && j <= static_cast<int>(b.size()); ++j) {
        h.set(j, b[j - 1]);
    }
    Series total(-n, trunc, "w");
    Series hpow = Series::constant(1, trunc + n, "w");
    for (int e = 0; e <= n; ++e) {
        if (e > 0) {
            hpow = hpow * h;
        }
        if (!coeffs[e].is_zero()) {
            total = total + coeffs[e] * hpow.shifted(-e).truncated(trunc);
        }
    }
    return total;
}

/// Coefficient of z^n in the compositional inverse of a, by Lagrange:
/// [z^n] r = (1/n) [w^{n-1}] (w / a(w))^n.
inline Poly lagrange_coefficient(const Series& a, int n) {
    if (n < 1) {
        throw std::invalid_argument("lagrange_coefficient needs n >= 1");
    }
    Series unit(0, a.trunc() - 1, a.var());
    for (int i = 0; i <= a.trunc() - 1; ++i) {
        unit.set(i, a.coeff(i + 1));
    }
    const Series q = series_pow(reciprocal(unit), static_cast<long>(n));
    return q.coeff(n - 1) * make_rational(1, n);
}

} // namespace univ::oracle
