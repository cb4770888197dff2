#pragma once

// Closed-form coefficient extraction for products of powers.
//
// Each expansion here is a finite sum over multi-indices m built from
// factorials, falling products and Waring polynomials of weighted Newton
// sums. None of them touches the series engine beyond packaging the
// result; oracle.hpp rebuilds every one of them from series arithmetic.

#include "poly.hpp"
#include "series.hpp"
#include "symfun.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace univ {

/// T_k(alpha, mu) = (-1)^k sum_j mu_j alpha_j^k.
template <class M>
M weighted_newton(std::span<const Rational> alpha, std::span<const M> mu, long k) {
    if (alpha.size() != mu.size()) {
        throw std::invalid_argument("weighted_newton: alpha and mu differ in length");
    }
    M total(0);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        total = total + mu[j] * M(power(alpha[j], k));
    }
    return k % 2 == 0 ? total : M(-total);
}

/// Weighted Newton sums T_1..T_L together with the data they came from.
template <class M>
struct WeightedNewton {
    std::vector<Rational> alphas;
    std::vector<M> mus;
    std::vector<M> values; ///< values[k-1] = T_k

    static WeightedNewton compute(std::vector<Rational> alphas, std::vector<M> mus, long L) {
        WeightedNewton w{std::move(alphas), std::move(mus), {}};
        for (long k = 1; k <= L; ++k) {
            w.values.push_back(weighted_newton<M>(w.alphas, w.mus, k));
        }
        return w;
    }

    bool consistent() const {
        for (std::size_t k = 1; k <= values.size(); ++k) {
            if (!(values[k - 1] == weighted_newton<M>(alphas, mus, static_cast<long>(k)))) {
                return false;
            }
        }
        return true;
    }
};

/// prod_j (1 + alpha_j s)^{mu_j} = sum_l P_l(T_1, ..., T_l) s^l, to order L.
inline Series product_powers_expand(std::span<const Rational> alpha, std::span<const Poly> mu, int L) {
    const auto w = WeightedNewton<Poly>::compute({alpha.begin(), alpha.end()}, {mu.begin(), mu.end()}, L);
    Series s(0, L, "s");
    for (int l = 0; l <= L; ++l) {
        s.set(l, waring_P<Poly>(l, w.values));
    }
    return s;
}

/// N_p(mu) = -sum_{j>=2} mu_j + sum_{j>=2, j | p} j mu_j.
/// mu maps j (>= 2) to its exponent.
template <class M>
M cyclotomic_N(long p, const std::map<std::uint32_t, M>& mu) {
    M total(0);
    for (const auto& [j, value] : mu) {
        if (j < 2) {
            throw std::invalid_argument("cyclotomic exponents are indexed from j = 2");
        }
        total = total - value;
        if (p % static_cast<long>(j) == 0) {
            total = total + value * M(static_cast<long>(j));
        }
    }
    return total;
}

template <class M>
std::vector<M> cyclotomic_Ns(long L, const std::map<std::uint32_t, M>& mu) {
    std::vector<M> out;
    out.reserve(static_cast<std::size_t>(L));
    for (long p = 1; p <= L; ++p) {
        out.push_back(cyclotomic_N<M>(p, mu));
    }
    return out;
}

/// prod_{j>=2} ((1 - t^j)/(1 - t))^{mu_j} = sum_l P_l(N_1, ..., N_l) t^l, to order L.
inline Series cyclotomic_ratio_expand(const std::map<std::uint32_t, Poly>& mu, int L) {
    const auto n = cyclotomic_Ns<Poly>(L, mu);
    Series s(0, L, "t");
    for (int l = 0; l <= L; ++l) {
        s.set(l, waring_P<Poly>(l, n));
    }
    return s;
}

/// f(theta(z)) for f(xi) = sum_i A_i xi^i (A_i = 0 past the list) and
/// theta(z) = c_1 z + c_2 z^2 + ..., to order N:
///   sum_m A_{|m|} |m|! / prod m_j! c^m z^{||m||}.
inline Series compose_expand(std::span<const Poly> A, int N) {
    Series s(0, N, "z");
    if (!A.empty()) {
        s.set(0, A[0]);
    }
    for (int w = 1; w <= N; ++w) {
        Poly coeff;
        for_each_multi_index(w, [&](const MultiIndex& m) {
            const long m0 = m.stats().m0;
            if (m0 >= static_cast<long>(A.size()) || A[m0].is_zero()) {
                return;
            }
            coeff += A[m0] * Poly::monomial(m.monomial(), factorial(m0) / m.factorial_product());
        });
        s.set(w, std::move(coeff));
    }
    return s;
}

/// Binomial coefficients of (1 + xi)^p, i.e. A_i = p(p-1)...(p-i+1)/i!, for i <= n.
template <class P>
std::vector<Poly> binomial_coefficients(const P& p, int n) {
    std::vector<Poly> A;
    for (int i = 0; i <= n; ++i) {
        A.push_back(Poly(falling_factorial<P>(p, i)) * Rational(1 / factorial(i)));
    }
    return A;
}

/// psi(z)^k phi(z)^p with phi = 1 + sum c_j z^j and psi = sum alpha_j c_j z^j,
/// to order N:
///   k! sum_{|m| >= k} [p(p-1)...(p-|m|+k+1)] / prod m_j! P_k(T_1..T_k) c^m z^{||m||}
/// with T_i = (-1)^i sum_j m_j alpha_j^i. alpha[j-1] = alpha_j, j = 1..N.
/// P is Rational or Poly (symbolic exponent).
template <class P>
Series psi_phi_expand(std::span<const Rational> alpha, long k, const P& p, int N) {
    if (k < 0) {
        throw std::invalid_argument("psi_phi_expand: negative power of psi");
    }
    if (static_cast<int>(alpha.size()) < N) {
        throw std::invalid_argument("psi_phi_expand: need alpha_j for j = 1..N");
    }
    Series s(0, N, "z");
    if (k == 0) {
        s.set(0, Poly(1));
    }
    const Rational kfact = factorial(k);
    for (int w = 1; w <= N; ++w) {
        Poly coeff;
        for_each_multi_index(w, [&](const MultiIndex& m) {
            const long m0 = m.stats().m0;
            if (m0 < k) {
                return;
            }
            std::vector<Rational> t;
            for (long i = 1; i <= k; ++i) {
                Rational ti = 0;
                for (const auto& part : m.parts()) {
                    ti += power(alpha[part.index - 1], i) * part.mult;
                }
                t.push_back(i % 2 == 0 ? ti : Rational(-ti));
            }
            const Rational pk = waring_P<Rational>(k, t);
            if (pk == 0) {
                return;
            }
            const Rational scalar = kfact * pk / m.factorial_product();
            coeff += Poly(falling_factorial<P>(p, m0 - k)) * Poly::monomial(m.monomial(), scalar);
        });
        s.set(w, std::move(coeff));
    }
    return s;
}

template <class P>
Series psi_phi_expand(const std::vector<Rational>& alpha, long k, const P& p, int N) {
    return psi_phi_expand<P>(std::span<const Rational>(alpha), k, p, N);
}

/// H((theta(z) - theta(u)) / (z - u)) for H(1 + xi) = sum_i A_i xi^i and
/// theta(z) = z + c_1 z^2 + c_2 z^3 + ..., up to total degree N in (z, u):
///   sum_m A_{|m|} |m|! c^m / prod m_j! sum_{p+q=||m||} P_p(N~_1..N~_p) z^p u^q
/// where N~ = N(mu) with mu_j = m_{j-1} for j >= 2.
inline BiSeries divided_difference_expand(std::span<const Poly> A, int N) {
    BiSeries s(N, "z", "u");
    if (!A.empty()) {
        s.add(0, 0, A[0]);
    }
    for (int w = 1; w <= N; ++w) {
        for_each_multi_index(w, [&](const MultiIndex& m) {
            const long m0 = m.stats().m0;
            if (m0 >= static_cast<long>(A.size()) || A[m0].is_zero()) {
                return;
            }
            const Poly coeff = A[m0] * Poly::monomial(m.monomial(), factorial(m0) / m.factorial_product());
            std::map<std::uint32_t, Rational> mu;
            for (const auto& part : m.parts()) {
                mu[part.index + 1] = part.mult;
            }
            const auto ntilde = cyclotomic_Ns<Rational>(w, mu);
            for (int p = 0; p <= w; ++p) {
                const Rational pp = waring_P<Rational>(p, ntilde);
                if (pp != 0) {
                    s.add(p, w - p, coeff * pp);
                }
            }
        });
    }
    return s;
}

} // namespace univ
