#pragma once

// Closed forms for the universal univalent function
//
//   f(z) = z + c_1 z^2 + c_2 z^3 + ...
//
// and for Grunsky coefficients of g(z) = z + b_1 + b_2/z + b_3/z^2 + ....
//
// With M0 = |m|, M1 = ||m|| = sum j m_j, M2 = sum j^2 m_j:
//
//   z^{p+2} f'^2 / f^{p+2} = sum_m a_m(p) c^m / prod m_j! z^{M1}
//   z^{p+1} f''  / f^p     = sum_m b_m(p) c^m / prod m_j! z^{M1}
//   z^2 S_f                = sum_m d_m prod (j+1)^{m_j} c^m / prod m_j! z^{M1}
//
// The f'' expansion is normalized with z^{p+1}: it is the power of z for
// which the coefficient of c^m sits at z^{||m||}. A literal z^p places it
// one order lower.

#include "expand.hpp"
#include "poly.hpp"
#include "series.hpp"
#include "symfun.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <utility>

namespace univ {

/// f(z) = z + c_1 z^2 + ... + c_{t-1} z^t, known to order t.
inline Series universal_function(int trunc) {
    Series f(1, trunc, "z");
    f.set(1, Poly(1));
    for (int j = 1; j + 1 <= trunc; ++j) {
        f.set(j + 1, c_var(static_cast<std::uint32_t>(j)));
    }
    return f;
}

/// a_m(p) = (-1)^{M0} (p+M0-1)!/(p+1)! {p(p+1) + M1^2 - 2(p+1)M1 - M2}.
///
/// The factorial ratio is the rising product (p+2)...(p+M0-1) for M0 >= 2.
/// For M0 = 1 the brace equals (p+1)(p-2j), which cancels the 1/(p+1) and
/// leaves 2j - p; a_{empty}(p) = 1. The result is a polynomial in p.
template <class P>
P coeff_a(const MultiIndex& m, const P& p) {
    const auto s = m.stats();
    if (s.m0 == 0) {
        return P(1);
    }
    if (s.m0 == 1) {
        return P(2 * s.m1) - p;
    }
    const P brace = p * (p + P(1)) + P(s.m1 * s.m1) - P(2 * s.m1) * (p + P(1)) - P(s.m2);
    P value = shifted_product<P>(p, 2, s.m0 - 1) * brace;
    return s.m0 % 2 == 0 ? value : P(-value);
}

/// b_m(p) = (-1)^{M0+1} p(p+1)...(p+M0-2) (M1 + M2); zero for the empty index.
template <class P>
P coeff_b(const MultiIndex& m, const P& p) {
    const auto s = m.stats();
    if (s.m0 == 0) {
        return P(0);
    }
    P value = shifted_product<P>(p, 0, s.m0 - 2) * P(s.m1 + s.m2);
    return s.m0 % 2 == 1 ? value : P(-value);
}

/// d_m = (-1)^{M0} (M0-1)! (M2 - 3 M1^2 + 2 M1); zero for the empty index.
inline Rational coeff_d(const MultiIndex& m) {
    const auto s = m.stats();
    if (s.m0 == 0) {
        return 0;
    }
    Rational value = factorial(s.m0 - 1) * (s.m2 - 3 * s.m1 * s.m1 + 2 * s.m1);
    return s.m0 % 2 == 0 ? value : Rational(-value);
}

namespace detail {

template <class Fn>
Series sum_over_indices(int N, Fn&& term) {
    Series s(0, N, "z");
    for (int w = 0; w <= N; ++w) {
        Poly coeff;
        for_each_multi_index(w, [&](const MultiIndex& m) { coeff += term(m); });
        s.set(w, std::move(coeff));
    }
    return s;
}

} // namespace detail

/// z^{p+2} f'(z)^2 / f(z)^{p+2} to order N. P is Rational or Poly.
template <class P>
Series expand_a(const P& p, int N) {
    return detail::sum_over_indices(N, [&](const MultiIndex& m) {
        return Poly(coeff_a<P>(m, p)) * Poly::monomial(m.monomial(), 1 / m.factorial_product());
    });
}

/// z^{p+1} f''(z) / f(z)^p to order N.
template <class P>
Series expand_b(const P& p, int N) {
    return detail::sum_over_indices(N, [&](const MultiIndex& m) {
        return Poly(coeff_b<P>(m, p)) * Poly::monomial(m.monomial(), 1 / m.factorial_product());
    });
}

/// z^2 S_f(z), S_f = 2 f'''/f' - 3 (f''/f')^2, to order N.
inline Series schwarzian(int N) {
    return detail::sum_over_indices(N, [](const MultiIndex& m) {
        Rational scale = coeff_d(m) / m.factorial_product();
        for (const auto& part : m.parts()) {
            scale *= power(Rational(part.index + 1), part.mult);
        }
        return Poly::monomial(m.monomial(), scale);
    });
}

/// sum_n Q_n z^n = z^2 [h f'^2/f^2 + (cc/24) S_f], to order N.
inline Series q_series(int N) {
    const Poly h = symbol(Family::h);
    const Poly cc24 = symbol(Family::cc) * make_rational(1, 24);
    return h * expand_a(Rational(0), N) + cc24 * schwarzian(N);
}

/// Grunsky coefficients beta_{nk}, 1 <= n, k, n + k <= max_weight.
struct GrunskyTable {
    int max_weight = 0;
    std::map<std::pair<long, long>, Poly> entries;

    const Poly& at(long n, long k) const {
        auto it = entries.find({n, k});
        if (it == entries.end()) {
            throw std::out_of_range("Grunsky entry (" + std::to_string(n) + "," + std::to_string(k) +
                                    ") beyond weight " + std::to_string(max_weight));
        }
        return it->second;
    }

    friend bool operator==(const GrunskyTable&, const GrunskyTable&) = default;
};

/// beta_{nk} = n sum_{||m|| = n+k, m_1 = 0} b^m (|m|-1)!/prod m_j! P_{k-|m|}(L_1, ...)
/// with L = N(mu) for mu_i = m_{i+1} (i >= 2), i.e. the exponents m_3, m_4, ...
/// feed the cyclotomic product from its first factor on.
inline Poly grunsky(long n, long k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("Grunsky coefficients are indexed from 1");
    }
    Poly total;
    for_each_multi_index(
        n + k,
        [&](const MultiIndex& m) {
            const long m0 = m.stats().m0;
            if (m0 > k) {
                return;
            }
            std::map<std::uint32_t, Rational> mu;
            for (const auto& part : m.parts()) {
                if (part.index >= 3) {
                    mu[part.index - 1] = part.mult;
                }
            }
            const long order = k - m0;
            const Rational pl = waring_P<Rational>(order, cyclotomic_Ns<Rational>(order, mu));
            if (pl == 0) {
                return;
            }
            total += Poly::monomial(m.monomial(Family::b), factorial(m0 - 1) / m.factorial_product() * pl * n);
        },
        2);
    return total;
}

inline GrunskyTable grunsky_table(int max_weight) {
    GrunskyTable t{max_weight, {}};
    for (long n = 1; n < max_weight; ++n) {
        for (long k = 1; n + k <= max_weight; ++k) {
            t.entries[{n, k}] = grunsky(n, k);
        }
    }
    return t;
}

/// Grunsky coefficients from the logarithmic divided difference of
/// g(z) = z + b_1 + b_2/z + ..., expanded in x = 1/z, y = 1/zeta:
///   (g(zeta) - g(z))/(zeta - z) = 1 + x y (G(y) - G(x))/(x - y),
///   G(x) = sum_{j>=1} b_j x^{j-1},
/// and sum beta_{nk} x^k y^n = -y d/dy log(...). b[j-1] = b_j; missing
/// coefficients are zero.
inline GrunskyTable grunsky_oracle(int max_weight, std::span<const Poly> b) {
    if (max_weight < 2) {
        throw std::invalid_argument("grunsky_oracle needs max_weight >= 2");
    }
    const int N = max_weight;
    BiSeries gx(N - 1, "x", "y");
    BiSeries gy(N - 1, "x", "y");
    for (int j = 1; j <= N && j <= static_cast<int>(b.size()); ++j) {
        gx.add(j - 1, 0, b[j - 1]);
        gy.add(0, j - 1, b[j - 1]);
    }
    const BiSeries quotient = divide_by_difference(gy - gx);
    BiSeries xy(N, "x", "y");
    xy.add(1, 1, Poly(1));
    const BiSeries ratio = BiSeries::constant(1, N, "x", "y") + xy * quotient;
    const BiSeries generating = Poly(-1) * bi_log(ratio).euler(2);
    GrunskyTable t{max_weight, {}};
    for (long n = 1; n < N; ++n) {
        for (long k = 1; n + k <= N; ++k) {
            t.entries[{n, k}] = generating.coeff(static_cast<int>(k), static_cast<int>(n));
        }
    }
    return t;
}

/// The oracle for symbolic b_1, ..., b_N.
inline GrunskyTable grunsky_oracle(int max_weight) {
    const auto b = symbols(Family::b, max_weight);
    return grunsky_oracle(max_weight, b);
}

} // namespace univ
