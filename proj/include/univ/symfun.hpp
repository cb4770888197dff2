#pragma once

// Waring and Faber polynomials, Newton power sums and elementary symmetric
// polynomials.
//
// Both polynomial families are evaluated from their explicit sums over
// partitions mu of n (sum j*mu_j = n), never from their generating series:
//
//   P_n(a) = sum_mu (-1)^{|mu|} prod_j a_j^{mu_j} / (j^{mu_j} mu_j!)
//   Q_n(b) = n sum_mu (-1)^{|mu|} (|mu|-1)! prod_j b_j^{mu_j} / mu_j!
//
// so that agreement with exp(-sum a_j z^j / j) and -z h'(z)/h(z) is a real
// check. The ring R is Rational or Poly.

#include "poly.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace univ {

namespace detail {

template <class R>
class PowerCache {
public:
    explicit PowerCache(std::span<const R> base) : base_(base) {}

    const R& get(std::uint32_t j, std::uint32_t e) {
        auto key = std::make_pair(j, e);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        R value = e == 1 ? base_[j - 1] : R(get(j, e - 1) * base_[j - 1]);
        return cache_.emplace(key, std::move(value)).first->second;
    }

private:
    std::span<const R> base_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, R> cache_;
};

template <class R>
R partition_sum(long n, std::span<const R> inputs, const std::function<Rational(const MultiIndex&)>& weight) {
    if (static_cast<long>(inputs.size()) < n) {
        throw std::invalid_argument("need at least " + std::to_string(n) + " inputs, got " +
                                    std::to_string(inputs.size()));
    }
    PowerCache<R> powers(inputs);
    R total(0);
    for_each_multi_index(n, [&](const MultiIndex& mu) {
        const Rational w = weight(mu);
        R term(w);
        for (const auto& part : mu.parts()) {
            term = term * powers.get(part.index, part.mult);
        }
        total = total + term;
    });
    return total;
}

} // namespace detail

/// Waring polynomial P_n(a_1, ..., a_n); P_0 = 1.
template <class R>
R waring_P(long n, std::span<const R> a) {
    if (n < 0) {
        throw std::invalid_argument("waring_P: negative order");
    }
    if (n == 0) {
        return R(1);
    }
    return detail::partition_sum<R>(n, a, [](const MultiIndex& mu) {
        Rational w = mu.stats().m0 % 2 == 0 ? 1 : -1;
        for (const auto& part : mu.parts()) {
            w /= power(Rational(part.index), part.mult) * factorial(part.mult);
        }
        return w;
    });
}

template <class R>
R waring_P(long n, const std::vector<R>& a) {
    return waring_P<R>(n, std::span<const R>(a));
}

/// Faber polynomial Q_n(b_1, ..., b_n), n >= 1.
template <class R>
R faber_Q(long n, std::span<const R> b) {
    if (n <= 0) {
        throw std::invalid_argument("faber_Q is defined for n >= 1");
    }
    return detail::partition_sum<R>(n, b, [n](const MultiIndex& mu) {
        const long k = mu.stats().m0;
        Rational w = factorial(k - 1) * n;
        if (k % 2 == 1) {
            w = -w;
        }
        return Rational(w / mu.factorial_product());
    });
}

template <class R>
R faber_Q(long n, const std::vector<R>& b) {
    return faber_Q<R>(n, std::span<const R>(b));
}

/// p_k(x) = sum_i x_i^k.
inline Poly newton_sum(long k, std::span<const Poly> x) {
    Poly s;
    for (const auto& xi : x) {
        s += xi.pow(static_cast<unsigned>(k));
    }
    return s;
}

/// e_k(x); zero when k exceeds the number of variables.
inline Poly elementary_symmetric(long k, std::span<const Poly> x) {
    if (k < 0) {
        return {};
    }
    if (k > static_cast<long>(x.size())) {
        return {};
    }
    std::vector<Poly> e(static_cast<std::size_t>(k + 1));
    e[0] = Poly(1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (long j = std::min<long>(k, static_cast<long>(i) + 1); j >= 1; --j) {
            e[j] += x[i] * e[j - 1];
        }
    }
    return e[k];
}

/// Coefficients (index = power of z) of the one-variable Faber polynomial
/// Phi_n(z) = Q_n(b_1 - z, b_2, ..., b_n).
inline std::vector<Poly> faber_Phi(long n, std::span<const Poly> b) {
    if (n <= 0) {
        throw std::invalid_argument("faber_Phi is defined for n >= 1");
    }
    if (static_cast<long>(b.size()) < n) {
        throw std::invalid_argument("faber_Phi needs n coefficients");
    }
    const Var z(Family::z);
    std::vector<Poly> shifted(b.begin(), b.begin() + n);
    for (const auto& bj : shifted) {
        if (bj.contains(z)) {
            throw std::invalid_argument("faber_Phi inputs must not contain z");
        }
    }
    shifted[0] = shifted[0] - Poly::var(z);
    const Poly q = faber_Q<Poly>(n, shifted);
    std::vector<Poly> coeffs(static_cast<std::size_t>(n + 1));
    for (long e = 0; e <= n; ++e) {
        coeffs[e] = q.coefficient_of(z, static_cast<std::uint32_t>(e));
    }
    return coeffs;
}

/// Symbolic inputs v_1, ..., v_n of one family.
inline std::vector<Poly> symbols(Family f, long n) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long j = 1; j <= n; ++j) {
        out.push_back(Poly::var(Var(f, static_cast<std::uint32_t>(j))));
    }
    return out;
}

} // namespace univ
