#pragma once

// Truncated Laurent series in one formal variable, and sparse truncated
// power series in two variables, with polynomial coefficients.
//
// A Series knows every coefficient with exponent <= trunc(); exponents below
// low() are exactly zero. Binary operations record the tightest truncation
// that the inputs justify, so a result never claims a coefficient it cannot
// know.

#include "poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace univ {

class Series {
public:
    Series() : Series(0, 0) {}

    /// Zero series with coefficients stored for low..trunc.
    Series(int low, int trunc, std::string var = "z") : low_(std::min(low, trunc)), trunc_(trunc), var_(std::move(var)) {
        coeffs_.resize(static_cast<std::size_t>(trunc_ - low_ + 1));
    }

    static Series from_coeffs(int low, std::vector<Poly> coeffs, int trunc, std::string var = "z") {
        Series s(low, trunc, std::move(var));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const int n = low + static_cast<int>(i);
            if (n > trunc) {
                break;
            }
            s.set(n, std::move(coeffs[i]));
        }
        return s;
    }

    /// coeff * var^n, known up to trunc.
    static Series monomial(Poly coeff, int n, int trunc, std::string var = "z") {
        Series s(std::min(n, trunc), trunc, std::move(var));
        if (n <= trunc) {
            s.set(n, std::move(coeff));
        }
        return s;
    }

    static Series constant(Poly value, int trunc, std::string var = "z") {
        return monomial(std::move(value), 0, trunc, std::move(var));
    }

    int low() const { return low_; }
    int trunc() const { return trunc_; }
    const std::string& var() const { return var_; }

    /// Exact coefficient of var^n. Throws past the truncation order.
    const Poly& coeff(int n) const {
        if (n > trunc_) {
            throw std::out_of_range("coefficient beyond truncation: " + std::to_string(n) + " > " +
                                    std::to_string(trunc_));
        }
        if (n < low_) {
            return zero();
        }
        return coeffs_[static_cast<std::size_t>(n - low_)];
    }
    const Poly& operator[](int n) const { return coeff(n); }

    void set(int n, Poly value) {
        if (n > trunc_) {
            throw std::out_of_range("coefficient beyond truncation: " + std::to_string(n));
        }
        if (n < low_) {
            if (value.is_zero()) {
                return;
            }
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - n), Poly{});
            low_ = n;
        }
        coeffs_[static_cast<std::size_t>(n - low_)] = std::move(value);
    }

    /// First exponent with a nonzero coefficient, trunc()+1 when none is known.
    int valuation() const {
        for (int n = low_; n <= trunc_; ++n) {
            if (!coeff(n).is_zero()) {
                return n;
            }
        }
        return trunc_ + 1;
    }

    bool is_zero() const { return valuation() > trunc_; }

    /// Same series known only up to t (t <= trunc()).
    Series truncated(int t) const {
        if (t > trunc_) {
            throw std::out_of_range("cannot raise truncation order");
        }
        Series s(low_, t, var_);
        for (int n = s.low_; n <= t; ++n) {
            s.set(n, coeff(n));
        }
        return s;
    }

    /// Multiplication by var^k.
    Series shifted(int k) const {
        Series s(low_ + k, trunc_ + k, var_);
        for (int n = low_; n <= trunc_; ++n) {
            s.set(n + k, coeff(n));
        }
        return s;
    }

    Series renamed(std::string var) const {
        Series s = *this;
        s.var_ = std::move(var);
        return s;
    }

    template <class Fn>
    Series map(Fn&& fn) const {
        Series s(low_, trunc_, var_);
        for (int n = low_; n <= trunc_; ++n) {
            s.set(n, fn(coeff(n)));
        }
        return s;
    }

    /// Equal truncation order and equal coefficients.
    friend bool operator==(const Series& l, const Series& r) {
        if (l.trunc_ != r.trunc_) {
            return false;
        }
        for (int n = std::min(l.low_, r.low_); n <= l.trunc_; ++n) {
            if (!(l.coeff(n) == r.coeff(n))) {
                return false;
            }
        }
        return true;
    }

    friend Series operator+(const Series& l, const Series& r) { return combine(l, r, false); }
    friend Series operator-(const Series& l, const Series& r) { return combine(l, r, true); }
    friend Series operator-(const Series& s) {
        return s.map([](const Poly& p) { return -p; });
    }
    friend Series operator*(const Poly& k, const Series& s) {
        return s.map([&](const Poly& p) { return k * p; });
    }
    friend Series operator*(const Series& s, const Poly& k) { return k * s; }

    friend Series operator*(const Series& l, const Series& r) {
        const int vl = l.valuation();
        const int vr = r.valuation();
        const int t = std::min(l.trunc_ + vr, r.trunc_ + vl);
        Series s(l.low_ + r.low_, t, l.var_);
        std::vector<Poly> acc(static_cast<std::size_t>(std::max(0, t - s.low_ + 1)));
        for (int i = vl; i <= l.trunc_; ++i) {
            const Poly& a = l.coeff(i);
            if (a.is_zero()) {
                continue;
            }
            for (int j = vr; j <= r.trunc_ && i + j <= t; ++j) {
                const Poly& b = r.coeff(j);
                if (b.is_zero()) {
                    continue;
                }
                acc[static_cast<std::size_t>(i + j - s.low_)] += a * b;
            }
        }
        for (int n = s.low_; n <= t; ++n) {
            s.set(n, std::move(acc[static_cast<std::size_t>(n - s.low_)]));
        }
        return s;
    }

    std::string to_string() const {
        std::string out;
        for (int n = low_; n <= trunc_; ++n) {
            const Poly& c = coeff(n);
            if (c.is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c.to_string() + ")";
            if (n != 0) {
                out += "*" + var_;
                if (n != 1) {
                    out += "^" + std::to_string(n);
                }
            }
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "O(" + var_ + "^" + std::to_string(trunc_ + 1) + ")";
        return out;
    }

private:
    static const Poly& zero() {
        static const Poly z;
        return z;
    }

    static Series combine(const Series& l, const Series& r, bool subtract) {
        const int t = std::min(l.trunc_, r.trunc_);
        Series s(std::min(l.low_, r.low_), t, l.var_);
        for (int n = s.low_; n <= t; ++n) {
            s.set(n, subtract ? l.coeff(n) - r.coeff(n) : l.coeff(n) + r.coeff(n));
        }
        return s;
    }

    int low_;
    int trunc_;
    std::string var_;
    std::vector<Poly> coeffs_;
};

/// The formal variable itself, known to order trunc.
inline Series series_variable(int trunc, std::string var = "z") { return Series::monomial(1, 1, trunc, std::move(var)); }

inline Series derivative(const Series& a) {
    Series s(a.low() - 1, a.trunc() - 1, a.var());
    for (int n = a.low(); n <= a.trunc(); ++n) {
        if (n != 0) {
            s.set(n - 1, a.coeff(n) * Rational(n));
        }
    }
    return s;
}

namespace detail {

inline Rational unit_leading(const Series& a, int v) {
    if (v > a.trunc()) {
        throw std::domain_error("leading coefficient not a unit: series is zero to its truncation order");
    }
    auto lead = a.coeff(v).as_constant();
    if (!lead || *lead == 0) {
        throw std::domain_error("leading coefficient not a unit: " + a.coeff(v).to_string());
    }
    return *lead;
}

inline void require_no_negative_powers(const Series& a, const char* what) {
    for (int n = a.low(); n < 0 && n <= a.trunc(); ++n) {
        if (!a.coeff(n).is_zero()) {
            throw std::domain_error(std::string(what) + " requires a power series, found a term of order " +
                                    std::to_string(n));
        }
    }
}

} // namespace detail

inline Series reciprocal(const Series& a) {
    const int v = a.valuation();
    const Rational lead = detail::unit_leading(a, v);
    const Rational inv = 1 / lead;
    const int rel = a.trunc() - v;
    std::vector<Poly> w(static_cast<std::size_t>(rel + 1));
    w[0] = Poly(inv);
    for (int n = 1; n <= rel; ++n) {
        Poly acc;
        for (int i = 1; i <= n; ++i) {
            const Poly& u = a.coeff(v + i);
            if (!u.is_zero() && !w[n - i].is_zero()) {
                acc += u * w[n - i];
            }
        }
        w[n] = -(acc * inv);
    }
    return Series::from_coeffs(-v, std::move(w), -v + rel, a.var());
}

inline Series series_exp(const Series& a) {
    detail::require_no_negative_powers(a, "exp");
    if (a.trunc() < 0) {
        throw std::domain_error("exp of a series with unknown constant term");
    }
    if (!a.coeff(0).is_zero()) {
        throw std::domain_error("exp requires zero constant term, found " + a.coeff(0).to_string());
    }
    const int t = a.trunc();
    std::vector<Poly> e(static_cast<std::size_t>(t + 1));
    e[0] = Poly(1);
    for (int n = 1; n <= t; ++n) {
        Poly acc;
        for (int k = 1; k <= n; ++k) {
            const Poly& ak = a.coeff(k);
            if (!ak.is_zero() && !e[n - k].is_zero()) {
                acc += (ak * e[n - k]) * Rational(k);
            }
        }
        e[n] = acc * make_rational(1, n);
    }
    return Series::from_coeffs(0, std::move(e), t, a.var());
}

inline Series series_log(const Series& a) {
    detail::require_no_negative_powers(a, "log");
    if (a.trunc() < 0 || !(a.coeff(0) == Poly(1))) {
        throw std::domain_error("log requires constant term 1, found " +
                                (a.trunc() < 0 ? std::string("unknown") : a.coeff(0).to_string()));
    }
    const int t = a.trunc();
    std::vector<Poly> l(static_cast<std::size_t>(t + 1));
    for (int n = 1; n <= t; ++n) {
        Poly acc;
        for (int k = 1; k < n; ++k) {
            const Poly& ank = a.coeff(n - k);
            if (!ank.is_zero() && !l[k].is_zero()) {
                acc += (l[k] * ank) * Rational(k);
            }
        }
        l[n] = a.coeff(n) - acc * make_rational(1, n);
    }
    return Series::from_coeffs(0, std::move(l), t, a.var());
}

/// a^e for a series with constant term exactly 1 and a symbolic exponent.
inline Series series_pow(const Series& a, const Poly& e) {
    return series_exp(e * series_log(a));
}

/// a^e for rational e. The leading term var^v must give an integral v*e.
inline Series series_pow(const Series& a, const Rational& e) {
    const int v = a.valuation();
    const Rational lead = detail::unit_leading(a, v);
    const Rational shift = e * v;
    if (!is_integer(shift)) {
        throw std::domain_error("non-integral leading exponent");
    }
    Rational scale;
    if (is_integer(e)) {
        scale = power(lead, e.get_num().get_si());
    } else if (lead == 1) {
        scale = 1;
    } else {
        throw std::domain_error("fractional power of a leading coefficient other than 1");
    }
    const int rel = a.trunc() - v;
    Series unit(0, rel, a.var());
    const Rational inv = 1 / lead;
    for (int i = 0; i <= rel; ++i) {
        unit.set(i, a.coeff(v + i) * inv);
    }
    Series r = series_exp(Poly(e) * series_log(unit));
    return (Poly(scale) * r).shifted(static_cast<int>(shift.get_num().get_si()));
}

inline Series series_pow(const Series& a, long e) { return series_pow(a, Rational(e)); }

/// outer(inner(var)); the result is in inner's variable.
inline Series compose(const Series& outer, const Series& inner) {
    detail::require_no_negative_powers(outer, "composition outer");
    for (int n = inner.low(); n <= std::min(0, inner.trunc()); ++n) {
        if (!inner.coeff(n).is_zero()) {
            throw std::domain_error("composition requires order >= 1");
        }
    }
    const int l = std::max(1, inner.valuation());
    bool nonconstant = false;
    for (int i = 1; i <= outer.trunc(); ++i) {
        nonconstant = nonconstant || !outer.coeff(i).is_zero();
    }
    int t = (outer.trunc() + 1) * l - 1;
    if (nonconstant) {
        t = std::min(t, inner.trunc());
    }
    Series result(0, t, inner.var());
    if (outer.trunc() >= 0) {
        result.set(0, outer.coeff(0));
    }
    Series power = Series::constant(1, t, inner.var());
    for (int i = 1; i <= outer.trunc() && i * l <= t; ++i) {
        power = (power * inner).truncated(t);
        const Poly& oi = outer.coeff(i);
        if (!oi.is_zero()) {
            result = result + oi * power;
        }
    }
    return result;
}

/// Compositional inverse of a = var + O(var^2), by Newton iteration.
inline Series reverse(const Series& a) {
    for (int n = a.low(); n <= std::min(0, a.trunc()); ++n) {
        if (!a.coeff(n).is_zero()) {
            throw std::domain_error("reverse requires a series var + O(var^2)");
        }
    }
    if (a.trunc() < 1 || !(a.coeff(1) == Poly(1))) {
        throw std::domain_error("reverse requires leading coefficient 1 at order 1");
    }
    const int t = a.trunc();
    const Series z = series_variable(t, a.var());
    const Series da = derivative(a);
    Series r = z;
    for (int precision = 1; precision < t; precision *= 2) {
        Series residual = compose(a, r) - z;
        Series correction = residual * reciprocal(compose(da, r));
        r = r - correction.truncated(std::min(t, correction.trunc()));
        r = r.truncated(t);
    }
    return r;
}

/// Sparse truncated series in two variables: coefficient of var1^p var2^q
/// known for p + q <= max_total(); p, q >= 0.
class BiSeries {
public:
    using Key = std::pair<int, int>;

    explicit BiSeries(int max_total, std::string var1 = "z", std::string var2 = "u")
        : max_total_(max_total), var1_(std::move(var1)), var2_(std::move(var2)) {}

    static BiSeries constant(Poly value, int max_total, std::string var1 = "z", std::string var2 = "u") {
        BiSeries s(max_total, std::move(var1), std::move(var2));
        s.add(0, 0, value);
        return s;
    }

    int max_total() const { return max_total_; }
    const std::map<Key, Poly>& coeffs() const { return coeffs_; }
    const std::string& var1() const { return var1_; }
    const std::string& var2() const { return var2_; }

    /// Adds value at (p, q); contributions beyond the truncation are dropped.
    void add(int p, int q, const Poly& value) {
        if (p < 0 || q < 0) {
            throw std::out_of_range("negative exponent in bivariate series");
        }
        if (p + q > max_total_ || value.is_zero()) {
            return;
        }
        auto it = coeffs_.find({p, q});
        if (it == coeffs_.end()) {
            coeffs_.emplace(Key{p, q}, value);
            return;
        }
        it->second += value;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }

    const Poly& coeff(int p, int q) const {
        if (p + q > max_total_) {
            throw std::out_of_range("coefficient beyond truncation");
        }
        static const Poly zero;
        auto it = coeffs_.find({p, q});
        return it == coeffs_.end() ? zero : it->second;
    }

    /// Smallest total degree of a stored term, max_total()+1 for zero.
    int valuation() const {
        int v = max_total_ + 1;
        for (const auto& [k, _] : coeffs_) {
            v = std::min(v, k.first + k.second);
        }
        return v;
    }

    BiSeries truncated(int t) const {
        BiSeries s(std::min(t, max_total_), var1_, var2_);
        for (const auto& [k, v] : coeffs_) {
            s.add(k.first, k.second, v);
        }
        return s;
    }

    BiSeries swapped() const {
        BiSeries s(max_total_, var2_, var1_);
        for (const auto& [k, v] : coeffs_) {
            s.add(k.second, k.first, v);
        }
        return s;
    }

    /// var1 d/dvar1 (which == 1) or var2 d/dvar2 (which == 2).
    BiSeries euler(int which) const {
        BiSeries s(max_total_, var1_, var2_);
        for (const auto& [k, v] : coeffs_) {
            s.add(k.first, k.second, v * Rational(which == 1 ? k.first : k.second));
        }
        return s;
    }

    friend bool operator==(const BiSeries& l, const BiSeries& r) {
        return l.max_total_ == r.max_total_ && l.coeffs_ == r.coeffs_;
    }

    friend BiSeries operator+(const BiSeries& l, const BiSeries& r) { return combine(l, r, false); }
    friend BiSeries operator-(const BiSeries& l, const BiSeries& r) { return combine(l, r, true); }
    friend BiSeries operator*(const Poly& k, const BiSeries& s) {
        BiSeries out(s.max_total_, s.var1_, s.var2_);
        for (const auto& [key, v] : s.coeffs_) {
            out.add(key.first, key.second, k * v);
        }
        return out;
    }

    friend BiSeries operator*(const BiSeries& l, const BiSeries& r) {
        const int t = std::min(l.max_total_ + r.valuation(), r.max_total_ + l.valuation());
        BiSeries s(t, l.var1_, l.var2_);
        for (const auto& [a, x] : l.coeffs_) {
            for (const auto& [b, y] : r.coeffs_) {
                if (a.first + a.second + b.first + b.second <= t) {
                    s.add(a.first + b.first, a.second + b.second, x * y);
                }
            }
        }
        return s;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& [k, v] : coeffs_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + v.to_string() + ")";
            if (k.first > 0) {
                out += "*" + var1_ + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            }
            if (k.second > 0) {
                out += "*" + var2_ + (k.second > 1 ? "^" + std::to_string(k.second) : "");
            }
        }
        return (out.empty() ? "" : out + " + ") + "O(deg " + std::to_string(max_total_ + 1) + ")";
    }

private:
    static BiSeries combine(const BiSeries& l, const BiSeries& r, bool subtract) {
        BiSeries s(std::min(l.max_total_, r.max_total_), l.var1_, l.var2_);
        for (const auto& [k, v] : l.coeffs_) {
            s.add(k.first, k.second, v);
        }
        for (const auto& [k, v] : r.coeffs_) {
            s.add(k.first, k.second, subtract ? -v : v);
        }
        return s;
    }

    std::map<Key, Poly> coeffs_;
    int max_total_;
    std::string var1_;
    std::string var2_;
};

/// F(x, y) / (x - y) for F divisible by x - y (F(x, x) == 0), computed degree
/// by degree; the quotient is known one total degree less than F.
inline BiSeries divide_by_difference(const BiSeries& f) {
    BiSeries q(f.max_total() - 1, f.var1(), f.var2());
    for (int d = 1; d <= f.max_total(); ++d) {
        // Synthetic division in var1 of the degree-d part: Q_{p-1} = F_p + var2 Q_p.
        Poly carry;
        for (int p = d; p >= 1; --p) {
            carry = f.coeff(p, d - p) + carry;
            q.add(p - 1, d - p, carry);
        }
        if (!(f.coeff(0, d) + carry == Poly{})) {
            throw std::domain_error("divide_by_difference: input not divisible by the variable difference");
        }
    }
    if (!f.coeff(0, 0).is_zero()) {
        throw std::domain_error("divide_by_difference: input not divisible by the variable difference");
    }
    return q;
}

/// outer(inner) where inner has no constant term.
inline BiSeries compose(const Series& outer, const BiSeries& inner) {
    detail::require_no_negative_powers(outer, "composition outer");
    if (!inner.coeff(0, 0).is_zero()) {
        throw std::domain_error("composition requires order >= 1");
    }
    const int l = inner.valuation();
    int t = (outer.trunc() + 1) * l - 1;
    bool nonconstant = false;
    for (int i = 1; i <= outer.trunc(); ++i) {
        nonconstant = nonconstant || !outer.coeff(i).is_zero();
    }
    if (nonconstant) {
        t = std::min(t, inner.max_total());
    }
    BiSeries result(t, inner.var1(), inner.var2());
    if (outer.trunc() >= 0) {
        result.add(0, 0, outer.coeff(0));
    }
    BiSeries power = BiSeries::constant(1, t, inner.var1(), inner.var2());
    for (int i = 1; i <= outer.trunc() && i * l <= t; ++i) {
        power = (power * inner).truncated(t);
        if (!outer.coeff(i).is_zero()) {
            result = result + outer.coeff(i) * power;
        }
    }
    return result;
}

/// log of a bivariate series with constant term exactly 1.
inline BiSeries bi_log(const BiSeries& a) {
    if (!(a.coeff(0, 0) == Poly(1))) {
        throw std::domain_error("log requires constant term 1, found " + a.coeff(0, 0).to_string());
    }
    const int t = a.max_total();
    Series log1p(0, t, "xi");
    for (int i = 1; i <= t; ++i) {
        log1p.set(i, Poly(make_rational(i % 2 == 1 ? 1 : -1, i)));
    }
    return compose(log1p, a - BiSeries::constant(1, t, a.var1(), a.var2()));
}

} // namespace univ
