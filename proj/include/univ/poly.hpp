#pragma once

// Sparse multivariate polynomials over the rationals.
//
// Variables come in families: the Taylor coefficients c_j of a univalent
// function, the Laurent coefficients b_j used for Grunsky coefficients, the
// Waring inputs a_j, plus ungraded symbols (h, cc, p, x_i, mu_i, ...). The
// graded families carry weight j per unit exponent of their j-th variable;
// everything else has weight 0.
//
// Terms are kept sorted in graded order: ascending weight, then
// reverse-lexicographic with the largest variable deciding first (so
// "3*c2 - 2*c1^2" renders in that order). No zero coefficient is ever
// stored, which makes equality structural.

#include "rational.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace univ {

enum class Family : std::uint8_t { h, cc, p, s, t, u, w, z, x, mu, a, b, c };

constexpr bool is_graded(Family f) { return f == Family::a || f == Family::b || f == Family::c; }

constexpr std::string_view family_name(Family f) {
    switch (f) {
    case Family::h: return "h";
    case Family::cc: return "cc";
    case Family::p: return "p";
    case Family::s: return "s";
    case Family::t: return "t";
    case Family::u: return "u";
    case Family::w: return "w";
    case Family::z: return "z";
    case Family::x: return "x";
    case Family::mu: return "mu";
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::c: return "c";
    }
    return "?";
}

/// A variable packed as (family << 24) | index. Index 0 is a bare symbol.
class Var {
public:
    static constexpr std::uint32_t max_index = (1u << 24) - 1;

    constexpr Var() = default;
    constexpr Var(Family f, std::uint32_t index = 0) : key_((static_cast<std::uint32_t>(f) << 24) | index) {
        if (index > max_index) {
            throw std::overflow_error("variable index out of range");
        }
    }

    static constexpr Var from_key(std::uint32_t key) {
        Var v;
        v.key_ = key;
        return v;
    }

    constexpr Family family() const { return static_cast<Family>(key_ >> 24); }
    constexpr std::uint32_t index() const { return key_ & max_index; }
    constexpr std::uint32_t key() const { return key_; }
    constexpr long weight() const { return is_graded(family()) ? static_cast<long>(index()) : 0; }

    std::string name() const {
        std::string s(family_name(family()));
        if (index() != 0) {
            s += std::to_string(index());
        }
        return s;
    }

    /// Inverse of name(): "c3", "b12", "h", "cc", "mu2".
    static Var parse(std::string_view text) {
        std::size_t split = text.size();
        while (split > 0 && text[split - 1] >= '0' && text[split - 1] <= '9') {
            --split;
        }
        std::string_view head = text.substr(0, split);
        std::uint32_t index = 0;
        if (split < text.size()) {
            const std::string digits(text.substr(split));
            if (digits.size() > 8) {
                throw std::invalid_argument("variable index too large: " + std::string(text));
            }
            index = static_cast<std::uint32_t>(std::stoul(digits));
        }
        for (int f = 0; f <= static_cast<int>(Family::c); ++f) {
            if (family_name(static_cast<Family>(f)) == head) {
                return Var(static_cast<Family>(f), index);
            }
        }
        throw std::invalid_argument("unknown variable: " + std::string(text));
    }

    friend constexpr bool operator==(Var, Var) = default;
    friend constexpr auto operator<=>(Var, Var) = default;

private:
    std::uint32_t key_ = 0;
};

inline Var cv(std::uint32_t j) { return Var(Family::c, j); }
inline Var bv(std::uint32_t j) { return Var(Family::b, j); }

namespace detail {

inline std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
    if (a > std::numeric_limits<std::uint32_t>::max() - b) {
        throw std::overflow_error("exponent overflow");
    }
    return a + b;
}

inline long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("weight overflow");
    }
    return r;
}

} // namespace detail

/// A power product of variables. Factors are sorted by variable key.
class Monomial {
public:
    struct Factor {
        Var var;
        std::uint32_t exp;
        friend bool operator==(const Factor&, const Factor&) = default;
    };
    using Storage = boost::container::small_vector<Factor, 6>;

    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t e = 1) {
        if (e > 0) {
            factors_.push_back({v, e});
            weight_ = v.weight() * static_cast<long>(e);
        }
    }

    /// Factors in any order; repeated variables are merged, zero exponents dropped.
    static Monomial from_factors(std::vector<Factor> fs) {
        std::sort(fs.begin(), fs.end(), [](const Factor& l, const Factor& r) { return l.var < r.var; });
        Monomial m;
        for (const auto& f : fs) {
            if (f.exp == 0) {
                continue;
            }
            if (!m.factors_.empty() && m.factors_.back().var == f.var) {
                m.factors_.back().exp = detail::checked_add(m.factors_.back().exp, f.exp);
            } else {
                m.factors_.push_back(f);
            }
        }
        m.recompute_weight();
        return m;
    }

    std::span<const Factor> factors() const { return {factors_.data(), factors_.size()}; }
    bool is_one() const { return factors_.empty(); }
    long weight() const { return weight_; }

    /// Weight restricted to one family (deg v_j = j).
    long weight(Family f) const {
        long w = 0;
        for (const auto& fa : factors_) {
            if (fa.var.family() == f) {
                w += static_cast<long>(fa.var.index()) * fa.exp;
            }
        }
        return w;
    }

    std::uint32_t exponent(Var v) const {
        for (const auto& f : factors_) {
            if (f.var == v) {
                return f.exp;
            }
        }
        return 0;
    }

    /// Total degree in one family.
    long degree(Family fam) const {
        long d = 0;
        for (const auto& f : factors_) {
            if (f.var.family() == fam) {
                d += f.exp;
            }
        }
        return d;
    }

    /// Same monomial with the exponent of v replaced.
    Monomial with_exponent(Var v, std::uint32_t e) const {
        Monomial m;
        bool placed = false;
        for (const auto& f : factors_) {
            if (!placed && v < f.var) {
                if (e > 0) {
                    m.factors_.push_back({v, e});
                }
                placed = true;
            }
            if (f.var == v) {
                if (e > 0) {
                    m.factors_.push_back({v, e});
                }
                placed = true;
                continue;
            }
            m.factors_.push_back(f);
        }
        if (!placed && e > 0) {
            m.factors_.push_back({v, e});
        }
        m.recompute_weight();
        return m;
    }

    friend Monomial operator*(const Monomial& l, const Monomial& r) {
        Monomial m;
        m.factors_.reserve(l.factors_.size() + r.factors_.size());
        auto i = l.factors_.begin();
        auto j = r.factors_.begin();
        while (i != l.factors_.end() && j != r.factors_.end()) {
            if (i->var == j->var) {
                m.factors_.push_back({i->var, detail::checked_add(i->exp, j->exp)});
                ++i;
                ++j;
            } else if (i->var < j->var) {
                m.factors_.push_back(*i++);
            } else {
                m.factors_.push_back(*j++);
            }
        }
        m.factors_.insert(m.factors_.end(), i, l.factors_.end());
        m.factors_.insert(m.factors_.end(), j, r.factors_.end());
        m.weight_ = detail::checked_add(l.weight_, r.weight_);
        return m;
    }

    friend bool operator==(const Monomial& l, const Monomial& r) { return l.factors_ == r.factors_; }

    std::string to_string() const {
        if (factors_.empty()) {
            return "1";
        }
        // Ungraded symbols first, then graded variables by ascending index.
        std::vector<Factor> order(factors_.begin(), factors_.end());
        std::stable_sort(order.begin(), order.end(), [](const Factor& l, const Factor& r) {
            const bool lg = is_graded(l.var.family());
            const bool rg = is_graded(r.var.family());
            if (lg != rg) {
                return !lg;
            }
            return l.var < r.var;
        });
        std::string s;
        for (const auto& f : order) {
            if (!s.empty()) {
                s += '*';
            }
            s += f.var.name();
            if (f.exp > 1) {
                s += '^';
                s += std::to_string(f.exp);
            }
        }
        return s;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (const auto& f : factors_) {
            h ^= (static_cast<std::size_t>(f.var.key()) << 20 ^ f.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    void recompute_weight() {
        weight_ = 0;
        for (const auto& f : factors_) {
            weight_ = detail::checked_add(weight_, f.var.weight() * static_cast<long>(f.exp));
        }
    }

    Storage factors_;
    long weight_ = 0;
};

/// Canonical term order: weight, then the largest variable decides.
struct GradedOrder {
    bool operator()(const Monomial& l, const Monomial& r) const {
        if (l.weight() != r.weight()) {
            return l.weight() < r.weight();
        }
        auto lf = l.factors();
        auto rf = r.factors();
        auto i = lf.rbegin();
        auto j = rf.rbegin();
        for (; i != lf.rend() && j != rf.rend(); ++i, ++j) {
            if (i->var != j->var) {
                return i->var > j->var;
            }
            if (i->exp != j->exp) {
                return i->exp > j->exp;
            }
        }
        return i != lf.rend() && j == rf.rend();
    }
};

class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(const Rational& c) {
        if (c != 0) {
            terms_.push_back({Monomial{}, c});
        }
    }
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}

    static Poly var(Var v, std::uint32_t e = 1) { return monomial(Monomial(v, e), 1); }

    static Poly monomial(Monomial m, const Rational& coeff) {
        Poly p;
        if (coeff != 0) {
            p.terms_.push_back({std::move(m), coeff});
        }
        return p;
    }

    /// Sorts, merges duplicates and drops zeros.
    static Poly from_terms(std::vector<Term> terms) {
        Poly p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::optional<Rational> as_constant() const {
        if (terms_.empty()) {
            return Rational(0);
        }
        if (terms_.size() == 1 && terms_.front().mono.is_one()) {
            return terms_.front().coeff;
        }
        return std::nullopt;
    }
    bool is_constant() const { return as_constant().has_value(); }

    Rational coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return GradedOrder{}(t.mono, key); });
        if (it != terms_.end() && it->mono == m) {
            return it->coeff;
        }
        return 0;
    }
    Rational constant_term() const { return coeff(Monomial{}); }

    Poly& operator+=(const Poly& o) {
        *this = merge(*this, o, false);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        *this = merge(*this, o, true);
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }
    Poly& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) {
                t.coeff *= q;
            }
        }
        return *this;
    }

    friend Poly operator+(const Poly& l, const Poly& r) { return merge(l, r, false); }
    friend Poly operator-(const Poly& l, const Poly& r) { return merge(l, r, true); }
    friend Poly operator-(Poly p) {
        for (auto& t : p.terms_) {
            t.coeff = -t.coeff;
        }
        return p;
    }
    friend Poly operator*(Poly p, const Rational& q) {
        p *= q;
        return p;
    }
    friend Poly operator*(const Rational& q, Poly p) {
        p *= q;
        return p;
    }

    friend Poly operator*(const Poly& l, const Poly& r) {
        if (l.is_zero() || r.is_zero()) {
            return {};
        }
        if (auto k = l.as_constant()) {
            return *k * r;
        }
        if (auto k = r.as_constant()) {
            return l * *k;
        }
        std::vector<Term> out;
        out.reserve(l.terms_.size() * r.terms_.size());
        for (const auto& a : l.terms_) {
            for (const auto& b : r.terms_) {
                out.push_back({a.mono * b.mono, a.coeff * b.coeff});
            }
        }
        return from_terms(std::move(out));
    }

    friend bool operator==(const Poly& l, const Poly& r) { return l.terms_ == r.terms_; }

    Poly pow(unsigned e) const {
        Poly r(1);
        Poly b = *this;
        while (e > 0) {
            if (e & 1u) {
                r *= b;
            }
            e >>= 1;
            if (e > 0) {
                b *= b;
            }
        }
        return r;
    }

    /// Formal partial derivative with respect to v.
    Poly partial(Var v) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            const auto e = t.mono.exponent(v);
            if (e == 0) {
                continue;
            }
            out.push_back({t.mono.with_exponent(v, e - 1), t.coeff * e});
        }
        return from_terms(std::move(out));
    }

    /// Drops every monomial of weight greater than n.
    Poly truncate_weight(long n) const {
        Poly p;
        for (const auto& t : terms_) {
            if (t.mono.weight() > n) {
                break;
            }
            p.terms_.push_back(t);
        }
        return p;
    }

    /// Terms of exactly weight w.
    Poly weight_part(long w) const {
        Poly p;
        for (const auto& t : terms_) {
            if (t.mono.weight() == w) {
                p.terms_.push_back(t);
            }
        }
        return p;
    }

    /// True when every term has weight w under deg v_j = j for the given family.
    bool is_homogeneous(long w, Family f) const {
        return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.weight(f) == w; });
    }
    bool is_homogeneous(long w) const {
        return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.weight() == w; });
    }

    /// Largest index of a variable of the given family appearing anywhere (0 if none).
    std::uint32_t max_index(Family f) const {
        std::uint32_t m = 0;
        for (const auto& t : terms_) {
            for (const auto& fa : t.mono.factors()) {
                if (fa.var.family() == f) {
                    m = std::max(m, fa.var.index());
                }
            }
        }
        return m;
    }

    bool contains(Var v) const {
        return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.exponent(v) > 0; });
    }

    std::uint32_t degree_in(Var v) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) {
            d = std::max(d, t.mono.exponent(v));
        }
        return d;
    }

    /// Coefficient of v^e, viewing the polynomial as univariate in v.
    Poly coefficient_of(Var v, std::uint32_t e) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.mono.exponent(v) == e) {
                out.push_back({t.mono.with_exponent(v, 0), t.coeff});
            }
        }
        return from_terms(std::move(out));
    }

    /// Simultaneous substitution of variables by polynomials.
    Poly substitute(const std::map<Var, Poly>& values) const {
        std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> powers;
        auto power_of = [&](Var v, std::uint32_t e) -> const Poly& {
            auto key = std::make_pair(v.key(), e);
            auto it = powers.find(key);
            if (it == powers.end()) {
                it = powers.emplace(key, values.at(v).pow(e)).first;
            }
            return it->second;
        };
        Poly result;
        std::vector<Term> untouched;
        for (const auto& t : terms_) {
            std::vector<Monomial::Factor> keep;
            Poly factor(t.coeff);
            for (const auto& f : t.mono.factors()) {
                if (values.count(f.var)) {
                    factor *= power_of(f.var, f.exp);
                } else {
                    keep.push_back(f);
                }
            }
            Monomial rest = Monomial::from_factors(std::move(keep));
            result += Poly::monomial(rest, 1) * factor;
        }
        return result;
    }
    Poly substitute(Var v, const Poly& value) const { return substitute(std::map<Var, Poly>{{v, value}}); }

    /// Applies fn to every coefficient (results of zero are dropped).
    Poly map_coefficients(const std::function<Rational(const Rational&)>& fn) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            out.push_back({t.mono, fn(t.coeff)});
        }
        return from_terms(std::move(out));
    }

    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            const bool negative = t.coeff < 0;
            const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
            if (first) {
                if (negative) {
                    s += '-';
                }
            } else {
                s += negative ? " - " : " + ";
            }
            first = false;
            if (t.mono.is_one()) {
                s += univ::to_string(mag);
            } else if (mag == 1) {
                s += t.mono.to_string();
            } else {
                s += univ::to_string(mag);
                s += '*';
                s += t.mono.to_string();
            }
        }
        return s;
    }

private:
    void normalize() {
        if (terms_.size() > 1) {
            std::sort(terms_.begin(), terms_.end(),
                      [](const Term& l, const Term& r) { return GradedOrder{}(l.mono, r.mono); });
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t j = i + 1;
            Rational sum = std::move(terms_[i].coeff);
            while (j < terms_.size() && terms_[j].mono == terms_[i].mono) {
                sum += terms_[j].coeff;
                ++j;
            }
            if (sum != 0) {
                if (out != i) {
                    terms_[out].mono = std::move(terms_[i].mono);
                }
                terms_[out].coeff = std::move(sum);
                ++out;
            }
            i = j;
        }
        terms_.resize(out);
    }

    static Poly merge(const Poly& l, const Poly& r, bool subtract) {
        Poly p;
        p.terms_.reserve(l.terms_.size() + r.terms_.size());
        auto i = l.terms_.begin();
        auto j = r.terms_.begin();
        GradedOrder less;
        while (i != l.terms_.end() || j != r.terms_.end()) {
            if (j == r.terms_.end() || (i != l.terms_.end() && less(i->mono, j->mono))) {
                p.terms_.push_back(*i++);
            } else if (i == l.terms_.end() || less(j->mono, i->mono)) {
                p.terms_.push_back({j->mono, subtract ? Rational(-j->coeff) : j->coeff});
                ++j;
            } else {
                Rational sum = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
                if (sum != 0) {
                    p.terms_.push_back({i->mono, std::move(sum)});
                }
                ++i;
                ++j;
            }
        }
        return p;
    }

    std::vector<Term> terms_;
};

inline Poly c_var(std::uint32_t j) { return Poly::var(cv(j)); }
inline Poly b_var(std::uint32_t j) { return Poly::var(bv(j)); }
inline Poly symbol(Family f, std::uint32_t index = 0) { return Poly::var(Var(f, index)); }

/// Exponent vector m = (m_1, m_2, ...) over one indexed family; zeros are never stored.
class MultiIndex {
public:
    struct Part {
        std::uint32_t index;
        std::uint32_t mult;
        friend bool operator==(const Part&, const Part&) = default;
    };
    struct Stats {
        long m0 = 0; ///< sum m_j
        long m1 = 0; ///< sum j m_j (the weight)
        long m2 = 0; ///< sum j^2 m_j
        friend bool operator==(const Stats&, const Stats&) = default;
    };

    MultiIndex() = default;
    MultiIndex(std::initializer_list<Part> parts) : MultiIndex(std::vector<Part>(parts)) {}
    explicit MultiIndex(std::vector<Part> parts) {
        std::sort(parts.begin(), parts.end(), [](const Part& l, const Part& r) { return l.index < r.index; });
        for (const auto& p : parts) {
            if (p.index == 0) {
                throw std::invalid_argument("multi-index positions start at 1");
            }
            if (p.mult == 0) {
                continue;
            }
            if (!parts_.empty() && parts_.back().index == p.index) {
                parts_.back().mult = detail::checked_add(parts_.back().mult, p.mult);
            } else {
                parts_.push_back(p);
            }
        }
    }

    std::span<const Part> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::uint32_t operator[](std::uint32_t j) const {
        for (const auto& p : parts_) {
            if (p.index == j) {
                return p.mult;
            }
        }
        return 0;
    }

    Stats stats() const {
        Stats s;
        for (const auto& p : parts_) {
            const long j = p.index;
            s.m0 = detail::checked_add(s.m0, static_cast<long>(p.mult));
            s.m1 = detail::checked_add(s.m1, j * p.mult);
            s.m2 = detail::checked_add(s.m2, j * j * p.mult);
        }
        return s;
    }

    /// prod_j m_j!
    Rational factorial_product() const {
        Rational r = 1;
        for (const auto& p : parts_) {
            r *= factorial(p.mult);
        }
        return r;
    }

    /// prod_j v_j^{m_j} for the given family.
    Monomial monomial(Family f = Family::c) const {
        std::vector<Monomial::Factor> fs;
        fs.reserve(parts_.size());
        for (const auto& p : parts_) {
            fs.push_back({Var(f, p.index), p.mult});
        }
        return Monomial::from_factors(std::move(fs));
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    std::string to_string() const {
        std::string s = "{";
        for (const auto& p : parts_) {
            if (s.size() > 1) {
                s += ", ";
            }
            s += "m" + std::to_string(p.index) + "=" + std::to_string(p.mult);
        }
        return s + "}";
    }

private:
    std::vector<Part> parts_;
};

inline MultiIndex::Stats index_stats(const MultiIndex& m) { return m.stats(); }

namespace detail {

template <class Fn>
void partitions_rec(long remaining, std::uint32_t max_part, std::uint32_t min_part, std::vector<MultiIndex::Part>& acc,
                    Fn& fn) {
    if (remaining == 0) {
        fn(MultiIndex(acc));
        return;
    }
    for (std::uint32_t j = std::min<long>(max_part, remaining); j >= min_part && j >= 1; --j) {
        for (std::uint32_t m = 1; static_cast<long>(m) * j <= remaining; ++m) {
            acc.push_back({j, m});
            partitions_rec(remaining - static_cast<long>(m) * j, j - 1, min_part, acc, fn);
            acc.pop_back();
        }
    }
}

} // namespace detail

/// Calls fn(MultiIndex) for every m with sum j m_j == weight and m_j == 0 for j < min_part.
template <class Fn>
void for_each_multi_index(long weight, Fn&& fn, std::uint32_t min_part = 1) {
    if (weight < 0) {
        return;
    }
    std::vector<MultiIndex::Part> acc;
    detail::partitions_rec(weight, static_cast<std::uint32_t>(weight), std::max<std::uint32_t>(min_part, 1), acc, fn);
}

inline std::vector<MultiIndex> multi_indices(long weight, std::uint32_t min_part = 1) {
    std::vector<MultiIndex> out;
    for_each_multi_index(weight, [&](const MultiIndex& m) { out.push_back(m); }, min_part);
    return out;
}

} // namespace univ
