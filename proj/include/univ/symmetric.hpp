#pragma once

// Homogeneous symmetric polynomials in x_1..x_v, stored in the monomial
// symmetric basis: one coefficient per partition lambda with at most v
// parts, the coefficient of x_1^{lambda_1} x_2^{lambda_2} ....
//
// A product coefficient at lambda sums A[sort(s)] B[sort(lambda - s)] over
// all exponent vectors 0 <= s <= lambda, so products stay cheap in many
// variables. A form with no variable count is a scalar.

#include "poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace univ {

class SymmetricForm {
public:
    using Partition = std::vector<std::uint32_t>; ///< nonincreasing, no zero parts

    SymmetricForm() = default;
    SymmetricForm(long value) : SymmetricForm(Rational(value)) {}
    SymmetricForm(int value) : SymmetricForm(Rational(value)) {}
    SymmetricForm(const Rational& value) {
        if (value != 0) {
            coeffs_[{}] = value;
        }
    }

    /// Reads a Poly in x_1..x_vars; throws unless it is symmetric and homogeneous.
    static SymmetricForm from_poly(const Poly& p, int vars) {
        SymmetricForm f;
        f.vars_ = vars;
        std::map<Partition, Rational> seen;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            std::vector<std::uint32_t> e(static_cast<std::size_t>(vars), 0);
            for (const auto& factor : m.factors()) {
                const auto idx = factor.var.index();
                if (factor.var.family() != Family::x || idx < 1 || static_cast<int>(idx) > vars) {
                    throw std::invalid_argument("SymmetricForm: variable outside x_1..x_" + std::to_string(vars));
                }
                e[idx - 1] = factor.exp;
            }
            const long d = m.degree(Family::x);
            if (!first && d != f.degree_) {
                throw std::invalid_argument("SymmetricForm: polynomial is not homogeneous");
            }
            first = false;
            f.degree_ = d;
            const Partition lambda = sorted(e);
            auto [it, inserted] = seen.emplace(lambda, c);
            if (!inserted && it->second != c) {
                throw std::invalid_argument("SymmetricForm: polynomial is not symmetric");
            }
        }
        std::size_t expected = 0;
        for (const auto& [lambda, c] : seen) {
            expected += orbit_size(lambda, vars);
        }
        if (expected != p.terms().size()) {
            throw std::invalid_argument("SymmetricForm: polynomial is not symmetric");
        }
        f.coeffs_ = std::move(seen);
        return f;
    }

    int vars() const { return vars_; }
    long degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of the monomial symmetric function m_lambda.
    Rational coeff(const Partition& lambda) const {
        auto it = coeffs_.find(lambda);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    friend SymmetricForm operator+(const SymmetricForm& a, const SymmetricForm& b) { return combine(a, b, 1); }
    friend SymmetricForm operator-(const SymmetricForm& a, const SymmetricForm& b) { return combine(a, b, -1); }
    friend SymmetricForm operator-(const SymmetricForm& a) { return combine(SymmetricForm(), a, -1); }

    friend SymmetricForm operator*(const SymmetricForm& a, const SymmetricForm& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        const int vars = joint_vars(a, b);
        SymmetricForm r;
        r.vars_ = vars;
        r.degree_ = a.degree_ + b.degree_;
        if (vars == 0) {
            r.coeffs_[{}] = a.coeff({}) * b.coeff({});
            return r;
        }
        for_each_partition(r.degree_, vars, [&](const Partition& lambda) {
            Rational total = 0;
            std::vector<std::uint32_t> s(lambda.size(), 0);
            split(lambda, s, 0, a.degree_, [&] {
                std::vector<std::uint32_t> t(lambda.size());
                for (std::size_t i = 0; i < lambda.size(); ++i) {
                    t[i] = lambda[i] - s[i];
                }
                auto ia = a.coeffs_.find(sorted(s));
                if (ia == a.coeffs_.end()) {
                    return;
                }
                auto ib = b.coeffs_.find(sorted(t));
                if (ib == b.coeffs_.end()) {
                    return;
                }
                total += ia->second * ib->second;
            });
            if (total != 0) {
                r.coeffs_[lambda] = total;
            }
        });
        return r;
    }

    friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) {
        if (a.is_zero() || b.is_zero()) {
            return a.is_zero() && b.is_zero();
        }
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_ &&
               (a.vars_ == b.vars_ || a.vars_ == 0 || b.vars_ == 0);
    }

    /// Full expansion in x_1..x_vars.
    Poly to_poly() const {
        std::vector<Poly::Term> terms;
        for (const auto& [lambda, c] : coeffs_) {
            std::vector<std::uint32_t> e(lambda);
            e.resize(static_cast<std::size_t>(std::max<int>(vars_, static_cast<int>(lambda.size()))), 0);
            std::sort(e.begin(), e.end());
            do {
                std::vector<Monomial::Factor> factors;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] != 0) {
                        factors.push_back({Var(Family::x, static_cast<std::uint32_t>(i + 1)), e[i]});
                    }
                }
                terms.push_back({Monomial::from_factors(std::move(factors)), c});
            } while (std::next_permutation(e.begin(), e.end()));
        }
        return Poly::from_terms(std::move(terms));
    }

    std::string to_string() const {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [lambda, c] : coeffs_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + univ::to_string(c) + ")*m[";
            for (std::size_t i = 0; i < lambda.size(); ++i) {
                out += (i ? "," : "") + std::to_string(lambda[i]);
            }
            out += "]";
        }
        return out;
    }

private:
    static Partition sorted(std::vector<std::uint32_t> e) {
        std::sort(e.begin(), e.end(), std::greater<>());
        while (!e.empty() && e.back() == 0) {
            e.pop_back();
        }
        return e;
    }

    /// Number of distinct exponent vectors in x_1..x_vars that sort to lambda.
    static std::size_t orbit_size(const Partition& lambda, int vars) {
        std::vector<std::uint32_t> e(lambda);
        e.resize(static_cast<std::size_t>(vars), 0);
        std::map<std::uint32_t, long> mult;
        for (auto v : e) {
            ++mult[v];
        }
        Rational n = factorial(vars);
        for (const auto& [v, k] : mult) {
            n /= factorial(k);
        }
        return n.get_num().get_ui();
    }

    static int joint_vars(const SymmetricForm& a, const SymmetricForm& b) {
        if (a.vars_ != 0 && b.vars_ != 0 && a.vars_ != b.vars_) {
            throw std::invalid_argument("SymmetricForm: variable counts differ");
        }
        return std::max(a.vars_, b.vars_);
    }

    template <class Fn>
    static void for_each_partition(long weight, int max_parts, Fn&& fn) {
        Partition current;
        std::function<void(long, std::uint32_t)> rec = [&](long remaining, std::uint32_t largest) {
            if (remaining == 0) {
                fn(current);
                return;
            }
            if (static_cast<int>(current.size()) == max_parts) {
                return;
            }
            for (std::uint32_t part = std::min<long>(largest, remaining); part >= 1; --part) {
                current.push_back(part);
                rec(remaining - part, part);
                current.pop_back();
            }
        };
        rec(weight, static_cast<std::uint32_t>(weight));
    }

    /// Every s with 0 <= s_i <= lambda_i and sum s = target, starting at slot i.
    template <class Fn>
    static void split(const Partition& lambda, std::vector<std::uint32_t>& s, std::size_t i, long target, Fn&& fn) {
        if (i == lambda.size()) {
            if (target == 0) {
                fn();
            }
            return;
        }
        const long top = std::min<long>(lambda[i], target);
        for (long v = 0; v <= top; ++v) {
            s[i] = static_cast<std::uint32_t>(v);
            split(lambda, s, i + 1, target - v, fn);
        }
        s[i] = 0;
    }

    static SymmetricForm combine(const SymmetricForm& a, const SymmetricForm& b, int sign) {
        if (b.is_zero()) {
            return a;
        }
        SymmetricForm r = a;
        if (a.is_zero()) {
            r.degree_ = b.degree_;
        } else if (a.degree_ != b.degree_) {
            throw std::invalid_argument("SymmetricForm: adding forms of different degree");
        }
        r.vars_ = joint_vars(a, b);
        for (const auto& [lambda, c] : b.coeffs_) {
            Rational& slot = r.coeffs_[lambda];
            slot += sign > 0 ? c : Rational(-c);
            if (slot == 0) {
                r.coeffs_.erase(lambda);
            }
        }
        return r;
    }

    int vars_ = 0;
    long degree_ = 0;
    std::map<Partition, Rational> coeffs_;
};

} // namespace univ
