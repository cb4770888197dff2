#pragma once

// Virasoro generators as first-order differential operators on
// Q[c_1, c_2, ...; h, cc].
//
// A tangent vector at f = z + c_1 z^2 + ... is a series sum_p v_p z^{p+1};
// it is the operator sum_p v_p d/dc_p. The circle field z^{n+1} d/dz gives
//
//   L_k  (k > 0) = d/dc_k + sum_{p>0} (1+p) c_p d/dc_{k+p}
//   L_0          = sum_{p>0} p c_p d/dc_p
//   L_-k (k > 0) = the residue field for v(t) = t^{1-k}, see l_minus_field().
//
// and the extended operators add multiplication by Q_k:
//   ^L_k = L_k,  ^L_0 = L_0 + h,  ^L_-k = L_-k + Q_k.
//
// An operator only stores derivation components p <= horizon(). Every
// access past the horizon throws; it never reads as zero.

#include "poly.hpp"
#include "schlicht.hpp"
#include "series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace univ {

class DiffOp {
public:
    DiffOp(int shift, int horizon) : shift_(shift), deriv_(static_cast<std::size_t>(std::max(horizon, 0))) {}

    int shift() const { return shift_; }
    int horizon() const { return static_cast<int>(deriv_.size()); }

    const Poly& deriv(int p) const {
        check(p);
        return deriv_[static_cast<std::size_t>(p - 1)];
    }
    void set_deriv(int p, Poly value) {
        check(p);
        deriv_[static_cast<std::size_t>(p - 1)] = std::move(value);
    }
    const Poly& mult() const { return mult_; }
    void set_mult(Poly value) { mult_ = std::move(value); }

    /// The derivation part applied to f, without the multiplication part.
    Poly derive(const Poly& f) const {
        const auto top = static_cast<int>(f.max_index(Family::c));
        if (top > horizon()) {
            throw std::out_of_range("component horizon exceeded: operand uses c" + std::to_string(top) +
                                    ", operator known to c" + std::to_string(horizon()));
        }
        Poly out;
        for (int p = 1; p <= top; ++p) {
            const Poly& a = deriv_[static_cast<std::size_t>(p - 1)];
            if (a.is_zero()) {
                continue;
            }
            Poly d = f.partial(cv(static_cast<std::uint32_t>(p)));
            if (!d.is_zero()) {
                out += a * d;
            }
        }
        return out;
    }

    Poly apply(const Poly& f) const { return derive(f) + mult_ * f; }

    DiffOp restricted(int horizon) const {
        if (horizon > this->horizon()) {
            throw std::out_of_range("component horizon exceeded");
        }
        DiffOp r(shift_, horizon);
        for (int p = 1; p <= horizon; ++p) {
            r.deriv_[static_cast<std::size_t>(p - 1)] = deriv_[static_cast<std::size_t>(p - 1)];
        }
        r.mult_ = mult_;
        return r;
    }

    /// Component p is c-weight homogeneous of weight p + shift, the
    /// multiplication part of weight shift (zero polynomials always pass).
    bool homogeneous() const {
        for (int p = 1; p <= horizon(); ++p) {
            if (!deriv(p).is_homogeneous(p + shift_, Family::c)) {
                return false;
            }
        }
        return mult_.is_homogeneous(shift_, Family::c);
    }

    friend bool operator==(const DiffOp&, const DiffOp&) = default;

    friend DiffOp operator*(const Poly& k, DiffOp op) {
        for (auto& d : op.deriv_) {
            d = k * d;
        }
        op.mult_ = k * op.mult_;
        return op;
    }

    /// Sum over the common horizon; shifts must agree unless one side is zero.
    friend DiffOp operator+(const DiffOp& l, const DiffOp& r) {
        DiffOp s(l.shift_, std::min(l.horizon(), r.horizon()));
        for (int p = 1; p <= s.horizon(); ++p) {
            s.set_deriv(p, l.deriv(p) + r.deriv(p));
        }
        s.mult_ = l.mult_ + r.mult_;
        return s;
    }

    std::string to_string() const {
        std::string out = "shift " + std::to_string(shift_) + ", mult: " + mult_.to_string();
        for (int p = 1; p <= horizon(); ++p) {
            if (!deriv(p).is_zero()) {
                out += "\n  d/dc" + std::to_string(p) + ": " + deriv(p).to_string();
            }
        }
        return out;
    }

private:
    void check(int p) const {
        if (p < 1 || p > horizon()) {
            throw std::out_of_range("component horizon exceeded: d/dc" + std::to_string(p) + " beyond " +
                                    std::to_string(horizon()));
        }
    }

    int shift_;
    std::vector<Poly> deriv_;
    Poly mult_;
};

/// [A, B] = AB - BA. Derivation part A(b_q) - B(a_q), multiplication part
/// A(b_0) - B(a_0). Components are produced as far as both inputs reach.
inline DiffOp commutator(const DiffOp& A, const DiffOp& B) {
    const int horizon = std::min({A.horizon() - std::max(0, B.shift()), B.horizon() - std::max(0, A.shift()),
                                  A.horizon(), B.horizon()});
    if (horizon < 1) {
        throw std::out_of_range("component horizon exceeded: operators too short for their commutator");
    }
    DiffOp out(A.shift() + B.shift(), horizon);
    for (int q = 1; q <= horizon; ++q) {
        out.set_deriv(q, A.derive(B.deriv(q)) - B.derive(A.deriv(q)));
    }
    out.set_mult(A.derive(B.mult()) - B.derive(A.mult()));
    return out;
}

/// Reads a tangent vector sum_p v_p z^{p+1} into the operator sum_p v_p d/dc_p.
inline DiffOp field_to_operator(const Series& field, int shift, int horizon) {
    DiffOp op(shift, horizon);
    for (int p = 1; p <= horizon; ++p) {
        op.set_deriv(p, field.coeff(p + 1));
    }
    return op;
}

inline DiffOp build_L_plus(int k, int horizon) {
    if (k < 1) {
        throw std::invalid_argument("build_L_plus needs k >= 1");
    }
    DiffOp op(-k, horizon);
    if (k <= horizon) {
        op.set_deriv(k, Poly(1));
    }
    for (int p = 1; k + p <= horizon; ++p) {
        op.set_deriv(k + p, c_var(static_cast<std::uint32_t>(p)) * Rational(1 + p));
    }
    return op;
}

inline DiffOp build_L_zero(int horizon) {
    DiffOp op(0, horizon);
    for (int p = 1; p <= horizon; ++p) {
        op.set_deriv(p, c_var(static_cast<std::uint32_t>(p)) * Rational(p));
    }
    return op;
}

enum class LMinusForm {
    series,     ///< sum_j sum_{||m||=j+k+1} a_m(j+1) c^m/prod m_j! f^{j+2}
    derivative, ///< z^{1-k} f' - sum_{j=0}^{k} sum_{||m||=k-j} a_m(-j) c^m/prod m_j! f^{1-j}
};

namespace detail {

inline Poly a_weight_part(long weight, const Rational& p) {
    Poly total;
    for_each_multi_index(weight, [&](const MultiIndex& m) {
        total += Poly::monomial(m.monomial(), coeff_a<Rational>(m, p) / m.factorial_product());
    });
    return total;
}

} // namespace detail

/// Tangent vector of L_-k as a series in z, known up to z^{horizon+1}.
inline Series l_minus_field(int k, int horizon, LMinusForm form) {
    if (k < 1) {
        throw std::invalid_argument("l_minus_field needs k >= 1");
    }
    const int top = horizon + 1;
    if (form == LMinusForm::series) {
        const Series f = universal_function(top);
        Series field(0, top, "z");
        // f^{j+2} starts at z^{j+2}, so j <= horizon - 1 reaches z^{horizon+1}.
        Series fpow = (f * f).truncated(top);
        for (int j = 0; j + 2 <= top; ++j) {
            field = field + detail::a_weight_part(j + k + 1, Rational(j + 1)) * fpow;
            fpow = (fpow * f).truncated(top);
        }
        return field;
    }
    const Series f = universal_function(horizon + k + 1);
    Series field = derivative(f).shifted(1 - k).truncated(top);
    for (int j = 0; j <= k; ++j) {
        const Poly coeff = detail::a_weight_part(k - j, Rational(-j));
        if (coeff.is_zero()) {
            continue;
        }
        Series term = j == 0 ? f.truncated(top) : (j == 1 ? Series::constant(1, top) : series_pow(f, 1L - j));
        field = field - coeff * term.truncated(top);
    }
    return field;
}

/// The residue computation behind L_-k without any closed-form coefficient:
/// for |z| < |t| expand 1/(f(t) - f(z)) geometrically in f(z)/f(t), so the
/// field is sum_j R_j f(z)^{j+2} with R_j = Res_t t^{1-k} f'(t)^2 f(t)^{-(j+3)}.
inline Series l_minus_field_oracle(int k, int horizon) {
    if (k < 1) {
        throw std::invalid_argument("l_minus_field_oracle needs k >= 1");
    }
    const int top = horizon + 1;
    const Series f = universal_function(horizon + k + 2);
    const Series df = derivative(f);
    const Series df2 = df * df;
    const Series ft = f.truncated(top);
    Series field(0, top, "z");
    Series fpow = (ft * ft).truncated(top);
    for (int j = 0; j + 2 <= top; ++j) {
        const Series integrand = (df2 * series_pow(f, -(3L + j))).shifted(1 - k);
        field = field + integrand.coeff(-1) * fpow;
        fpow = (fpow * ft).truncated(top);
    }
    return field;
}

inline DiffOp build_L_minus(int k, int horizon, LMinusForm form = LMinusForm::series) {
    return field_to_operator(l_minus_field(k, horizon, form), k, horizon);
}

inline DiffOp build_L_minus_oracle(int k, int horizon) {
    return field_to_operator(l_minus_field_oracle(k, horizon), k, horizon);
}

/// The unextended generator L_n.
inline DiffOp build_L(int n, int horizon, LMinusForm form = LMinusForm::series) {
    if (n > 0) {
        return build_L_plus(n, horizon);
    }
    if (n == 0) {
        return build_L_zero(horizon);
    }
    return build_L_minus(-n, horizon, form);
}

/// ^L_n: L_n for n > 0, L_0 + h, L_-k + Q_k.
inline DiffOp build_hat(int n, int horizon, LMinusForm form = LMinusForm::series) {
    DiffOp op = build_L(n, horizon, form);
    if (n <= 0) {
        op.set_mult(q_series(-n).coeff(-n));
    }
    return op;
}

/// Which structure constants to compare against.
enum class RelationForm {
    circle_fields, ///< [L_n, L_m] = (m - n) L_{n+m} + (cc/12)(n^3 - n) delta_{n+m,0}
    standard,      ///< [L_n, L_m] = (n - m) L_{n+m} + (cc/12)(n^3 - n) delta_{n+m,0}
};

struct VirasoroCheck {
    int n = 0;
    int m = 0;
    int horizon = 0;
    bool pass = false;
    Poly central;                        ///< multiplication part of [^L_n, ^L_m] beyond the L_{n+m} term
    std::vector<std::string> mismatches; ///< one line per differing component
};

/// Compares [^L_n, ^L_m] with its predicted value on components p <= horizon.
inline VirasoroCheck verify_virasoro(int n, int m, int horizon, RelationForm form = RelationForm::circle_fields,
                                     LMinusForm lform = LMinusForm::series) {
    const DiffOp A = build_hat(n, horizon + std::max(0, -m), lform);
    const DiffOp B = build_hat(m, horizon + std::max(0, -n), lform);
    const DiffOp bracket = commutator(A, B).restricted(horizon);
    const long structure = form == RelationForm::circle_fields ? m - n : n - m;
    const DiffOp rhs_op = build_hat(n + m, horizon, lform);
    DiffOp expected = Poly(structure) * rhs_op;
    const Poly central_expected = n + m == 0 ? Poly(symbol(Family::cc) * make_rational(static_cast<long>(n) * n * n - n, 12))
                                             : Poly();
    expected.set_mult(expected.mult() + central_expected);

    VirasoroCheck r;
    r.n = n;
    r.m = m;
    r.horizon = horizon;
    r.central = bracket.mult() - Poly(structure) * rhs_op.mult();
    for (int p = 1; p <= horizon; ++p) {
        if (!(bracket.deriv(p) == expected.deriv(p))) {
            r.mismatches.push_back("d/dc" + std::to_string(p) + ": bracket " + bracket.deriv(p).to_string() +
                                   " vs expected " + expected.deriv(p).to_string());
        }
    }
    if (!(bracket.mult() == expected.mult())) {
        r.mismatches.push_back("mult: bracket " + bracket.mult().to_string() + " vs expected " +
                               expected.mult().to_string());
    }
    r.pass = r.mismatches.empty();
    return r;
}

} // namespace univ
