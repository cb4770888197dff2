#pragma once

// Exact rational scalars backed by GMP.
//
// Every value produced by arithmetic on mpq_class is already canonical
// (lowest terms, positive denominator). The only way to build a
// non-canonical value is from an explicit numerator/denominator pair, so
// all such construction goes through make_rational().

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace univ {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r{num, den};
    r.canonicalize();
    return r;
}

/// Parses "num" or "num/den" with optional leading sign.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    auto to_integer = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') {
            s.remove_prefix(1);
        }
        return Integer(std::string(s), 10);
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_int(num)) {
        throw bad();
    }
    if (slash == std::string_view::npos) {
        return Rational(to_integer(num));
    }
    std::string_view den = text.substr(slash + 1);
    if (!valid_int(den) || den.front() == '-' || den.front() == '+') {
        throw bad();
    }
    Integer d = to_integer(den);
    if (d == 0) {
        throw bad();
    }
    return make_rational(to_integer(num), d);
}

/// "num/den", denominator omitted when it is 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial of negative integer");
    }
    Integer r = 1;
    for (long i = 2; i <= n; ++i) {
        r *= i;
    }
    return Rational(r);
}

inline Rational power(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) {
            throw std::domain_error("zero to a negative power");
        }
        return power(Rational(1) / base, -e);
    }
    Rational r = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1) {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    return r;
}

/// x(x-1)...(x-count+1); empty product is 1.
template <class R>
R falling_factorial(const R& x, long count) {
    R r(1);
    for (long i = 0; i < count; ++i) {
        r = r * (x - R(i));
    }
    return r;
}

/// (x+from)(x+from+1)...(x+to); empty when to < from.
template <class R>
R shifted_product(const R& x, long from, long to) {
    R r(1);
    for (long i = from; i <= to; ++i) {
        r = r * (x + R(i));
    }
    return r;
}

} // namespace univ
