#include "generators.hpp"

#include <gtest/gtest.h>

using namespace univ;

namespace {

Poly c(std::uint32_t j) { return c_var(j); }
Poly pv() { return symbol(Family::p); }

std::vector<Rational> rationals(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace

TEST(ProductPowers, SingleFactor) {
    const auto alpha = rationals({2});
    const std::vector<Poly> mu{Poly(3)};
    const Series s = product_powers_expand(alpha, mu, 4);
    EXPECT_EQ(s, Series::from_coeffs(0, {1, 6, 12, 8, 0}, 4, "s"));
}

TEST(ProductPowers, SymbolicExponent) {
    const auto alpha = rationals({1, -1});
    const std::vector<Poly> mu{symbol(Family::mu, 1), symbol(Family::mu, 2)};
    const Series closed = product_powers_expand(alpha, mu, 5);
    EXPECT_EQ(closed, oracle::product_powers(alpha, mu, 5));
    EXPECT_EQ(closed.coeff(1), symbol(Family::mu, 1) - symbol(Family::mu, 2));
}

TEST(ProductPowers, TerminatesAtTotalDegree) {
    const auto alpha = rationals({1, 3, -2});
    const std::vector<Poly> mu{Poly(1), Poly(2), Poly(1)};
    const Series s = product_powers_expand(alpha, mu, 8);
    for (int k = 5; k <= 8; ++k) {
        EXPECT_TRUE(s.coeff(k).is_zero()) << "k = " << k;
    }
    EXPECT_EQ(s, oracle::product_powers(alpha, mu, 8));
}

TEST(Cyclotomic, SmallRatios) {
    EXPECT_EQ(cyclotomic_ratio_expand({{2, Poly(1)}}, 4), Series::from_coeffs(0, {1, 1}, 4, "t"));
    EXPECT_EQ(cyclotomic_ratio_expand({{3, Poly(1)}}, 4), Series::from_coeffs(0, {1, 1, 1}, 4, "t"));
    const std::map<std::uint32_t, Poly> mu{{2, symbol(Family::mu, 2)}, {3, Poly(-1)}, {5, Poly(2)}};
    EXPECT_EQ(cyclotomic_ratio_expand(mu, 8), oracle::cyclotomic_ratio(mu, 8));
}

TEST(Cyclotomic, NValues) {
    const std::map<std::uint32_t, Rational> mu{{2, Rational(1)}, {3, Rational(2)}};
    EXPECT_EQ(cyclotomic_N<Rational>(1, mu), Rational(-3));
    EXPECT_EQ(cyclotomic_N<Rational>(2, mu), Rational(-1));
    EXPECT_EQ(cyclotomic_N<Rational>(3, mu), Rational(3));
    EXPECT_EQ(cyclotomic_N<Rational>(6, mu), Rational(5));
}

TEST(Composition, MatchesSeriesComposition) {
    const std::vector<Poly> A{Poly(1), symbol(Family::a, 1), symbol(Family::a, 2), Poly(make_rational(1, 3))};
    EXPECT_EQ(compose_expand(A, 6), oracle::compose_theta(A, 6));
    const Series s = compose_expand(A, 3);
    EXPECT_EQ(s.coeff(0), Poly(1));
    EXPECT_EQ(s.coeff(1), symbol(Family::a, 1) * c(1));
}

TEST(PsiPhi, KnownCoefficient) {
    const std::vector<Rational> alpha(6, Rational(1));
    const Series s = psi_phi_expand(alpha, 0, pv(), 3);
    EXPECT_EQ(s.coeff(3).coefficient_of(cv(1), 1).coefficient_of(cv(2), 1), pv() * (pv() - Poly(1)));
    EXPECT_EQ(s.coeff(1), pv() * c(1));
}

TEST(PsiPhi, AgreesWithOracle) {
    const std::vector<Rational> alpha{Rational(1), Rational(-2), make_rational(1, 2), Rational(3), Rational(0),
                                      Rational(5), Rational(1)};
    for (long k = 0; k <= 3; ++k) {
        EXPECT_EQ(psi_phi_expand(alpha, k, pv(), 6), oracle::psi_phi(std::span<const Rational>(alpha), k, pv(), 6).truncated(6))
            << "k = " << k;
        EXPECT_EQ(psi_phi_expand(alpha, k, make_rational(-3, 2), 6),
                  oracle::psi_phi(std::span<const Rational>(alpha), k, make_rational(-3, 2), 6).truncated(6))
            << "k = " << k;
    }
}

TEST(DividedDifference, SymmetricAndMatchesOracle) {
    const std::vector<Poly> A{Poly(1), Poly(2), Poly(make_rational(-1, 2)), symbol(Family::a, 3)};
    const BiSeries closed = divided_difference_expand(A, 5);
    EXPECT_EQ(closed, closed.swapped());
    EXPECT_EQ(closed, oracle::divided_difference(A, 5));
}

TEST(Lemmas, SuiteAcrossOrders) {
    for (int N = 1; N <= 6; ++N) {
        SuiteOptions opt;
        opt.order = N;
        opt.seed = 7 + static_cast<std::uint64_t>(N);
        opt.draws = 4;
        const SuiteReport r = lemmas_suite(opt);
        const Check* bad = r.first_failure();
        EXPECT_EQ(bad, nullptr) << (bad ? bad->name + ": " + bad->closed + " vs " + bad->oracle : "");
    }
}
