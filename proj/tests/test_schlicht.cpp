#include "generators.hpp"

#include <gtest/gtest.h>

using namespace univ;

namespace {

Poly c(std::uint32_t j) { return c_var(j); }
Poly b(std::uint32_t j) { return b_var(j); }
Poly pv() { return symbol(Family::p); }
Poly h() { return symbol(Family::h); }
Poly cc() { return symbol(Family::cc); }

} // namespace

TEST(Coefficients, AForSmallIndices) {
    EXPECT_EQ(coeff_a<Poly>(MultiIndex{}, pv()), Poly(1));
    EXPECT_EQ(coeff_a<Poly>(MultiIndex{{1, 1}}, pv()), Poly(2) - pv());
    EXPECT_EQ(coeff_a<Poly>(MultiIndex{{3, 1}}, pv()), Poly(6) - pv());
    EXPECT_EQ(coeff_a<Rational>(MultiIndex{{1, 1}}, Rational(-1)), Rational(3));
}

TEST(Coefficients, BForSmallIndices) {
    EXPECT_EQ(coeff_b<Poly>(MultiIndex{}, pv()), Poly(0));
    EXPECT_EQ(coeff_b<Poly>(MultiIndex{{1, 1}}, pv()), Poly(2));
    EXPECT_EQ(coeff_b<Poly>(MultiIndex{{2, 1}}, pv()), Poly(6));
    EXPECT_EQ(coeff_b<Poly>(MultiIndex{{1, 2}}, pv()), Poly(-4) * pv());
}

TEST(Coefficients, DForSmallIndices) {
    EXPECT_EQ(coeff_d(MultiIndex{}), Rational(0));
    EXPECT_EQ(coeff_d(MultiIndex{{1, 1}}), Rational(0));
}

TEST(Coefficients, BAgreesWithDirectExpansion) {
    const Series closed = expand_b(pv(), 4);
    EXPECT_EQ(closed, oracle::expand_b(pv(), 4));
    EXPECT_EQ(closed.coeff(2).coefficient_of(cv(1), 2), coeff_b<Poly>(MultiIndex{{1, 2}}, pv()) * make_rational(1, 2));
}

TEST(Expansions, KnownLowOrders) {
    EXPECT_EQ(expand_b(Rational(0), 3), Series::from_coeffs(0, {0, Poly(2) * c(1), Poly(6) * c(2), Poly(12) * c(3)}, 3));
    const Series s = schwarzian(3);
    EXPECT_EQ(s.coeff(2), Poly(12) * c(2) - Poly(12) * c(1) * c(1));
    EXPECT_EQ(s.coeff(3), Poly(48) * c(3) - Poly(96) * c(1) * c(2) + Poly(48) * c(1).pow(3));
    EXPECT_TRUE(s.coeff(0).is_zero());
    EXPECT_TRUE(s.coeff(1).is_zero());
}

TEST(Expansions, PoleParameterIsFinite) {
    const Series a = expand_a(Rational(-1), 5);
    EXPECT_EQ(a, oracle::expand_a(Rational(-1), 5));
    EXPECT_EQ(a.coeff(1), Poly(3) * c(1));
}

TEST(Expansions, AgreeWithOracleForSymbolicAndRationalP) {
    for (const Rational& p : {Rational(0), Rational(2), make_rational(-3, 2), make_rational(7, 5)}) {
        EXPECT_EQ(expand_a(p, 6), oracle::expand_a(p, 6)) << to_string(p);
        EXPECT_EQ(expand_b(p, 6), oracle::expand_b(p, 6)) << to_string(p);
    }
    EXPECT_EQ(expand_a(pv(), 5), oracle::expand_a(pv(), 5));
    EXPECT_EQ(schwarzian(7), oracle::schwarzian(7).truncated(7));
}

TEST(Expansions, SchwarzianOfMoebiusMapVanishes) {
    EXPECT_TRUE(moebius_kernel(8).pass);
}

TEST(QSeries, LowOrders) {
    const Series q = q_series(2);
    EXPECT_EQ(q.coeff(0), h());
    EXPECT_EQ(q.coeff(1), Poly(2) * h() * c(1));
    EXPECT_EQ(q.coeff(2), cc() * c(2) * make_rational(1, 2) + Poly(4) * h() * c(2) -
                              cc() * c(1) * c(1) * make_rational(1, 2) - h() * c(1) * c(1));
}

TEST(Grunsky, LowEntries) {
    EXPECT_EQ(grunsky(1, 1), b(2));
    EXPECT_EQ(grunsky(1, 2), b(3));
    EXPECT_EQ(grunsky(2, 1), Poly(2) * b(3));
    EXPECT_EQ(grunsky(2, 2), Poly(2) * b(4) + b(2) * b(2));
    EXPECT_THROW(grunsky(0, 1), std::invalid_argument);
}

TEST(Grunsky, TableMatchesOracleAndSymmetry) {
    const GrunskyTable t = grunsky_table(9);
    EXPECT_EQ(t, grunsky_oracle(9));
    for (const auto& [key, value] : t.entries) {
        const auto [n, k] = key;
        EXPECT_EQ(value * make_rational(1, n), t.at(k, n) * make_rational(1, k));
        EXPECT_FALSE(value.contains(bv(1)));
    }
    EXPECT_THROW(t.at(5, 5), std::out_of_range);
}

TEST(Grunsky, AgreesWithFaberConstruction) {
    EXPECT_EQ(grunsky_from_faber(8), grunsky_table(8));
}
