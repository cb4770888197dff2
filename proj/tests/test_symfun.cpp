#include "generators.hpp"

#include <gtest/gtest.h>

using namespace univ;

namespace {

Poly a(std::uint32_t j) { return symbol(Family::a, j); }
Poly b(std::uint32_t j) { return b_var(j); }
Poly x(std::uint32_t j) { return symbol(Family::x, j); }

} // namespace

TEST(Waring, LowOrders) {
    const auto as = symbols(Family::a, 4);
    EXPECT_EQ(waring_P<Poly>(0, as), Poly(1));
    EXPECT_EQ(waring_P<Poly>(1, as), -a(1));
    EXPECT_EQ(waring_P<Poly>(2, as), (a(1) * a(1) - a(2)) * make_rational(1, 2));
    EXPECT_EQ(waring_P<Poly>(3, as),
              (-a(1).pow(3) + Poly(3) * a(1) * a(2) - Poly(2) * a(3)) * make_rational(1, 6));
    EXPECT_THROW(waring_P<Poly>(-1, as), std::invalid_argument);
}

TEST(Waring, GeneratingFunction) {
    const int n = 15;
    const auto as = symbols(Family::a, n);
    const auto expected = oracle::waring_generating(as, n);
    for (int k = 0; k <= n; ++k) {
        EXPECT_EQ(waring_P<Poly>(k, as), expected[static_cast<std::size_t>(k)]) << "k = " << k;
    }
}

TEST(Waring, NewtonSumsGiveSignedElementary) {
    for (int vars = 1; vars <= 5; ++vars) {
        const auto xs = symbols(Family::x, vars);
        for (long n = 1; n <= 6; ++n) {
            std::vector<Poly> sums;
            for (long k = 1; k <= n; ++k) {
                sums.push_back(newton_sum(k, xs));
            }
            const Poly e = elementary_symmetric(n, xs);
            EXPECT_EQ(waring_P<Poly>(n, sums), n % 2 == 0 ? e : -e) << vars << " vars, n = " << n;
        }
    }
}

TEST(Waring, ElementaryVanishesPastVariableCount) {
    const std::vector<Poly> xs{x(1), x(2)};
    EXPECT_TRUE(elementary_symmetric(4, xs).is_zero());
    std::vector<Poly> sums;
    for (long k = 1; k <= 4; ++k) {
        sums.push_back(newton_sum(k, xs));
    }
    EXPECT_TRUE(waring_P<Poly>(4, sums).is_zero());
    EXPECT_TRUE(waring_P<Poly>(3, sums).is_zero());
}

TEST(Faber, LowOrders) {
    const auto bs = symbols(Family::b, 4);
    EXPECT_EQ(faber_Q<Poly>(1, bs), -b(1));
    EXPECT_EQ(faber_Q<Poly>(2, bs), b(1) * b(1) - Poly(2) * b(2));
    EXPECT_EQ(faber_Q<Poly>(3, bs), -b(1).pow(3) + Poly(3) * b(1) * b(2) - Poly(3) * b(3));
    EXPECT_THROW(faber_Q<Poly>(0, bs), std::invalid_argument);
}

TEST(Faber, GeneratingFunction) {
    const int n = 15;
    const auto bs = symbols(Family::b, n);
    const auto expected = oracle::faber_generating(bs, n);
    for (int k = 1; k <= n; ++k) {
        EXPECT_EQ(faber_Q<Poly>(k, bs), expected[static_cast<std::size_t>(k)]) << "k = " << k;
    }
}

TEST(Faber, OneVariablePolynomials) {
    const auto bs = symbols(Family::b, 3);
    const auto phi1 = faber_Phi(1, std::span<const Poly>(bs).first(1));
    ASSERT_EQ(phi1.size(), 2u);
    EXPECT_EQ(phi1[0], -b(1));
    EXPECT_EQ(phi1[1], Poly(1));
    const auto phi2 = faber_Phi(2, std::span<const Poly>(bs).first(2));
    ASSERT_EQ(phi2.size(), 3u);
    EXPECT_EQ(phi2[0], b(1) * b(1) - Poly(2) * b(2));
    EXPECT_EQ(phi2[1], Poly(-2) * b(1));
    EXPECT_EQ(phi2[2], Poly(1));
}

TEST(Faber, PolynomialPartOfPowerOfInverse) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_TRUE(faber_condition(n, 10).pass) << "n = " << n;
    }
}

TEST(SymFun, TheoremAndInverses) {
    for (int n = 1; n <= 8; ++n) {
        const auto [w1, w2] = waring_theorem(n);
        EXPECT_TRUE(w1.pass) << w1.name;
        EXPECT_TRUE(w2.pass) << w2.name;
        const auto [i1, i2] = inverse_map(n);
        EXPECT_TRUE(i1.pass) << i1.name;
        EXPECT_TRUE(i2.pass) << i2.name;
    }
}

TEST(SymmetricForm, RoundTripAndProduct) {
    const std::vector<Poly> xs = symbols(Family::x, 3);
    const Poly p1 = newton_sum(1, xs);
    const Poly e2 = elementary_symmetric(2, xs);
    const SymmetricForm f = SymmetricForm::from_poly(p1, 3);
    const SymmetricForm g = SymmetricForm::from_poly(e2, 3);
    EXPECT_EQ(f.to_poly(), p1);
    EXPECT_EQ((f * g).to_poly(), p1 * e2);
    const SymmetricForm f2 = SymmetricForm::from_poly(p1 * p1, 3);
    EXPECT_EQ((f2 - g + g).to_poly(), p1 * p1);
    EXPECT_THROW(SymmetricForm::from_poly(x(1), 3), std::invalid_argument);
}

TEST(SymmetricForm, RandomProductsMatchPolynomials) {
    univ::testing::Gen gen(31);
    const std::vector<Poly> xs = symbols(Family::x, 4);
    for (int i = 0; i < 10; ++i) {
        Poly p;
        Poly q;
        p += Poly(gen.rational()) * newton_sum(3, xs) + Poly(gen.rational()) * newton_sum(1, xs).pow(3);
        q += Poly(gen.rational()) * elementary_symmetric(2, xs) + Poly(gen.rational()) * newton_sum(2, xs);
        const SymmetricForm fp = SymmetricForm::from_poly(p, 4);
        const SymmetricForm fq = SymmetricForm::from_poly(q, 4);
        EXPECT_EQ((fp * fq).to_poly(), p * q);
        EXPECT_EQ((fp + fp).to_poly(), Poly(2) * p);
    }
}
