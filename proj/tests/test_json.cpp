#include "generators.hpp"

#include <gtest/gtest.h>

using namespace univ;

TEST(Json, PolyRoundTrip) {
    univ::testing::Gen gen(41);
    for (int i = 0; i < 20; ++i) {
        const Poly p = gen.poly(5, 4, 3);
        EXPECT_EQ(poly_from_json(to_json(p)), p);
        EXPECT_EQ(poly_from_json(Json::parse(to_json(p).dump())), p);
    }
}

TEST(Json, PolyLayout) {
    const Json j = to_json(c_var(2) * Rational(3));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["coeff"], "3");
    EXPECT_EQ(j[0]["exps"][0][0], "c2");
    EXPECT_EQ(j[0]["exps"][0][1], 1);
    EXPECT_THROW(poly_from_json(Json::object()), std::invalid_argument);
}

TEST(Json, SeriesRoundTrip) {
    const Series s = expand_a(make_rational(1, 2), 5);
    const Json j = to_json(s);
    EXPECT_EQ(j["trunc"], 5);
    EXPECT_EQ(series_from_json(j), s);
}

TEST(Json, OperatorRoundTrip) {
    for (int n = -2; n <= 2; ++n) {
        const DiffOp op = build_hat(n, 6);
        EXPECT_EQ(diffop_from_json(to_json(op)), op) << "n = " << n;
    }
}

TEST(Json, GrunskyRoundTrip) {
    const GrunskyTable t = grunsky_table(6);
    EXPECT_EQ(grunsky_from_json(to_json(t)), t);
}
