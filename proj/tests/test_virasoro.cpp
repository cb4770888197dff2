#include "generators.hpp"

#include <gtest/gtest.h>

using namespace univ;

namespace {

Poly c(std::uint32_t j) { return c_var(j); }
Poly h() { return symbol(Family::h); }
Poly cc() { return symbol(Family::cc); }

} // namespace

TEST(Operators, RaisingOnLowComponents) {
    const DiffOp L1 = build_L(1, 6);
    EXPECT_EQ(L1.apply(c(1)), Poly(1));
    EXPECT_EQ(L1.apply(c(2)), Poly(2) * c(1));
    EXPECT_EQ(L1.apply(c(3)), Poly(3) * c(2));
    const DiffOp L2 = build_L(2, 6);
    EXPECT_TRUE(L2.apply(c(1)).is_zero());
    EXPECT_EQ(L2.apply(c(2)), Poly(1));
}

TEST(Operators, GradingByZeroMode) {
    const DiffOp L0 = build_L(0, 6);
    EXPECT_EQ(L0.apply(c(3)), Poly(3) * c(3));
    EXPECT_EQ(L0.apply(c(1) * c(2)), Poly(3) * c(1) * c(2));
    EXPECT_EQ(build_hat(0, 6).apply(Poly(1)), h());
}

TEST(Operators, HorizonIsEnforced) {
    const DiffOp L1 = build_L(1, 3);
    EXPECT_THROW(L1.apply(c(4)), std::out_of_range);
    EXPECT_THROW(L1.deriv(4), std::out_of_range);
    EXPECT_THROW(L1.restricted(5), std::out_of_range);
}

TEST(Operators, Homogeneous) {
    for (int n = -4; n <= 4; ++n) {
        EXPECT_TRUE(build_L(n, 8).homogeneous()) << "n = " << n;
    }
}

TEST(Operators, LoweringFormsAgree) {
    for (int k = 1; k <= 4; ++k) {
        const DiffOp s = build_L_minus(k, 7, LMinusForm::series);
        EXPECT_EQ(s, build_L_minus(k, 7, LMinusForm::derivative)) << "k = " << k;
        EXPECT_EQ(s, build_L_minus_oracle(k, 7)) << "k = " << k;
    }
    EXPECT_EQ(build_L_minus(1, 6).deriv(1), Poly(3) * c(2) - Poly(2) * c(1) * c(1));
}

TEST(Commutators, StandardStructureConstants) {
    const DiffOp bracket = commutator(build_L(1, 8), build_L(2, 8));
    EXPECT_EQ(bracket.restricted(5), (Poly(-1) * build_L(3, 8)).restricted(5));
    for (int n = -3; n <= 3; ++n) {
        for (int m = -3; m <= 3; ++m) {
            const VirasoroCheck r = verify_virasoro(n, m, 8, RelationForm::standard);
            EXPECT_TRUE(r.pass) << "[" << n << "," << m << "] " << (r.mismatches.empty() ? "" : r.mismatches[0]);
        }
    }
}

TEST(Commutators, CentralTerm) {
    EXPECT_EQ(verify_virasoro(2, -2, 8, RelationForm::standard).central, cc() * make_rational(1, 2));
    EXPECT_EQ(verify_virasoro(3, -3, 8, RelationForm::standard).central, Poly(2) * cc());
    EXPECT_TRUE(verify_virasoro(1, -1, 8, RelationForm::standard).central.is_zero());
}

TEST(Commutators, ReversedStructureConstantsFail) {
    EXPECT_FALSE(verify_virasoro(1, 2, 8, RelationForm::circle_fields).pass);
    EXPECT_FALSE(verify_virasoro(3, -1, 8, RelationForm::circle_fields).pass);
    EXPECT_TRUE(verify_virasoro(2, 2, 8, RelationForm::circle_fields).pass);
}

TEST(Commutators, ShiftedBracketWithLowering) {
    const VirasoroCheck r = verify_virasoro(3, -1, 10, RelationForm::standard);
    EXPECT_TRUE(r.pass);
    const DiffOp A = build_hat(3, 11);
    const DiffOp B = build_hat(-1, 13);
    EXPECT_EQ(commutator(A, B).restricted(10), (Poly(4) * build_hat(2, 10)));
}

TEST(Commutators, ZeroModeGradesLowering) {
    for (int k = 1; k <= 3; ++k) {
        const DiffOp bracket = commutator(build_hat(0, 8 + k), build_hat(-k, 8)).restricted(8);
        EXPECT_EQ(bracket, (Poly(k) * build_hat(-k, 8))) << "k = " << k;
    }
}
