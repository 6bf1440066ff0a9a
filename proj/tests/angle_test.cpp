#include <gtest/gtest.h>

#include "pfh/angle.hpp"
#include "support.hpp"

using namespace pfh;
using pfh::test::angle;
using pfh::test::two_fifths;

TEST(FloorMult, AboveAndBelow)
{
    EXPECT_EQ(floor_mult(two_fifths(), 3), 1);
    EXPECT_EQ(floor_mult(two_fifths(), 5), 2);
    EXPECT_EQ(floor_mult(angle(2, 5, Side::Below), 5), 1);
}

TEST(FloorMult, GuardIsEnforced)
{
    EXPECT_THROW(floor_mult(two_fifths(), 9), GuardViolation);
    EXPECT_THROW(floor_mult(two_fifths(), 0), std::exception);
}

TEST(CeilMult, Examples)
{
    EXPECT_EQ(ceil_mult(two_fifths(), 2), 1);
    EXPECT_EQ(ceil_mult(two_fifths(), 5), 3);
    EXPECT_EQ(ceil_mult(angle(1, 8), 8), 2);
}

TEST(FTheta, Examples)
{
    EXPECT_EQ(f_theta(two_fifths(), 7), Rational(3, 7));
    EXPECT_EQ(f_theta(two_fifths(), 2), Rational(1, 2));
    EXPECT_EQ(f_theta(two_fifths(), 1), Rational(1));
}

TEST(STheta, Membership)
{
    EXPECT_TRUE(in_S_theta(two_fifths(), 7));
    EXPECT_FALSE(in_S_theta(two_fifths(), 4));
    for (const auto& a : farey_representatives(6))
        EXPECT_TRUE(in_S_theta(a, 1)) << to_string(a);
}

TEST(NegateShift, Examples)
{
    EXPECT_EQ(negate(two_fifths()), angle(-2, 5, Side::Below));
    EXPECT_EQ(shift(two_fifths(), 1), angle(7, 5));
    EXPECT_EQ(floor_mult(negate(two_fifths()), 3), -2);
}

TEST(NegateShift, FloorsTransform)
{
    for (const auto& a : farey_representatives(8)) {
        for (Int k = 1; k <= 8; ++k) {
            EXPECT_EQ(floor_mult(negate(a), k), -ceil_mult(a, k));
            EXPECT_EQ(floor_mult(shift(a, -3), k), floor_mult(a, k) - 3 * k);
        }
    }
}

TEST(Farey, IntervalCounts)
{
    EXPECT_EQ(farey_intervals(1).size(), 1u);
    EXPECT_EQ(farey_intervals(8).size(), 22u);
    EXPECT_EQ(farey_intervals(10).size(), 32u);
    const auto iv = farey_intervals(8);
    EXPECT_EQ(iv.front().lo, Rational(0));
    EXPECT_EQ(iv.front().hi, Rational(1, 8));
    EXPECT_EQ(iv.back().hi, Rational(1));
    for (std::size_t i = 1; i < iv.size(); ++i)
        EXPECT_EQ(iv[i].lo, iv[i - 1].hi);
}

TEST(AngleText, RoundTrip)
{
    EXPECT_EQ(to_string(two_fifths()), "2/5+");
    EXPECT_EQ(to_string(negate(two_fifths())), "-2/5-");
    EXPECT_EQ(parse_angle("2/5+", 8), two_fifths());
    EXPECT_EQ(parse_angle("4/10-", 3), angle(2, 5, Side::Below, 3));
    EXPECT_EQ(parse_angle("0+", 2), angle(0, 1, Side::Above, 2));
    for (const char* bad : {"", "2/5", "2/0+", "a/b+", "2//5+", "+"})
        EXPECT_THROW(parse_angle(bad, 8), std::invalid_argument) << bad;
}

TEST(AngleRep, RejectsZeroGuard)
{
    EXPECT_THROW(angle(1, 2, Side::Above, 0), std::invalid_argument);
}
