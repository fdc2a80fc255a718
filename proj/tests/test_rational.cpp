#include <gtest/gtest.h>

#include <climits>
#include <random>
#include <sstream>
#include <unordered_set>

#include "pbias/rational.hpp"

using pbias::Rational;

TEST(Rational, CanonicalForm) {
    Rational a(6, -4);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(a.numerator(), "-3");
    EXPECT_EQ(a.denominator(), "2");
    EXPECT_EQ(Rational(0, -7).str(), "0");
    EXPECT_EQ(Rational(0, -7), Rational());
    EXPECT_TRUE(Rational(10, 5).is_integer());
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("-12"), Rational(-12));
    EXPECT_EQ(Rational::parse("0.01"), Rational(1, 100));
    EXPECT_EQ(Rational::parse("1001.99"), Rational(100199, 100));
    for (const char* bad : {"", "x", "4/-6", "1/0", "1//2", "1.2.3", "3/"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, Arithmetic) {
    Rational a(3, 4), b(-5, 6);
    EXPECT_EQ(a + b, Rational(-1, 12));
    EXPECT_EQ(a - b, Rational(19, 12));
    EXPECT_EQ(a * b, Rational(-5, 8));
    EXPECT_EQ(a / b, Rational(-9, 10));
    EXPECT_EQ(-a, Rational(-3, 4));
    EXPECT_EQ(Rational::pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(Rational::pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(Rational::pow(Rational(5), 0), Rational(1));
    EXPECT_EQ(Rational::abs(b), Rational(5, 6));
    EXPECT_THROW(a / Rational(), std::domain_error);
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
    EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
    EXPECT_GT(Rational(INT64_MAX), Rational(INT64_MAX - 1));
}

TEST(Rational, OverflowPromotesToGmp) {
    Rational big(INT64_MAX);
    Rational sum = big + big;
    EXPECT_FALSE(sum.is_small());
    EXPECT_EQ(sum.str(), "18446744073709551614");
    EXPECT_EQ(sum - big, big);
    EXPECT_TRUE((sum - big).is_small());
    Rational m(INT64_MIN);
    EXPECT_FALSE(m.is_small());
    EXPECT_EQ(m.str(), "-9223372036854775808");
    EXPECT_EQ(m + Rational(1), Rational(INT64_MIN + 1));
    Rational tiny(1, INT64_MAX);
    Rational sq = tiny * tiny;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq * Rational(INT64_MAX) * Rational(INT64_MAX), Rational(1));
    EXPECT_LT(sq, tiny);
    EXPECT_LT(Rational(), sq);
}

TEST(Rational, MatchesGmpOnRandomOperands) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> wide(-(1LL << 40), 1LL << 40), den(1, 1LL << 40);
    for (int i = 0; i < 5000; ++i) {
        Rational a(wide(rng), den(rng)), b(wide(rng), den(rng));
        mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        ASSERT_EQ((a + b).to_mpq(), qa + qb);
        ASSERT_EQ((a - b).to_mpq(), qa - qb);
        ASSERT_EQ((a * b).to_mpq(), qa * qb);
        if (!b.is_zero()) ASSERT_EQ((a / b).to_mpq(), qa / qb);
        ASSERT_EQ(a < b, qa < qb);
        ASSERT_EQ(Rational::from_mpq(qa * qb), a * b);
    }
}

TEST(Rational, HashAndStream) {
    std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(INT64_MAX) * Rational(3)};
    EXPECT_EQ(set.size(), 2u);
    std::ostringstream out;
    out << Rational(-7, 3);
    EXPECT_EQ(out.str(), "-7/3");
    EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}
