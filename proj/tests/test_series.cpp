#include <gtest/gtest.h>

#include "mspring/series.hpp"
#include "oracles.hpp"

using namespace mspring;

namespace {

HalfLaurentSeries one_minus_u2() { return HalfLaurentSeries::polynomial({{0, 1}, {2, -1}}); }

} // namespace

TEST(Series, GeometricInverse)
{
    auto g = one_minus_u2().inverse();
    for (int e = 0; e <= default_truncation; ++e)
        EXPECT_EQ(g[e], e % 2 == 0 ? 1 : 0) << e;
    EXPECT_TRUE((one_minus_u2() * g).agrees_with(HalfLaurentSeries::one()));
}

TEST(Series, LaurentMonomials)
{
    auto a = HalfLaurentSeries::monomial(-2);
    auto b = HalfLaurentSeries::monomial(2);
    EXPECT_TRUE((a * b).agrees_with(HalfLaurentSeries::one()));
    EXPECT_EQ(a.min_exp(), -2);
}

TEST(Series, InverseOfNonUnitThrows)
{
    EXPECT_THROW(HalfLaurentSeries::polynomial({{0, 2}, {1, 1}}).inverse(), std::domain_error);
    EXPECT_THROW(HalfLaurentSeries().inverse(), std::domain_error);
}

TEST(Series, BglExamples)
{
    EXPECT_TRUE(bgl(0).agrees_with(HalfLaurentSeries::one()));
    auto b1 = bgl(1);
    for (int e = 0; e <= 24; e += 2)
        EXPECT_EQ(b1[e], 1);
    auto b2 = bgl(2);
    std::vector<int> expect{1, 0, 1, 0, 2, 0, 2, 0, 3};
    for (int e = 0; e <= 8; ++e)
        EXPECT_EQ(b2[e], expect[static_cast<std::size_t>(e)]);
}

TEST(Series, BglMatchesPartitionOracle)
{
    for (int m = 0; m <= 4; ++m) {
        auto b = bgl(m, 24);
        for (int k = 0; k <= 12; ++k)
            EXPECT_EQ(b[2 * k], oracle::partitions(k, m)) << "m=" << m << " k=" << k;
    }
}

TEST(Series, QSubstitutionDoublesExponents)
{
    auto s = HalfLaurentSeries::from_q({{-1, 3}, {2, 5}});
    EXPECT_EQ(s[-2], 3);
    EXPECT_EQ(s[4], 5);
    EXPECT_EQ(s[2], 0);
}

TEST(Series, TruncationPropagates)
{
    auto a = HalfLaurentSeries::monomial(-4, 1, 10);
    auto b = one_minus_u2().inverse();
    auto c = a * b;
    // a is known through u^10 and b starts at u^0, b is exact through u^24 and a starts at u^-4
    EXPECT_EQ(c.trunc(), 10);
    EXPECT_THROW(c[11], std::out_of_range);
    EXPECT_EQ(c[10], 1);
    EXPECT_EQ(c[-4], 1);
    auto d = HalfLaurentSeries::monomial(-4, 1, 30) * b;
    EXPECT_EQ(d.trunc(), 20);
}

TEST(Series, ShiftAndAgreement)
{
    auto s = bgl(2).shifted(3);
    EXPECT_EQ(s[3], 1);
    EXPECT_EQ(s[7], 2);
    int first = 0;
    auto t = s + HalfLaurentSeries::monomial(9);
    EXPECT_FALSE(s.agrees_with(t, &first));
    EXPECT_EQ(first, 9);
}

TEST(Series, Rendering)
{
    EXPECT_EQ(HalfLaurentSeries::polynomial({{-1, 2}, {3, -1}}, 4).str(), "2*u^-1 - u^3 + O(u^5)");
}
