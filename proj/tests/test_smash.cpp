#include <gtest/gtest.h>

#include "mspring/extalg.hpp"
#include "mspring/smash.hpp"
#include "oracles.hpp"

using namespace mspring;

TEST(Smash, TwistedProductExamples)
{
    auto x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    auto s1 = transposition(2, 0);
    auto a = SmashElement::term(x1, s1);
    EXPECT_EQ(a * a, SmashElement::poly(x1 * x2));
    EXPECT_EQ(SmashElement::one(2) * a, a);
    EXPECT_EQ(a * SmashElement::one(2), a);
    EXPECT_EQ(SmashElement::poly(x1) * SmashElement::poly(x2), SmashElement::poly(x1 * x2));
    EXPECT_THROW(SmashElement::one(2) * SmashElement::one(3), std::invalid_argument);
}

TEST(Smash, Associativity)
{
    auto x = [](int k) { return Poly::variable(3, k); };
    auto p = SmashElement::term(x(0) * x(0) + x(2), transposition(3, 0));
    auto q = SmashElement::term(x(1), transposition(3, 1)) + SmashElement::poly(x(0));
    auto r = SmashElement::term(x(2) - x(1), compose(transposition(3, 0), transposition(3, 1)));
    EXPECT_EQ((p * q) * r, p * (q * r));
}

TEST(Smash, CenterMatchesPartitions)
{
    for (int n = 1; n <= 3; ++n) {
        auto dims = smash_center_dims(n, 6);
        ASSERT_EQ(dims.size(), 7u);
        for (int k = 0; k <= 6; ++k)
            EXPECT_EQ(dims[static_cast<std::size_t>(k)], oracle::partitions(k, n)) << "n=" << n << " deg=" << k;
    }
    EXPECT_EQ(smash_center_dims(2, 6), (std::vector<int>{1, 1, 2, 2, 3, 3, 4}));
    EXPECT_EQ(smash_center_dims(3, 6), (std::vector<int>{1, 1, 2, 3, 4, 5, 7}));
}

TEST(Smash, SliceDimsMatchSpringerSeries)
{
    for (int n = 1; n <= 3; ++n) {
        auto s = springer_smash_gdim(n, 8);
        for (int k = 0; k <= 4; ++k)
            EXPECT_EQ(smash_slice_dim(n, k), s[2 * k]) << n << " " << k;
    }
}

TEST(Smash, GroupAlgebraInverse)
{
    auto s1 = SmashElement::group(transposition(2, 0));
    auto one = SmashElement::one(2);
    auto inv = group_algebra_inverse(one + s1.scaled(Rational(1, 2)));
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv * (one + s1.scaled(Rational(1, 2))), one);
    EXPECT_FALSE(group_algebra_inverse(one + s1));
}

TEST(Smash, PermutationHelpers)
{
    EXPECT_EQ(perm_length(Perm{2, 1, 0}), 3);
    EXPECT_EQ(all_perms(3).size(), 6u);
    EXPECT_EQ(perm_str(transposition(2, 0)), "[2,1]");
    auto w = Perm{1, 2, 0};
    EXPECT_EQ(compose(w, inverse_perm(w)), identity_perm(3));
}
