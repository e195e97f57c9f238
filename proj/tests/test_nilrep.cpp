#include <gtest/gtest.h>

#include "mspring/nilrep.hpp"
#include "oracles.hpp"

using namespace mspring;

TEST(Nilrep, LoopCountsArePartitionNumbers)
{
    auto loop = Quiver::cyclic(1);
    for (int d = 0; d <= 8; ++d)
        EXPECT_EQ(static_cast<long>(enumerate_nilreps(loop, DimVector({d})).size()), oracle::partitions(d)) << "d=" << d;
}

TEST(Nilrep, EnumerationExamples)
{
    auto c2 = enumerate_nilreps(Quiver::cyclic(2), DimVector({1, 1}));
    ASSERT_EQ(c2.size(), 3u);
    std::vector<std::string> names;
    for (const auto& m : c2)
        names.push_back(m.str());
    std::sort(names.begin(), names.end());
    EXPECT_EQ(names, (std::vector<std::string>{"(0,1)+(1,1)", "(0,2)", "(1,2)"}));
    EXPECT_EQ(enumerate_nilreps(Quiver::linear(2), DimVector({1, 1})).size(), 2u);
    auto zero = enumerate_nilreps(Quiver::linear(2), DimVector({0, 0}));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].empty());
}

TEST(Nilrep, EnumerationHasNoDuplicatesAndRightDims)
{
    for (auto q : {Quiver::linear(3), Quiver::cyclic(2), Quiver::cyclic(3)}) {
        DimVector d(std::vector<int>(static_cast<std::size_t>(q.vertices()), 1));
        auto reps = enumerate_nilreps(q, d);
        for (std::size_t a = 0; a < reps.size(); ++a) {
            EXPECT_EQ(reps[a].dim_vector(q), d);
            for (std::size_t b = a + 1; b < reps.size(); ++b)
                EXPECT_NE(reps[a].str(), reps[b].str());
        }
    }
}

TEST(Nilrep, SocleBasisExamples)
{
    auto c2 = Quiver::cyclic(2);
    Multisegment m({{1, 2}});
    auto b = socle_basis(c2, m);
    EXPECT_TRUE(b[0].empty());
    ASSERT_EQ(b[1].size(), 1u);
    EXPECT_EQ(m[b[1][0]], (Segment{1, 2}));

    auto loop = Quiver::cyclic(1);
    Multisegment s({{0, 1}, {0, 2}});
    auto bl = socle_basis(loop, s);
    ASSERT_EQ(bl[0].size(), 2u);
    EXPECT_EQ(s[bl[0][0]], (Segment{0, 2}));
    EXPECT_EQ(s[bl[0][1]], (Segment{0, 1}));

    EXPECT_TRUE(socle_basis(loop, Multisegment{})[0].empty());
}

TEST(Nilrep, QuotientExamples)
{
    auto c2 = Quiver::cyclic(2);
    EXPECT_EQ(quotient_by_socles(c2, Multisegment({{1, 2}}), {{}, {0}}).str(), "(0,1)");
    EXPECT_TRUE(quotient_by_socles(c2, Multisegment({{0, 1}}), {{0}, {}}).empty());
    auto loop = Quiver::cyclic(1);
    EXPECT_EQ(quotient_by_socles(loop, Multisegment({{0, 2}, {0, 1}}), {{1}}).str(), "(0,2)");
    EXPECT_THROW(quotient_by_socles(loop, Multisegment({{0, 1}}), {{1}}), std::out_of_range);
}

TEST(Nilrep, QuotientDimensionDrops)
{
    auto q = Quiver::cyclic(3);
    Multisegment m({{0, 3}, {0, 1}, {2, 2}});
    auto d = m.dim_vector(q);
    auto r = quotient_by_socles(q, m, {{0, 1}, {}, {0}});
    auto expect = d - DimVector::unit(3, 0) - DimVector::unit(3, 0) - DimVector::unit(3, 2);
    EXPECT_EQ(r.dim_vector(q), expect);
}

TEST(Nilrep, HomDimExamples)
{
    auto loop = Quiver::cyclic(1);
    for (int l = 1; l <= 4; ++l)
        for (int m = 1; m <= 4; ++m)
            EXPECT_EQ(hom_dim(loop, {0, l}, {0, m}), std::min(l, m));
    EXPECT_EQ(hom_dim(Quiver::cyclic(2), {1, 2}, {1, 2}), 1);
    // Hom(E(1,2), S_1) vanishes: the socle of E(1,2) is not a quotient
    EXPECT_EQ(hom_dim(Quiver::linear(2), {1, 2}, {1, 1}), 0);
    EXPECT_EQ(hom_dim(Quiver::linear(2), {1, 1}, {1, 2}), 1);
}

TEST(Nilrep, HomDimMatchesIntertwinerOracle)
{
    for (int n = 1; n <= 3; ++n)
        for (bool cyclic : {false, true}) {
            auto q = cyclic ? Quiver::cyclic(n) : Quiver::linear(n);
            for (int ia = 0; ia < n; ++ia)
                for (int la = 1; la <= 5; ++la)
                    for (int ib = 0; ib < n; ++ib)
                        for (int lb = 1; lb <= 5; ++lb) {
                            Segment a{ia, la}, b{ib, lb};
                            if (!segment_fits(q, a) || !segment_fits(q, b))
                                continue;
                            EXPECT_EQ(hom_dim(q, a, b), oracle::intertwiner_hom_dim(n, cyclic, ia, la, ib, lb))
                                << q.name() << " " << a.str() << " " << b.str();
                        }
        }
}

TEST(Nilrep, OrbitDimExamples)
{
    EXPECT_EQ(orbit_dim(Quiver::linear(3), Multisegment({{0, 1}, {1, 1}, {2, 1}})), 0);
    EXPECT_EQ(orbit_dim(Quiver::cyclic(2), Multisegment({{1, 2}})), 1);
    // 9 minus the centralizer dimension 5 of a Jordan matrix of type (2,1)
    EXPECT_EQ(orbit_dim(Quiver::cyclic(1), Multisegment({{0, 2}, {0, 1}})), 4);
}

TEST(Nilrep, LoopOrbitDimsMatchJordanFormula)
{
    // the nilpotent orbit of partition lambda has dimension n^2 - sum (lambda'_i)^2
    auto loop = Quiver::cyclic(1);
    for (int d = 1; d <= 6; ++d)
        for (const auto& m : enumerate_nilreps(loop, DimVector({d}))) {
            std::vector<int> conj(static_cast<std::size_t>(d) + 1, 0);
            for (const auto& s : m.segments())
                for (int k = 1; k <= s.length; ++k)
                    ++conj[static_cast<std::size_t>(k)];
            int c = 0;
            for (int x : conj)
                c += x * x;
            EXPECT_EQ(orbit_dim(loop, m), d * d - c) << m.str();
            EXPECT_GE(orbit_dim(loop, m), 0);
        }
}

TEST(Nilrep, AutMultiplicities)
{
    EXPECT_EQ(aut_series_exponents(Multisegment({{0, 1}, {0, 1}})), (std::vector<int>{2}));
    EXPECT_EQ(aut_series_exponents(Multisegment({{0, 2}, {0, 1}})), (std::vector<int>{1, 1}));
    EXPECT_TRUE(aut_series_exponents(Multisegment{}).empty());
}

TEST(Nilrep, SegmentFitting)
{
    EXPECT_FALSE(segment_fits(Quiver::linear(2), {0, 2}));
    EXPECT_TRUE(segment_fits(Quiver::linear(2), {1, 2}));
    EXPECT_TRUE(segment_fits(Quiver::cyclic(2), {0, 5}));
}
