#include <gtest/gtest.h>

#include "mspring/klr.hpp"

using namespace mspring;

namespace {

Poly var(int n, int k) { return Poly::variable(n, k); }

LabeledPoly apply(const KlrAlgebra& alg, std::vector<KlrGen> gens, const LabeledPoly& m)
{
    return act(alg, KlrOperator::product(std::move(gens)), m);
}

} // namespace

TEST(Klr, DividedDifferenceExamples)
{
    KlrAlgebra nh(Quiver::linear(1), DimVector({2}));
    auto m = LabeledPoly::single({0, 0}, var(2, 0));
    EXPECT_EQ(act(nh, KlrGen::psi(0), m), LabeledPoly::single({0, 0}, Poly::constant(2, 1)));
    EXPECT_TRUE(act(nh, KlrGen::psi(0), LabeledPoly::single({0, 0}, Poly::constant(2, 1))).is_zero());
}

TEST(Klr, PsiSquaredA2)
{
    KlrAlgebra alg(Quiver::linear(2), DimVector({1, 1}));
    auto one01 = LabeledPoly::single({0, 1}, Poly::constant(2, 1));
    auto one10 = LabeledPoly::single({1, 0}, Poly::constant(2, 1));
    auto a = apply(alg, {KlrGen::psi(0), KlrGen::psi(0)}, one01);
    auto b = apply(alg, {KlrGen::psi(0), KlrGen::psi(0)}, one10);
    // each is a single linear factor in x1 - x2, with opposite signs read in
    // strand order, and it equals Q_{i1 i2}(x1, x2)
    EXPECT_EQ(a, LabeledPoly::single({0, 1}, alg.q_poly(0, 1, 0, 1)));
    EXPECT_EQ(b, LabeledPoly::single({1, 0}, alg.q_poly(1, 0, 0, 1)));
    auto diff = var(2, 0) - var(2, 1);
    EXPECT_TRUE(a.at({0, 1}) == diff || a.at({0, 1}) == -diff);
    EXPECT_EQ(a.at({0, 1}), -b.at({1, 0}));
}

TEST(Klr, CyclicTwoHasQuadraticQ)
{
    KlrAlgebra alg(Quiver::cyclic(2), DimVector({1, 1}));
    auto one = LabeledPoly::single({0, 1}, Poly::constant(2, 1));
    auto sq = apply(alg, {KlrGen::psi(0), KlrGen::psi(0)}, one);
    auto diff = var(2, 0) - var(2, 1);
    EXPECT_TRUE(sq.at({0, 1}) == diff * diff || sq.at({0, 1}) == -(diff * diff));
}

TEST(Klr, RelationSuiteExamples)
{
    for (auto [q, d] : std::vector<std::pair<Quiver, DimVector>>{{Quiver::linear(1), DimVector({2})},
             {Quiver::linear(2), DimVector({1, 1})}, {Quiver::cyclic(2), DimVector({1, 1})},
             {Quiver::linear(3), DimVector({1, 2, 1})}, {Quiver::cyclic(1), DimVector({3})}}) {
        KlrAlgebra alg(q, d);
        auto rep = relation_suite(alg, 15, 7);
        for (const auto& r : rep.relations)
            EXPECT_EQ(r.failures, 0) << q.name() << " " << d.str() << " " << r.name << ": " << r.witness;
    }
}

TEST(Klr, NilHeckePsiSquaredVanishes)
{
    KlrAlgebra nh(Quiver::linear(1), DimVector({3}));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto m = detail::random_labeled(nh, rng, 5);
        for (int r = 0; r < 2; ++r)
            EXPECT_TRUE(apply(nh, {KlrGen::psi(r), KlrGen::psi(r)}, m).is_zero());
    }
}

TEST(Klr, DegreeOfGenerators)
{
    KlrAlgebra alg(Quiver::linear(2), DimVector({1, 1}));
    EXPECT_EQ(generator_degree(alg, KlrGen::x(0), {0, 1}), 2);
    EXPECT_EQ(generator_degree(alg, KlrGen::psi(0), {0, 1}), 1);
    EXPECT_EQ(generator_degree(alg, KlrGen::e({0, 1}), {0, 1}), 0);
    KlrAlgebra nh(Quiver::linear(1), DimVector({2}));
    EXPECT_EQ(generator_degree(nh, KlrGen::psi(0), {0, 0}), -2);
}

TEST(Klr, FaithfulnessFullRank)
{
    for (auto [q, d] : std::vector<std::pair<Quiver, DimVector>>{
             {Quiver::linear(1), DimVector({3})}, {Quiver::linear(2), DimVector({2, 1})}, {Quiver::cyclic(2), DimVector({1, 1})}}) {
        auto [rank, size] = faithfulness_rank(KlrAlgebra(q, d), 11);
        EXPECT_EQ(rank, size) << q.name() << " " << d.str();
        EXPECT_GT(size, 0);
    }
}

TEST(Klr, ContextErrors)
{
    KlrAlgebra alg(Quiver::linear(2), DimVector({1, 1}));
    auto m = LabeledPoly::single({0, 1}, Poly::constant(2, 1));
    EXPECT_THROW(act(alg, KlrGen::psi(1), m), std::out_of_range);
    EXPECT_THROW(act(alg, KlrGen::e({0, 0}), m), std::invalid_argument);
}
