#include <gtest/gtest.h>

#include "mspring/handles.hpp"
#include "mspring/homotopy.hpp"
#include "mspring/suites.hpp"

using namespace mspring;

namespace {

using KC = GradedComplex<KlrElement>;

const KlrHandle& nil_hecke2()
{
    static const KlrHandle h(KlrAlgebra(Quiver::linear(1), DimVector({2})));
    return h;
}

const KlrHandle& a2()
{
    static const KlrHandle h(KlrAlgebra(Quiver::linear(2), DimVector({1, 1})));
    return h;
}

/// e_i A -> e_i A<twist> in degrees 0, 1 with entry x_1 e_i.
KC two_term(const KlrHandle& h, int idem, int shift)
{
    KC c;
    c.gens = {{idem, 0, 0}, {idem, shift, 1}};
    c.d.emplace(std::pair{1, 0}, h.mul(h.idempotent(idem), h.x(0)));
    return c;
}

} // namespace

TEST(Homotopy, ValidateExamples)
{
    const auto& h = a2();
    EXPECT_TRUE(validate(h, KC{}).ok);
    EXPECT_TRUE(validate(h, two_term(h, 0, 2)).ok);
    auto bad = validate(h, two_term(h, 0, 4));
    EXPECT_FALSE(bad.ok);
    EXPECT_FALSE(bad.message.empty());
    // twisting by <1> is a shift of two u-units
    EXPECT_TRUE(validate(h, twist(h, two_term(h, 0, 2), 1)).ok);
}

TEST(Homotopy, ValidateRejectsWrongBlockAndNonzeroSquare)
{
    const auto& h = a2();
    KC c;
    c.gens = {{0, 0, 0}, {1, 1, 1}};
    c.d.emplace(std::pair{1, 0}, h.mul(h.idempotent(0), h.psi(0)));
    EXPECT_FALSE(validate(h, c).ok);
    c.d.clear();
    c.d.emplace(std::pair{1, 0}, h.mul(h.psi(0), h.idempotent(0)));
    EXPECT_TRUE(validate(h, c).ok);

    const auto& nh = nil_hecke2();
    KC sq;
    sq.gens = {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}};
    sq.d.emplace(std::pair{1, 0}, nh.idempotent(0));
    sq.d.emplace(std::pair{2, 1}, nh.idempotent(0));
    EXPECT_FALSE(validate(nh, sq).ok);
}

TEST(Homotopy, ShiftTwistEuler)
{
    const auto& h = nil_hecke2();
    auto c = two_term(h, 0, 2);
    EXPECT_TRUE(equal_up_to_reordering(h, shift(h, shift(h, c, 1), -1), c));
    auto e = euler_symbol(c);
    auto es = euler_symbol(shift(h, c, 1));
    for (const auto& [k, v] : e)
        EXPECT_EQ(es.at(k), -v);
    auto d = two_term(h, 0, 2);
    EXPECT_TRUE(equal_up_to_reordering(h, twist(h, direct_sum(c, d), 3), direct_sum(twist(h, c, 3), twist(h, d, 3))));
    KC single;
    single.gens = {{0, 0, 0}};
    EXPECT_EQ(euler_symbol(single), (EulerSymbol{{{0, 0}, 1}}));
}

TEST(Homotopy, ConeOfIdentityIsContractible)
{
    const auto& h = nil_hecke2();
    auto c = two_term(h, 0, 2);
    auto cn = cone(h, identity_map(h, c));
    EXPECT_TRUE(validate(h, cn).ok);
    EXPECT_TRUE(euler_symbol(cn).empty());
    EXPECT_TRUE(minimize(h, cn).empty());
}

TEST(Homotopy, ConeOfZeroIsSum)
{
    const auto& h = nil_hecke2();
    auto a = two_term(h, 0, 2);
    KC b;
    b.gens = {{0, 4, 0}};
    ChainMap<KlrElement> zero{a, b, {}};
    EXPECT_TRUE(validate(h, zero).ok);
    EXPECT_TRUE(equal_up_to_reordering(h, cone(h, zero), direct_sum(b, shift(h, a, 1))));
    EXPECT_EQ(euler_symbol(cone(h, zero)), euler_difference(euler_symbol(b), euler_symbol(a)));
}

TEST(Homotopy, NotAChainMap)
{
    const auto& h = nil_hecke2();
    auto a = two_term(h, 0, 2);
    ChainMap<KlrElement> f{a, a, {}};
    f.f.emplace(std::pair{0, 0}, h.idempotent(0));
    EXPECT_FALSE(validate(h, f).ok);
    EXPECT_THROW(cone(h, f), std::invalid_argument);
}

TEST(Homotopy, MinimizeFixpoint)
{
    const auto& h = a2();
    auto c = two_term(h, 0, 2);
    MinimizeStats stats;
    EXPECT_TRUE(equal_up_to_reordering(h, minimize(h, c, &stats), c));
    EXPECT_EQ(stats.cancellations, 0);
}

TEST(Homotopy, MinimizeSchurComplement)
{
    // a --e--> b, a --x1--> c, p --x1--> b. Cancelling (a, b) leaves
    // p --(0 - x1 * e^{-1} * x1)--> c, i.e. the single entry -x1^2.
    const auto& h = nil_hecke2();
    auto e = h.idempotent(0), x1 = h.x(0);
    KC c;
    c.gens = {{0, 0, 0}, {0, -2, 0}, {0, 0, 1}, {0, 2, 1}}; // a, p, b, c
    c.d.emplace(std::pair{2, 0}, e);
    c.d.emplace(std::pair{3, 0}, x1);
    c.d.emplace(std::pair{2, 1}, x1);
    ASSERT_TRUE(validate(h, c).ok);
    MinimizeStats stats;
    auto m = minimize(h, c, &stats);
    EXPECT_EQ(stats.cancellations, 1);
    ASSERT_EQ(m.size(), 2);
    EXPECT_EQ(m.gens[0], (Generator{0, -2, 0}));
    EXPECT_EQ(m.gens[1], (Generator{0, 2, 1}));
    ASSERT_EQ(m.d.size(), 1u);
    EXPECT_TRUE(h.equal(m.d.at({1, 0}), h.scale(h.mul(x1, x1), -1)));
    EXPECT_EQ(euler_symbol(m), euler_symbol(c));
}

TEST(Homotopy, UnitEntryCancelsToOneGenerator)
{
    const auto& h = nil_hecke2();
    KC c;
    c.gens = {{0, 0, 0}, {0, 0, 1}, {0, 2, 1}};
    c.d.emplace(std::pair{1, 0}, h.idempotent(0));
    c.d.emplace(std::pair{2, 0}, h.x(0));
    auto m = minimize(h, c);
    ASSERT_EQ(m.size(), 1);
    EXPECT_EQ(m.gens[0], (Generator{0, 2, 1}));
    EXPECT_TRUE(m.d.empty());
}

TEST(Homotopy, WeightTruncationExamples)
{
    const auto& h = nil_hecke2();
    KC c0;
    c0.gens = {{0, 0, 0}, {0, 2, 0}};
    auto t0 = weight_truncate(h, c0, 0);
    EXPECT_TRUE(t0.upper.empty());
    EXPECT_TRUE(equal_up_to_reordering(h, t0.lower, c0));
    auto tb = weight_truncate(h, c0, -3);
    EXPECT_TRUE(tb.lower.empty());
    EXPECT_TRUE(equal_up_to_reordering(h, tb.upper, c0));

    auto c = two_term(h, 0, 2);
    auto split = weight_truncate(h, c, 0);
    EXPECT_EQ(split.upper.size(), 1);
    EXPECT_EQ(split.lower.size(), 1);
    EXPECT_TRUE(validate(h, split.inclusion).ok);
    EXPECT_TRUE(equal_up_to_reordering(h, minimize(h, cone(h, split.inclusion)), minimize(h, split.lower)));
}

TEST(Homotopy, SmashHandleInvertsGroupElements)
{
    SmashHandle h(2);
    auto one = h.idempotent(0);
    auto s1 = SmashElement::group(transposition(2, 0));
    auto inv = h.inverse_degree0(h.add(one, h.scale(s1, Rational(1, 2))), 0, 0);
    ASSERT_TRUE(inv);
    EXPECT_TRUE(h.equal(h.mul(*inv, h.add(one, h.scale(s1, Rational(1, 2)))), one));
    EXPECT_FALSE(h.inverse_degree0(h.add(one, s1), 0, 0));
    GradedComplex<SmashElement> c;
    c.gens = {{0, 0, 0}, {0, 0, 1}};
    c.d.emplace(std::pair{1, 0}, h.add(one, h.scale(s1, 3)));
    EXPECT_TRUE(minimize(h, c).empty());
}

TEST(Homotopy, KlrDegreeZeroInverse)
{
    const auto& h = nil_hecke2();
    auto e = h.idempotent(0);
    EXPECT_FALSE(h.inverse_degree0(h.mul(h.psi(0), h.x(0)), 0, 0));
    auto u = h.add(e, h.mul(h.psi(0), h.x(0)));
    auto inv = h.inverse_degree0(u, 0, 0);
    ASSERT_TRUE(inv);
    EXPECT_TRUE(h.equal(h.mul(u, *inv), e));
    EXPECT_TRUE(h.equal(*inv, h.add(e, h.scale(h.mul(h.psi(0), h.x(0)), Rational(-1, 2)))));
}

TEST(Homotopy, RandomCorpusProperties)
{
    auto check = [](const HomotopyTally& t, const char* name) {
        EXPECT_EQ(t.valid, t.trials) << name << " " << t.first_failure;
        EXPECT_EQ(t.cone_identity, t.trials) << name;
        EXPECT_EQ(t.euler_invariant, t.trials) << name;
        EXPECT_EQ(t.idempotent, t.trials) << name;
        EXPECT_EQ(t.reassembly, t.trials) << name;
        EXPECT_EQ(t.cone_euler, t.trials) << name;
    };
    check(homotopy_properties(nil_hecke2(), 30, 5), "nilhecke2");
    check(homotopy_properties(a2(), 30, 5), "A2");
    check(homotopy_properties(SmashHandle(2), 30, 5), "smash2");
}

TEST(Homotopy, CorpusIsDeterministic)
{
    std::mt19937_64 r1(9), r2(9);
    const auto& h = nil_hecke2();
    for (int k = 0; k < 5; ++k) {
        auto a = random_complex(h, r1), b = random_complex(h, r2);
        ASSERT_EQ(a.gens, b.gens);
        EXPECT_TRUE(detail::same_entries(h, a.d, b.d));
    }
}
