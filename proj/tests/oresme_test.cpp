#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "motus/oresme.hpp"

using motus::BoundError;
using motus::ClassError;
using motus::DomainError;
using motus::Poly;
using motus::Rational;
using namespace motus::oresme;

namespace {

// Independent quadrature oracle: Simpson's rule is exact for cubics, so it
// pins the area of every admissible piece without reusing the antiderivative
// code under test.
Rational simpson(const Poly& p, const Rational& a, const Rational& b) {
    Rational mid = (a + b) / Rational(2);
    return (b - a) / Rational(6) * (p(a) + Rational(4) * p(mid) + p(b));
}

Rational simpson_total(const VelocityProfile& v) {
    const PiecewisePoly& d = v.data();
    Rational total(0);
    for (size_t i = 0; i < d.pieces.size(); ++i)
        total += simpson(d.pieces[i], d.breaks[i], d.breaks[i + 1]);
    return total;
}

VelocityProfile uniform_profile(const Rational& level, const Rational& duration) {
    return VelocityProfile({Rational(0), duration}, {Poly::constant(level)});
}

VelocityProfile ramp_profile(const Rational& v0, const Rational& slope, const Rational& duration) {
    return VelocityProfile({Rational(0), duration}, {Poly({v0, slope})});
}

} // namespace

// ---------------------------------------------------------------------------
// Profile validation
// ---------------------------------------------------------------------------

TEST(VelocityProfileTest, AcceptsSimpleRamp) {
    VelocityProfile v = ramp_profile(Rational(0), Rational(2), Rational(1));
    EXPECT_EQ(v.duration(), Rational(1));
    EXPECT_EQ(v(Rational(1, 2)), Rational(1));
    EXPECT_TRUE(v.continuous());
}

TEST(VelocityProfileTest, RejectsNonZeroStart) {
    EXPECT_THROW(VelocityProfile({Rational(1), Rational(2)}, {Poly::constant(Rational(1))}),
                 DomainError);
}

TEST(VelocityProfileTest, RejectsNonIncreasingBreaks) {
    EXPECT_THROW(VelocityProfile({Rational(0), Rational(1), Rational(1)},
                                 {Poly::constant(Rational(1)), Poly::constant(Rational(2))}),
                 DomainError);
    EXPECT_THROW(VelocityProfile({Rational(0), Rational(2), Rational(1)},
                                 {Poly::constant(Rational(1)), Poly::constant(Rational(2))}),
                 DomainError);
}

TEST(VelocityProfileTest, RejectsMismatchedPieceCount) {
    EXPECT_THROW(VelocityProfile({Rational(0), Rational(1), Rational(2)},
                                 {Poly::constant(Rational(1))}),
                 DomainError);
    EXPECT_THROW(VelocityProfile({Rational(0)}, {}), DomainError);
}

TEST(VelocityProfileTest, RejectsDegreeAboveCap) {
    // t^4 exceeds the default cap of 3; raising the cap admits it.
    Poly quartic({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
    EXPECT_THROW(VelocityProfile({Rational(0), Rational(1)}, {quartic}), DomainError);
    EXPECT_NO_THROW(VelocityProfile({Rational(0), Rational(1)}, {quartic}, 4));
}

TEST(VelocityProfileTest, RejectsNegativeDegreesOfSpeed) {
    // t - 1 dips below zero on [0, 2].
    EXPECT_THROW(VelocityProfile({Rational(0), Rational(2)}, {Poly({Rational(-1), Rational(1)})}),
                 DomainError);
    // (t - 1)^2 touches zero but never crosses it.
    EXPECT_NO_THROW(VelocityProfile({Rational(0), Rational(2)},
                                    {Poly({Rational(1), Rational(-2), Rational(1)})}));
}

TEST(VelocityProfileTest, EvalIsRightContinuousAtInteriorBreaks) {
    VelocityProfile v({Rational(0), Rational(1), Rational(2)},
                      {Poly::constant(Rational(1)), Poly::constant(Rational(2))});
    EXPECT_FALSE(v.continuous());
    EXPECT_EQ(v(Rational(1, 2)), Rational(1));
    EXPECT_EQ(v(Rational(1)), Rational(2));
    EXPECT_EQ(v(Rational(2)), Rational(2));
    EXPECT_THROW(v(Rational(-1)), DomainError);
    EXPECT_THROW(v(Rational(3)), DomainError);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

TEST(ClassifyTest, ConstantProfileIsUniform) {
    VelocityProfile v = uniform_profile(Rational(3), Rational(2));
    UniformityClass c = classify(v);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], Verdict::uniform);
    EXPECT_EQ(class_label(c), "uniform");
}

TEST(ClassifyTest, RestProfileIsUniform) {
    VelocityProfile v = uniform_profile(Rational(0), Rational(1));
    UniformityClass c = classify(v);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], Verdict::uniform);
}

TEST(ClassifyTest, EqualConstantPiecesCountAsUniform) {
    VelocityProfile v({Rational(0), Rational(1), Rational(2)},
                      {Poly::constant(Rational(2)), Poly::constant(Rational(2))});
    UniformityClass c = classify(v);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], Verdict::uniform);
}

TEST(ClassifyTest, RampIsUniformlyDifform) {
    VelocityProfile v = ramp_profile(Rational(1), Rational(2), Rational(1));
    UniformityClass c = classify(v);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], Verdict::difform);
    EXPECT_EQ(c[1], Verdict::uniform);
    EXPECT_EQ(class_label(c), "uniformly difform");
}

TEST(ClassifyTest, SquareIsDifformlyDifformThenUniform) {
    // v = t^2: difform, derivative 2t difform, second derivative 2 uniform.
    VelocityProfile v({Rational(0), Rational(1)},
                      {Poly({Rational(0), Rational(0), Rational(1)})});
    UniformityClass c = classify(v);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], Verdict::difform);
    EXPECT_EQ(c[1], Verdict::difform);
    EXPECT_EQ(c[2], Verdict::uniform);
    EXPECT_EQ(class_label(c), "difformly difform");
}

TEST(ClassifyTest, JumpProfileStopsAtDepthZero) {
    VelocityProfile v({Rational(0), Rational(1), Rational(2)},
                      {Poly::constant(Rational(1)), Poly::constant(Rational(3))});
    UniformityClass c = classify(v);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], Verdict::difform);
    EXPECT_EQ(class_label(c), "difformly difform");
}

TEST(ClassifyTest, DepthCapTruncatesTheList) {
    VelocityProfile v({Rational(0), Rational(1)},
                      {Poly({Rational(0), Rational(0), Rational(1)})});
    UniformityClass c = classify(v, 2);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], Verdict::difform);
    EXPECT_EQ(c[1], Verdict::difform);
}

TEST(ClassifyTest, NonPositiveDepthThrows) {
    VelocityProfile v = uniform_profile(Rational(1), Rational(1));
    EXPECT_THROW(classify(v, 0), BoundError);
    EXPECT_THROW(classify(v, -2), BoundError);
}

TEST(ClassifyTest, OnlyTheLastEntryMayBeUniform) {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Rational> cs;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
        Poly p(cs);
        // Lift the piece so it stays non-negative on [0, 1]: any admissible
        // polynomial with these coefficients is bounded below by -12 there.
        cs = p.coeffs();
        if (cs.empty()) cs.emplace_back(0);
        cs[0] += Rational(13);
        VelocityProfile v({Rational(0), Rational(1)}, {Poly(cs)});
        UniformityClass c = classify(v);
        ASSERT_FALSE(c.empty());
        for (size_t i = 0; i + 1 < c.size(); ++i) EXPECT_EQ(c[i], Verdict::difform);
        EXPECT_LE(c.size(), 4u);
    }
}

// ---------------------------------------------------------------------------
// Total celerity (quadrature)
// ---------------------------------------------------------------------------

TEST(TotalCelerityTest, MatchesSimpsonOracleOnPinnedProfiles) {
    VelocityProfile ramp = ramp_profile(Rational(0), Rational(2), Rational(3));
    EXPECT_EQ(total_celerity(ramp), Rational(9));
    EXPECT_EQ(total_celerity(ramp), simpson_total(ramp));

    VelocityProfile cube({Rational(0), Rational(2)},
                         {Poly({Rational(1), Rational(0), Rational(0), Rational(1)})});
    EXPECT_EQ(total_celerity(cube), Rational(6)); // 2 + 2^4/4
    EXPECT_EQ(total_celerity(cube), simpson_total(cube));
}

TEST(TotalCelerityTest, RestProfileHasZeroArea) {
    EXPECT_EQ(total_celerity(uniform_profile(Rational(0), Rational(5))), Rational(0));
}

TEST(TotalCelerityTest, MatchesSimpsonOracleOnRandomProfiles) {
    std::mt19937_64 rng(77001);
    std::uniform_int_distribution<int> coeff(0, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> pieces(1, 3);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Rational> breaks{Rational(0)};
        std::vector<Poly> ps;
        int n = pieces(rng);
        for (int i = 0; i < n; ++i) {
            breaks.push_back(breaks.back() + Rational(1 + coeff(rng), 2));
            std::vector<Rational> cs;
            int d = deg(rng);
            for (int j = 0; j <= d; ++j) cs.emplace_back(coeff(rng));
            ps.push_back(Poly(cs)); // non-negative coefficients: safe on t >= 0
        }
        VelocityProfile v(breaks, ps);
        EXPECT_EQ(total_celerity(v), simpson_total(v));
    }
}

TEST(TotalCelerityTest, AddsUnderConcatenation) {
    VelocityProfile a = ramp_profile(Rational(0), Rational(1), Rational(2));
    VelocityProfile b({Rational(0), Rational(1)},
                      {Poly({Rational(2), Rational(0), Rational(3)})});
    VelocityProfile ab = concat(a, b);
    EXPECT_EQ(ab.duration(), Rational(3));
    EXPECT_EQ(total_celerity(ab), total_celerity(a) + total_celerity(b));
}

TEST(TotalCelerityTest, GrowsByConstantTimesDurationWhenLifted) {
    VelocityProfile v({Rational(0), Rational(1), Rational(3)},
                      {Poly({Rational(0), Rational(1)}), Poly::constant(Rational(1))});
    Rational base = total_celerity(v);
    VelocityProfile lifted({Rational(0), Rational(1), Rational(3)},
                           {Poly({Rational(5), Rational(1)}), Poly::constant(Rational(6))});
    EXPECT_EQ(total_celerity(lifted), base + Rational(5) * v.duration());
}

TEST(TotalCelerityTest, ScalesWithTheProfile) {
    VelocityProfile v({Rational(0), Rational(2)},
                      {Poly({Rational(1), Rational(2), Rational(3)})});
    std::vector<Rational> cs = v.data().pieces[0].coeffs();
    for (Rational& c : cs) c *= Rational(7, 2);
    VelocityProfile scaled({Rational(0), Rational(2)}, {Poly(cs)});
    EXPECT_EQ(total_celerity(scaled), Rational(7, 2) * total_celerity(v));
}

// ---------------------------------------------------------------------------
// Mean degree
// ---------------------------------------------------------------------------

TEST(MeanDegreeTest, PinnedRampHalvesTheSumOfExtremes) {
    // v = 3 + 2t on [0, 2]: extremes 3 and 7, mean 5, both areas 10.
    VelocityProfile v = ramp_profile(Rational(3), Rational(2), Rational(2));
    VelocityProfile m = mean_degree_equivalent(v);
    ASSERT_EQ(m.data().pieces.size(), 1u);
    EXPECT_EQ(m.data().pieces[0], Poly::constant(Rational(5)));
    EXPECT_EQ(m.duration(), Rational(2));
    EXPECT_EQ(total_celerity(v), Rational(10));
    EXPECT_EQ(total_celerity(m), Rational(10));
}

TEST(MeanDegreeTest, UniformProfileIsItsOwnEquivalent) {
    VelocityProfile v = uniform_profile(Rational(4), Rational(3));
    VelocityProfile m = mean_degree_equivalent(v);
    EXPECT_EQ(m.data().pieces[0], Poly::constant(Rational(4)));
    EXPECT_EQ(total_celerity(m), total_celerity(v));
}

TEST(MeanDegreeTest, RejectsDifformlyDifformProfiles) {
    VelocityProfile square({Rational(0), Rational(1)},
                           {Poly({Rational(0), Rational(0), Rational(1)})});
    EXPECT_THROW(mean_degree_equivalent(square), ClassError);
    VelocityProfile jump({Rational(0), Rational(1), Rational(2)},
                         {Poly::constant(Rational(1)), Poly::constant(Rational(3))});
    EXPECT_THROW(mean_degree_equivalent(jump), ClassError);
}

TEST(MeanDegreeTest, AreaEqualityHoldsOnRandomRamps) {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> num(0, 20);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> slope_num(-10, 10);
    for (int iter = 0; iter < 200; ++iter) {
        Rational duration(1 + num(rng), den(rng));
        Rational v0(num(rng), den(rng));
        Rational s(slope_num(rng), den(rng));
        if (v0 + s * duration < Rational(0)) s = -v0 / duration; // keep v >= 0
        if (s.is_zero()) s = Rational(1);
        VelocityProfile v = ramp_profile(v0, s, duration);
        VelocityProfile m = mean_degree_equivalent(v);
        EXPECT_EQ(total_celerity(m), total_celerity(v));
        EXPECT_EQ(m.data().pieces[0](Rational(0)),
                  (v.initial_degree() + v.final_degree()) / Rational(2));
    }
}

// ---------------------------------------------------------------------------
// Concatenation
// ---------------------------------------------------------------------------

TEST(ConcatTest, ShiftsTheSecondProfileInTime) {
    VelocityProfile a = ramp_profile(Rational(0), Rational(2), Rational(1));
    VelocityProfile b = ramp_profile(Rational(2), Rational(3), Rational(1));
    VelocityProfile ab = concat(a, b);
    ASSERT_EQ(ab.data().breaks.size(), 3u);
    EXPECT_EQ(ab.data().breaks[2], Rational(2));
    // On [1, 2] the value is b(t - 1) = 2 + 3(t - 1).
    EXPECT_EQ(ab(Rational(3, 2)), Rational(7, 2));
    EXPECT_EQ(ab(Rational(2)), Rational(5));
    EXPECT_TRUE(ab.continuous());
}

TEST(ConcatTest, PreservesJumpsBetweenParts) {
    VelocityProfile a = uniform_profile(Rational(1), Rational(1));
    VelocityProfile b = uniform_profile(Rational(3), Rational(1));
    VelocityProfile ab = concat(a, b);
    EXPECT_FALSE(ab.continuous());
    UniformityClass c = classify(ab);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], Verdict::difform);
}
