#include <gtest/gtest.h>

#include <random>

#include "motus/galileo.hpp"

using motus::DomainError;
using motus::GenusError;
using motus::Integer;
using motus::Rational;
using motus::pow10;
using motus::magnitudes::Genus;
using motus::magnitudes::Magnitude;
using namespace motus::galileo;

namespace {

MotionRecord record(const Rational& d, const Rational& t) {
    return MotionRecord(Magnitude(d, Genus::length), Magnitude(t, Genus::time));
}

Rational speed_defect(const Scalar& v, const Rational& height) {
    return (v.value * v.value - Rational(4) * height).abs();
}

} // namespace

// ---------------------------------------------------------------------------
// The fall law
// ---------------------------------------------------------------------------

TEST(FallStateTest, PinnedValues) {
    FallState s = fall_state(Rational(3));
    EXPECT_EQ(s.height, Rational(9));
    EXPECT_EQ(s.speed, Rational(6));
    FallState zero = fall_state(Rational(0));
    EXPECT_EQ(zero.height, Rational(0));
    EXPECT_EQ(zero.speed, Rational(0));
    EXPECT_THROW(fall_state(Rational(-1)), DomainError);
}

TEST(FallStateTest, LawIdentitiesHoldExactly) {
    std::mt19937_64 rng(90210);
    std::uniform_int_distribution<int> num(0, 400);
    std::uniform_int_distribution<int> den(1, 40);
    for (int iter = 0; iter < 500; ++iter) {
        Rational t(num(rng), den(rng));
        FallState s = fall_state(t);
        EXPECT_EQ(s.height, t * t);
        EXPECT_EQ(s.speed * s.time, Rational(2) * s.height);
        EXPECT_EQ(s.speed * s.speed, Rational(4) * s.height);
    }
}

TEST(FallStateTest, SpeedGrowsWithTheRootOfHeightNotWithHeight) {
    // Quadrupling the height doubles the speed; doubling it does not.
    FallState one = fall_state(Rational(1));
    Scalar quadrupled = speed_from_height(Rational(4) * one.height);
    ASSERT_TRUE(quadrupled.exact);
    EXPECT_EQ(quadrupled.value, Rational(2) * one.speed);
    Scalar doubled = speed_from_height(Rational(2) * one.height);
    EXPECT_FALSE(doubled.exact);
    EXPECT_NE(doubled.value, Rational(2) * one.speed);
    // In squares the factor is exactly 2.
    EXPECT_EQ(height_from_speed(one.speed) * Rational(2), Rational(2) * one.height);
}

// ---------------------------------------------------------------------------
// Speed from height
// ---------------------------------------------------------------------------

TEST(SpeedFromHeightTest, ExactWhenHeightIsASquare) {
    Scalar v = speed_from_height(Rational(9));
    EXPECT_TRUE(v.exact);
    EXPECT_EQ(v.value, Rational(6));
    Scalar half = speed_from_height(Rational(1, 4));
    EXPECT_TRUE(half.exact);
    EXPECT_EQ(half.value, Rational(1));
    Scalar frac = speed_from_height(Rational(9, 16));
    EXPECT_TRUE(frac.exact);
    EXPECT_EQ(frac.value, Rational(3, 2));
    Scalar zero = speed_from_height(Rational(0));
    EXPECT_TRUE(zero.exact);
    EXPECT_EQ(zero.value, Rational(0));
}

TEST(SpeedFromHeightTest, ApproximationSatisfiesTheSquaredBound) {
    for (const Rational& h : {Rational(2), Rational(1, 3), Rational(5), Rational(7, 11)}) {
        Scalar v = speed_from_height(h);
        EXPECT_FALSE(v.exact);
        EXPECT_LE(speed_defect(v, h), Rational(1, pow10(12)));
    }
}

TEST(SpeedFromHeightTest, PinnedDecimalPrefixForRootTwo) {
    // 2 * sqrt(2) = 2.82842712474619...
    Scalar v = speed_from_height(Rational(2));
    EXPECT_EQ(v.value.decimal(10), "2.8284271247");
}

TEST(SpeedFromHeightTest, PrecisionParameterControlsTheBound) {
    Scalar coarse = speed_from_height(Rational(2), 3);
    EXPECT_LE(speed_defect(coarse, Rational(2)), Rational(1, 1000));
    Scalar fine = speed_from_height(Rational(2), 20);
    EXPECT_LE(speed_defect(fine, Rational(2)), Rational(1, pow10(20)));
    EXPECT_THROW(speed_from_height(Rational(2), 0), DomainError);
}

TEST(SpeedFromHeightTest, LargeHeightsStillMeetTheBound) {
    // With v around 2000 the squared defect magnifies the rounding error,
    // which forces the internal precision upgrade.
    Rational h(1000001);
    Scalar v = speed_from_height(h);
    EXPECT_FALSE(v.exact);
    EXPECT_LE(speed_defect(v, h), Rational(1, pow10(12)));
}

TEST(SpeedFromHeightTest, ExactnessFlagMatchesSquarenessOracle) {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> num(1, 60);
    std::uniform_int_distribution<int> den(1, 60);
    for (int iter = 0; iter < 200; ++iter) {
        Rational r(num(rng), den(rng));
        Scalar sq = speed_from_height(r * r);
        EXPECT_TRUE(sq.exact);
        EXPECT_EQ(sq.value, Rational(2) * r);
        Scalar tweaked = speed_from_height(r * r * Rational(2));
        EXPECT_FALSE(tweaked.exact); // 2 is not a square, so 2 r^2 never is
    }
}

TEST(SpeedFromHeightTest, RejectsNegativeHeight) {
    EXPECT_THROW(speed_from_height(Rational(-1)), DomainError);
}

TEST(HeightFromSpeedTest, InvertsTheExactBranch) {
    EXPECT_EQ(height_from_speed(Rational(6)), Rational(9));
    EXPECT_EQ(height_from_speed(Rational(0)), Rational(0));
    EXPECT_THROW(height_from_speed(Rational(-2)), DomainError);
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> num(0, 50);
    std::uniform_int_distribution<int> den(1, 50);
    for (int iter = 0; iter < 200; ++iter) {
        Rational h(num(rng), den(rng));
        Scalar v = speed_from_height(h * h);
        ASSERT_TRUE(v.exact);
        EXPECT_EQ(height_from_speed(v.value), h * h);
    }
}

// ---------------------------------------------------------------------------
// Same celerity
// ---------------------------------------------------------------------------

TEST(SameCelerityTest, DistancesAsTheTimes) {
    EXPECT_TRUE(same_celerity(record(Rational(6), Rational(3)), record(Rational(4), Rational(2))));
    EXPECT_FALSE(same_celerity(record(Rational(6), Rational(3)), record(Rational(5), Rational(2))));
    EXPECT_TRUE(same_celerity(record(Rational(1, 3), Rational(1, 2)),
                              record(Rational(2, 3), Rational(1))));
}

TEST(SameCelerityTest, RecordsEnforceTheirGenera) {
    EXPECT_THROW(MotionRecord(Magnitude(Rational(1), Genus::time),
                              Magnitude(Rational(1), Genus::time)),
                 GenusError);
    EXPECT_THROW(MotionRecord(Magnitude(Rational(1), Genus::length),
                              Magnitude(Rational(1), Genus::celerity)),
                 GenusError);
}

// ---------------------------------------------------------------------------
// Path independence
// ---------------------------------------------------------------------------

TEST(TrajectoryTest, SpeedAtDropIgnoresThePath) {
    std::mt19937_64 rng(161803);
    std::uniform_int_distribution<int> num(1, 100);
    std::uniform_int_distribution<int> den(1, 20);
    for (int iter = 0; iter < 100; ++iter) {
        Rational drop(num(rng), den(rng));
        Scalar fall = speed_at_drop(Trajectory::free_fall, drop);
        Scalar incline = speed_at_drop(Trajectory::incline, drop);
        Scalar pendulum = speed_at_drop(Trajectory::pendulum, drop);
        EXPECT_EQ(fall.value, incline.value);
        EXPECT_EQ(fall.value, pendulum.value);
        EXPECT_EQ(fall.exact, incline.exact);
        EXPECT_EQ(fall.exact, pendulum.exact);
    }
}

TEST(TrajectoryTest, NamesArePinned) {
    EXPECT_STREQ(trajectory_name(Trajectory::free_fall), "free-fall");
    EXPECT_STREQ(trajectory_name(Trajectory::incline), "incline");
    EXPECT_STREQ(trajectory_name(Trajectory::pendulum), "pendulum");
}

// ---------------------------------------------------------------------------
// Inertia as the limit of vanishing drop gap
// ---------------------------------------------------------------------------

TEST(InertiaLimitTest, ZeroGapGivesIdenticalSpeeds) {
    InertiaReport r = inertia_limit(InclineGeometry(Rational(1), Rational(3), Rational(0)));
    EXPECT_TRUE(r.v_upper.exact);
    EXPECT_EQ(r.v_upper.value, Rational(2));
    EXPECT_EQ(r.v_lower.value, Rational(2));
    EXPECT_EQ(r.speed_gap, Rational(0));
    EXPECT_EQ(r.vsq_gap, Rational(0));
    EXPECT_EQ(r.gap_bound, Rational(0));
}

TEST(InertiaLimitTest, PinnedExactGeometry)  {
    // drop 1 and gap 5/4: speeds 2 and 3, squares 4 and 9.
    InertiaReport r = inertia_limit(InclineGeometry(Rational(1), Rational(2), Rational(5, 4)));
    EXPECT_EQ(r.v_upper.value, Rational(2));
    EXPECT_EQ(r.v_lower.value, Rational(3));
    EXPECT_EQ(r.vsq_upper, Rational(4));
    EXPECT_EQ(r.vsq_lower, Rational(9));
    EXPECT_EQ(r.vsq_gap, Rational(5));
    EXPECT_EQ(r.speed_gap, Rational(1));
    EXPECT_EQ(r.gap_bound, Rational(5, 4));
    EXPECT_LE(r.speed_gap, r.gap_bound);
}

TEST(InertiaLimitTest, SquaredIdentityIsExactEvenWhenSpeedsAreNot) {
    InertiaReport r = inertia_limit(InclineGeometry(Rational(2), Rational(1), Rational(1, 2)));
    EXPECT_FALSE(r.v_upper.exact);
    EXPECT_FALSE(r.v_lower.exact);
    EXPECT_EQ(r.vsq_lower - r.vsq_upper, r.vsq_gap);
    EXPECT_EQ(r.vsq_gap, Rational(2));
    EXPECT_GT(r.speed_gap, Rational(0));
    EXPECT_LE(r.speed_gap, r.gap_bound);
}

TEST(InertiaLimitTest, GapBoundHoldsOnRandomGeometries) {
    std::mt19937_64 rng(600613);
    std::uniform_int_distribution<int> num(1, 64);
    for (int iter = 0; iter < 100; ++iter) {
        Rational drop(num(rng), 16);      // in [1/16, 4]
        Rational gap(num(rng), 32);       // in [1/32, 2]
        Rational run(num(rng), 8);
        InertiaReport r = inertia_limit(InclineGeometry(drop, run, gap));
        EXPECT_EQ(r.vsq_lower - r.vsq_upper, r.vsq_gap);
        EXPECT_EQ(r.vsq_gap, Rational(4) * gap);
        EXPECT_GT(r.speed_gap, Rational(0));
        EXPECT_LE(r.speed_gap, r.gap_bound);
    }
    EXPECT_THROW(InclineGeometry(Rational(0), Rational(1), Rational(0)), DomainError);
    EXPECT_THROW(InclineGeometry(Rational(1), Rational(0), Rational(0)), DomainError);
    EXPECT_THROW(InclineGeometry(Rational(1), Rational(1), Rational(-1)), DomainError);
}

// ---------------------------------------------------------------------------
// Degrees of speed and slowness
// ---------------------------------------------------------------------------

TEST(DegreesTest, SpeedDegreesCountWholeQuanta) {
    EXPECT_EQ(degrees_of_speed(Rational(7, 2), Rational(1, 2)), Integer(7));
    EXPECT_EQ(degrees_of_speed(Rational(1, 3), Rational(1, 2)), Integer(0));
    EXPECT_EQ(degrees_of_speed(Rational(0), Rational(1)), Integer(0));
    EXPECT_THROW(degrees_of_speed(Rational(-1), Rational(1)), DomainError);
    EXPECT_THROW(degrees_of_speed(Rational(1), Rational(0)), DomainError);
}

TEST(DegreesTest, RestHasInfiniteSlowness) {
    SlownessDegrees rest = degrees_of_slowness(Rational(0), Rational(1));
    EXPECT_TRUE(rest.infinite);
    SlownessDegrees slow = degrees_of_slowness(Rational(1, 10), Rational(1));
    EXPECT_FALSE(slow.infinite);
    EXPECT_EQ(slow.degrees, Integer(10));
    EXPECT_THROW(degrees_of_slowness(Rational(1), Rational(-1)), DomainError);
}

TEST(DegreesTest, SlownessOutgrowsEveryBoundNearRest) {
    // Leaving rest, the body climbs down through every degree of slowness.
    Rational quantum(1, 4);
    Integer prev = degrees_of_slowness(Rational(1), quantum).degrees;
    for (int k = 1; k <= 12; ++k) {
        Rational v(1, pow10(k));
        SlownessDegrees s = degrees_of_slowness(v, quantum);
        ASSERT_FALSE(s.infinite);
        EXPECT_GE(s.degrees, prev);
        prev = s.degrees;
    }
    EXPECT_GE(prev, Integer(pow10(12)));
}

// ---------------------------------------------------------------------------
// The cannonball threshold
// ---------------------------------------------------------------------------

TEST(SagredoThresholdTest, PinnedYearLongFall) {
    // 100 units of drop against a year of seconds.
    SagredoReport r = sagredo_threshold(Rational(100), Rational(31536000));
    EXPECT_EQ(r.epsilon, Rational(1, 315360));
    EXPECT_EQ(r.sub_degree, Rational(1, 630720));
    EXPECT_EQ(r.height_at_epsilon, Rational(1, Integer(315360) * 315360 * 4));
    EXPECT_LT(r.height_at_epsilon, Rational(1, pow10(11)));
    // Uniform motion at epsilon for the whole duration covers the bound.
    EXPECT_EQ(r.epsilon * Rational(31536000), Rational(100));
}

TEST(SagredoThresholdTest, SubDegreeIsPassedBeforeTheThresholdHeight) {
    SagredoReport r = sagredo_threshold(Rational(57), Rational(86400));
    // At height epsilon^2/4 the speed is exactly epsilon, so the smaller
    // degree epsilon/2 was acquired earlier, at a quarter of that height.
    Scalar v = speed_from_height(r.height_at_epsilon);
    ASSERT_TRUE(v.exact);
    EXPECT_EQ(v.value, r.epsilon);
    Scalar sub = speed_from_height(r.height_at_epsilon / Rational(4));
    ASSERT_TRUE(sub.exact);
    EXPECT_EQ(sub.value, r.sub_degree);
    EXPECT_THROW(sagredo_threshold(Rational(0), Rational(1)), DomainError);
    EXPECT_THROW(sagredo_threshold(Rational(1), Rational(0)), DomainError);
}

// ---------------------------------------------------------------------------
// Height bookkeeping
// ---------------------------------------------------------------------------

TEST(EnergyInvariantTest, PartsRestoreTheTotal) {
    EnergyLedger lg = energy_invariant(Rational(25), Rational(3));
    EXPECT_EQ(lg.fallen, Rational(9));
    EXPECT_EQ(lg.remaining, Rational(16));
    EXPECT_EQ(lg.total, Rational(25));
    EXPECT_THROW(energy_invariant(Rational(4), Rational(3)), DomainError);
    EXPECT_THROW(energy_invariant(Rational(4), Rational(-1)), DomainError);
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<int> num(0, 40);
    std::uniform_int_distribution<int> den(1, 12);
    for (int iter = 0; iter < 300; ++iter) {
        Rational t(num(rng), den(rng));
        Rational total = t * t + Rational(num(rng), den(rng));
        EnergyLedger r = energy_invariant(total, t);
        EXPECT_EQ(r.fallen + r.remaining, r.total);
        EXPECT_GE(r.remaining, Rational(0));
        EXPECT_EQ(r.fallen, fall_state(t).height);
    }
}
