#pragma once

#include <utility>

#include "motus/errors.hpp"
#include "motus/magnitudes.hpp"
#include "motus/rational.hpp"

// The Galilean fall law in normalized units: the distance fallen from rest
// in the first unit of time is the unit of length, so height and elapsed
// time are tied by H = t^2 and the acquired speed by v = 2t (equivalently
// v^2 = 4H). Everything here works in exact rationals; square roots that do
// not exist in the rationals are returned as certified decimal
// approximations alongside the exact squared value.

namespace motus::galileo {

using magnitudes::Genus;
using magnitudes::Magnitude;

// A number that is either exactly representable or a decimal approximation
// whose defect is certified by the caller-visible identity it was checked
// against (for speeds: |value^2 - 4H| <= 10^-precision).
struct Scalar {
    Rational value;
    bool exact;
};

// Snapshot of a fall from rest at time t: H = t^2, v = 2t.
struct FallState {
    Rational time;
    Rational height;
    Rational speed;
};

inline FallState fall_state(const Rational& t) {
    if (t < Rational(0)) throw DomainError("fall time cannot be negative");
    return {t, t * t, Rational(2) * t};
}

// v = 2 * sqrt(H). Exact when H is the square of a rational; otherwise the
// shortest decimal v (extending the requested precision as needed) with
// |v^2 - 4H| <= 10^-precision. The approximation is the nearest decimal of
// its length to the true speed, found by integer square root, and the
// defect bound is verified in exact arithmetic before returning.
inline Scalar speed_from_height(const Rational& height, int precision = 12) {
    if (height < Rational(0)) throw DomainError("height cannot be negative");
    if (precision < 1) throw DomainError("precision must be at least one digit");
    if (height.is_zero()) return {Rational(0), true};

    Integer root_num, root_den;
    if (is_perfect_square(height.num(), root_num) && is_perfect_square(height.den(), root_den))
        return {Rational(2 * root_num, root_den), true};

    const Rational target = Rational(4) * height;
    const Rational tolerance(1, pow10(precision));
    const Integer hn = height.num();
    const Integer hd = height.den();
    for (int q = precision + 2;; q += 4) {
        // n = round(10^q * 2 * sqrt(hn/hd)), via u = floor(2 * Hd * that).
        const Integer u = isqrt(16 * hn * hd * pow10(2 * q));
        const Integer n = (u + hd) / (2 * hd);
        Rational v(n, pow10(q));
        if ((v * v - target).abs() <= tolerance) return {std::move(v), false};
    }
}

// H = v^2 / 4, always exact.
inline Rational height_from_speed(const Rational& speed) {
    if (speed < Rational(0)) throw DomainError("speed cannot be negative");
    return speed * speed / Rational(4);
}

// One observed motion: a distance covered in a time.
struct MotionRecord {
    Magnitude distance;
    Magnitude time;

    MotionRecord(Magnitude d, Magnitude t) : distance(std::move(d)), time(std::move(t)) {
        if (distance.genus != Genus::length) throw GenusError("record distance must be a length");
        if (time.genus != Genus::time) throw GenusError("record time must be a time");
    }
};

// Two motions have the same celerity when the distances are in the same
// ratio as the times.
inline bool same_celerity(const MotionRecord& a, const MotionRecord& b) {
    return magnitudes::cross_ratio_oracle(a.distance, b.distance, a.time, b.time);
}

// The path a body descends along. The acquired speed depends only on the
// vertical drop, so the choice never changes the answer; accepting it makes
// the path independence visible at the call site.
enum class Trajectory { free_fall, incline, pendulum };

inline const char* trajectory_name(Trajectory t) {
    switch (t) {
        case Trajectory::free_fall: return "free-fall";
        case Trajectory::incline: return "incline";
        default: return "pendulum";
    }
}

inline Scalar speed_at_drop(Trajectory, const Rational& drop, int precision = 12) {
    return speed_from_height(drop, precision);
}

// An inclined plane with two marked points: the upper one a vertical drop
// `drop` below the start, the lower one a further `gap` below it. `run` is
// the horizontal extent of the plane (it never enters the speed law).
struct InclineGeometry {
    Rational drop;
    Rational run;
    Rational gap;

    InclineGeometry(Rational d, Rational r, Rational g)
        : drop(std::move(d)), run(std::move(r)), gap(std::move(g)) {
        if (!(drop > Rational(0))) throw DomainError("incline drop must be positive");
        if (!(run > Rational(0))) throw DomainError("incline run must be positive");
        if (gap < Rational(0)) throw DomainError("gap between marks cannot be negative");
    }
};

// Speeds at the two marks. The squared speeds are exact and differ by
// exactly 4 * gap; the speeds themselves differ by at most 2 * gap / v_upper,
// so as the marks merge the motion passes to the lower point with its speed
// unchanged. This is the limit that turns the incline into inertial motion
// on the horizontal.
struct InertiaReport {
    Scalar v_upper;
    Scalar v_lower;
    Rational vsq_upper; // exactly 4 * drop
    Rational vsq_lower; // exactly 4 * (drop + gap)
    Rational vsq_gap;   // exactly 4 * gap
    Rational speed_gap; // v_lower - v_upper at the working precision
    Rational gap_bound; // 2 * gap / v_upper
};

inline InertiaReport inertia_limit(const InclineGeometry& geom, int precision = 12) {
    Scalar upper = speed_from_height(geom.drop, precision);
    Scalar lower = speed_from_height(geom.drop + geom.gap, precision);
    Rational bound = Rational(2) * geom.gap / upper.value;
    return {upper,
            lower,
            Rational(4) * geom.drop,
            Rational(4) * (geom.drop + geom.gap),
            Rational(4) * geom.gap,
            lower.value - upper.value,
            std::move(bound)};
}

// Degree-of-speed arithmetic: how many whole quanta of speed a motion holds.
inline Integer degrees_of_speed(const Rational& speed, const Rational& quantum) {
    if (speed < Rational(0)) throw DomainError("speed cannot be negative");
    if (!(quantum > Rational(0))) throw DomainError("speed quantum must be positive");
    return (speed / quantum).floor();
}

// Degrees of slowness are the companions of degrees of speed: whole quanta
// of the reciprocal speed. Rest has infinite slowness, which is why a body
// leaving rest must climb down through every degree of slowness.
struct SlownessDegrees {
    bool infinite;
    Integer degrees; // meaningful only when finite
};

inline SlownessDegrees degrees_of_slowness(const Rational& speed, const Rational& quantum) {
    if (speed < Rational(0)) throw DomainError("speed cannot be negative");
    if (!(quantum > Rational(0))) throw DomainError("slowness quantum must be positive");
    if (speed.is_zero()) return {true, Integer(0)};
    return {false, (Rational(1) / (speed * quantum)).floor()};
}

// The reply to the objection that a falling body cannot have passed through
// arbitrarily small degrees of speed: a cannonball covering `bound` in its
// brief fall would need the whole `duration` to cover it at the uniform
// degree epsilon = bound / duration. The body does pass through degrees
// below epsilon (epsilon / 2 is one), but it has left them all behind by
// the time it has dropped epsilon^2 / 4, a height too small to observe.
struct SagredoReport {
    Rational epsilon;           // bound / duration
    Rational sub_degree;        // epsilon / 2, a degree the fall passes through
    Rational height_at_epsilon; // epsilon^2 / 4, where the fall outgrows epsilon
};

inline SagredoReport sagredo_threshold(const Rational& bound, const Rational& duration) {
    if (!(bound > Rational(0))) throw DomainError("distance bound must be positive");
    if (!(duration > Rational(0))) throw DomainError("duration must be positive");
    Rational epsilon = bound / duration;
    return {epsilon, epsilon / Rational(2), epsilon * epsilon / Rational(4)};
}

// Height bookkeeping for a fall with a fixed total drop available: what has
// been converted to motion by time t and what is still to fall. The two
// parts always restore the same total.
struct EnergyLedger {
    Rational fallen;    // t^2
    Rational remaining; // total - t^2
    Rational total;
};

inline EnergyLedger energy_invariant(const Rational& total, const Rational& t) {
    if (t < Rational(0)) throw DomainError("fall time cannot be negative");
    Rational fallen = t * t;
    if (total < fallen) throw DomainError("fall has outrun the available drop");
    return {fallen, total - fallen, total};
}

} // namespace motus::galileo
