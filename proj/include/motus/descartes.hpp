#pragma once

#include <string>
#include <utility>

#include "motus/errors.hpp"
#include "motus/rational.hpp"
#include "motus/scan.hpp"

// Collision rules on a line. Body B arrives from the left with velocity
// v_b, body C sits to the right with velocity v_c; positive velocities point
// rightward, and a collision happens only when the closing speed v_b - v_c
// is positive. The Cartesian law reproduces a fixed list of rules for
// head-on impacts and impacts on a resting body, exactly as stated, with no
// relabeling of bodies and no extrapolation: configurations outside the
// list are reported as not covered rather than guessed at. The elastic law
// answers everywhere and conserves momentum and vis viva; the Cartesian law
// conserves only the quantity of motion (size times unsigned speed), which
// is where the two part ways.

namespace motus::descartes {

struct Body {
    Rational size;
    Rational velocity;

    Body(Rational s, Rational v) : size(std::move(s)), velocity(std::move(v)) {
        if (!(size > Rational(0))) throw DomainError("body size must be positive");
    }
};

// Velocities after impact. When the rule list does not reach the
// configuration, covered is false, the rule names the gap, and the
// velocities are the incoming ones, untouched.
struct Outcome {
    bool covered;
    std::string rule;
    Rational v_b;
    Rational v_c;
};

inline Rational closing_speed(const Body& b, const Body& c) {
    return b.velocity - c.velocity;
}

inline Outcome cartesian_collide(const Body& b, const Body& c) {
    if (!(closing_speed(b, c) > Rational(0)))
        throw NoCollisionError("bodies do not approach each other");

    const Rational& B = b.size;
    const Rational& C = c.size;

    if (b.velocity > Rational(0) && c.velocity < Rational(0)) {
        // Head-on impact; compare unsigned speeds V and W.
        const Rational V = b.velocity;
        const Rational W = -c.velocity;
        if (B == C && V == W) // rule 1: both rebound at their own speeds
            return {true, "R1", -b.velocity, -c.velocity};
        if (B > C && V == W) // rule 2: the larger continues, the smaller rebounds
            return {true, "R2", b.velocity, -c.velocity};
        if (B == C && V > W) // rule 3: C rebounds and both continue at the mean speed
            return {true, "R3", (V + W) / Rational(2), (V + W) / Rational(2)};
    } else if (c.velocity.is_zero() && b.velocity > Rational(0)) {
        // Impact on a body at rest.
        if (B < C) // rule 4: the resting body is unmoved, however fast B comes
            return {true, "R4", -b.velocity, Rational(0)};
        if (B > C) { // rule 5: B carries C along, its motion shared by size
            Rational shared = b.velocity * B / (B + C);
            return {true, "R5", shared, std::move(shared)};
        }
        // rule 6: equal sizes; B rebounds with three quarters of its speed
        // and drags C forward with the remaining quarter
        return {true, "R6", Rational(-3, 4) * b.velocity, Rational(1, 4) * b.velocity};
    }
    return {false, "not-covered", b.velocity, c.velocity};
}

inline Outcome elastic_collide(const Body& b, const Body& c) {
    if (!(closing_speed(b, c) > Rational(0)))
        throw NoCollisionError("bodies do not approach each other");
    const Rational& B = b.size;
    const Rational& C = c.size;
    const Rational sum = B + C;
    return {true, "elastic", ((B - C) * b.velocity + Rational(2) * C * c.velocity) / sum,
            ((C - B) * c.velocity + Rational(2) * B * b.velocity) / sum};
}

enum class Law { cartesian, elastic };

inline const char* law_name(Law law) { return law == Law::cartesian ? "cartesian" : "elastic"; }

inline Outcome collide(Law law, const Body& b, const Body& c) {
    return law == Law::cartesian ? cartesian_collide(b, c) : elastic_collide(b, c);
}

// Three candidate conserved quantities, audited before and after one impact.
// qom is Descartes' quantity of motion (size times unsigned speed); momentum
// signs the speeds; vis viva squares them.
struct ConservationLedger {
    Rational qom_before, qom_after, qom_delta;
    Rational momentum_before, momentum_after, momentum_delta;
    Rational visviva_before, visviva_after, visviva_delta;
};

inline ConservationLedger ledger(const Body& b, const Body& c, const Outcome& after) {
    if (!after.covered) throw DomainError("no ledger for an uncovered configuration");
    auto qom = [](const Rational& m, const Rational& v) { return m * v.abs(); };
    auto mom = [](const Rational& m, const Rational& v) { return m * v; };
    auto vis = [](const Rational& m, const Rational& v) { return m * v * v; };
    ConservationLedger lg;
    lg.qom_before = qom(b.size, b.velocity) + qom(c.size, c.velocity);
    lg.qom_after = qom(b.size, after.v_b) + qom(c.size, after.v_c);
    lg.qom_delta = lg.qom_after - lg.qom_before;
    lg.momentum_before = mom(b.size, b.velocity) + mom(c.size, c.velocity);
    lg.momentum_after = mom(b.size, after.v_b) + mom(c.size, after.v_c);
    lg.momentum_delta = lg.momentum_after - lg.momentum_before;
    lg.visviva_before = vis(b.size, b.velocity) + vis(c.size, c.velocity);
    lg.visviva_after = vis(b.size, after.v_b) + vis(c.size, after.v_c);
    lg.visviva_delta = lg.visviva_after - lg.visviva_before;
    return lg;
}

// Which ingredient of the configuration a sweep varies.
enum class Knob { size_b, size_c, v_b, v_c };

inline const char* knob_name(Knob k) {
    switch (k) {
        case Knob::size_b: return "size_b";
        case Knob::size_c: return "size_c";
        case Knob::v_b: return "v_b";
        default: return "v_c";
    }
}

inline Body with_knob(const Body& base, Knob knob, bool is_b, const Rational& value) {
    Body out = base;
    if (is_b && knob == Knob::size_b) out.size = value;
    if (is_b && knob == Knob::v_b) out.velocity = value;
    if (!is_b && knob == Knob::size_c) out.size = value;
    if (!is_b && knob == Knob::v_c) out.velocity = value;
    if (!(out.size > Rational(0))) throw DomainError("body size must be positive");
    return out;
}

// Sweep one knob across [lo, hi] and report where the after-velocities
// (v_b', v_c') jump. Configurations the law declines (outside the rule list
// or not approaching) become uncovered samples tagged with the reason, so a
// sweep may pass through them without manufacturing differences.
inline scan::ScanReport continuity_scan(Law law, const Body& b, const Body& c, Knob knob,
                                        const Rational& lo, const Rational& hi,
                                        const Rational& step,
                                        const Rational& kappa = Rational(10)) {
    scan::Family family = [=](const Rational& value) -> scan::Sample {
        Body vb = with_knob(b, knob, true, value);
        Body vc = with_knob(c, knob, false, value);
        try {
            Outcome out = collide(law, vb, vc);
            if (!out.covered) return {false, {}, out.rule};
            return {true, {out.v_b, out.v_c}, out.rule};
        } catch (const NoCollisionError&) {
            return {false, {}, "no-collision"};
        }
    };
    return scan::continuity_scan(family, lo, hi, step, kappa);
}

} // namespace motus::descartes
