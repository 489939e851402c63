#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motus/errors.hpp"
#include "motus/magnitudes.hpp"
#include "motus/rational.hpp"

// Medium dynamics in the Aristotelian mold: distance and celerity laws that
// scale with the mover and inversely with the density of the medium, the
// celerity ratio across two media, the divergence of celerity as the medium
// thins toward the void, and the ship-haulers threshold below which a motive
// force produces no motion at all.

namespace motus::aristotle {

using magnitudes::Genus;
using magnitudes::Magnitude;
using magnitudes::Ratio;

// A medium the mobile moves through; density measures its resistance.
struct Medium {
    std::string name;
    Rational density;

    Medium(std::string n, Rational d) : name(std::move(n)), density(std::move(d)) {
        if (!(density > Rational(0))) throw DomainError("medium density must be positive");
    }
};

// Fixed data of one motion: a constant of proportionality, the mover's mass,
// and the elapsed time.
struct MotionParams {
    Rational constant_c;
    Rational mass;
    Rational time;

    MotionParams(Rational c, Rational m, Rational t)
        : constant_c(std::move(c)), mass(std::move(m)), time(std::move(t)) {
        if (!(constant_c > Rational(0))) throw DomainError("constant must be positive");
        if (!(mass > Rational(0))) throw DomainError("mass must be positive");
        if (!(time > Rational(0))) throw DomainError("time must be positive");
    }
};

// D = C * M * T / density.
inline Magnitude distance_in_medium(const MotionParams& p, const Medium& m) {
    return Magnitude(p.constant_c * p.mass * p.time / m.density, Genus::length);
}

// V = C * M / density.
inline Magnitude celerity_in_medium(const MotionParams& p, const Medium& m) {
    return Magnitude(p.constant_c * p.mass / m.density, Genus::celerity);
}

// Celerity in `first` compared with celerity in `second`; the value of the
// ratio is density(second) / density(first), the inverse of the densities.
inline Ratio celerity_ratio_across_media(const MotionParams& p, const Medium& first,
                                         const Medium& second) {
    return Ratio(celerity_in_medium(p, first), celerity_in_medium(p, second));
}

// The density at which the celerity law reaches the given bound; in any
// rarer medium the mobile is faster than the bound.
inline Rational density_for_celerity(const MotionParams& p, const Rational& bound) {
    if (!(bound > Rational(0))) throw DomainError("celerity bound must be positive");
    return p.constant_c * p.mass / bound;
}

struct ThinningSample {
    Rational density;
    Rational celerity;
};

// The celerity law evaluated along a thinning sequence of media. `diverges`
// records that the law has no finite limit: for every bound there is a
// density (density_for_celerity) below which the celerity exceeds it, which
// is the classical argument that motion in a void is impossible under this
// law.
struct ThinningReport {
    std::vector<ThinningSample> samples;
    bool diverges = true;
};

inline ThinningReport vacuum_limit(const MotionParams& p, const std::vector<Rational>& densities) {
    if (densities.size() < 2)
        throw SequenceError("thinning sequence needs at least two densities");
    for (const Rational& d : densities)
        if (!(d > Rational(0))) throw SequenceError("densities must be positive");
    for (size_t i = 0; i + 1 < densities.size(); ++i)
        if (!(densities[i + 1] < densities[i]))
            throw SequenceError("densities must decrease strictly");
    ThinningReport report;
    report.samples.reserve(densities.size());
    for (const Rational& d : densities)
        report.samples.push_back({d, p.constant_c * p.mass / d});
    return report;
}

// Outcome of applying a motive force against a threshold load.
struct HaulersOutcome {
    bool moving;
    Rational celerity; // zero at rest, proportional to the force otherwise
};

// Below the threshold the force produces nothing; from the threshold on,
// effect is proportional to force (unit constant). One hauler cannot budge
// the ship; enough haulers move it, and the response is a step, not a ramp.
inline HaulersOutcome haulers_motion(const Rational& force, const Rational& threshold) {
    if (!(threshold > Rational(0))) throw DomainError("hauling threshold must be positive");
    if (force < threshold) return {false, Rational(0)};
    return {true, force};
}

} // namespace motus::aristotle
