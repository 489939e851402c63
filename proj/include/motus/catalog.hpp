#pragma once

#include <string>
#include <vector>

#include "motus/scenario.hpp"

// Bundled scenario catalog. Each entry is a complete scenario text that can
// be run by name from the command line; the collection doubles as living
// documentation of the scenario format. Entries are tagged with the outcome
// they demonstrate: most succeed, one exercises the honest "not-covered"
// verdict, and one shows a rejected input.

namespace motus::scenario {

enum class Expected { ok, uncovered, error };

struct CatalogEntry {
    std::string name;
    std::string title;
    std::string text;
    Expected expected = Expected::ok;
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"rule1-symmetric", "equal bodies meeting at equal speeds rebound",
         R"(module = descartes
operation = collide
law = cartesian
size_b = 1
v_b = 1
size_c = 1
v_c = -1
)"},
        {"rule4-rebound", "a smaller body rebounds from a larger body at rest",
         R"(module = descartes
operation = collide
law = cartesian
size_b = 1
v_b = 5
size_c = 2
v_c = 0
)"},
        {"rule5-third", "a double body drags an equal body at rest along at 2/3 speed",
         R"(module = descartes
operation = collide
law = cartesian
size_b = 2
v_b = 1
size_c = 1
v_c = 0
)"},
        {"rule5-quarter", "a triple body drags an equal body at rest along at 3/4 speed",
         R"(module = descartes
operation = collide
law = cartesian
size_b = 3
v_b = 1
size_c = 1
v_c = 0
)"},
        {"rule6-rebound", "equal bodies with one at rest: part rebound and part transfer",
         R"(module = descartes
operation = collide
law = cartesian
size_b = 1
v_b = 1
size_c = 1
v_c = 0
)"},
        {"elastic-exchange", "equal elastic bodies exchange velocities",
         R"(module = descartes
operation = collide
law = elastic
size_b = 1
v_b = 1
size_c = 1
v_c = 0
)"},
        {"cartesian-scan", "size sweep across the rule 4/5 seam: outcomes jump",
         R"(module = descartes
operation = scan
law = cartesian
knob = size_b
v_b = 1
size_c = 1
v_c = 0
lo = 1/2
hi = 3/2
step = 1/200
kappa = 10
plot.kind = scan
)"},
        {"elastic-scan", "the same size sweep under elastic rules stays continuous",
         R"(module = descartes
operation = scan
law = elastic
knob = size_b
v_b = 1
size_c = 1
v_c = 0
lo = 1/2
hi = 3/2
step = 1/200
kappa = 10
plot.kind = scan
)"},
        {"not-covered-demo", "a catch-up collision the seven rules never address",
         R"(module = descartes
operation = collide
law = cartesian
size_b = 1
v_b = 2
size_c = 1
v_c = 1
)",
         Expected::uncovered},
        {"domain-error-demo", "two bodies at rest: no collision to resolve",
         R"(module = descartes
operation = collide
law = cartesian
size_b = 1
v_b = 0
size_c = 1
v_c = 0
)",
         Expected::error},
        {"fall-table", "odd-number law of fall: heights and speeds over five time units",
         R"(module = galileo
operation = fall
sweep.key = t
sweep.lo = 0
sweep.hi = 5
sweep.step = 1/2
plot.kind = curve
)"},
        {"drop-free-fall", "speed acquired through a drop of two units, falling straight",
         R"(module = galileo
operation = speed_at_drop
trajectory = free-fall
drop = 2
)"},
        {"drop-incline", "speed acquired through the same drop along an incline",
         R"(module = galileo
operation = speed_at_drop
trajectory = incline
drop = 2
)"},
        {"drop-pendulum", "speed acquired through the same drop along a pendulum arc",
         R"(module = galileo
operation = speed_at_drop
trajectory = pendulum
drop = 2
)"},
        {"inertia-figure", "two inclines with a gap: the speed mismatch shrinks with the gap",
         R"(module = galileo
operation = inertia
drop = 1
run = 4
sweep.key = gap
sweep.lo = 0
sweep.hi = 1
sweep.step = 1/16
plot.kind = curve
)"},
        {"energy-ledger", "height fallen plus height remaining stays constant",
         R"(module = galileo
operation = energy
total = 25
sweep.key = t
sweep.lo = 0
sweep.hi = 5
sweep.step = 1/2
plot.kind = curve
)"},
        {"sagredo-year", "a hundred-unit drop in a year: the starting degree of speed",
         R"(module = galileo
operation = sagredo
bound = 100
duration = 31536000
)"},
        {"archimedean-witness", "a thousandth has a ratio to a thousand: the multiple that exceeds",
         R"(module = magnitudes
operation = has_ratio
a = 1/1000
b = 1000
)"},
        {"eudoxus-same-ratio", "1:2 against 2:3 fails the equimultiple test",
         R"(module = magnitudes
operation = same_ratio
e = 1
f = 2
g = 2
h = 3
bound = 10
)"},
        {"eudoxus-separator", "the mediant 3/5 separates 1:2 from 2:3",
         R"(module = magnitudes
operation = separator
e = 1
f = 2
g = 2
h = 3
)"},
        {"ross-distance", "distance and celerity of a forced body in a dense medium",
         R"(module = aristotle
operation = motion
constant = 2
mass = 3
time = 5
density = 4
)"},
        {"media-ratio", "celerities across air and water stand as the densities reversed",
         R"(module = aristotle
operation = media_ratio
constant = 1
mass = 1
time = 1
density_1 = 1
density_2 = 8
)"},
        {"vacuum-divergence", "halving the density doubles the celerity without bound",
         R"(module = aristotle
operation = vacuum
constant = 1
mass = 1
time = 1
densities = 1, 1/2, 1/4, 1/8, 1/16
plot.kind = curve
)"},
        {"haulers-threshold", "a hundred haulers move the ship but one hauler moves nothing",
         R"(module = aristotle
operation = haulers
threshold = 10
sweep.key = force
sweep.lo = 9
sweep.hi = 11
sweep.step = 1/4
plot.kind = curve
)"},
        {"oresme-classify", "a parabolic velocity figure is difformly difform",
         R"(module = oresme
operation = classify
breaks = 0, 1
piece.1 = 0, 0, 1
max_depth = 4
)"},
        {"oresme-triangle", "the triangular figure of a uniformly difform motion",
         R"(module = oresme
operation = figure
breaks = 0, 1
piece.1 = 0, 2
plot.kind = diagram
)"},
        {"mean-degree", "a uniformly difform motion equals its middle degree",
         R"(module = oresme
operation = mean_degree
breaks = 0, 2
piece.1 = 3, 2
)"},
    };
    return entries;
}

inline const CatalogEntry* find_catalog(const std::string& name) {
    for (const auto& entry : catalog())
        if (entry.name == name) return &entry;
    return nullptr;
}

} // namespace motus::scenario
