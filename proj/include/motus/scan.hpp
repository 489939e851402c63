#pragma once

#include <functional>
#include <string>
#include <vector>

#include "motus/errors.hpp"
#include "motus/rational.hpp"

// Parameter-sweep continuity probe. A family maps a rational parameter to an
// outcome vector; the scanner walks an even grid and flags parameter sites
// where adjacent outcomes move further than a threshold proportional to the
// grid step. For a family that is Lipschitz away from isolated discontinuity
// points, refining the step makes genuine jumps stand out while smooth
// variation falls below the threshold.

namespace motus::scan {

// One probe of the family. A family may decline to answer (covered == false)
// outside its domain of definition; such samples carry a tag naming the
// reason and take no part in difference measurements.
struct Sample {
    bool covered = true;
    std::vector<Rational> outcome;
    std::string tag; // why the point is uncovered, empty otherwise
};

using Family = std::function<Sample(const Rational&)>;

// A maximal run of adjacent grid pairs whose outcome difference exceeds the
// threshold. `param` is the right endpoint of the run's first exceeding
// pair: the earliest grid point at which the outcome has already moved.
struct Jump {
    Rational param;
    Rational magnitude;                 // largest componentwise difference in the run
    std::vector<Rational> by_component; // per-component maxima over the run
};

struct ScanReport {
    Rational step;
    Rational threshold; // kappa * step
    std::vector<Rational> grid;
    std::vector<Sample> samples;
    std::vector<Jump> jumps;
};

// Difference pass over an already-sampled grid. Differences are taken only
// between adjacent covered samples of equal outcome width; a difference
// strictly above the threshold is an exceedance, and consecutive exceeding
// pairs coalesce into one reported jump.
inline std::vector<Jump> find_jumps(const std::vector<Rational>& grid,
                                    const std::vector<Sample>& samples,
                                    const Rational& threshold) {
    std::vector<Jump> jumps;
    bool in_run = false;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const Sample& a = samples[i];
        const Sample& b = samples[i + 1];
        if (!a.covered || !b.covered || a.outcome.size() != b.outcome.size()) {
            in_run = false;
            continue;
        }
        std::vector<Rational> diff;
        diff.reserve(a.outcome.size());
        Rational worst(0);
        for (size_t k = 0; k < a.outcome.size(); ++k) {
            Rational d = (b.outcome[k] - a.outcome[k]).abs();
            if (worst < d) worst = d;
            diff.push_back(d);
        }
        if (worst > threshold) {
            if (!in_run) {
                jumps.push_back({grid[i + 1], worst, diff});
                in_run = true;
            } else {
                Jump& run = jumps.back();
                if (run.magnitude < worst) run.magnitude = worst;
                for (size_t k = 0; k < diff.size() && k < run.by_component.size(); ++k)
                    if (run.by_component[k] < diff[k]) run.by_component[k] = diff[k];
            }
        } else {
            in_run = false;
        }
    }
    return jumps;
}

// Sweep [lo, hi] inclusive with the given step and flag jumps against the
// threshold kappa * step.
inline ScanReport continuity_scan(const Family& family, const Rational& lo, const Rational& hi,
                                  const Rational& step, const Rational& kappa = Rational(10)) {
    if (!(step > Rational(0))) throw DomainError("scan step must be positive");
    if (hi < lo) throw RangeError("scan range is empty");

    ScanReport report;
    report.step = step;
    report.threshold = kappa * step;

    for (Rational t = lo; !(hi < t); t += step) {
        report.grid.push_back(t);
        report.samples.push_back(family(t));
    }
    report.jumps = find_jumps(report.grid, report.samples, report.threshold);
    return report;
}

} // namespace motus::scan
