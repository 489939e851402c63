#pragma once

#include <utility>
#include <vector>

#include "motus/errors.hpp"
#include "motus/polynomial.hpp"
#include "motus/rational.hpp"

// Configurations of velocity: piecewise-polynomial degree-of-speed profiles
// over exact rationals, their classification by uniformity of variation
// (iterated through formal derivatives), the exact quadrature giving the
// total celerity, and the uniform profile of equal total celerity whose
// degree is the mean of the extreme degrees.

namespace motus::oresme {

// Raw piecewise polynomial: pieces[i] holds on [breaks[i], breaks[i+1]].
// No sign constraint here; derivatives of valid velocity profiles may dip
// below zero (remission) and still need classifying.
struct PiecewisePoly {
    std::vector<Rational> breaks;
    std::vector<Poly> pieces;

    Rational start() const { return breaks.front(); }
    Rational end() const { return breaks.back(); }

    Rational eval(const Rational& t) const {
        if (t < start() || t > end()) throw DomainError("evaluation outside the profile domain");
        size_t i = 0;
        while (i + 1 < pieces.size() && !(t < breaks[i + 1])) ++i;
        return pieces[i](t);
    }

    bool is_constant() const {
        if (!pieces.front().is_constant()) return false;
        for (const Poly& p : pieces)
            if (!(p == pieces.front())) return false;
        return true;
    }

    bool is_continuous() const {
        for (size_t i = 0; i + 1 < pieces.size(); ++i)
            if (pieces[i](breaks[i + 1]) != pieces[i + 1](breaks[i + 1])) return false;
        return true;
    }

    PiecewisePoly derivative() const {
        PiecewisePoly d{breaks, {}};
        d.pieces.reserve(pieces.size());
        for (const Poly& p : pieces) d.pieces.push_back(p.derivative());
        return d;
    }

    Rational integral() const {
        Rational total(0);
        for (size_t i = 0; i < pieces.size(); ++i)
            total += pieces[i].integral(breaks[i], breaks[i + 1]);
        return total;
    }
};

// A degree-of-speed profile on [0, T]: breakpoints strictly increasing and
// starting at 0, piece degrees capped, and v(t) >= 0 everywhere (checked
// exactly, piece by piece). Jumps at interior breakpoints are allowed; such
// profiles report continuous() == false and are not iterated by classify.
class VelocityProfile {
public:
    VelocityProfile(std::vector<Rational> breaks, std::vector<Poly> pieces, int degree_cap = 3)
        : data_{std::move(breaks), std::move(pieces)} {
        if (data_.breaks.size() < 2) throw DomainError("profile needs at least two breakpoints");
        if (data_.pieces.size() + 1 != data_.breaks.size())
            throw DomainError("profile needs exactly one piece per breakpoint interval");
        if (!data_.breaks.front().is_zero()) throw DomainError("profile must start at t = 0");
        for (size_t i = 0; i + 1 < data_.breaks.size(); ++i)
            if (!(data_.breaks[i] < data_.breaks[i + 1]))
                throw DomainError("breakpoints must increase strictly");
        for (const Poly& p : data_.pieces)
            if (p.degree() > degree_cap) throw DomainError("piece degree exceeds the cap");
        for (size_t i = 0; i < data_.pieces.size(); ++i)
            if (!nonnegative_on(data_.pieces[i], data_.breaks[i], data_.breaks[i + 1]))
                throw DomainError("degrees of speed must be non-negative");
    }

    const PiecewisePoly& data() const { return data_; }
    bool continuous() const { return data_.is_continuous(); }
    Rational duration() const { return data_.end(); }
    Rational operator()(const Rational& t) const { return data_.eval(t); }
    Rational initial_degree() const { return data_.pieces.front()(data_.breaks.front()); }
    Rational final_degree() const { return data_.pieces.back()(data_.breaks.back()); }

private:
    PiecewisePoly data_;
};

enum class Verdict { uniform, difform };

// One verdict per depth; the list ends at the first Uniform, at a jump
// profile (not iterated), or when max_depth is exhausted.
using UniformityClass = std::vector<Verdict>;

inline const char* verdict_name(Verdict v) {
    return v == Verdict::uniform ? "uniform" : "difform";
}

// Depth 0 asks whether the quality itself is uniform (constant); each
// further depth asks the same of the formal derivative. [difform, uniform]
// is the uniformly difform case: variation at a constant, nonzero rate.
inline UniformityClass classify(const VelocityProfile& p, int max_depth = 4) {
    if (max_depth <= 0) throw BoundError("classify: max_depth must be positive");
    UniformityClass out;
    PiecewisePoly cur = p.data();
    for (int depth = 0;; ++depth) {
        if (cur.is_constant()) {
            out.push_back(Verdict::uniform);
            break;
        }
        out.push_back(Verdict::difform);
        if (!cur.is_continuous()) break; // jump profiles are not iterated
        if (depth + 1 >= max_depth) break;
        cur = cur.derivative();
    }
    return out;
}

// Human-facing label for the first two depths.
inline std::string class_label(const UniformityClass& c) {
    if (c.size() == 1 && c[0] == Verdict::uniform) return "uniform";
    if (c.size() == 2 && c[1] == Verdict::uniform) return "uniformly difform";
    return "difformly difform";
}

// Total celerity: the exact area under the profile. Returned as a plain
// rational because the rest profile legitimately integrates to zero.
inline Rational total_celerity(const VelocityProfile& p) { return p.data().integral(); }

// The uniform profile covering the same total celerity in the same time.
// Defined for uniform and uniformly difform profiles only; the equivalent
// degree is the mean of the initial and final degrees, and the equality of
// total celerities is exact, not approximate.
inline VelocityProfile mean_degree_equivalent(const VelocityProfile& p) {
    UniformityClass c = classify(p, 2);
    if (c.size() == 1 && c[0] == Verdict::uniform) return p;
    if (!(c.size() == 2 && c[1] == Verdict::uniform))
        throw ClassError("mean_degree_equivalent needs a uniform or uniformly difform profile");
    Rational mean = (p.initial_degree() + p.final_degree()) / Rational(2);
    return VelocityProfile({Rational(0), p.duration()}, {Poly::constant(mean)});
}

// a followed by b, with b's time axis shifted to start where a ends.
inline VelocityProfile concat(const VelocityProfile& a, const VelocityProfile& b) {
    const PiecewisePoly& pa = a.data();
    const PiecewisePoly& pb = b.data();
    std::vector<Rational> breaks = pa.breaks;
    std::vector<Poly> pieces = pa.pieces;
    const Rational offset = a.duration();
    for (size_t i = 1; i < pb.breaks.size(); ++i) breaks.push_back(pb.breaks[i] + offset);
    for (const Poly& p : pb.pieces) pieces.push_back(p.shifted(-offset));
    int cap = 0;
    for (const Poly& p : pieces) cap = std::max(cap, p.degree());
    return VelocityProfile(std::move(breaks), std::move(pieces), cap);
}

} // namespace motus::oresme
