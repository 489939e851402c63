#pragma once

#include <string>
#include <utility>

#include "motus/errors.hpp"
#include "motus/rational.hpp"

// Magnitudes, ratios, and the definitional machinery of proportion from
// Elements Book V: the Archimedean test (definition 4) and the equimultiple
// test for sameness of ratio (definition 5), together with a fast exact
// oracle and a separator search for ratios that differ.

namespace motus::magnitudes {

enum class Genus { length, time, celerity, weight, density, abstract };

inline const char* genus_name(Genus g) {
    switch (g) {
        case Genus::length: return "length";
        case Genus::time: return "time";
        case Genus::celerity: return "celerity";
        case Genus::weight: return "weight";
        case Genus::density: return "density";
        case Genus::abstract: return "abstract";
    }
    return "?";
}

// A strictly positive quantity of one kind. Zero and negative values are
// rejected: Book V magnitudes are things that can exceed one another when
// multiplied, so there is no zero magnitude and no signed magnitude.
struct Magnitude {
    Rational value;
    Genus genus;

    Magnitude(Rational v, Genus g) : value(std::move(v)), genus(g) {
        if (!value.is_positive()) throw DomainError("magnitude must be strictly positive");
    }

    // The k-th equimultiple, k >= 1.
    Magnitude times(const Integer& k) const {
        if (k < 1) throw DomainError("multiple must be a positive integer");
        return Magnitude(value * Rational(k), genus);
    }
};

inline void require_same_genus(const Magnitude& a, const Magnitude& b, const char* where) {
    if (a.genus != b.genus)
        throw GenusError(std::string(where) + ": cannot relate " + genus_name(a.genus) +
                         " to " + genus_name(b.genus));
}

// An ordered pair of magnitudes of the same genus. Its value is exact.
struct Ratio {
    Magnitude antecedent;
    Magnitude consequent;

    Ratio(Magnitude a, Magnitude c) : antecedent(std::move(a)), consequent(std::move(c)) {
        require_same_genus(antecedent, consequent, "ratio");
    }

    Rational value() const { return antecedent.value / consequent.value; }
};

// Definition 4 witness: the least positive integer m with m*a > b. Over the
// positive rationals such an m always exists, so this never fails once the
// genus check passes. The result satisfies (m-1)*a <= b < m*a.
inline Integer has_ratio(const Magnitude& a, const Magnitude& b) {
    require_same_genus(a, b, "has_ratio");
    return (b.value / a.value).floor() + 1;
}

struct SameRatioVerdict {
    bool same;
    // First violating equimultiple pair in lexicographic order (m outer,
    // n inner) when !same: sign(m*e - n*f) != sign(m*g - n*h).
    Integer m;
    Integer n;
};

namespace detail {
inline int cmp3(const Integer& a, const Integer& b) { return a < b ? -1 : (b < a ? 1 : 0); }
}

// Definition 5, bounded: e:f and g:h stand in the same ratio when every
// equimultiple comparison (m*e vs n*f) agrees in sense with (m*g vs n*h).
// The scan covers 1 <= m, n <= bound, so a Same verdict is sound only up to
// the bound; Different verdicts are final and carry a checkable witness.
// Cost is O(bound^2) comparisons with early exit at the first violation.
inline SameRatioVerdict same_ratio(const Magnitude& e, const Magnitude& f,
                                   const Magnitude& g, const Magnitude& h,
                                   const Integer& bound) {
    require_same_genus(e, f, "same_ratio (first pair)");
    require_same_genus(g, h, "same_ratio (second pair)");
    if (bound < 1) throw BoundError("same_ratio: bound must be a positive integer");
    // sign(m*e - n*f) reduces to integer arithmetic on cross products.
    const Integer a = e.value.num() * f.value.den();
    const Integer b = f.value.num() * e.value.den();
    const Integer c = g.value.num() * h.value.den();
    const Integer d = h.value.num() * g.value.den();
    for (Integer m = 1; m <= bound; ++m) {
        const Integer ma = m * a;
        const Integer mc = m * c;
        for (Integer n = 1; n <= bound; ++n) {
            if (detail::cmp3(ma, n * b) != detail::cmp3(mc, n * d))
                return {false, m, n};
        }
    }
    return {true, 0, 0};
}

// Exact restatement of definition 5 over the rationals: e:f = g:h iff
// e*h = f*g. Used as the authority the bounded scan is tested against.
inline bool cross_ratio_oracle(const Magnitude& e, const Magnitude& f,
                               const Magnitude& g, const Magnitude& h) {
    require_same_genus(e, f, "cross_ratio_oracle (first pair)");
    require_same_genus(g, h, "cross_ratio_oracle (second pair)");
    return e.value * h.value == f.value * g.value;
}

// A rational strictly between two unequal ratios: the mediant of the two
// reduced ratio values, (p1+p2)/(q1+q2). Its denominator is at most
// den(e:f) + den(g:h), which tells callers how large a same_ratio bound is
// needed to expose the difference.
inline Rational separating_rational(const Magnitude& e, const Magnitude& f,
                                    const Magnitude& g, const Magnitude& h) {
    require_same_genus(e, f, "separating_rational (first pair)");
    require_same_genus(g, h, "separating_rational (second pair)");
    const Rational r1 = e.value / f.value;
    const Rational r2 = g.value / h.value;
    if (r1 == r2) throw NoSeparatorError("separating_rational: the ratios are equal");
    return Rational(r1.num() + r2.num(), r1.den() + r2.den());
}

// The equimultiple pair named by a separator n/m: m multiplies the
// antecedents, n the consequents, and the two comparisons disagree in sign
// whenever n/m lies strictly between the ratios.
inline std::pair<Integer, Integer> witness_from_separator(const Rational& separator) {
    return {separator.den(), separator.num()};
}

} // namespace motus::magnitudes
