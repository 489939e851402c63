#pragma once

#include <utility>
#include <vector>

#include "motus/errors.hpp"
#include "motus/rational.hpp"

// Dense univariate polynomials over the exact rationals, plus the small
// amount of real-root machinery (Sturm chains) needed to decide, exactly,
// whether a polynomial stays non-negative on a closed interval.

namespace motus {

class Poly {
public:
    Poly() = default;
    // Coefficients ascending: c[0] + c[1] t + c[2] t^2 + ...
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static Poly constant(const Rational& v) { return Poly({v}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }

    Rational operator()(const Rational& t) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(Integer(i));
        return Poly(std::move(d));
    }

    // Antiderivative with zero constant term.
    Poly antiderivative() const {
        if (c_.empty()) return Poly();
        std::vector<Rational> a(c_.size() + 1);
        a[0] = Rational(0);
        for (size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / Rational(Integer(i + 1));
        return Poly(std::move(a));
    }

    Rational integral(const Rational& a, const Rational& b) const {
        Poly f = antiderivative();
        return f(b) - f(a);
    }

    Poly scaled(const Rational& k) const {
        std::vector<Rational> s(c_);
        for (auto& v : s) v *= k;
        return Poly(std::move(s));
    }

    // p(t + c), by Horner over the linear factor.
    Poly shifted(const Rational& c) const {
        Poly res;
        Poly lin({c, Rational(1)});
        for (size_t i = c_.size(); i-- > 0;) res = res * lin + constant(c_[i]);
        return res;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) s[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) s[i] += b.c_[i];
        return Poly(std::move(s));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(Rational(-1)); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> p(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(p));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Long division over the rationals: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot;
    int db = b.degree();
    if (a.degree() >= db) quot.assign(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if (static_cast<int>(rem.size()) - 1 < db) break;
        size_t shift = rem.size() - 1 - static_cast<size_t>(db);
        Rational coef = rem.back() / b.leading();
        quot[shift] = coef;
        for (int i = 0; i <= db; ++i)
            rem[shift + static_cast<size_t>(i)] -= coef * b.coeffs()[static_cast<size_t>(i)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// Monic greatest common divisor.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().reciprocal());
}

// p with repeated roots collapsed to simple ones: p / gcd(p, p').
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() < 1) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return divmod(p, g).first;
}

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& q) {
    std::vector<Poly> s;
    s.push_back(q);
    Poly d = q.derivative();
    if (d.is_zero()) return s;
    s.push_back(d);
    while (true) {
        Poly r = divmod(s[s.size() - 2], s.back()).second;
        if (r.is_zero()) break;
        // Negate and rescale by a positive constant to keep numbers small;
        // positive scaling preserves the sign-variation count.
        r = r.scaled(r.leading().abs().reciprocal() * Rational(-1));
        s.push_back(std::move(r));
    }
    return s;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = p(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace detail

// Number of distinct real roots of a squarefree q in the open interval
// (a, b). Roots sitting exactly at a or b are divided out first, which is
// exact because they are then rational.
inline int count_roots_between(Poly q, const Rational& a, const Rational& b) {
    if (q.is_zero()) throw DomainError("root count of the zero polynomial");
    if (!(a < b)) return 0;
    while (q.degree() >= 1 && q(a).is_zero()) q = divmod(q, Poly({-a, Rational(1)})).first;
    while (q.degree() >= 1 && q(b).is_zero()) q = divmod(q, Poly({-b, Rational(1)})).first;
    if (q.degree() < 1) return 0;
    auto chain = detail::sturm_chain(q);
    return detail::sign_variations(chain, a) - detail::sign_variations(chain, b);
}

namespace detail {

// Sign of p at the unique root of q inside (l, r); q squarefree with
// exactly one root there. Decides p(root) == 0 through gcd(p, q), then
// shrinks the bracket until p has constant sign across it.
inline int sign_at_single_root(const Poly& p, const Poly& q, Rational l, Rational r) {
    Poly g = poly_gcd(p, q);
    if (g.degree() >= 1 && count_roots_between(g, l, r) >= 1) return 0;
    Poly sp = squarefree_part(p);
    while (true) {
        if (count_roots_between(sp, l, r) == 0) {
            Rational mid = (l + r) / Rational(2);
            return p(mid).sign();
        }
        Rational mid = (l + r) / Rational(2);
        if (q(mid).is_zero()) return p(mid).sign();
        if (count_roots_between(q, l, mid) == 1)
            r = mid;
        else
            l = mid;
    }
}

// p >= 0 at every root of q inside (l, r)?
inline bool nonnegative_at_roots(const Poly& p, const Poly& q, const Rational& l,
                                 const Rational& r) {
    int k = count_roots_between(q, l, r);
    if (k == 0) return true;
    if (k == 1) return sign_at_single_root(p, q, l, r) >= 0;
    Rational mid = (l + r) / Rational(2);
    if (q(mid).is_zero() && p(mid).is_negative()) return false;
    return nonnegative_at_roots(p, q, l, mid) && nonnegative_at_roots(p, q, mid, r);
}

} // namespace detail

// Exact decision: p(t) >= 0 for every t in [a, b]. The minimum of p on the
// interval sits at an endpoint or at a stationary point, so it is enough to
// check the endpoints and the sign of p at every root of p' in between.
inline bool nonnegative_on(const Poly& p, const Rational& a, const Rational& b) {
    if (b < a) throw DomainError("nonnegative_on: empty interval");
    if (p.is_zero()) return true;
    if (p(a).is_negative() || p(b).is_negative()) return false;
    if (a == b) return true;
    Poly d = p.derivative();
    if (d.is_zero()) return true;
    return detail::nonnegative_at_roots(p, squarefree_part(d), a, b);
}

} // namespace motus
