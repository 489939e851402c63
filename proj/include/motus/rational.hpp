#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "motus/errors.hpp"

namespace motus {

using Integer = boost::multiprecision::cpp_int;

inline Integer pow10(int digits) {
    if (digits < 0) throw DomainError("pow10: negative exponent");
    Integer r = 1;
    for (int i = 0; i < digits; ++i) r *= 10;
    return r;
}

// Floor of the square root of a non-negative integer.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt: negative radicand");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

// The universal scalar: an exact rational number with arbitrary-precision
// numerator and denominator.
//
// Invariants: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
// All arithmetic is exact; nothing here ever touches floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw DomainError("reciprocal of zero");
        return Rational(den_, num_);
    }

    // Largest integer <= value (rounds toward minus infinity).
    Integer floor() const {
        Integer q = num_ / den_; // truncates toward zero
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw DomainError("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    // Canonical form makes equality a field-by-field comparison.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Canonical "p/q" form, denominator always written: "2/3", "-5/1", "0/1".
    std::string str() const { return num_.str() + "/" + den_.str(); }

    // Fixed-point decimal with `digits` fractional digits, rounded to
    // nearest with ties away from zero. Deterministic across platforms.
    std::string decimal(int digits) const {
        if (digits < 0) throw DomainError("decimal: negative digit count");
        Integer scaled = boost::multiprecision::abs(num_) * pow10(digits);
        Integer q = scaled / den_;
        Integer r = scaled % den_;
        if (2 * r >= den_) ++q;
        std::string s = q.str();
        if (digits == 0) return (num_ < 0 && q != 0 ? "-" : "") + s;
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, std::string(static_cast<size_t>(digits) + 1 - s.size(), '0'));
        s.insert(s.size() - static_cast<size_t>(digits), ".");
        if (num_ < 0 && q != 0) s.insert(0, "-");
        return s;
    }

    // Accepts "p", "p/q", optional leading sign, surrounding spaces.
    static Rational parse(std::string_view text) {
        size_t b = text.find_first_not_of(" \t");
        size_t e = text.find_last_not_of(" \t");
        if (b == std::string_view::npos) throw DomainError("empty rational literal");
        text = text.substr(b, e - b + 1);
        size_t slash = text.find('/');
        std::string_view ns = slash == std::string_view::npos ? text : text.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        return Rational(parse_integer(ns), parse_integer(ds));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << "/" << r.den_;
        return os;
    }

private:
    Integer num_;
    Integer den_;

    void normalize() {
        if (den_ == 0) throw DomainError("zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        num_ /= g;
        den_ /= g;
    }

    static Integer parse_integer(std::string_view s) {
        bool neg = false;
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) throw DomainError("malformed rational literal");
        for (char c : s)
            if (c < '0' || c > '9') throw DomainError("malformed rational literal");
        Integer v{std::string(s)};
        return neg ? Integer(-v) : v;
    }
};

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace motus
