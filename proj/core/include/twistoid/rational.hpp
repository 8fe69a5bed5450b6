#ifndef TWISTOID_RATIONAL_HPP
#define TWISTOID_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace twistoid {

/// Exact rational number in lowest terms with positive denominator.
/// All coordinate arithmetic in the library goes through this type; there is
/// no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    /// True for odd multiples of 1/2.
    bool is_half_odd() const { return den_ == 2; }

    long long as_integer() const {
        if (den_ != 1) throw std::logic_error("Rational::as_integer: not an integer");
        return num_;
    }

    /// Largest integer <= value.
    long long floor() const {
        if (num_ >= 0) return num_ / den_;
        return -(((-num_) + den_ - 1) / den_);
    }

    /// Fractional part in [0,1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { return make_raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

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

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// True iff a/b is an integer (b nonzero).
    static bool divides(const Rational& b, const Rational& a) { return (a / b).is_integer(); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational make_raw(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

/// Magnitude of the form coefficient * sqrt(radicand), radicand in {1,2,3}.
/// Used for norms of translational components along axis, face-diagonal and
/// body-diagonal directions; never evaluated numerically.
struct QuadMagnitude {
    Rational coefficient;  // >= 0
    int radicand = 1;      // squarefree, in {1,2,3}

    bool is_zero() const { return coefficient.is_zero(); }

    friend bool operator==(const QuadMagnitude& a, const QuadMagnitude& b) {
        if (a.coefficient.is_zero() && b.coefficient.is_zero()) return true;
        if (a.radicand == b.radicand) return a.coefficient == b.coefficient;
        // different radicands: equal only if squares match, which forces
        // coefficient^2 * radicand equality; compare exactly.
        return a.coefficient * a.coefficient * Rational(a.radicand) ==
               b.coefficient * b.coefficient * Rational(b.radicand);
    }
    friend bool operator!=(const QuadMagnitude& a, const QuadMagnitude& b) { return !(a == b); }
    friend bool operator<(const QuadMagnitude& a, const QuadMagnitude& b) {
        if (a.radicand == b.radicand) return a.coefficient < b.coefficient;
        return a.coefficient * a.coefficient * Rational(a.radicand) <
               b.coefficient * b.coefficient * Rational(b.radicand);
    }

    std::string str() const {
        if (radicand == 1) return coefficient.str();
        return coefficient.str() + "*sqrt(" + std::to_string(radicand) + ")";
    }
};

}  // namespace twistoid

#endif
