#ifndef TWISTOID_VEC_HPP
#define TWISTOID_VEC_HPP

#include <array>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "twistoid/rational.hpp"

namespace twistoid {

/// Integer 3-vector (lattice points, primitive directions, lattice bases).
struct IVec3 {
    long long x = 0, y = 0, z = 0;

    long long& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    long long operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend IVec3 operator+(const IVec3& a, const IVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend IVec3 operator-(const IVec3& a, const IVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend IVec3 operator*(long long s, const IVec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    IVec3 operator-() const { return {-x, -y, -z}; }

    friend bool operator==(const IVec3& a, const IVec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(const IVec3& a, const IVec3& b) { return !(a == b); }
    friend bool operator<(const IVec3& a, const IVec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }

    friend long long dot(const IVec3& a, const IVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

    /// Divide out the gcd of the entries (zero vector stays zero).
    IVec3 primitive() const {
        long long g = std::gcd(std::gcd(std::llabs(x), std::llabs(y)), std::llabs(z));
        if (g <= 1) return *this;
        return {x / g, y / g, z / g};
    }

    int nonzero_count() const { return (x != 0) + (y != 0) + (z != 0); }

    friend std::ostream& operator<<(std::ostream& os, const IVec3& v) {
        return os << "(" << v.x << "," << v.y << "," << v.z << ")";
    }
};

/// Rational 3-vector (translations, axis points).
struct RVec3 {
    Rational x, y, z;

    RVec3() = default;
    RVec3(Rational a, Rational b, Rational c) : x(a), y(b), z(c) {}
    RVec3(const IVec3& v) : x(v.x), y(v.y), z(v.z) {}

    Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend RVec3 operator+(const RVec3& a, const RVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend RVec3 operator-(const RVec3& a, const RVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend RVec3 operator*(const Rational& s, const RVec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    RVec3 operator-() const { return {-x, -y, -z}; }

    friend bool operator==(const RVec3& a, const RVec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(const RVec3& a, const RVec3& b) { return !(a == b); }

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_integral() const { return x.is_integer() && y.is_integer() && z.is_integer(); }

    IVec3 as_ivec() const { return {x.as_integer(), y.as_integer(), z.as_integer()}; }

    friend Rational dot(const RVec3& a, const RVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    friend Rational dot(const RVec3& a, const IVec3& b) {
        return a.x * Rational(b.x) + a.y * Rational(b.y) + a.z * Rational(b.z);
    }

    friend std::ostream& operator<<(std::ostream& os, const RVec3& v) {
        return os << "(" << v.x << "," << v.y << "," << v.z << ")";
    }
};

/// Rational 2-vector for work in the plane perpendicular to a twist axis.
struct RVec2 {
    Rational x, y;

    friend RVec2 operator+(const RVec2& a, const RVec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend RVec2 operator-(const RVec2& a, const RVec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend RVec2 operator*(const Rational& s, const RVec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const RVec2& a, const RVec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const RVec2& a, const RVec2& b) { return !(a == b); }
};

}  // namespace twistoid

#endif
