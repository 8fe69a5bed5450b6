#ifndef TWISTOID_SIGNED_PERM_HPP
#define TWISTOID_SIGNED_PERM_HPP

#include <array>
#include <ostream>
#include <span>
#include <vector>

#include "twistoid/vec.hpp"

namespace twistoid {

/// Signed permutation matrix: 3x3, entries in {-1,0,+1}, exactly one nonzero
/// per row and column.  These 48 matrices form the point group of the cubic
/// tessellation (the stabilizer of the origin).
class SignedPerm {
public:
    /// Identity by default.
    SignedPerm();

    /// row i maps to sign[i] * e_{perm[i]}: entry m[i][perm[i]] = sign[i].
    static SignedPerm from_perm_signs(const std::array<int, 3>& perm, const std::array<int, 3>& signs);

    static SignedPerm identity() { return SignedPerm(); }

    /// Central inversion x -> -x.
    static SignedPerm inversion();

    /// Diagonal matrix diag(sx, sy, sz), each in {-1,+1}.
    static SignedPerm diag(int sx, int sy, int sz);

    long long entry(int r, int c) const { return m_[r][c]; }

    IVec3 apply(const IVec3& v) const;
    RVec3 apply(const RVec3& v) const;
    IVec3 column(int c) const { return {m_[0][c], m_[1][c], m_[2][c]}; }

    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);

    SignedPerm inverse() const;  // = transpose
    SignedPerm transpose() const;

    int det() const;
    bool is_identity() const;
    bool is_proper() const { return det() == 1; }

    /// Multiplicative order (1..6 within this group).
    int order() const;

    friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.m_ == b.m_; }
    friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.m_ < b.m_; }

    /// All 48 signed permutations in a fixed enumeration order.
    static const std::vector<SignedPerm>& all();

    /// Position in the fixed enumeration (0..47).
    int index() const;
    static const SignedPerm& from_index(int idx);

    friend std::ostream& operator<<(std::ostream& os, const SignedPerm& p);

private:
    std::array<std::array<long long, 3>, 3> m_;
};

}  // namespace twistoid

#endif
