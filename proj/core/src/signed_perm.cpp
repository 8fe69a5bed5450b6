#include "twistoid/signed_perm.hpp"

#include <stdexcept>

namespace twistoid {

SignedPerm::SignedPerm() {
    m_ = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

SignedPerm SignedPerm::from_perm_signs(const std::array<int, 3>& perm, const std::array<int, 3>& signs) {
    SignedPerm p;
    p.m_ = {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    for (int i = 0; i < 3; ++i) p.m_[i][perm[i]] = signs[i];
    return p;
}

SignedPerm SignedPerm::inversion() { return diag(-1, -1, -1); }

SignedPerm SignedPerm::diag(int sx, int sy, int sz) {
    return from_perm_signs({0, 1, 2}, {sx, sy, sz});
}

IVec3 SignedPerm::apply(const IVec3& v) const {
    IVec3 r;
    for (int i = 0; i < 3; ++i) r[i] = m_[i][0] * v.x + m_[i][1] * v.y + m_[i][2] * v.z;
    return r;
}

RVec3 SignedPerm::apply(const RVec3& v) const {
    RVec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = Rational(m_[i][0]) * v.x + Rational(m_[i][1]) * v.y + Rational(m_[i][2]) * v.z;
    return r;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long long s = 0;
            for (int k = 0; k < 3; ++k) s += a.m_[i][k] * b.m_[k][j];
            r.m_[i][j] = s;
        }
    return r;
}

SignedPerm SignedPerm::transpose() const {
    SignedPerm r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[j][i];
    return r;
}

SignedPerm SignedPerm::inverse() const { return transpose(); }

int SignedPerm::det() const {
    long long d = m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
                  m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
                  m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
    return static_cast<int>(d);
}

bool SignedPerm::is_identity() const {
    return m_[0][0] == 1 && m_[1][1] == 1 && m_[2][2] == 1 && det() == 1 &&
           m_[0][1] == 0 && m_[0][2] == 0 && m_[1][2] == 0;
}

int SignedPerm::order() const {
    SignedPerm p = *this;
    for (int k = 1; k <= 6; ++k) {
        if (p.is_identity()) return k;
        p = p * (*this);
    }
    throw std::logic_error("SignedPerm::order: order exceeds 6");
}

const std::vector<SignedPerm>& SignedPerm::all() {
    static const std::vector<SignedPerm> table = [] {
        std::vector<SignedPerm> v;
        v.reserve(48);
        static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                                 {0, 2, 1},
                                                                 {1, 0, 2},
                                                                 {1, 2, 0},
                                                                 {2, 0, 1},
                                                                 {2, 1, 0}}};
        for (const auto& perm : perms)
            for (int bits = 0; bits < 8; ++bits) {
                std::array<int, 3> signs = {(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1};
                v.push_back(from_perm_signs(perm, signs));
            }
        return v;
    }();
    return table;
}

int SignedPerm::index() const {
    const auto& table = all();
    for (int i = 0; i < static_cast<int>(table.size()); ++i)
        if (table[i] == *this) return i;
    throw std::logic_error("SignedPerm::index: matrix not in the 48-element table");
}

const SignedPerm& SignedPerm::from_index(int idx) {
    if (idx < 0 || idx >= 48) throw std::out_of_range("SignedPerm::from_index");
    return all()[idx];
}

std::ostream& operator<<(std::ostream& os, const SignedPerm& p) {
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << "(" << p.m_[i][0] << "," << p.m_[i][1] << "," << p.m_[i][2] << ")";
    }
    return os << "]";
}

}  // namespace twistoid
