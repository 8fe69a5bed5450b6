#include "twistoid/twist.hpp"

#include <array>
#include <stdexcept>

namespace twistoid {

std::string to_string(TwistType t) {
    static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI"};
    return names[static_cast<int>(t)];
}

std::string to_string(PetrieHandedness h) {
    switch (h) {
        case PetrieHandedness::VertexAxis: return "vertex-axis";
        case PetrieHandedness::RightPetrie: return "right";
        case PetrieHandedness::LeftPetrie: return "left";
    }
    return "?";
}

namespace {

// Solve A p = b for rational 3x3 A by the adjugate; A must be invertible.
RVec3 solve3(const std::array<std::array<Rational, 3>, 3>& a, const RVec3& b) {
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    };
    Rational det = a[0][0] * det2(1, 2, 1, 2) - a[0][1] * det2(1, 2, 0, 2) + a[0][2] * det2(1, 2, 0, 1);
    if (det.is_zero()) throw std::logic_error("solve3: singular matrix");
    std::array<std::array<Rational, 3>, 3> adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            // cofactor with the sign folded into the cyclic index choice
            adj[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
        }
    RVec3 p;
    for (int i = 0; i < 3; ++i) p[i] = (adj[i][0] * b.x + adj[i][1] * b.y + adj[i][2] * b.z) / det;
    return p;
}

IVec3 canonical_direction_sign(const IVec3& d) {
    return (-d) < d ? d : -d;
}

}  // namespace

IVec3 proper_rotation_axis(const SignedPerm& m) {
    if (!m.is_proper() || m.is_identity())
        throw std::invalid_argument("proper_rotation_axis: not a proper rotation");
    int order = m.order();
    // Column of the sum of powers of m (the projector onto the fixed line,
    // times the order).
    SignedPerm p = SignedPerm::identity();
    std::array<std::array<long long, 3>, 3> acc{};
    for (int k = 0; k < order; ++k) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc[i][j] += p.entry(i, j);
        p = p * m;
    }
    IVec3 dir{0, 0, 0};
    for (int j = 0; j < 3 && dir.is_zero(); ++j) dir = IVec3{acc[0][j], acc[1][j], acc[2][j]};
    if (dir.is_zero()) throw std::logic_error("proper_rotation_axis: rotation without axis");
    return canonical_direction_sign(dir.primitive());
}

std::optional<TwistData> analyze_twist(const Isometry& g) {
    const SignedPerm& m = g.linear;
    if (!m.is_proper() || m.is_identity()) return std::nullopt;
    int order = m.order();  // proper non-identity: 2, 3 or 4
    IVec3 dir = proper_rotation_axis(m);

    // Split the translation into axial and perpendicular parts.
    Rational axial = dot(g.translation, dir) / Rational(dot(dir, dir));
    RVec3 along = axial * RVec3(dir);
    if (along.is_zero()) return std::nullopt;  // pure rotation, has fixed points
    RVec3 perp = g.translation - along;

    // Axis point: unique solution of (I - m) p = perp with p . dir = 0,
    // obtained from the invertible system ((I - m) + dir dir^T) p = perp.
    std::array<std::array<Rational, 3>, 3> b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b[i][j] = Rational((i == j ? 1 : 0) - m.entry(i, j)) + Rational(dir[i] * dir[j]);
    RVec3 foot = solve3(b, perp);

    TwistData t;
    t.source = g;
    t.rotation = m;
    t.axisPoint = foot;
    t.axisDirection = dir;
    t.rotationOrder = order;
    t.translationalComponent = along;
    t.normClass = QuadMagnitude{axial.abs(), dir.nonzero_count()};
    return t;
}

Isometry reconstruct_twist(const TwistData& t) {
    RVec3 moved = t.axisPoint - t.rotation.apply(t.axisPoint);
    return {t.rotation, t.translationalComponent + moved};
}

std::set<CentroidClass> axis_centroid_classes(const TwistData& t) {
    // Points of the axis with all coordinates in (1/2)Z, found in doubled
    // coordinates: 2*axisPoint + u*dir integral.  Direction entries are in
    // {-1,0,1}, so each constraint pins u modulo 1.
    std::set<CentroidClass> out;
    RVec3 pp = Rational(2) * t.axisPoint;
    const IVec3& d = t.axisDirection;
    std::optional<Rational> u0;
    for (int i = 0; i < 3; ++i) {
        if (d[i] == 0) {
            if (!pp[i].is_integer()) return out;
        } else {
            Rational f = (-(pp[i] * Rational(d[i]))).frac();
            if (!u0)
                u0 = f;
            else if (*u0 != f)
                return out;
        }
    }
    if (!u0) return out;
    RVec3 base = pp + *u0 * RVec3(d);
    for (int step = 0; step < 2; ++step) {
        int odd = 0;
        for (int i = 0; i < 3; ++i) {
            long long v = base[i].as_integer();
            odd += static_cast<int>(((v % 2) + 2) % 2);
        }
        out.insert(static_cast<CentroidClass>(odd));
        base = base + RVec3(d);
    }
    return out;
}

std::optional<TwistType> classify_twist_type(const TwistData& t) {
    int dirClass = t.axisDirection.nonzero_count();
    auto marks = axis_centroid_classes(t);
    auto has = [&](CentroidClass c) { return marks.count(c) != 0; };
    const Rational& coeff = t.normClass.coefficient;

    if (t.rotationOrder == 2 && dirClass == 1) {
        if (!coeff.is_integer()) return std::nullopt;
        if (has(CentroidClass::Vertex) && has(CentroidClass::Edge)) return TwistType::I;
        if (has(CentroidClass::Edge) && has(CentroidClass::Square)) return TwistType::II;
        if (has(CentroidClass::Square) && has(CentroidClass::Cube)) return TwistType::III;
        return std::nullopt;
    }
    if (t.rotationOrder == 2 && dirClass == 2) {
        bool whole = coeff.is_integer();   // norm in sqrt(2) Z
        bool half = coeff.is_half_odd();   // norm an odd multiple of sqrt(2)/2
        if (whole && has(CentroidClass::Vertex) && has(CentroidClass::Square)) return TwistType::IV;
        if (half && has(CentroidClass::Edge) && marks.size() == 1) return TwistType::V;
        if (whole && has(CentroidClass::Edge) && has(CentroidClass::Cube)) return TwistType::VI;
        if (half && has(CentroidClass::Square) && marks.size() == 1) return TwistType::VII;
        return std::nullopt;
    }
    if (t.rotationOrder == 3 && dirClass == 3) {
        if (coeff.is_integer() && has(CentroidClass::Vertex) && has(CentroidClass::Cube)) return TwistType::VIII;
        if (coeff.den() == 3 && marks.empty()) return TwistType::IX;
        return std::nullopt;
    }
    if (t.rotationOrder == 4 && dirClass == 1) {
        if (!coeff.is_integer()) return std::nullopt;
        if (has(CentroidClass::Vertex) && has(CentroidClass::Edge)) return TwistType::X;
        if (has(CentroidClass::Square) && has(CentroidClass::Cube)) return TwistType::XI;
        return std::nullopt;
    }
    return std::nullopt;
}

long long petrie_m(const TwistData& t) {
    if (t.rotationOrder != 3) throw std::invalid_argument("petrie_m: rotation order is not 3");
    Rational m = Rational(3) * t.normClass.coefficient;
    if (!m.is_integer()) throw std::invalid_argument("petrie_m: norm is not in (sqrt(3)/3) Z");
    return m.as_integer();
}

PetrieHandedness petrie_handedness(const TwistData& t) {
    long long m = petrie_m(t);
    switch (m % 3) {
        case 0: return PetrieHandedness::VertexAxis;
        case 1: return PetrieHandedness::RightPetrie;
        default: return PetrieHandedness::LeftPetrie;
    }
}

const std::vector<TwistTypeRow>& twist_type_table() {
    static const std::vector<TwistTypeRow> rows = {
        {TwistType::I, 2, true, true, false, false, "e1", "Z"},
        {TwistType::II, 2, false, true, true, false, "e1", "Z"},
        {TwistType::III, 2, false, false, true, true, "e1", "Z"},
        {TwistType::IV, 2, true, false, true, false, "e1+e2", "sqrt(2) Z"},
        {TwistType::V, 2, false, true, false, false, "e1+e2", "sqrt(2)/2 Z \\ sqrt(2) Z"},
        {TwistType::VI, 2, false, true, false, true, "e1+e2", "sqrt(2) Z"},
        {TwistType::VII, 2, false, false, true, false, "e1+e2", "sqrt(2)/2 Z \\ sqrt(2) Z"},
        {TwistType::VIII, 3, true, false, false, true, "e1+e2+e3", "sqrt(3) Z"},
        {TwistType::IX, 3, false, false, false, false, "e1+e2+e3", "sqrt(3)/3 Z \\ sqrt(3) Z"},
        {TwistType::X, 4, true, true, false, false, "e1", "Z"},
        {TwistType::XI, 4, false, false, true, true, "e1", "Z"},
    };
    return rows;
}

const std::vector<std::pair<TwistType, Isometry>>& canonical_twist_representatives() {
    static const std::vector<std::pair<TwistType, Isometry>> reps = [] {
        auto half_z = SignedPerm::diag(-1, -1, 1);
        // half-turn about the (1,1,0) axis direction: (x,y,z) -> (y,x,-z)
        auto half_diag = SignedPerm::from_perm_signs({1, 0, 2}, {1, 1, -1});
        // 3-fold cyclic (x,y,z) -> (z,x,y) and anticyclic (x,y,z) -> (y,z,x)
        auto rot3_cyc = SignedPerm::from_perm_signs({2, 0, 1}, {1, 1, 1});
        auto rot3_anti = SignedPerm::from_perm_signs({1, 2, 0}, {1, 1, 1});
        auto rot4_z = SignedPerm::from_perm_signs({1, 0, 2}, {-1, 1, 1});  // (x,y,z)->(-y,x,z)

        auto iv = [](long long a, long long b, long long c) { return RVec3(IVec3{a, b, c}); };
        std::vector<std::pair<TwistType, Isometry>> v;
        v.push_back({TwistType::I, {half_z, iv(0, 0, 1)}});
        v.push_back({TwistType::II, {half_z, iv(1, 0, 1)}});
        v.push_back({TwistType::III, {half_z, iv(1, 1, 1)}});
        v.push_back({TwistType::IV, {half_diag, iv(1, 1, 0)}});
        v.push_back({TwistType::V, {half_diag, iv(1, 0, 0)}});
        v.push_back({TwistType::VI, {half_diag, iv(1, 1, 1)}});
        v.push_back({TwistType::VII, {half_diag, iv(1, 0, 1)}});
        v.push_back({TwistType::VIII, {rot3_cyc, iv(1, 1, 1)}});
        v.push_back({TwistType::IX, {rot3_anti, iv(1, 0, 0)}});
        v.push_back({TwistType::X, {rot4_z, iv(0, 0, 1)}});
        v.push_back({TwistType::XI, {rot4_z, iv(1, 0, 1)}});
        return v;
    }();
    return reps;
}

}  // namespace twistoid
