#include "twistoid/group.hpp"

#include <numeric>

namespace twistoid {

namespace {

const RVec3 kTau{Rational(1, 2), Rational(1, 2), Rational(1, 2)};

SignedPerm half_turn_z() { return SignedPerm::diag(-1, -1, 1); }
// half-turn about the (1,-1,0) direction: (x,y,z) -> (-y,-x,-z)
SignedPerm half_turn_diag() { return SignedPerm::from_perm_signs({1, 0, 2}, {-1, -1, -1}); }
SignedPerm rot3_cyclic() { return SignedPerm::from_perm_signs({2, 0, 1}, {1, 1, 1}); }      // (x,y,z)->(z,x,y)
SignedPerm rot3_anticyclic() { return SignedPerm::from_perm_signs({1, 2, 0}, {1, 1, 1}); }  // (x,y,z)->(y,z,x)
SignedPerm rot4_z() { return SignedPerm::from_perm_signs({1, 0, 2}, {-1, 1, 1}); }          // (x,y,z)->(-y,x,z)

Isometry require_integral(const Isometry& g, const char* what) {
    if (!preserves_tessellation(g)) throw NonIntegralGenerator(what);
    return g;
}

void finish(GroupSpec& g, const IVec3& t1, const IVec3& t2, const IVec3& t3) {
    g.lattice = TranslationLattice::from_basis(t1, t2, t3);
    g.rotationPowers.clear();
    SignedPerm p = SignedPerm::identity();
    for (int k = 0; k < g.m; ++k) {
        g.rotationPowers.push_back(p);
        p = p * g.sigma1().linear;
    }
    // self-checks: the base power must be the first lattice vector and the
    // group must act freely
    Isometry basePower = power(g.sigma1(), g.m);
    if (!basePower.is_translation() || basePower.translation.as_ivec() != t1)
        throw NonIntegralGenerator("base twist power does not give the expected translation");
    if (!is_fixed_point_free_witness(g, 1))
        throw NonIntegralGenerator("constructed group is not fixed-point free");
}

GroupSpec build_axial(const DicosmAxialParams& p) {
    GroupSpec g;
    g.kind = ManifoldKind::DicosmAxial;
    g.m = 2;
    g.axisDirection = {0, 0, 1};
    SignedPerm r = half_turn_z();
    auto gen = [&](long long P, long long Q) {
        return require_integral({r, RVec3(IVec3{P, Q, p.C})}, "dicosm-axial generator");
    };
    g.generators = {gen(p.P1, 0), gen(p.P2, 0), gen(p.P3, p.Q3)};
    g.derived = compose(compose(g.generators[2], inverse(g.generators[0])), g.generators[1]);
    finish(g, {0, 0, 2 * p.C}, {p.P2 - p.P1, 0, 0}, {p.P3 - p.P1, p.Q3, 0});
    return g;
}

GroupSpec build_diagonal(const DicosmDiagonalParams& p) {
    GroupSpec g;
    g.kind = ManifoldKind::DicosmDiagonal;
    g.m = 2;
    g.axisDirection = {1, -1, 0};
    SignedPerm r = half_turn_diag();
    auto gen = [&](long long P, long long Q3) {
        RVec3 w{Rational(P + p.N, 2), Rational(P - p.N, 2), Rational(Q3)};
        return require_integral({r, w}, "dicosm-diagonal generator");
    };
    g.generators = {gen(p.P1, 0), gen(p.P2, 0), gen(p.P3, p.Q3)};
    g.derived = compose(compose(g.generators[2], inverse(g.generators[0])), g.generators[1]);
    long long D = (p.P2 - p.P1) / 2, E = (p.P3 - p.P1) / 2;
    finish(g, {p.N, -p.N, 0}, {D, D, 0}, {E, E, p.Q3});
    return g;
}

GroupSpec build_tricosm(const TricosmParams& p) {
    GroupSpec g;
    g.kind = ManifoldKind::Tricosm;
    g.m = 3;
    g.axisDirection = {1, 1, 1};

    RVec3 foot = (p.M % 3 == 0) ? RVec3() : RVec3{Rational(1, 3), Rational(-1, 3), Rational(0)};
    RVec3 along{Rational(p.M, 3), Rational(p.M, 3), Rational(p.M, 3)};
    auto make_sigma1 = [&](const SignedPerm& rot) {
        return Isometry{rot, along + (foot - rot.apply(foot))};
    };
    Isometry cyc = make_sigma1(rot3_cyclic());
    Isometry anti = make_sigma1(rot3_anticyclic());
    bool cycOk = preserves_tessellation(cyc), antiOk = preserves_tessellation(anti);
    if (p.M % 3 == 0) {
        if (!(cycOk && antiOk)) throw NonIntegralGenerator("tricosm vertex-axis twist must allow both senses");
    } else if (cycOk == antiOk) {
        throw NonIntegralGenerator("tricosm Petrie-axis twist must fix exactly one rotation sense");
    }
    Isometry s1 = cycOk ? cyc : anti;

    // sigma_2: the same twist conjugated by the translation moving the axis
    // to the (a,b) offset in the basis v1=(2,-1,-1)/3, v2=(1,1,-2)/3.
    RVec3 offset{Rational(2 * p.a + p.b, 3), Rational(p.b - p.a, 3), Rational(-p.a - 2 * p.b, 3)};
    Isometry s2 = require_integral(conjugate(s1, Isometry::from_translation(offset)), "tricosm sigma_2");

    // sigma_3 from sigma_3^2 = sigma_1 sigma_2: (I + rot) w3 = rot w2 + w1.
    Isometry s1s2 = compose(s1, s2);
    RVec3 rhs = s1s2.translation;
    const SignedPerm& rot = s1.linear;
    std::array<std::array<Rational, 3>, 3> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = Rational((i == j ? 1 : 0) + rot.entry(i, j));
    // solve (I+rot) w3 = rhs by elimination on the 3x3 rational system
    RVec3 w3;
    {
        // the matrix is invertible for a 3-fold rotation; use the adjugate
        auto det2 = [&](int r0, int r1, int c0, int c1) {
            return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
        };
        Rational det =
            a[0][0] * det2(1, 2, 1, 2) - a[0][1] * det2(1, 2, 0, 2) + a[0][2] * det2(1, 2, 0, 1);
        for (int i = 0; i < 3; ++i) {
            std::array<Rational, 3> adjRow;
            for (int j = 0; j < 3; ++j) {
                int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
                int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                adjRow[j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
            }
            w3[i] = (adjRow[0] * rhs.x + adjRow[1] * rhs.y + adjRow[2] * rhs.z) / det;
        }
    }
    g.derived = require_integral({rot, w3}, "tricosm sigma_3");

    g.generators = {s1, s2};
    finish(g, {p.M, p.M, p.M}, {p.a, p.b, -p.a - p.b}, {-p.b, p.a + p.b, -p.a});
    return g;
}

GroupSpec build_tetracosm(const TetracosmParams& p) {
    GroupSpec g;
    g.kind = ManifoldKind::Tetracosm;
    g.m = 4;
    g.axisDirection = {0, 0, 1};
    Isometry s1{rot4_z(), RVec3(IVec3{0, 0, p.C})};
    Isometry s2{half_turn_z(), RVec3(IVec3{p.P, p.Q, 2 * p.C})};
    g.generators = {require_integral(s1, "tetracosm sigma_1"), require_integral(s2, "tetracosm sigma_2")};
    g.derived = compose(inverse(s1), s2);
    finish(g, {0, 0, 4 * p.C}, {p.P, p.Q, 0}, {p.Q, -p.P, 0});
    return g;
}

}  // namespace

GroupSpec build_group(const TwistoidParams& params) {
    if (auto* p = std::get_if<DicosmAxialParams>(&params.value)) return build_axial(*p);
    if (auto* p = std::get_if<DicosmDiagonalParams>(&params.value)) return build_diagonal(*p);
    if (auto* p = std::get_if<TricosmParams>(&params.value)) return build_tricosm(*p);
    return build_tetracosm(std::get<TetracosmParams>(params.value));
}

void build_hexacosm_group() { throw HexacosmImpossible(); }

const TranslationLattice& translation_lattice(const GroupSpec& g) { return g.lattice; }

std::optional<CanonicalElement> canonical_element(const GroupSpec& g, const Isometry& x) {
    if (!preserves_tessellation(x)) return std::nullopt;
    for (int k = 0; k < g.m; ++k) {
        if (!(x.linear == g.rotationPowers[k])) continue;
        Isometry rest = compose(x, inverse(power(g.sigma1(), k)));
        return CanonicalElement{k, g.lattice.reduce(rest.translation.as_ivec())};
    }
    return std::nullopt;
}

bool contains(const GroupSpec& g, const Isometry& x) {
    auto ce = canonical_element(g, x);
    return ce && ce->cosetVector.is_zero();
}

bool normalizes(const GroupSpec& g, const Isometry& x) {
    for (const auto& s : g.generators) {
        if (!contains(g, conjugate(s, x))) return false;
        if (!contains(g, conjugate(s, inverse(x)))) return false;
    }
    return true;
}

bool is_fixed_point_free_witness(const GroupSpec& g, int wordLengthBound) {
    if (wordLengthBound < 1) throw std::invalid_argument("wordLengthBound must be >= 1");
    if (g.lattice.index() == 0) return false;
    const IVec3& d = g.axisDirection;
    // axial component subgroup of the translation lattice
    long long latAxial = 0;
    for (const auto& t : g.lattice.basis()) latAxial = std::gcd(latAxial, dot(t, d));
    for (int k = 1; k < g.m; ++k) {
        Isometry pk = power(g.sigma1(), k);
        Rational axial = dot(pk.translation, d);
        if (axial.is_zero()) return false;
        if (latAxial != 0 && axial.is_integer() && axial.as_integer() % latAxial == 0) return false;
    }
    return true;
}

GroupSpec dual_group(const GroupSpec& g) {
    GroupSpec out = g;
    Isometry tau = Isometry::from_translation(kTau);
    for (auto& s : out.generators) s = conjugate(s, tau);
    out.derived = conjugate(out.derived, tau);
    return out;
}

}  // namespace twistoid
