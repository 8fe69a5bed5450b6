#include "twistoid/flag_complex.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "twistoid/twist.hpp"

namespace twistoid {

namespace {

// Precomputed frame transitions: result frame of each rank adjacency, and
// the frame image under each point-group element.
struct FrameTables {
    std::array<std::array<int, 4>, 48> adjacentFrame;
    std::array<std::array<int, 48>, 48> actionFrame;  // [m][f] = index of M*F

    FrameTables() {
        const auto& all = SignedPerm::all();
        for (int fi = 0; fi < 48; ++fi) {
            const SignedPerm& f = all[fi];
            std::array<SignedPerm, 4> imgs;
            // rank 0: negate column 0; rank 1: swap columns 0,1;
            // rank 2: swap columns 1,2; rank 3: negate column 2.
            imgs[0] = f * SignedPerm::diag(-1, 1, 1);
            imgs[1] = f * SignedPerm::from_perm_signs({1, 0, 2}, {1, 1, 1});
            imgs[2] = f * SignedPerm::from_perm_signs({0, 2, 1}, {1, 1, 1});
            imgs[3] = f * SignedPerm::diag(1, 1, -1);
            for (int r = 0; r < 4; ++r) adjacentFrame[fi][r] = imgs[r].index();
        }
        for (int mi = 0; mi < 48; ++mi)
            for (int fi = 0; fi < 48; ++fi) actionFrame[mi][fi] = (all[mi] * all[fi]).index();
    }
};

const FrameTables& frame_tables() {
    static const FrameTables t;
    return t;
}

}  // namespace

Flag adjacent(const Flag& f, int rank) {
    Flag out = f;
    out.frame = frame_tables().adjacentFrame[f.frame][rank];
    if (rank == 0) out.vertex = f.vertex + SignedPerm::from_index(f.frame).column(0);
    return out;
}

Flag apply_to_flag(const Isometry& g, const Flag& f) {
    Flag out;
    out.vertex = g.linear.apply(f.vertex) + g.translation.as_ivec();
    out.frame = frame_tables().actionFrame[g.linear.index()][f.frame];
    return out;
}

Flag FlagComplex::canonicalize(const Flag& f) const {
    Flag best;
    bool have = false;
    for (const auto& rot : rotationCosetMaps) {
        Flag img = apply_to_flag(rot, f);
        img.vertex = lattice.reduce(img.vertex);
        if (!have || img < best) {
            best = img;
            have = true;
        }
    }
    return best;
}

int FlagComplex::index_of(const Flag& canonical) const {
    auto it = std::lower_bound(flags.begin(), flags.end(), canonical);
    if (it == flags.end() || !(*it == canonical))
        throw std::logic_error("FlagComplex::index_of: flag not in complex");
    return static_cast<int>(it - flags.begin());
}

FlagComplex build_complex(const GroupSpec& g, long long flagBound) {
    FlagComplex c;
    c.lattice = g.lattice;
    for (int k = 0; k < g.m; ++k) c.rotationCosetMaps.push_back(power(g.sigma1(), k));

    long long total = 48 * g.lattice.index() / g.m;
    if (total > flagBound)
        throw ComplexityBound("flag total " + std::to_string(total) + " exceeds bound " +
                              std::to_string(flagBound));

    std::vector<Flag> reps;
    reps.reserve(static_cast<size_t>(total));
    for (const auto& v : g.lattice.residues())
        for (int fi = 0; fi < 48; ++fi) {
            Flag f{v, fi};
            Flag canon = c.canonicalize(f);
            if (canon == f) reps.push_back(f);
        }
    std::sort(reps.begin(), reps.end());
    if (static_cast<long long>(reps.size()) != total)
        throw std::logic_error("quotient flag count mismatch: group action is not free on flags");
    c.flags = std::move(reps);

    c.adjacency.resize(c.flags.size());
    for (int i = 0; i < c.size(); ++i)
        for (int r = 0; r < 4; ++r) {
            Flag a = adjacent(c.flags[i], r);
            a.vertex = c.lattice.reduce(a.vertex);
            c.adjacency[i][r] = c.index_of(c.canonicalize(a));
        }
    return c;
}

std::vector<Isometry> enumerate_symmetries(const GroupSpec& g) {
    std::vector<Isometry> out;
    auto residues = g.lattice.residues();
    for (const auto& m : SignedPerm::all()) {
        // a normalizing isometry permutes the generator axes, so it must
        // preserve the common axis direction up to sign
        IVec3 d = m.apply(g.axisDirection);
        if (d != g.axisDirection && d != -g.axisDirection) continue;
        for (const auto& w : residues) {
            Isometry x{m, RVec3(w)};
            if (normalizes(g, x)) out.push_back(x);
        }
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent, size;

    explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

OrbitPartition orbit_count(const FlagComplex& complex, const std::vector<Isometry>& syms) {
    UnionFind uf(complex.size());
    for (const auto& x : syms)
        for (int i = 0; i < complex.size(); ++i) {
            Flag img = apply_to_flag(x, complex.flags[i]);
            img.vertex = complex.lattice.reduce(img.vertex);
            uf.unite(i, complex.index_of(complex.canonicalize(img)));
        }
    OrbitPartition p;
    p.symmetryCosetCount = static_cast<long long>(syms.size());
    p.representative.resize(complex.size());
    for (int i = 0; i < complex.size(); ++i) {
        p.representative[i] = uf.find(i);
        if (p.representative[i] == i) ++p.orbitCount;
    }
    return p;
}

namespace {

// Plane coordinates perpendicular to the twist axis, matching the parameter
// conventions of each case.
RVec2 plane_coords(ManifoldKind kind, const RVec3& v) {
    switch (kind) {
        case ManifoldKind::DicosmAxial:
        case ManifoldKind::Tetracosm:
            return {v.x, v.y};
        case ManifoldKind::DicosmDiagonal:
            return {(v.x + v.y) / Rational(2), v.z};
        case ManifoldKind::Tricosm:
            return {v.x - v.y, v.y - v.z};  // coordinates in the triangular basis
        default:
            throw std::logic_error("plane_coords: unsupported kind");
    }
}

}  // namespace

SymmetryPresence detect_symmetries(const GroupSpec& g, const std::vector<Isometry>& syms) {
    SymmetryPresence out;
    const ManifoldKind kind = g.kind;

    // Projection of the translation lattice into the perpendicular plane.
    std::vector<RVec2> projGens;
    for (const auto& t : g.lattice.basis()) {
        RVec2 p = plane_coords(kind, RVec3(t));
        if (!(p.x.is_zero() && p.y.is_zero())) projGens.push_back(p);
    }
    PlaneLattice proj = PlaneLattice::from_vectors(projGens);

    // Translation class targets in plane coordinates.
    RVec2 alphaT, betaT;
    RVec2 triSigma2, triSigma3;
    RVec3 sigma1Foot = analyze_twist(g.sigma1())->axisPoint;
    auto feet = [&](const Isometry& s) { return plane_coords(kind, analyze_twist(s)->axisPoint); };
    if (kind == ManifoldKind::DicosmAxial) {
        alphaT = feet(g.generators[1]) - feet(g.generators[0]);
        betaT = feet(g.generators[2]) - feet(g.generators[0]);
    } else if (kind == ManifoldKind::DicosmDiagonal) {
        betaT = feet(g.generators[2]) - feet(g.generators[0]);
    } else if (kind == ManifoldKind::Tricosm) {
        triSigma2 = plane_coords(kind, analyze_twist(g.generators[1])->axisPoint - sigma1Foot);
        triSigma3 = plane_coords(kind, analyze_twist(g.derived)->axisPoint - sigma1Foot);
    }

    const SignedPerm rhoAxial = SignedPerm::diag(1, 1, -1);
    const SignedPerm rhoDiag = SignedPerm::from_perm_signs({1, 0, 2}, {1, 1, 1});

    for (const auto& x : syms) {
        const SignedPerm& m = x.linear;
        if (m.is_identity()) {
            RVec2 pc = plane_coords(kind, x.translation);
            if (proj.contains(pc)) {
                ++out.identityComponentCount;
                continue;
            }
            switch (kind) {
                case ManifoldKind::DicosmAxial:
                    if (proj.contains(pc - alphaT)) out.alpha = true;
                    if (proj.contains(pc - betaT)) out.beta = true;
                    if (proj.contains(pc - alphaT - betaT)) out.alphaBeta = true;
                    break;
                case ManifoldKind::DicosmDiagonal:
                    if (proj.contains(pc - betaT)) out.beta = true;
                    break;
                case ManifoldKind::Tricosm:
                    if (proj.contains(pc - triSigma2) || proj.contains(pc - triSigma3)) out.alpha = true;
                    break;
                default:
                    out.alpha = true;  // tetracosm: any non-axial translation class
                    break;
            }
            continue;
        }
        if (!m.is_proper()) {
            if (kind == ManifoldKind::DicosmAxial && m == rhoAxial) out.rho = true;
            if (kind == ManifoldKind::DicosmDiagonal && m == rhoDiag) out.rho = true;
            continue;
        }
        IVec3 dir = proper_rotation_axis(m);
        int order = m.order();
        switch (kind) {
            case ManifoldKind::DicosmAxial:
                if (order == 2 && (dir == IVec3{1, 0, 0} || dir == IVec3{0, 1, 0})) out.gamma1 = true;
                if (order == 2 && (dir == IVec3{1, 1, 0} || dir == IVec3{1, -1, 0})) out.gamma2 = true;
                if (order == 4 && dir == IVec3{0, 0, 1}) out.eta = true;
                break;
            case ManifoldKind::DicosmDiagonal:
                if (order == 2 && dir != g.axisDirection && dot(dir, g.axisDirection) == 0) out.chi = true;
                break;
            case ManifoldKind::Tricosm: {
                if (order != 2 || dot(dir, IVec3{1, 1, 1}) != 0) break;
                // Conjugation permutes the three axis classes of the twist
                // feet.  Composites with the translation alpha shift all
                // classes alike, so only the induced orientation separates
                // the two half-turn families: preserving it fixes sigma_2's
                // class relative to sigma_1's (chi), reversing it swaps
                // sigma_2 and sigma_3 (zeta).
                RVec2 img1 = plane_coords(kind, analyze_twist(conjugate(g.generators[0], x))->axisPoint - sigma1Foot);
                RVec2 img2 = plane_coords(kind, analyze_twist(conjugate(g.generators[1], x))->axisPoint - sigma1Foot);
                RVec2 diff = img2 - img1;
                if (proj.contains(diff - triSigma2))
                    out.chi = true;
                else if (proj.contains(diff - triSigma3))
                    out.zeta = true;
                else
                    throw std::logic_error("tricosm half-turn image is on no generator axis class");
                break;
            }
            case ManifoldKind::Tetracosm:
                if (order == 2 && dir.z == 0) out.chi = true;
                break;
            default:
                break;
        }
    }
    return out;
}

VerificationReport verify(const TwistoidParams& params, long long flagBound) {
    VerificationReport r;
    r.params = validate(params);
    ClassificationReport cls = classify(r.params);
    GroupSpec g = build_group(r.params);

    FlagComplex complex = build_complex(g, flagBound);
    auto syms = enumerate_symmetries(g);
    auto orbits = orbit_count(complex, syms);
    auto seen = detect_symmetries(g, syms);

    r.formulaFlags = cls.flagCount;
    r.oracleFlags = complex.size();
    r.formulaOrbits = cls.flagOrbitCount;
    r.oracleOrbits = orbits.orbitCount;
    r.formulaIdentityComponent = cls.identityComponentOrder;
    r.oracleIdentityComponent = seen.identityComponentCount;
    r.coverFlags = 48 * g.lattice.index();
    r.coverConsistent = r.coverFlags == g.m * cls.flagCount;

    auto add = [&](const std::string& name, bool formula, bool observed) {
        r.predicates.push_back({name, formula, observed});
    };
    switch (r.params.kind()) {
        case ManifoldKind::DicosmAxial: {
            const auto& pr = cls.profile;
            add("rho", true, seen.rho);
            add("alpha", pr.rigid.count(RigidTranslation::Alpha) != 0, seen.alpha);
            add("beta", pr.rigid.count(RigidTranslation::Beta) != 0, seen.beta);
            add("alphabeta", pr.rigid.count(RigidTranslation::AlphaBeta) != 0, seen.alphaBeta);
            add("gamma1", pr.gamma1, seen.gamma1);
            add("gamma2", pr.gamma2, seen.gamma2);
            add("eta", pr.eta, seen.eta);
            break;
        }
        case ManifoldKind::DicosmDiagonal:
            add("rho", true, seen.rho);
            add("beta", cls.profile.beta, seen.beta);
            add("chi", cls.profile.chi, seen.chi);
            break;
        case ManifoldKind::Tricosm:
            add("alpha", true, seen.alpha);
            add("chi", cls.profile.chi, seen.chi);
            add("zeta", cls.profile.zeta, seen.zeta);
            break;
        default:
            add("alpha", cls.profile.alpha, seen.alpha);
            add("chi", cls.profile.chi, seen.chi);
            break;
    }

    r.pass = r.formulaFlags == r.oracleFlags && r.formulaOrbits == r.oracleOrbits &&
             r.formulaIdentityComponent == r.oracleIdentityComponent && r.coverConsistent;
    for (const auto& p : r.predicates) r.pass = r.pass && p.ok();
    return r;
}

}  // namespace twistoid
