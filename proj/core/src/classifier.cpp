#include "twistoid/classifier.hpp"

namespace twistoid {

std::string to_string(RigidTranslation r) {
    switch (r) {
        case RigidTranslation::Alpha: return "alpha";
        case RigidTranslation::Beta: return "beta";
        case RigidTranslation::AlphaBeta: return "alphabeta";
    }
    return "?";
}

std::string to_string(DeformableClass c) {
    switch (c) {
        case DeformableClass::C1: return "1";
        case DeformableClass::C2: return "2";
        case DeformableClass::C2_02: return "2_{0,2}";
        case DeformableClass::C2_1: return "2_1";
        case DeformableClass::C4: return "4";
    }
    return "?";
}

long long flag_count(const TwistoidParams& params) {
    if (auto* p = std::get_if<DicosmAxialParams>(&params.value))
        return 48 * p->C * p->Q3 * (p->P2 - p->P1);
    if (auto* p = std::get_if<DicosmDiagonalParams>(&params.value))
        return 24 * p->N * p->Q3 * (p->P2 - p->P1);
    if (auto* p = std::get_if<TricosmParams>(&params.value))
        return 48 * p->M * (p->a * p->a + p->b * p->b + p->a * p->b);
    auto& p = std::get<TetracosmParams>(params.value);
    return 48 * p.C * (p.P * p.P + p.Q * p.Q);
}

std::set<RigidTranslation> rigid_part_dicosm_axial(const DicosmAxialParams& p) {
    std::set<RigidTranslation> out;
    if ((p.P2 - p.P1) % 2 == 0) out.insert(RigidTranslation::Alpha);
    if ((p.P3 - p.P1) % 2 == 0 && p.Q3 % 2 == 0) out.insert(RigidTranslation::Beta);
    if ((p.P3 - p.P2) % 2 == 0 && p.Q3 % 2 == 0) out.insert(RigidTranslation::AlphaBeta);
    return out;
}

namespace {

bool ddiv(long long d, long long n) { return n % d == 0; }

struct AxialDeformable {
    bool gamma1, gamma2, eta;
    DeformableClass cls;
};

DeformableClass axial_class_of(bool gamma1, bool gamma2, bool eta) {
    if (gamma1 && gamma2 && eta) return DeformableClass::C1;
    if (!gamma1 && !gamma2 && eta) return DeformableClass::C2;
    if (gamma1 && !gamma2 && !eta) return DeformableClass::C2_02;
    if (!gamma1 && gamma2 && !eta) return DeformableClass::C2_1;
    if (!gamma1 && !gamma2 && !eta) return DeformableClass::C4;
    throw InternalInconsistency("unreachable (gamma1,gamma2,eta) combination");
}

AxialDeformable axial_deformable(const DicosmAxialParams& p, bool anchorGated) {
    long long d3 = p.P3 - p.P1, d2 = p.P2 - p.P1;
    bool gamma1 = (p.P3 == p.P1) || (2 * p.P3 == p.P1 + p.P2);
    bool gamma2 = ddiv(p.Q3, d3) && ddiv(p.Q3, d2) && ddiv(p.Q3 * d2, p.Q3 * p.Q3 - d3 * d3);
    bool eta = ddiv(p.Q3, d3) && ddiv(p.Q3, d2) && ddiv(p.Q3 * d2, p.Q3 * p.Q3 + d3 * d3);
    if (anchorGated && p.P1 == 1 && (gamma2 || eta)) {
        // Edge-anchored case: invariance of the foot lattice is not enough;
        // the diagonal half-turn twist (a glide reflection in projection) or
        // the 4-fold twist must also move the half-integer anchor back onto
        // the foot set.  Both need a foot-lattice vector congruent to
        // (1/2,1/2) modulo integer shifts.
        const PlaneLattice L = axis_frame(p).lattice;
        const Rational h(1, 2);
        bool anchored =
            L.join({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}).contains({h, h});
        gamma2 = gamma2 && anchored;
        eta = eta && anchored;
    }
    return {gamma1, gamma2, eta, axial_class_of(gamma1, gamma2, eta)};
}

std::string axial_row_name(const std::set<RigidTranslation>& rigid) {
    if (rigid.size() == 3) return "rho,alpha,beta";
    if (rigid.empty()) return "rho";
    switch (*rigid.begin()) {
        case RigidTranslation::Alpha: return "rho,alpha";
        case RigidTranslation::Beta: return "rho,beta";
        default: return "rho,alphabeta";
    }
}

long long exact_div(long long n, long long d, const char* what) {
    if (n % d != 0) throw InternalInconsistency(what);
    return n / d;
}

}  // namespace

DeformableClass deformable_class_dicosm_axial(const DicosmAxialParams& p) {
    return axial_deformable(p, true).cls;
}

DeformableClass axial_lattice_class(const DicosmAxialParams& p) {
    return axial_deformable(p, false).cls;
}

ClassificationReport classify(const TwistoidParams& params) {
    ClassificationReport r;
    r.kind = params.kind();
    r.params = params;
    r.flagCount = flag_count(params);
    r.cubeCount = Rational(r.flagCount, 48);

    if (auto* p = std::get_if<DicosmAxialParams>(&params.value)) {
        r.profile.rigid = rigid_part_dicosm_axial(*p);
        auto def = axial_deformable(*p, true);
        r.profile.deformable = def.cls;
        r.profile.gamma1 = def.gamma1;
        r.profile.gamma2 = def.gamma2;
        r.profile.eta = def.eta;
        long long rf = r.profile.rigid.size() == 3 ? 4 : (r.profile.rigid.empty() ? 1 : 2);
        long long nf = def.cls == DeformableClass::C1 ? 4 : (def.cls == DeformableClass::C4 ? 1 : 2);
        r.flagOrbitCount = exact_div(12 * p->Q3 * (p->P2 - p->P1), rf * nf, "axial orbit count");
        r.identityComponentOrder = 2 * p->C;
        r.familyId = axial_row_name(r.profile.rigid) + "|" + to_string(def.cls);
    } else if (auto* p = std::get_if<DicosmDiagonalParams>(&params.value)) {
        r.profile.beta = p->Q3 % 2 == 0;
        r.profile.chi = (p->P3 == p->P1) || (2 * p->P3 == p->P1 + p->P2);
        long long factor = (r.profile.beta ? 1 : 2) * (r.profile.chi ? 1 : 2);
        r.flagOrbitCount = exact_div(3 * p->Q3 * (p->P2 - p->P1) * factor, 2, "diagonal orbit count");
        r.identityComponentOrder = p->N;
        r.familyId = r.profile.beta && r.profile.chi ? "beta&chi"
                     : r.profile.chi               ? "chi"
                     : r.profile.beta              ? "beta"
                                                   : "none";
    } else if (auto* p = std::get_if<TricosmParams>(&params.value)) {
        r.profile.chi = p->a == p->b;
        r.profile.zeta = p->a == 0 || p->b == 0;
        if (r.profile.chi && r.profile.zeta)
            throw InternalInconsistency("tricosm chi and zeta cannot both hold");
        long long s = p->a * p->a + p->b * p->b + p->a * p->b;
        r.flagOrbitCount = (r.profile.chi || r.profile.zeta) ? 8 * s : 16 * s;
        r.identityComponentOrder = p->M;
        r.familyId = r.profile.chi ? "chi" : (r.profile.zeta ? "zeta" : "none");
    } else {
        const auto& t = std::get<TetracosmParams>(params.value);
        r.profile.alpha = (t.P - t.Q) % 2 == 0;
        r.profile.chi = t.P * t.Q * (t.P - t.Q) == 0;
        long long s = t.P * t.P + t.Q * t.Q;
        long long factor = (r.profile.alpha ? 1 : 2) * (r.profile.chi ? 1 : 2);
        r.flagOrbitCount = 3 * s * factor;
        r.identityComponentOrder = 4 * t.C;
        r.familyId = r.profile.alpha && r.profile.chi ? "alpha&chi"
                     : r.profile.alpha              ? "alpha"
                     : r.profile.chi                ? "chi"
                                                    : "none";
    }
    if (r.flagCount % r.flagOrbitCount != 0)
        throw InternalInconsistency("flag-orbit count must divide the flag count");
    return r;
}

std::vector<Table2Witness> table2_witnesses() {
    auto w = [](long long P2, long long P3, long long Q3, const char* row, const char* col) {
        return Table2Witness{DicosmAxialParams{1, 0, P2, P3, Q3}, row, col};
    };
    return {
        w(5, 0, 5, "rho", "1"),
        w(5, 2, 1, "rho", "2"),
        w(5, 0, 3, "rho", "2_{0,2}"),
        w(3, 2, 1, "rho", "2_1"),
        w(21, 4, 1, "rho", "4"),
        w(6, 3, 3, "rho,alpha", "1"),
        w(26, 5, 1, "rho,alpha", "2"),
        w(10, 5, 2, "rho,alpha", "2_{0,2}"),
        w(8, 3, 1, "rho,alpha", "2_1"),
        w(20, 2, 1, "rho,alpha", "4"),
        w(3, 0, 4, "rho,beta", "2_{0,2}"),
        w(11, 2, 4, "rho,beta", "4"),
        w(5, 1, 2, "rho,alphabeta", "4"),
        w(4, 0, 4, "rho,alpha,beta", "1"),
        w(10, 4, 2, "rho,alpha,beta", "2"),
        w(12, 6, 2, "rho,alpha,beta", "2_{0,2}"),
        w(6, 4, 2, "rho,alpha,beta", "2_1"),
        w(40, 4, 2, "rho,alpha,beta", "4"),
    };
}

TwistoidParams dual_params(const TwistoidParams& params) {
    TwistoidParams v = validate(params);
    const RVec2 shift{Rational(1, 2), Rational(1, 2)};
    if (auto* p = std::get_if<DicosmAxialParams>(&v.value)) {
        AxisFrame f = axis_frame(*p);
        f.foot = f.foot + shift;
        if (auto d = extract_axial(f, p->C)) return TwistoidParams{*d};
        return v;  // dual representable only through duality itself
    }
    if (auto* p = std::get_if<DicosmDiagonalParams>(&v.value)) {
        AxisFrame f = axis_frame(*p);
        f.foot = f.foot + shift;
        if (auto d = extract_diagonal(f, p->N)) return TwistoidParams{*d};
        return v;
    }
    // The tricosm dual group coincides with the group itself (the half-grid
    // shift is parallel to the axes), and the tetracosm dual is anchored at
    // cube centers only; both re-extract to the original parameters.
    return v;
}

}  // namespace twistoid
