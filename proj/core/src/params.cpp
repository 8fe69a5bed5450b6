#include "twistoid/params.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace twistoid {

std::string to_string(ManifoldKind k) {
    switch (k) {
        case ManifoldKind::DicosmAxial: return "dicosm-axial";
        case ManifoldKind::DicosmDiagonal: return "dicosm-diagonal";
        case ManifoldKind::Tricosm: return "tricosm";
        case ManifoldKind::Tetracosm: return "tetracosm";
        case ManifoldKind::Hexacosm: return "hexacosm";
    }
    return "?";
}

ManifoldKind TwistoidParams::kind() const {
    switch (value.index()) {
        case 0: return ManifoldKind::DicosmAxial;
        case 1: return ManifoldKind::DicosmDiagonal;
        case 2: return ManifoldKind::Tricosm;
        default: return ManifoldKind::Tetracosm;
    }
}

std::vector<long long> TwistoidParams::encoded() const {
    if (auto* p = std::get_if<DicosmAxialParams>(&value)) return {p->C, p->P1, p->P2, p->P3, p->Q3};
    if (auto* p = std::get_if<DicosmDiagonalParams>(&value)) return {p->N, p->P1, p->P2, p->P3, p->Q3};
    if (auto* p = std::get_if<TricosmParams>(&value)) return {p->M, p->a, p->b};
    auto& p = std::get<TetracosmParams>(value);
    return {p.C, p.P, p.Q};
}

std::vector<std::pair<std::string, Rational>> TwistoidParams::display() const {
    if (auto* p = std::get_if<DicosmAxialParams>(&value))
        return {{"c", Rational(p->C)},
                {"p1", Rational(p->P1, 2)},
                {"p2", Rational(p->P2, 2)},
                {"p3", Rational(p->P3, 2)},
                {"q3", Rational(p->Q3, 2)}};
    if (auto* p = std::get_if<DicosmDiagonalParams>(&value))
        return {{"n", Rational(p->N)},  // c = n*sqrt(2)/2
                {"p1", Rational(p->P1, 4)},
                {"p2", Rational(p->P2, 4)},
                {"p3", Rational(p->P3, 4)},
                {"q3", Rational(p->Q3, 2)}};
    if (auto* p = std::get_if<TricosmParams>(&value))
        return {{"m", Rational(p->M)},  // c = m/sqrt(3)
                {"a", Rational(p->a)},
                {"b", Rational(p->b)}};
    auto& p = std::get<TetracosmParams>(value);
    return {{"c", Rational(p.C)}, {"p", Rational(p.P, 2)}, {"q", Rational(p.Q, 2)}};
}

bool operator<(const TwistoidParams& a, const TwistoidParams& b) {
    if (a.value.index() != b.value.index()) return a.value.index() < b.value.index();
    return a.encoded() < b.encoded();
}

namespace {

long long pos_mod(long long a, long long m) { return ((a % m) + m) % m; }

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidParameters(msg);
}

}  // namespace

DicosmAxialParams validate(const DicosmAxialParams& in) {
    DicosmAxialParams p = in;
    require(p.C >= 1, "C must be positive");
    require(p.P1 == 0 || p.P1 == 1, "P1 must be 0 or 1");
    require(p.Q3 >= 1, "Q3 must be positive");
    require(p.P2 > p.P1, "P2 must exceed P1");
    require(p.P3 >= 0, "P3 must be non-negative");
    if (p.P1 == 1) {
        require(p.P2 % 2 != 0, "P2 must be odd when P1=1");
        if (p.Q3 % 2 == 0) require(p.P3 % 2 != 0, "P3 must be odd when P1=1 and Q3 even");
    }
    p.P3 = p.P1 + pos_mod(p.P3 - p.P1, p.P2 - p.P1);
    return p;
}

DicosmDiagonalParams validate(const DicosmDiagonalParams& in) {
    DicosmDiagonalParams p = in;
    require(p.N >= 1, "N must be positive");
    require(p.P1 == 0 || p.P1 == 1, "P1 must be 0 or 1");
    require(p.Q3 >= 1, "Q3 must be positive");
    require((p.N % 2 == 0) == (p.P1 == 0), "N must be even exactly when P1=0");
    require(pos_mod(p.P2, 2) == p.P1, "P2 must have the parity of P1");
    require(pos_mod(p.P3, 2) == p.P1, "P3 must have the parity of P1");
    require(p.P2 > p.P1, "P2 must exceed P1");
    require(p.P3 >= 0, "P3 must be non-negative");
    p.P3 = p.P1 + pos_mod(p.P3 - p.P1, p.P2 - p.P1);
    return p;
}

TricosmParams validate(const TricosmParams& in) {
    TricosmParams p = in;
    require(p.M >= 1, "M must be positive");
    require(p.a >= 0 && p.b >= 0, "a and b must be non-negative");
    require(p.a != 0 || p.b != 0, "(a,b) must not be (0,0)");
    if (p.a == 0) std::swap(p.a, p.b);
    return p;
}

TetracosmParams validate(const TetracosmParams& in) {
    TetracosmParams p = in;
    require(p.C >= 1, "C must be positive");
    require(p.P != 0 || p.Q != 0, "(P,Q) must not be (0,0)");
    p.P = std::llabs(p.P);
    p.Q = std::llabs(p.Q);
    if (p.P < p.Q) std::swap(p.P, p.Q);
    return p;
}

TwistoidParams validate(const TwistoidParams& p) {
    TwistoidParams out = p;
    std::visit([&](auto& v) { out.value = validate(v); }, p.value);
    return out;
}

AxisFrame axis_frame(const DicosmAxialParams& p) {
    AxisFrame f;
    f.lattice = PlaneLattice::from_vectors(
        {{Rational(p.P2 - p.P1, 2), Rational(0)}, {Rational(p.P3 - p.P1, 2), Rational(p.Q3, 2)}});
    f.foot = {Rational(p.P1, 2), Rational(0)};
    return f;
}

AxisFrame axis_frame(const DicosmDiagonalParams& p) {
    AxisFrame f;
    f.lattice = PlaneLattice::from_vectors(
        {{Rational(p.P2 - p.P1, 4), Rational(0)}, {Rational(p.P3 - p.P1, 4), Rational(p.Q3, 2)}});
    f.foot = {Rational(p.P1, 4), Rational(0)};
    return f;
}

namespace {

// The eight signed 2x2 permutations, identity first.
struct Orient { int a, b, c, d; };
const std::array<Orient, 8> kOrients = {{{1, 0, 0, 1},
                                         {-1, 0, 0, 1},
                                         {1, 0, 0, -1},
                                         {-1, 0, 0, -1},
                                         {0, 1, 1, 0},
                                         {0, -1, 1, 0},
                                         {0, 1, -1, 0},
                                         {0, -1, -1, 0}}};

RVec2 apply_orient(const Orient& o, const RVec2& v) {
    return {Rational(o.a) * v.x + Rational(o.b) * v.y, Rational(o.c) * v.x + Rational(o.d) * v.y};
}

}  // namespace

std::optional<DicosmAxialParams> extract_axial(const AxisFrame& frame, long long C) {
    // admissible base points: a vertex axis (0,0) if one exists in the foot
    // class, otherwise an edge axis (1/2,0); the ambient re-anchoring grid is
    // Z^2.
    std::vector<DicosmAxialParams> vertexCands, edgeCands;
    const std::vector<RVec2> grid = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    for (const auto& o : kOrients) {
        PlaneLattice lg = frame.lattice.transformed(o.a, o.b, o.c, o.d);
        RVec2 fg = apply_orient(o, frame.foot);
        PlaneLattice anchor = lg.join(grid);
        for (int which = 0; which < 2; ++which) {
            RVec2 target = which == 0 ? RVec2{Rational(0), Rational(0)} : RVec2{Rational(1, 2), Rational(0)};
            if (!anchor.contains(fg - target)) continue;
            DicosmAxialParams cand;
            cand.C = C;
            cand.P1 = which;
            Rational p2 = target.x + lg.xstep();
            Rational p3 = target.x + lg.yoffset();
            Rational q3 = lg.ystep();
            cand.P2 = (Rational(2) * p2).as_integer();
            cand.P3 = (Rational(2) * p3).as_integer();
            cand.Q3 = (Rational(2) * q3).as_integer();
            cand.P3 = cand.P1 + pos_mod(cand.P3 - cand.P1, cand.P2 - cand.P1);
            (which == 0 ? vertexCands : edgeCands).push_back(cand);
        }
    }
    auto& cands = vertexCands.empty() ? edgeCands : vertexCands;
    if (cands.empty()) return std::nullopt;
    auto best = *std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return std::array{a.P1, a.P2, a.P3, a.Q3} < std::array{b.P1, b.P2, b.P3, b.Q3};
    });
    return validate(best);
}

std::optional<DicosmDiagonalParams> extract_diagonal(const AxisFrame& frame, long long N) {
    // Only the four sign flips apply: the projected grid is rectangular with
    // unequal spacings, so the coordinates never swap.  Re-anchoring moves
    // feet on the (1/2)Z x Z grid.
    std::vector<DicosmDiagonalParams> cands;
    const std::vector<RVec2> grid = {{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1)}};
    long long P1 = (N % 2 == 0) ? 0 : 1;
    RVec2 target = {Rational(P1, 4), Rational(0)};
    for (int oi = 0; oi < 4; ++oi) {
        const auto& o = kOrients[oi];
        PlaneLattice lg = frame.lattice.transformed(o.a, o.b, o.c, o.d);
        RVec2 fg = apply_orient(o, frame.foot);
        if (!lg.join(grid).contains(fg - target)) continue;
        DicosmDiagonalParams cand;
        cand.N = N;
        cand.P1 = P1;
        cand.P2 = (Rational(4) * (target.x + lg.xstep())).as_integer();
        cand.P3 = (Rational(4) * (target.x + lg.yoffset())).as_integer();
        cand.Q3 = (Rational(2) * lg.ystep()).as_integer();
        cand.P3 = cand.P1 + pos_mod(cand.P3 - cand.P1, cand.P2 - cand.P1);
        cands.push_back(cand);
    }
    if (cands.empty()) return std::nullopt;
    auto best = *std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return std::array{a.P2, a.P3, a.Q3} < std::array{b.P2, b.P3, b.Q3};
    });
    return validate(best);
}

TwistoidParams canonical_params(const TwistoidParams& p) {
    TwistoidParams v = validate(p);
    if (auto* ax = std::get_if<DicosmAxialParams>(&v.value)) {
        auto c = extract_axial(axis_frame(*ax), ax->C);
        if (c) return TwistoidParams{*c};
        return v;
    }
    if (auto* dg = std::get_if<DicosmDiagonalParams>(&v.value)) {
        auto c = extract_diagonal(axis_frame(*dg), dg->N);
        if (c) return TwistoidParams{*c};
        return v;
    }
    return v;  // tricosm and tetracosm normal forms are already canonical
}

}  // namespace twistoid
