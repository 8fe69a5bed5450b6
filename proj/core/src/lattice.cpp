#include "twistoid/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace twistoid {

namespace {

// Extended gcd: returns g = gcd(a,b) and x,y with a x + b y = g.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return std::llabs(a);
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

TranslationLattice TranslationLattice::from_basis(const IVec3& t1, const IVec3& t2, const IVec3& t3) {
    TranslationLattice lat;
    lat.basis_ = {t1, t2, t3};

    std::array<IVec3, 3> r = {t1, t2, t3};
    // Column 0: clear r[1].x and r[2].x against r[0].x via row gcd steps.
    for (int col = 0; col < 2; ++col) {
        for (int i = col + 1; i < 3; ++i) {
            if (r[i][col] == 0) continue;
            if (r[col][col] == 0) {
                std::swap(r[col], r[i]);
                continue;
            }
            long long x, y;
            long long g = ext_gcd(r[col][col], r[i][col], x, y);
            IVec3 newPivot = x * r[col] + y * r[i];
            IVec3 newOther = (r[i][col] / g) * r[col] - (r[col][col] / g) * r[i];
            r[col] = newPivot;
            r[i] = newOther;
        }
        if (r[col][col] < 0) r[col] = -r[col];
    }
    if (r[2][2] < 0) r[2] = -r[2];
    if (r[0][0] == 0 || r[1][1] == 0 || r[2][2] == 0)
        throw std::invalid_argument("TranslationLattice: basis is not full rank");
    // Reduce entries above each pivot.
    r[1] = r[1] - floordiv(r[1][2], r[2][2]) * r[2];
    r[0] = r[0] - floordiv(r[0][2], r[2][2]) * r[2];
    r[0] = r[0] - floordiv(r[0][1], r[1][1]) * r[1];

    lat.hnf_ = r;
    lat.index_ = r[0][0] * r[1][1] * r[2][2];
    return lat;
}

bool TranslationLattice::contains(const IVec3& v) const {
    const auto& h = hnf_;
    if (v.x % h[0][0] != 0) return false;
    long long c0 = v.x / h[0][0];
    long long y = v.y - c0 * h[0][1];
    if (y % h[1][1] != 0) return false;
    long long c1 = y / h[1][1];
    long long z = v.z - c0 * h[0][2] - c1 * h[1][2];
    return z % h[2][2] == 0;
}

IVec3 TranslationLattice::reduce(const IVec3& v) const {
    const auto& h = hnf_;
    IVec3 r = v;
    r = r - floordiv(r.x, h[0][0]) * h[0];
    r = r - floordiv(r.y, h[1][1]) * h[1];
    r = r - floordiv(r.z, h[2][2]) * h[2];
    return r;
}

std::vector<IVec3> TranslationLattice::residues() const {
    std::vector<IVec3> out;
    out.reserve(static_cast<size_t>(index_));
    for (long long x = 0; x < hnf_[0][0]; ++x)
        for (long long y = 0; y < hnf_[1][1]; ++y)
            for (long long z = 0; z < hnf_[2][2]; ++z) out.push_back({x, y, z});
    return out;
}

std::vector<SignedPerm> TranslationLattice::point_stabilizer() const {
    std::vector<SignedPerm> out;
    for (const auto& m : SignedPerm::all()) {
        bool ok = true;
        for (const auto& b : basis_)
            if (!contains(m.apply(b))) { ok = false; break; }
        if (ok) out.push_back(m);
    }
    return out;
}

PlaneLattice PlaneLattice::from_vectors(const std::vector<RVec2>& gens) {
    // Scale to a common denominator and run an integer 2D HNF fold.
    long long den = 1;
    for (const auto& g : gens) den = std::lcm(std::lcm(den, g.x.den()), g.y.den());
    struct V2 { long long x, y; };
    std::vector<V2> ints;
    for (const auto& g : gens) {
        V2 v{(g.x * Rational(den)).as_integer(), (g.y * Rational(den)).as_integer()};
        if (v.x != 0 || v.y != 0) ints.push_back(v);
    }
    // Fold into the form (a, 0), (e, f): f = gcd of attainable y's.
    long long a = 0, e = 0, f = 0;
    for (const auto& v : ints) {
        V2 w = v;
        if (f != 0) {
            // eliminate w.y against (e, f)
            long long x, y;
            long long g = ext_gcd(f, w.y, x, y);
            long long ne = x * e + y * w.x;
            long long rest = (w.y / g) * e - (f / g) * w.x;  // y-free remainder
            e = ne;
            f = g;
            w = {rest, 0};
        } else if (w.y != 0) {
            e = w.x;
            f = w.y;
            continue;
        }
        a = std::gcd(a, std::llabs(w.x));
    }
    if (f < 0) { f = -f; e = -e; }
    if (a == 0 || f == 0) throw std::invalid_argument("PlaneLattice: generators are not full rank");
    e = ((e % a) + a) % a;

    PlaneLattice out;
    Rational d(den);
    out.d_ = Rational(a) / d;
    out.e_ = Rational(e) / d;
    out.f_ = Rational(f) / d;
    return out;
}

bool PlaneLattice::contains(const RVec2& v) const {
    Rational k = v.y / f_;
    if (!k.is_integer()) return false;
    Rational rem = (v.x - Rational(k.as_integer()) * e_) / d_;
    return rem.is_integer();
}

PlaneLattice PlaneLattice::join(const std::vector<RVec2>& extra) const {
    std::vector<RVec2> gens = {{d_, Rational(0)}, {e_, f_}};
    gens.insert(gens.end(), extra.begin(), extra.end());
    return from_vectors(gens);
}

PlaneLattice PlaneLattice::transformed(int a, int b, int c, int d) const {
    auto tf = [&](const RVec2& v) -> RVec2 {
        return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
    };
    return from_vectors({tf({d_, Rational(0)}), tf({e_, f_})});
}

}  // namespace twistoid
