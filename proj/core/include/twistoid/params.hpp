#ifndef TWISTOID_PARAMS_HPP
#define TWISTOID_PARAMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "twistoid/lattice.hpp"
#include "twistoid/rational.hpp"

namespace twistoid {

enum class ManifoldKind { DicosmAxial, DicosmDiagonal, Tricosm, Tetracosm, Hexacosm };

std::string to_string(ManifoldKind k);

/// Raised by validate() with the violated invariant named.
class InvalidParameters : public std::runtime_error {
public:
    explicit InvalidParameters(const std::string& what) : std::runtime_error(what) {}
};

/// Dicosm, generator axes parallel to (0,0,1).
/// Integer encoding: c = C, p1 = P1/2, p2 = P2/2, p3 = P3/2, q3 = Q3/2.
struct DicosmAxialParams {
    long long C = 1;
    long long P1 = 0;  // 0 or 1
    long long P2 = 0;
    long long P3 = 0;
    long long Q3 = 0;

    friend bool operator==(const DicosmAxialParams& a, const DicosmAxialParams& b) {
        return a.C == b.C && a.P1 == b.P1 && a.P2 == b.P2 && a.P3 == b.P3 && a.Q3 == b.Q3;
    }
};

/// Dicosm, generator axes parallel to (1,-1,0).
/// Integer encoding: c = N*sqrt(2)/2, p_i = P_i/4, q3 = Q3/2.  The p
/// coordinate of an axis through (p,p,q) is its x value; q is its z value.
struct DicosmDiagonalParams {
    long long N = 1;
    long long P1 = 0;  // 0 or 1
    long long P2 = 0;
    long long P3 = 0;
    long long Q3 = 0;

    friend bool operator==(const DicosmDiagonalParams& a, const DicosmDiagonalParams& b) {
        return a.N == b.N && a.P1 == b.P1 && a.P2 == b.P2 && a.P3 == b.P3 && a.Q3 == b.Q3;
    }
};

/// Tricosm.  c = M/sqrt(3); the second generator axis is offset by
/// a*v1 + b*v2 with v1 = (2,-1,-1)/3, v2 = (1,1,-2)/3.
struct TricosmParams {
    long long M = 1;
    long long a = 0;
    long long b = 0;

    friend bool operator==(const TricosmParams& x, const TricosmParams& y) {
        return x.M == y.M && x.a == y.a && x.b == y.b;
    }
};

/// Tetracosm.  c = C, p = P/2, q = Q/2.
struct TetracosmParams {
    long long C = 1;
    long long P = 0;
    long long Q = 0;

    friend bool operator==(const TetracosmParams& a, const TetracosmParams& b) {
        return a.C == b.C && a.P == b.P && a.Q == b.Q;
    }
};

/// Any validated parameter set.
struct TwistoidParams {
    std::variant<DicosmAxialParams, DicosmDiagonalParams, TricosmParams, TetracosmParams> value;

    ManifoldKind kind() const;

    /// Encoded integers in a fixed order, for sorting and serialization.
    std::vector<long long> encoded() const;

    /// Display values in natural rational units (c, p1..q3 / m, a, b / c, p, q).
    std::vector<std::pair<std::string, Rational>> display() const;

    friend bool operator==(const TwistoidParams& a, const TwistoidParams& b) {
        return a.value == b.value;
    }
    friend bool operator<(const TwistoidParams& a, const TwistoidParams& b);
};

/// Enforce the per-kind invariants (throwing InvalidParameters with the
/// violated invariant named) and normalize: P3 reduced into [0, P2-P1),
/// tetracosm reduced to P >= Q >= 0, tricosm (0,b) swapped to (b,0).
DicosmAxialParams validate(const DicosmAxialParams& p);
DicosmDiagonalParams validate(const DicosmDiagonalParams& p);
TricosmParams validate(const TricosmParams& p);
TetracosmParams validate(const TetracosmParams& p);
TwistoidParams validate(const TwistoidParams& p);

/// Projected axis geometry of a dicosm parameter set: the plane lattice of
/// axis feet differences and one generator foot, in plane coordinates.
struct AxisFrame {
    PlaneLattice lattice;
    RVec2 foot;
};

AxisFrame axis_frame(const DicosmAxialParams& p);
AxisFrame axis_frame(const DicosmDiagonalParams& p);

/// Re-derive canonical parameters from an axis frame.  Fails (nullopt) when
/// no generator axis can be anchored at an admissible base point, which
/// happens exactly for frames only representable through duality.
std::optional<DicosmAxialParams> extract_axial(const AxisFrame& frame, long long C);
std::optional<DicosmDiagonalParams> extract_diagonal(const AxisFrame& frame, long long N);

/// Canonical representative of the isomorphism class of p: the result of
/// re-extracting parameters from p's own axis frame.  Used to deduplicate
/// enumeration grids; validate() itself keeps the user's frame.
TwistoidParams canonical_params(const TwistoidParams& p);

}  // namespace twistoid

#endif
