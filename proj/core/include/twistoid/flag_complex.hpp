#ifndef TWISTOID_FLAG_COMPLEX_HPP
#define TWISTOID_FLAG_COMPLEX_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistoid/classifier.hpp"
#include "twistoid/group.hpp"

namespace twistoid {

/// Raised when a requested complex would exceed the configured flag bound.
class ComplexityBound : public std::runtime_error {
public:
    explicit ComplexityBound(const std::string& what) : std::runtime_error(what) {}
};

/// Flag of the cubic tessellation: a vertex together with a signed frame.
/// Column 0 of the frame spans the incident edge, columns 0-1 the square,
/// columns 0-2 the cube.
struct Flag {
    IVec3 vertex;
    int frame = 0;  // index into SignedPerm::all()

    friend bool operator==(const Flag& a, const Flag& b) {
        return a.vertex == b.vertex && a.frame == b.frame;
    }
    friend bool operator<(const Flag& a, const Flag& b) {
        if (!(a.vertex == b.vertex)) return a.vertex < b.vertex;
        return a.frame < b.frame;
    }
};

/// The i-adjacent flag (the unique flag differing exactly in the rank-i face).
Flag adjacent(const Flag& f, int rank);

/// Left action of a tessellation symmetry on flags.
Flag apply_to_flag(const Isometry& g, const Flag& f);

/// Finite flag complex of a quotient twistoid: canonical representatives of
/// the group orbits of flags, with rank adjacency.
struct FlagComplex {
    std::vector<Flag> flags;                  // canonical representatives, sorted
    std::vector<std::array<int, 4>> adjacency;
    std::vector<Isometry> rotationCosetMaps;  // sigma_1^k, k = 0..m-1
    TranslationLattice lattice;

    int size() const { return static_cast<int>(flags.size()); }

    /// Canonical representative of the group orbit of f.
    Flag canonicalize(const Flag& f) const;
    int index_of(const Flag& canonical) const;
};

inline constexpr long long kDefaultFlagBound = 50000;

/// Enumerate the quotient flags and their adjacency.  Throws ComplexityBound
/// when the flag total exceeds the bound.
FlagComplex build_complex(const GroupSpec& g, long long flagBound = kDefaultFlagBound);

/// All isometries (M, w) with M in the point group and w ranging over coset
/// representatives modulo the translation lattice that normalize the group;
/// these represent the twistoid's symmetries modulo lattice translations.
std::vector<Isometry> enumerate_symmetries(const GroupSpec& g);

struct OrbitPartition {
    long long orbitCount = 0;
    long long symmetryCosetCount = 0;
    std::vector<int> representative;  // orbit representative per flag index
};

/// Union-find of flags under the symmetry action.
OrbitPartition orbit_count(const FlagComplex& complex, const std::vector<Isometry>& syms);

/// Symmetry classes observed in an enumerate_symmetries list.
struct SymmetryPresence {
    long long identityComponentCount = 0;
    bool rho = false;
    bool alpha = false, beta = false, alphaBeta = false;  // translation classes
    bool gamma1 = false, gamma2 = false, eta = false;     // axial deformable classes
    bool chi = false, zeta = false;                       // perpendicular half-turn classes
};

SymmetryPresence detect_symmetries(const GroupSpec& g, const std::vector<Isometry>& syms);

/// One formula-vs-oracle comparison row.
struct PredicateCheck {
    std::string name;
    bool formula = false;
    bool observed = false;

    bool ok() const { return formula == observed; }
};

struct VerificationReport {
    TwistoidParams params;
    long long formulaFlags = 0, oracleFlags = 0;
    long long formulaOrbits = 0, oracleOrbits = 0;
    long long formulaIdentityComponent = 0, oracleIdentityComponent = 0;
    long long coverFlags = 0;  // 48 * lattice index
    bool coverConsistent = false;
    std::vector<PredicateCheck> predicates;
    bool pass = false;
};

/// Build the complex, enumerate symmetries and compare every closed-form
/// quantity with the brute-force counts.
VerificationReport verify(const TwistoidParams& params, long long flagBound = kDefaultFlagBound);

}  // namespace twistoid

#endif
