#ifndef TWISTOID_GROUP_HPP
#define TWISTOID_GROUP_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "twistoid/isometry.hpp"
#include "twistoid/lattice.hpp"
#include "twistoid/params.hpp"
#include "twistoid/twist.hpp"

namespace twistoid {

/// Raised when a hexacosm group is requested; the symmetry group of the
/// cubic tessellation contains no 6-fold twists, so the construction is
/// impossible for every parameter choice.
class HexacosmImpossible : public std::runtime_error {
public:
    HexacosmImpossible()
        : std::runtime_error(
              "no cubic twistoids on the hexacosm: the tessellation admits no 6-fold twists "
              "(no 6-fold twist type exists in Table 1)") {}
};

/// Raised when a constructed generator fails to preserve the tessellation,
/// which signals inconsistent parameters.
class NonIntegralGenerator : public std::runtime_error {
public:
    explicit NonIntegralGenerator(const std::string& what) : std::runtime_error(what) {}
};

/// A fixed-point-free twist group inside the symmetry group of the cubic
/// tessellation, given by explicit generators with parallel axes.
struct GroupSpec {
    ManifoldKind kind{};
    int m = 0;                        // rotation order of the base twist
    std::vector<Isometry> generators; // sigma_1, sigma_2 [, sigma_3]
    Isometry derived;                 // sigma_4 (dicosm) or sigma_3 (tricosm) or sigma (tetracosm)
    IVec3 axisDirection;              // common axis direction, canonical sign
    TranslationLattice lattice;       // subgroup of pure translations
    std::vector<SignedPerm> rotationPowers;  // sigma_1.linear^k, k = 0..m-1

    const Isometry& sigma1() const { return generators.front(); }
};

/// Construct the group from validated parameters.  Throws
/// NonIntegralGenerator on inconsistent inputs.
GroupSpec build_group(const TwistoidParams& params);

/// The hexacosm has no realization; always throws HexacosmImpossible.
[[noreturn]] void build_hexacosm_group();

/// The lattice of pure translations in the group.
const TranslationLattice& translation_lattice(const GroupSpec& g);

/// Canonical decomposition of a tessellation symmetry relative to the group:
/// x = sigma_1^power * (lattice vector + cosetVector) with the coset vector
/// reduced modulo the translation lattice.  Empty when the linear part of x
/// is no power of the base rotation.  x belongs to the group exactly when
/// the coset vector vanishes.
struct CanonicalElement {
    int power = 0;        // 0 <= power < m
    IVec3 cosetVector{};  // residue modulo the translation lattice
};

std::optional<CanonicalElement> canonical_element(const GroupSpec& g, const Isometry& x);

/// Exact membership test via the canonical decomposition.  Requires x to
/// preserve the tessellation.
bool contains(const GroupSpec& g, const Isometry& x);

/// True iff conjugation by x (both ways) maps every generator into the group.
bool normalizes(const GroupSpec& g, const Isometry& x);

/// Exhaustive freeness check: no non-identity element fixes a point.  The
/// bound caps the rotation powers examined; all powers below the rotation
/// order are always covered (there are at most three).
bool is_fixed_point_free_witness(const GroupSpec& g, int wordLengthBound);

/// Conjugate the whole group by the half-grid shift (1/2,1/2,1/2).
GroupSpec dual_group(const GroupSpec& g);

}  // namespace twistoid

#endif
