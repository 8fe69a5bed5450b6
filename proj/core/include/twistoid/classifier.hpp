#ifndef TWISTOID_CLASSIFIER_HPP
#define TWISTOID_CLASSIFIER_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistoid/params.hpp"
#include "twistoid/rational.hpp"

namespace twistoid {

/// Raised when the deformable-symmetry predicates land in a combination the
/// classification proves unreachable.
class InternalInconsistency : public std::logic_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

/// Outer translation symmetries of a dicosm twistoid (the perpendicular
/// reflection rho is always present and is not listed).
enum class RigidTranslation { Alpha, Beta, AlphaBeta };

std::string to_string(RigidTranslation r);

/// Symmetry type of the projected axis lattice, naming the deformable part
/// of a dicosm-axial twistoid.
enum class DeformableClass { C1, C2, C2_02, C2_1, C4 };

std::string to_string(DeformableClass c);

/// Symmetry predicates of a twistoid, by case.
struct SymmetryProfile {
    // dicosm-axial
    std::set<RigidTranslation> rigid;
    DeformableClass deformable = DeformableClass::C4;
    bool gamma1 = false, gamma2 = false, eta = false;
    // dicosm-diagonal
    bool beta = false, chi = false;
    // tricosm
    bool zeta = false;
    // tetracosm
    bool alpha = false;
};

struct ClassificationReport {
    ManifoldKind kind{};
    TwistoidParams params;
    std::string familyId;
    SymmetryProfile profile;
    long long flagCount = 0;
    Rational cubeCount;
    long long flagOrbitCount = 0;
    long long identityComponentOrder = 0;
};

/// Number of flags of the quotient tessellation, in integer-encoded form.
long long flag_count(const TwistoidParams& params);

/// Which of the translations alpha, beta, alphabeta normalize the group.
std::set<RigidTranslation> rigid_part_dicosm_axial(const DicosmAxialParams& p);

/// Deformable class from the gamma_1 / gamma_2 / eta predicates.  Throws
/// InternalInconsistency on a predicate combination that cannot occur.
DeformableClass deformable_class_dicosm_axial(const DicosmAxialParams& p);

/// Symmetry type of the projected axis lattice alone, ignoring how the
/// generators are anchored on it.  This is what the minimal toroidal cover
/// inherits; it differs from the twistoid's deformable class exactly when a
/// half-integer anchor blocks a lattice symmetry.
DeformableClass axial_lattice_class(const DicosmAxialParams& p);

/// Full closed-form classification of a validated parameter set.
ClassificationReport classify(const TwistoidParams& params);

/// The 18 dicosm-axial family witnesses with their expected (rigid row,
/// deformable column) labels, C = 1.
struct Table2Witness {
    DicosmAxialParams params;
    std::string row;
    std::string column;
};
std::vector<Table2Witness> table2_witnesses();

/// Parameters of the dual twistoid, re-extracted into the same scheme.  When
/// the dual admits no direct parameterization it is represented through its
/// own dual, so the input parameters come back unchanged.
TwistoidParams dual_params(const TwistoidParams& params);

}  // namespace twistoid

#endif
