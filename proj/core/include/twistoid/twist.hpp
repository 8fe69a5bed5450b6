#ifndef TWISTOID_TWIST_HPP
#define TWISTOID_TWIST_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistoid/isometry.hpp"
#include "twistoid/rational.hpp"

namespace twistoid {

/// The eleven conjugacy classes of twists (screw motions) preserving the
/// cubic tessellation.
enum class TwistType { I, II, III, IV, V, VI, VII, VIII, IX, X, XI };

std::string to_string(TwistType t);

/// Which face centroids a twist axis meets: vertices, edge midpoints,
/// square centers, cube centers.
enum class CentroidClass { Vertex = 0, Edge = 1, Square = 2, Cube = 3 };

/// Screw-motion decomposition of an isometry: rotation of the stated order
/// about the axis through axisPoint with direction axisDirection, followed by
/// the translation along the axis.
///
/// axisDirection is the lexicographically largest primitive integer vector
/// among the two orientations of the axis.  axisPoint is the unique point of
/// the axis perpendicular to the direction (axisPoint . axisDirection = 0),
/// which makes axis equality a structural comparison.  The linear part is
/// retained so the isometry can be reconstructed exactly (the axis data alone
/// does not determine the rotation sense for orders 3 and 4).
struct TwistData {
    Isometry source;               // the analyzed isometry
    SignedPerm rotation;           // = source.linear
    RVec3 axisPoint;               // perpendicular foot of the axis
    IVec3 axisDirection;           // primitive, canonical sign
    int rotationOrder = 0;         // 2, 3 or 4
    RVec3 translationalComponent;  // nonzero multiple of axisDirection
    QuadMagnitude normClass;       // |translationalComponent| as coeff*sqrt(r)
};

enum class TwistError { NotATwist };

/// Fixed-line direction of a proper rotation, primitive with canonical sign.
/// Throws std::invalid_argument for the identity or improper matrices.
IVec3 proper_rotation_axis(const SignedPerm& m);

/// Decompose g into rotation-about-axis plus translation-along-axis.
/// Fails (nullopt) for the identity, pure translations, pure rotations and
/// improper isometries.
std::optional<TwistData> analyze_twist(const Isometry& g);

/// Rebuild the isometry from its twist decomposition; exact inverse of
/// analyze_twist.
Isometry reconstruct_twist(const TwistData& t);

/// Exact set of centroid classes met by the axis of t.
std::set<CentroidClass> axis_centroid_classes(const TwistData& t);

enum class TwistClassifyError { Unclassifiable };

/// The unique row of the twist-class table matching (order, direction class,
/// norm class, centroid incidences).  Fails only for isometries outside the
/// tessellation symmetry group.
std::optional<TwistType> classify_twist_type(const TwistData& t);

enum class PetrieHandedness { VertexAxis, RightPetrie, LeftPetrie };

std::string to_string(PetrieHandedness h);

/// For a 3-fold twist with axis parallel to a body diagonal: let m be the
/// integer norm-of-translational-component times sqrt(3).  m = 0 mod 3 marks
/// a vertex axis, m = 1 a right Petrie axis, m = 2 a left Petrie axis.
/// Throws std::invalid_argument when the order is not 3.
PetrieHandedness petrie_handedness(const TwistData& t);

/// The integer m := norm * sqrt(3) of a 3-fold twist.
long long petrie_m(const TwistData& t);

/// One attribute row of the twist-class table.
struct TwistTypeRow {
    TwistType type;
    int period;
    bool v, e, s, c;
    std::string direction;  // representative direction label
    std::string norm;       // norm class label
};

/// The eleven table rows in order.
const std::vector<TwistTypeRow>& twist_type_table();

/// One concrete twist per class, used to regenerate the table.
const std::vector<std::pair<TwistType, Isometry>>& canonical_twist_representatives();

}  // namespace twistoid

#endif
