#ifndef TWISTOID_COVERS_HPP
#define TWISTOID_COVERS_HPP

#include <string>

#include "twistoid/classifier.hpp"
#include "twistoid/group.hpp"
#include "twistoid/lattice.hpp"
#include "twistoid/params.hpp"

namespace twistoid {

/// Symmetry-type label of a cubic tessellation of the 3-torus, consumed here
/// as an output label for minimal toroidal covers.  The number is the flag
/// orbit count of the cover; covers of twistoids never reach 24 orbits.
enum class ToroidClass { T1, T3, T4, T6A, T6B, T6C, T8, T12A, T12B };

std::string to_string(ToroidClass c);

/// Flag-orbit count named by the class label.
int toroid_class_orbits(ToroidClass c);

/// Minimal toroidal cover of a twistoid: the quotient of the tessellation by
/// the translation subgroup of the twist group.
struct CoverLattice {
    IVec3 t1, t2, t3;
    long long index = 0;
    TranslationLattice lattice;
};

CoverLattice cover_lattice(const TwistoidParams& params);

ToroidClass cover_class(const TwistoidParams& params);

/// 48 flags per cube times the lattice index.
long long cover_flag_count(const CoverLattice& lat);

}  // namespace twistoid

#endif
