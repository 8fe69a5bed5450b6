#ifndef TWISTOID_ISOMETRY_HPP
#define TWISTOID_ISOMETRY_HPP

#include <ostream>

#include "twistoid/signed_perm.hpp"
#include "twistoid/vec.hpp"

namespace twistoid {

/// Affine isometry x -> linear*x + translation with signed-permutation linear
/// part.  Translations are rational so that conjugating elements such as the
/// half-grid shift (1/2,1/2,1/2) are representable; membership in the
/// tessellation symmetry group is exactly integrality of the translation.
struct Isometry {
    SignedPerm linear;
    RVec3 translation;

    Isometry() = default;
    Isometry(SignedPerm m, RVec3 t) : linear(m), translation(t) {}

    static Isometry identity() { return {}; }
    static Isometry from_translation(const RVec3& t) { return {SignedPerm::identity(), t}; }
    static Isometry from_translation(const IVec3& t) { return {SignedPerm::identity(), RVec3(t)}; }

    RVec3 apply(const RVec3& p) const { return linear.apply(p) + translation; }

    bool is_translation() const { return linear.is_identity(); }

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.linear == b.linear && a.translation == b.translation;
    }
    friend bool operator!=(const Isometry& a, const Isometry& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Isometry& g) {
        return os << g.linear << "+" << g.translation;
    }
};

/// g after h: (compose(g,h))(x) = g(h(x)).
Isometry compose(const Isometry& g, const Isometry& h);

Isometry inverse(const Isometry& g);

/// Conjugate g by h: h g h^{-1}.
Isometry conjugate(const Isometry& g, const Isometry& h);

/// Integer power (negative allowed).
Isometry power(const Isometry& g, int k);

/// Exact membership in the symmetry group of the unit cubic tessellation:
/// the linear part is a signed permutation by typing, so this is integrality
/// of the translation vector.
bool preserves_tessellation(const Isometry& g);

}  // namespace twistoid

#endif
