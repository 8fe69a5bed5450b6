#include "twistoid/isometry.hpp"

namespace twistoid {

Isometry compose(const Isometry& g, const Isometry& h) {
    return {g.linear * h.linear, g.linear.apply(h.translation) + g.translation};
}

Isometry inverse(const Isometry& g) {
    SignedPerm inv = g.linear.inverse();
    return {inv, -inv.apply(g.translation)};
}

Isometry conjugate(const Isometry& g, const Isometry& h) {
    return compose(h, compose(g, inverse(h)));
}

Isometry power(const Isometry& g, int k) {
    if (k < 0) return power(inverse(g), -k);
    Isometry r = Isometry::identity();
    for (int i = 0; i < k; ++i) r = compose(r, g);
    return r;
}

bool preserves_tessellation(const Isometry& g) { return g.translation.is_integral(); }

}  // namespace twistoid
