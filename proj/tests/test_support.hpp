#ifndef TWISTOID_TEST_SUPPORT_HPP
#define TWISTOID_TEST_SUPPORT_HPP

#include <cstdlib>
#include <random>

#include "twistoid/isometry.hpp"

namespace twistoid::testsupport {

// Deterministic RNG; override the seed with TWISTOID_TEST_SEED.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen = [] {
        const char* env = std::getenv("TWISTOID_TEST_SEED");
        unsigned long long seed = env ? std::strtoull(env, nullptr, 10) : 20240811ULL;
        return std::mt19937_64(seed);
    }();
    return gen;
}

inline long long random_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline const SignedPerm& random_signed_perm() {
    return SignedPerm::from_index(static_cast<int>(random_int(0, 47)));
}

// Random element of the tessellation symmetry group with small translation.
inline Isometry random_lattice_isometry(long long span = 4) {
    return {random_signed_perm(),
            RVec3(IVec3{random_int(-span, span), random_int(-span, span), random_int(-span, span)})};
}

}  // namespace twistoid::testsupport

#endif
