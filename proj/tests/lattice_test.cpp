#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "twistoid/lattice.hpp"

using namespace twistoid;
using namespace twistoid::testsupport;

TEST_CASE("hermite form is canonical and index is the determinant") {
    auto lat = TranslationLattice::from_basis({0, 0, 2}, {2, 0, 0}, {0, 2, 0});
    CHECK(lat.index() == 8);
    CHECK(lat.contains({2, 0, 0}));
    CHECK(lat.contains({0, -2, 0}));
    CHECK_FALSE(lat.contains({1, 0, 0}));
    CHECK(lat.residues().size() == 8);

    // same lattice from a different basis gives the same hermite form
    auto lat2 = TranslationLattice::from_basis({2, 2, 0}, {2, -2, 0}, {2, 0, 2});
    auto lat3 = TranslationLattice::from_basis({2, 2, 0}, {0, 4, 0}, {2, 0, 2});
    CHECK(lat2 == lat3);
}

namespace {

// Independent membership oracle: Cramer's rule over exact rationals.
bool member_by_cramer(const IVec3& a, const IVec3& b, const IVec3& c, const IVec3& v) {
    auto det = [](const IVec3& r0, const IVec3& r1, const IVec3& r2) {
        return r0.x * (r1.y * r2.z - r1.z * r2.y) - r0.y * (r1.x * r2.z - r1.z * r2.x) +
               r0.z * (r1.x * r2.y - r1.y * r2.x);
    };
    long long d = det(a, b, c);
    REQUIRE(d != 0);
    return Rational(det(v, b, c), d).is_integer() && Rational(det(a, v, c), d).is_integer() &&
           Rational(det(a, b, v), d).is_integer();
}

}  // namespace

TEST_CASE("membership agrees with an exact cramer solve over random lattices") {
    for (int trial = 0; trial < 60; ++trial) {
        IVec3 a{random_int(1, 4), random_int(-3, 3), random_int(-3, 3)};
        IVec3 b{random_int(-2, 2), random_int(1, 4), random_int(-3, 3)};
        IVec3 c{random_int(-2, 2), random_int(-2, 2), random_int(1, 4)};
        auto det = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
                   a.z * (b.x * c.y - b.y * c.x);
        if (det == 0) continue;
        auto lat = TranslationLattice::from_basis(a, b, c);
        CHECK(lat.index() == (det < 0 ? -det : det));
        for (int i = 0; i < 40; ++i) {
            IVec3 v{random_int(-6, 6), random_int(-6, 6), random_int(-6, 6)};
            CHECK(lat.contains(v) == member_by_cramer(a, b, c, v));
        }
        for (const auto& bv : {a, b, c}) CHECK(lat.contains(bv));
    }
}

TEST_CASE("reduce maps cosets to unique representatives") {
    auto lat = TranslationLattice::from_basis({3, 1, 0}, {0, 2, 1}, {0, 0, 4});
    auto residues = lat.residues();
    CHECK(static_cast<long long>(residues.size()) == lat.index());
    std::set<IVec3> reps(residues.begin(), residues.end());
    CHECK(reps.size() == residues.size());
    for (int i = 0; i < 200; ++i) {
        IVec3 v{random_int(-9, 9), random_int(-9, 9), random_int(-9, 9)};
        IVec3 r = lat.reduce(v);
        CHECK(reps.count(r) == 1);
        CHECK(lat.contains(v - r));
        // reduction is constant on cosets
        IVec3 shifted = v + random_int(-2, 2) * lat.basis()[0] + random_int(-2, 2) * lat.basis()[1];
        CHECK(lat.reduce(shifted) == r);
    }
}

TEST_CASE("point stabilizer of the cubic lattice is the full point group") {
    auto cubic = TranslationLattice::from_basis({2, 0, 0}, {0, 2, 0}, {0, 0, 2});
    CHECK(cubic.point_stabilizer().size() == 48);
    auto tetragonal = TranslationLattice::from_basis({2, 0, 0}, {0, 2, 0}, {0, 0, 4});
    CHECK(tetragonal.point_stabilizer().size() == 16);
    auto generic = TranslationLattice::from_basis({5, 0, 0}, {1, 2, 0}, {0, 0, 7});
    CHECK(generic.point_stabilizer().size() == 4);  // +-identity and z-flips
}

TEST_CASE("plane lattice canonical form") {
    auto l = PlaneLattice::from_vectors({{Rational(3, 2), Rational(0)}, {Rational(1), Rational(1, 2)}});
    CHECK(l.xstep() == Rational(3, 2));
    CHECK(l.ystep() == Rational(1, 2));
    CHECK(l.yoffset() == Rational(1));
    CHECK(l.contains({Rational(3, 2), Rational(0)}));
    CHECK(l.contains({Rational(-1, 2), Rational(1, 2)}));
    CHECK_FALSE(l.contains({Rational(1, 2), Rational(0)}));

    // generators in a different order give the same canonical data
    auto l2 = PlaneLattice::from_vectors(
        {{Rational(1), Rational(1, 2)}, {Rational(-1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(0)}});
    CHECK(l == l2);
}

TEST_CASE("plane lattice join and transform") {
    auto l = PlaneLattice::from_vectors({{Rational(2), Rational(0)}, {Rational(0), Rational(2)}});
    auto joined = l.join({{Rational(1), Rational(1)}});
    CHECK(joined.contains({Rational(1), Rational(1)}));
    CHECK(joined.contains({Rational(2), Rational(0)}));
    CHECK_FALSE(joined.contains({Rational(1), Rational(0)}));

    auto rot = l.transformed(0, -1, 1, 0);
    CHECK(rot == l);
    auto skew = PlaneLattice::from_vectors({{Rational(3), Rational(0)}, {Rational(1), Rational(1)}});
    CHECK(skew.transformed(0, 1, 1, 0).contains({Rational(0), Rational(3)}));
}
