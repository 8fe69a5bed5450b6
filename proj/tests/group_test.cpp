#include <doctest.h>

#include "test_support.hpp"
#include "twistoid/group.hpp"
#include "twistoid/twist.hpp"

using namespace twistoid;
using namespace twistoid::testsupport;

namespace {

std::vector<TwistoidParams> sample_params() {
    return {
        TwistoidParams{DicosmAxialParams{1, 0, 2, 0, 2}},
        TwistoidParams{DicosmAxialParams{1, 0, 5, 2, 1}},
        TwistoidParams{DicosmAxialParams{1, 1, 3, 1, 1}},
        TwistoidParams{DicosmDiagonalParams{1, 1, 3, 1, 1}},
        TwistoidParams{DicosmDiagonalParams{2, 0, 2, 0, 2}},
        TwistoidParams{TricosmParams{1, 1, 0}},
        TwistoidParams{TricosmParams{3, 1, 1}},
        TwistoidParams{TricosmParams{2, 2, 1}},
        TwistoidParams{TetracosmParams{1, 1, 0}},
        TwistoidParams{TetracosmParams{1, 1, 1}},
        TwistoidParams{TetracosmParams{2, 3, 1}},
    };
}

// a random element of the group: word in generators and lattice vectors
Isometry random_group_element(const GroupSpec& g) {
    Isometry x = Isometry::identity();
    for (int i = 0; i < 4; ++i) {
        long long pick = random_int(0, static_cast<long long>(g.generators.size()));
        if (pick < static_cast<long long>(g.generators.size())) {
            const Isometry& s = g.generators[static_cast<size_t>(pick)];
            x = compose(x, random_int(0, 1) ? s : inverse(s));
        } else {
            const auto& b = g.lattice.basis()[static_cast<size_t>(random_int(0, 2))];
            x = compose(x, Isometry::from_translation(b));
        }
    }
    return x;
}

}  // namespace

TEST_CASE("hexacosm construction is impossible") {
    CHECK_THROWS_AS(build_hexacosm_group(), HexacosmImpossible);
    try {
        build_hexacosm_group();
    } catch (const HexacosmImpossible& e) {
        CHECK(std::string(e.what()).find("no 6-fold twist type exists in Table 1") != std::string::npos);
    }
}

TEST_CASE("generators preserve the tessellation and act freely") {
    for (const auto& params : sample_params()) {
        GroupSpec g = build_group(validate(params));
        for (const auto& s : g.generators) {
            CHECK(preserves_tessellation(s));
            auto td = analyze_twist(s);
            REQUIRE(td.has_value());
            CHECK(td->axisDirection == g.axisDirection);
        }
        CHECK(preserves_tessellation(g.derived));
        CHECK(is_fixed_point_free_witness(g, 4));
    }
}

TEST_CASE("a corrupted group with a pure rotation generator is not free") {
    GroupSpec g = build_group(TwistoidParams{DicosmAxialParams{1, 0, 2, 0, 2}});
    g.generators[0] = Isometry{g.sigma1().linear, RVec3()};  // drop the twist translation
    CHECK_FALSE(is_fixed_point_free_witness(g, 4));
}

TEST_CASE("tetracosm with a fixed half-integer axis offset stays free") {
    GroupSpec g = build_group(TwistoidParams{TetracosmParams{1, 1, 1}});  // p = q = 1/2
    CHECK(is_fixed_point_free_witness(g, 4));
}

TEST_CASE("tetracosm generators sit on the stated axes") {
    // colliding generator axes are rejected outright
    CHECK_THROWS_AS(validate(TetracosmParams{1, 0, 0}), InvalidParameters);
    // p = 1, q = 0: the half-turn twist acts about the vertical axis through
    // (1,0) with translation (0,0,2), and the derived 4-fold twist about the
    // axis through (p - q, p + q) = (1,1)
    GroupSpec g = build_group(TwistoidParams{TetracosmParams{1, 2, 0}});
    auto t2 = analyze_twist(g.generators[1]);
    REQUIRE(t2.has_value());
    CHECK(t2->rotationOrder == 2);
    CHECK(t2->axisPoint == RVec3(IVec3{1, 0, 0}));
    CHECK(t2->translationalComponent == RVec3(IVec3{0, 0, 2}));
    // the derived 4-fold twist completes a right isosceles triangle with the
    // right angle at sigma_2's projection (its position flips with the
    // rotation sense of sigma_1)
    auto ts = analyze_twist(g.derived);
    REQUIRE(ts.has_value());
    CHECK(ts->rotationOrder == 4);
    auto t1 = analyze_twist(g.sigma1());
    RVec3 leg1 = t1->axisPoint - t2->axisPoint;
    RVec3 leg2 = ts->axisPoint - t2->axisPoint;
    CHECK(dot(leg1, leg2) == Rational(0));
    CHECK(dot(leg1, leg1) == dot(leg2, leg2));
    CHECK(contains(g, g.derived));
}

TEST_CASE("translation lattices match the constructed compositions") {
    // dicosm-axial (C=1, p2=1, p3=0, q3=1): basis (0,0,2),(2,0,0),(0,2,0), index 8
    GroupSpec g = build_group(TwistoidParams{DicosmAxialParams{1, 0, 2, 0, 2}});
    CHECK(g.lattice == TranslationLattice::from_basis({0, 0, 2}, {2, 0, 0}, {0, 2, 0}));
    CHECK(g.lattice.index() == 8);
    CHECK(power(g.generators[0], 2) == Isometry::from_translation(IVec3{0, 0, 2}));
    CHECK(compose(g.generators[1], inverse(g.generators[0])) ==
          Isometry::from_translation(IVec3{2, 0, 0}));
    CHECK(compose(g.generators[2], inverse(g.generators[0])) ==
          Isometry::from_translation(IVec3{0, 2, 0}));

    // tetracosm c=1, p=1, q=0: basis (0,0,4),(2,0,0),(0,-2,0), index 16
    GroupSpec t = build_group(TwistoidParams{TetracosmParams{1, 2, 0}});
    CHECK(t.lattice == TranslationLattice::from_basis({0, 0, 4}, {2, 0, 0}, {0, -2, 0}));
    CHECK(t.lattice.index() == 16);

    // the square of the 4-fold twist is the half-turn twist with doubled
    // translation; checked by evaluating both sides on sample points
    Isometry sq = power(t.sigma1(), 2);
    Isometry expect{SignedPerm::diag(-1, -1, 1), RVec3(IVec3{0, 0, 2})};
    CHECK(sq == expect);
    for (const RVec3& pt : {RVec3(), RVec3(IVec3{1, 0, 0})})
        CHECK(sq.apply(pt) == expect.apply(pt));

    // tricosm m=3,a=1,b=0: basis (3,3,3),(1,0,-1),(0,1,-1), index 9
    GroupSpec tr = build_group(TwistoidParams{TricosmParams{3, 1, 0}});
    CHECK(tr.lattice == TranslationLattice::from_basis({3, 3, 3}, {1, 0, -1}, {0, 1, -1}));
    CHECK(tr.lattice.index() == 9);
}

TEST_CASE("the translation lattice is exactly the kernel of the rotation map") {
    for (const auto& params : sample_params()) {
        GroupSpec g = build_group(validate(params));
        // every lattice vector is a group element
        for (const auto& b : g.lattice.basis())
            CHECK(contains(g, Isometry::from_translation(b)));
        // every group element with trivial rotation lies in the lattice
        for (int i = 0; i < 40; ++i) {
            Isometry x = random_group_element(g);
            CHECK(contains(g, x));
            if (x.is_translation()) CHECK(g.lattice.contains(x.translation.as_ivec()));
        }
        // the lattice is invariant under conjugation by the base rotation
        for (const auto& b : g.lattice.basis())
            CHECK(g.lattice.contains(g.sigma1().linear.apply(b)));
    }
}

TEST_CASE("membership is closed under products and inverses") {
    for (const auto& params : sample_params()) {
        GroupSpec g = build_group(validate(params));
        for (const auto& s : g.generators) CHECK(contains(g, s));
        CHECK(contains(g, g.derived));
        for (int i = 0; i < 30; ++i) {
            Isometry x = random_group_element(g);
            Isometry y = random_group_element(g);
            CHECK(contains(g, compose(x, y)));
            CHECK(contains(g, inverse(x)));
        }
        // a pure rotation is never a member (fixed points)
        CHECK_FALSE(contains(g, Isometry{g.sigma1().linear, RVec3()}));
    }
}

TEST_CASE("frozen membership examples") {
    GroupSpec g = build_group(TwistoidParams{DicosmAxialParams{1, 0, 2, 0, 2}});
    CHECK_FALSE(contains(g, Isometry::from_translation(IVec3{1, 0, 0})));
    CHECK(contains(g, Isometry::from_translation(IVec3{2, 0, 0})));
    CHECK(contains(g, power(g.sigma1(), 2)));
}

TEST_CASE("canonical decomposition is stable on cosets") {
    for (const auto& params : sample_params()) {
        GroupSpec g = build_group(validate(params));
        for (int i = 0; i < 30; ++i) {
            Isometry x = random_group_element(g);
            auto ce = canonical_element(g, x);
            REQUIRE(ce.has_value());
            CHECK(ce->cosetVector.is_zero());
            CHECK(x.linear == g.rotationPowers[static_cast<size_t>(ce->power)]);
            // shifting by an outside translation moves only the coset vector
            Isometry y = compose(Isometry::from_translation(IVec3{1, 0, 0}), x);
            auto cy = canonical_element(g, y);
            REQUIRE(cy.has_value());
            CHECK(cy->power == ce->power);
            Isometry z = compose(Isometry::from_translation(g.lattice.basis()[0]), y);
            auto cz = canonical_element(g, z);
            REQUIRE(cz.has_value());
            CHECK(cz->cosetVector == cy->cosetVector);
        }
        // improper or foreign rotations have no decomposition
        CHECK_FALSE(canonical_element(g, Isometry{SignedPerm::diag(1, -1, 1), RVec3()}).has_value());
    }
}

TEST_CASE("lattice index formulas") {
    for (long long C = 1; C <= 2; ++C)
        for (long long P = 1; P <= 4; ++P)
            for (long long Q = 0; Q <= P; ++Q) {
                GroupSpec g = build_group(TwistoidParams{TetracosmParams{C, P, Q}});
                CHECK(g.lattice.index() == 4 * C * (P * P + Q * Q));  // 16c(p^2+q^2)
            }
    for (long long M = 1; M <= 3; ++M)
        for (long long a = 1; a <= 3; ++a)
            for (long long b = 0; b <= 3; ++b) {
                GroupSpec g = build_group(TwistoidParams{TricosmParams{M, a, b}});
                CHECK(g.lattice.index() == 3 * M * (a * a + a * b + b * b));
            }
}

TEST_CASE("normalizes flags exactly the symmetry translations") {
    // generators always normalize
    for (const auto& params : sample_params()) {
        GroupSpec g = build_group(validate(params));
        for (const auto& s : g.generators) CHECK(normalizes(g, s));
    }
    // the reflection rho in the plane z=0 normalizes every axial dicosm group
    for (long long P2 : {2, 3, 5}) {
        GroupSpec g = build_group(TwistoidParams{DicosmAxialParams{1, 0, P2, 0, 3}});
        CHECK(normalizes(g, Isometry{SignedPerm::diag(1, 1, -1), RVec3()}));
    }
    // alpha = (1,0,0) normalizes iff p2 - p1 divides it into the axis lattice
    GroupSpec gHalf = build_group(TwistoidParams{DicosmAxialParams{1, 0, 5, 0, 2}});  // p2 = 5/2
    CHECK_FALSE(normalizes(gHalf, Isometry::from_translation(IVec3{1, 0, 0})));
    GroupSpec gInt = build_group(TwistoidParams{DicosmAxialParams{1, 0, 2, 0, 2}});  // p2 = 1
    CHECK(normalizes(gInt, Isometry::from_translation(IVec3{1, 0, 0})));
}

TEST_CASE("tricosm generators have the twist types fixed by the axis location") {
    // 3 | M: vertex axis, both senses integral, type VIII
    GroupSpec g3 = build_group(TwistoidParams{TricosmParams{3, 1, 0}});
    auto t3 = analyze_twist(g3.sigma1());
    CHECK(classify_twist_type(*t3) == TwistType::VIII);
    // 3 does not divide M: Petrie axis, type IX
    GroupSpec g1 = build_group(TwistoidParams{TricosmParams{1, 1, 0}});
    auto t1 = analyze_twist(g1.sigma1());
    CHECK(classify_twist_type(*t1) == TwistType::IX);
    CHECK(t1->axisPoint == RVec3{Rational(1, 3), Rational(-1, 3), Rational(0)});
    // sigma_3 squared equals sigma_1 sigma_2
    for (const auto& params : {TricosmParams{1, 1, 0}, TricosmParams{2, 2, 1}, TricosmParams{3, 1, 1}}) {
        GroupSpec g = build_group(TwistoidParams{params});
        CHECK(power(g.derived, 2) == compose(g.generators[0], g.generators[1]));
    }
}

TEST_CASE("dual group shifts axes by the half-grid vector") {
    // axial p1 = 0: base twist of type I, dual of type III
    GroupSpec g = build_group(TwistoidParams{DicosmAxialParams{1, 0, 2, 0, 2}});
    GroupSpec d = dual_group(g);
    auto td = analyze_twist(d.sigma1());
    CHECK(classify_twist_type(*analyze_twist(g.sigma1())) == TwistType::I);
    CHECK(classify_twist_type(*td) == TwistType::III);

    // tetracosm: vertex 4-fold axis becomes a cube-center axis
    GroupSpec t = build_group(TwistoidParams{TetracosmParams{1, 1, 1}});
    CHECK(classify_twist_type(*analyze_twist(t.sigma1())) == TwistType::X);
    CHECK(classify_twist_type(*analyze_twist(dual_group(t).sigma1())) == TwistType::XI);

    // dual of dual differs from the original by the inner translation (1,1,1)
    GroupSpec dd = dual_group(dual_group(g));
    for (size_t i = 0; i < g.generators.size(); ++i) {
        Isometry expected = conjugate(g.generators[i], Isometry::from_translation(IVec3{1, 1, 1}));
        CHECK(dd.generators[i] == expected);
    }

    // the tricosm dual group is literally the same group
    GroupSpec tr = build_group(TwistoidParams{TricosmParams{2, 2, 1}});
    GroupSpec trd = dual_group(tr);
    for (size_t i = 0; i < tr.generators.size(); ++i) CHECK(trd.generators[i] == tr.generators[i]);
}
