#include <doctest.h>

#include <map>

#include "test_support.hpp"
#include "twistoid/twist.hpp"

using namespace twistoid;
using namespace twistoid::testsupport;

namespace {

const SignedPerm kHalfZ = SignedPerm::diag(-1, -1, 1);
const SignedPerm kRot4Z = SignedPerm::from_perm_signs({1, 0, 2}, {-1, 1, 1});
const SignedPerm kRot3Cyc = SignedPerm::from_perm_signs({2, 0, 1}, {1, 1, 1});
const SignedPerm kRot3Anti = SignedPerm::from_perm_signs({1, 2, 0}, {1, 1, 1});

// Independent incidence oracle: scan rational points of the axis with small
// denominators and classify them directly.
std::set<CentroidClass> incidence_by_scan(const TwistData& t) {
    std::set<CentroidClass> out;
    for (long long num = -48; num <= 48; ++num) {
        RVec3 p = t.axisPoint + Rational(num, 12) * RVec3(t.axisDirection);
        bool halfGrid = true;
        int halves = 0;
        for (int i = 0; i < 3; ++i) {
            Rational two = Rational(2) * p[i];
            if (!two.is_integer()) halfGrid = false;
            else if (!p[i].is_integer()) ++halves;
        }
        if (halfGrid) out.insert(static_cast<CentroidClass>(halves));
    }
    return out;
}

}  // namespace

TEST_CASE("analyze_twist on axis-parallel half-turn twists") {
    Isometry g{kHalfZ, RVec3(IVec3{0, 0, 1})};
    auto t = analyze_twist(g);
    REQUIRE(t.has_value());
    CHECK(t->rotationOrder == 2);
    CHECK(t->axisDirection == IVec3{0, 0, 1});
    CHECK(t->axisPoint == RVec3());
    CHECK(t->translationalComponent == RVec3(IVec3{0, 0, 1}));
    CHECK(t->normClass == QuadMagnitude{Rational(1), 1});
}

TEST_CASE("pure rotations, translations and improper maps are not twists") {
    CHECK_FALSE(analyze_twist(Isometry{kHalfZ, RVec3()}).has_value());
    CHECK_FALSE(analyze_twist(Isometry::from_translation(IVec3{1, 2, 3})).has_value());
    CHECK_FALSE(analyze_twist(Isometry::identity()).has_value());
    CHECK_FALSE(analyze_twist(Isometry{SignedPerm::inversion(), RVec3(IVec3{1, 0, 0})}).has_value());
    // half-turn with translation perpendicular to the axis: a rotation about
    // a shifted axis, still fixes points
    CHECK_FALSE(analyze_twist(Isometry{kHalfZ, RVec3(IVec3{1, 0, 0})}).has_value());
}

TEST_CASE("3-fold twist along the diagonal") {
    // cyclic permutation plus (1,1,1)
    Isometry g{kRot3Cyc, RVec3(IVec3{1, 1, 1})};
    auto t = analyze_twist(g);
    REQUIRE(t.has_value());
    CHECK(t->rotationOrder == 3);
    CHECK(t->axisDirection == IVec3{1, 1, 1});
    CHECK(t->translationalComponent == RVec3(IVec3{1, 1, 1}));
    CHECK(t->axisPoint == RVec3());
    // g^3 is the translation by (3,3,3)
    CHECK(power(g, 3) == Isometry::from_translation(IVec3{3, 3, 3}));
}

TEST_CASE("twist reconstruction is exact over random group elements") {
    int analyzed = 0;
    for (int i = 0; i < 500 && analyzed < 120; ++i) {
        Isometry g = random_lattice_isometry();
        auto t = analyze_twist(g);
        if (!t) continue;
        ++analyzed;
        CHECK(reconstruct_twist(*t) == g);
        CHECK(dot(t->translationalComponent, t->axisDirection) != Rational(0));
        // component is a scalar multiple of the direction
        RVec3 scaled = dot(t->translationalComponent, t->axisDirection) /
                           Rational(dot(t->axisDirection, t->axisDirection)) *
                       RVec3(t->axisDirection);
        CHECK(scaled == t->translationalComponent);
        CHECK(t->axisPoint == t->rotation.apply(t->axisPoint) +
                                  (t->source.translation - t->translationalComponent));
    }
    CHECK(analyzed >= 100);
}

TEST_CASE("centroid incidence matches the scan oracle") {
    for (int i = 0; i < 400; ++i) {
        Isometry g = random_lattice_isometry();
        auto t = analyze_twist(g);
        if (!t) continue;
        CHECK(axis_centroid_classes(*t) == incidence_by_scan(*t));
    }
    for (const auto& [type, rep] : canonical_twist_representatives()) {
        auto t = analyze_twist(rep);
        REQUIRE(t.has_value());
        CHECK(axis_centroid_classes(*t) == incidence_by_scan(*t));
    }
}

TEST_CASE("the canonical representatives reproduce all eleven twist classes") {
    const auto& reps = canonical_twist_representatives();
    REQUIRE(reps.size() == 11);
    const auto& table = twist_type_table();
    for (size_t i = 0; i < reps.size(); ++i) {
        auto t = analyze_twist(reps[i].second);
        REQUIRE(t.has_value());
        auto type = classify_twist_type(*t);
        REQUIRE(type.has_value());
        CHECK(*type == reps[i].first);
        // table attributes regenerate exactly
        const auto& row = table[i];
        CHECK(row.type == reps[i].first);
        CHECK(row.period == t->rotationOrder);
        auto marks = axis_centroid_classes(*t);
        CHECK(row.v == (marks.count(CentroidClass::Vertex) != 0));
        CHECK(row.e == (marks.count(CentroidClass::Edge) != 0));
        CHECK(row.s == (marks.count(CentroidClass::Square) != 0));
        CHECK(row.c == (marks.count(CentroidClass::Cube) != 0));
    }
}

TEST_CASE("frozen classification examples") {
    auto classify_of = [](const Isometry& g) {
        auto t = analyze_twist(g);
        REQUIRE(t.has_value());
        auto type = classify_twist_type(*t);
        REQUIRE(type.has_value());
        return *type;
    };
    // order 2, axis through the origin, norm 1
    CHECK(classify_of(Isometry{kHalfZ, RVec3(IVec3{0, 0, 1})}) == TwistType::I);
    // order 3 Petrie twist: axis through (1/3,-1/3,0), norm sqrt(3)/3
    Isometry petrie{kRot3Anti, RVec3(IVec3{1, 0, 0})};
    auto tp = analyze_twist(petrie);
    REQUIRE(tp.has_value());
    CHECK(tp->axisPoint == RVec3{Rational(1, 3), Rational(-1, 3), Rational(0)});
    CHECK(tp->normClass == QuadMagnitude{Rational(1, 3), 3});
    CHECK(classify_of(petrie) == TwistType::IX);
    // order 4 through (1/2,1/2), norm 1
    CHECK(classify_of(Isometry{kRot4Z, RVec3(IVec3{1, 0, 1})}) == TwistType::XI);
}

TEST_CASE("classification is invariant under conjugation") {
    for (const auto& [type, rep] : canonical_twist_representatives()) {
        for (int i = 0; i < 30; ++i) {
            Isometry h = random_lattice_isometry();
            auto t = analyze_twist(conjugate(rep, h));
            REQUIRE(t.has_value());
            auto got = classify_twist_type(*t);
            REQUIRE(got.has_value());
            CHECK(*got == type);
        }
    }
}

TEST_CASE("no twist of rotation order other than 2,3,4 exists") {
    std::set<int> orders;
    for (const auto& m : SignedPerm::all())
        for (long long x = -2; x <= 2; ++x)
            for (long long y = -2; y <= 2; ++y)
                for (long long z = -2; z <= 2; ++z) {
                    auto t = analyze_twist(Isometry{m, RVec3(IVec3{x, y, z})});
                    if (t) orders.insert(t->rotationOrder);
                }
    CHECK(orders == std::set<int>{2, 3, 4});
}

TEST_CASE("petrie handedness follows m mod 3") {
    // m = 3: vertex axis twist with c = sqrt(3)
    auto t3 = analyze_twist(Isometry{kRot3Cyc, RVec3(IVec3{1, 1, 1})});
    CHECK(petrie_m(*t3) == 3);
    CHECK(petrie_handedness(*t3) == PetrieHandedness::VertexAxis);
    // m = 1: right Petrie axis
    auto t1 = analyze_twist(Isometry{kRot3Anti, RVec3(IVec3{1, 0, 0})});
    CHECK(petrie_m(*t1) == 1);
    CHECK(petrie_handedness(*t1) == PetrieHandedness::RightPetrie);
    // m = 2: left handedness, cyclic sense about the same axis
    auto t2 = analyze_twist(Isometry{kRot3Cyc, RVec3(IVec3{1, 0, 1})});
    REQUIRE(t2.has_value());
    CHECK(petrie_m(*t2) == 2);
    CHECK(petrie_handedness(*t2) == PetrieHandedness::LeftPetrie);
    // not 3-fold
    auto th = analyze_twist(Isometry{kHalfZ, RVec3(IVec3{0, 0, 1})});
    CHECK_THROWS(petrie_handedness(*th));
}

TEST_CASE("exactly one rotation sense is lattice-preserving off the vertex axes") {
    RVec3 petrieFoot{Rational(1, 3), Rational(-1, 3), Rational(0)};
    for (long long m = 1; m <= 9; ++m) {
        RVec3 foot = (m % 3 == 0) ? RVec3() : petrieFoot;
        RVec3 along{Rational(m, 3), Rational(m, 3), Rational(m, 3)};
        int integral = 0;
        bool antiWorks = false;
        for (const auto& rot : {kRot3Cyc, kRot3Anti}) {
            Isometry cand{rot, along + (foot - rot.apply(foot))};
            if (preserves_tessellation(cand)) {
                ++integral;
                if (rot == kRot3Anti) antiWorks = true;
            }
        }
        if (m % 3 == 0) {
            CHECK(integral == 2);  // vertex axis admits both senses
        } else {
            CHECK(integral == 1);
            // the surviving sense alternates with the handedness class
            CHECK(antiWorks == (m % 3 == 1));
        }
    }
}
