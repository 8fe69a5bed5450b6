#include "twistoid/covers.hpp"

#include <stdexcept>

#include "twistoid/twist.hpp"

namespace twistoid {

std::string to_string(ToroidClass c) {
    switch (c) {
        case ToroidClass::T1: return "1";
        case ToroidClass::T3: return "3";
        case ToroidClass::T4: return "4";
        case ToroidClass::T6A: return "6_A";
        case ToroidClass::T6B: return "6_B";
        case ToroidClass::T6C: return "6_C";
        case ToroidClass::T8: return "8";
        case ToroidClass::T12A: return "12_A";
        case ToroidClass::T12B: return "12_B";
    }
    return "?";
}

int toroid_class_orbits(ToroidClass c) {
    switch (c) {
        case ToroidClass::T1: return 1;
        case ToroidClass::T3: return 3;
        case ToroidClass::T4: return 4;
        case ToroidClass::T6A:
        case ToroidClass::T6B:
        case ToroidClass::T6C: return 6;
        case ToroidClass::T8: return 8;
        default: return 12;
    }
}

CoverLattice cover_lattice(const TwistoidParams& params) {
    TwistoidParams v = validate(params);
    GroupSpec g = build_group(v);
    CoverLattice out;
    out.t1 = g.lattice.basis()[0];
    out.t2 = g.lattice.basis()[1];
    out.t3 = g.lattice.basis()[2];
    out.lattice = g.lattice;
    out.index = g.lattice.index();
    return out;
}

long long cover_flag_count(const CoverLattice& lat) { return 48 * lat.index; }

namespace {

// The flag-orbit count of a toroid equals 48 divided by the order of the
// point stabilizer of its lattice; the computed order cross-checks the
// class assignment below.
long long stabilizer_order(const TranslationLattice& lat) {
    return static_cast<long long>(lat.point_stabilizer().size());
}

void check_orbits(ToroidClass assigned, const TranslationLattice& lat) {
    long long stab = stabilizer_order(lat);
    if (48 % stab != 0 || 48 / stab != toroid_class_orbits(assigned))
        throw std::logic_error("cover class " + to_string(assigned) +
                               " disagrees with the lattice stabilizer order " + std::to_string(stab));
}

}  // namespace

ToroidClass cover_class(const TwistoidParams& params) {
    TwistoidParams v = validate(params);
    CoverLattice cover = cover_lattice(v);
    long long stab = stabilizer_order(cover.lattice);
    if (stab == 0 || 48 % stab != 0)
        throw std::logic_error("cover lattice stabilizer does not divide the point group");
    long long orbits = 48 / stab;
    ToroidClass out;

    if (auto* p = std::get_if<DicosmAxialParams>(&v.value)) {
        // The cover is a plain torus: its orbit count comes from the full
        // lattice stabilizer, and the letter follows the symmetry type of the
        // projected lattice (the anchoring of the generators plays no role).
        // The vertical spacing 2c can resonate with the projected lattice and
        // raise a generic 6- or 12-orbit cover to 3 or even 1.
        switch (orbits) {
            case 1: out = ToroidClass::T1; break;
            case 3: out = ToroidClass::T3; break;
            case 6:
                switch (axial_lattice_class(*p)) {
                    case DeformableClass::C2: out = ToroidClass::T6C; break;
                    case DeformableClass::C2_02: out = ToroidClass::T6A; break;
                    case DeformableClass::C2_1: out = ToroidClass::T6B; break;
                    default:
                        throw std::logic_error("six-orbit axial cover with an unexpected lattice class");
                }
                break;
            case 12: out = ToroidClass::T12A; break;
            default: throw std::logic_error("unexpected axial cover orbit count");
        }
    } else if (std::get_if<DicosmDiagonalParams>(&v.value) != nullptr) {
        switch (orbits) {
            case 3: out = ToroidClass::T3; break;
            case 6: out = ToroidClass::T6B; break;
            case 12: out = ToroidClass::T12B; break;
            default: throw std::logic_error("unexpected diagonal cover orbit count");
        }
    } else if (std::get_if<TricosmParams>(&v.value) != nullptr) {
        switch (orbits) {
            case 4: out = ToroidClass::T4; break;
            case 8: out = ToroidClass::T8; break;
            default: throw std::logic_error("unexpected tricosm cover orbit count");
        }
    } else {
        switch (orbits) {
            case 1: out = ToroidClass::T1; break;  // cubic resonance at q = 0, p = 2c
            case 3: out = ToroidClass::T3; break;
            case 6: out = ToroidClass::T6C; break;
            default: throw std::logic_error("unexpected tetracosm cover orbit count");
        }
    }

    check_orbits(out, cover.lattice);
    return out;
}

}  // namespace twistoid
