#ifndef TWISTOID_LATTICE_HPP
#define TWISTOID_LATTICE_HPP

#include <array>
#include <optional>
#include <vector>

#include "twistoid/signed_perm.hpp"
#include "twistoid/vec.hpp"

namespace twistoid {

/// Full-rank sublattice of Z^3 given by three basis vectors, together with
/// its Hermite normal form.  The HNF is the canonical representation used for
/// membership tests and lattice equality; its rows are upper triangular with
/// positive pivots and the entries above each pivot reduced modulo it.
class TranslationLattice {
public:
    TranslationLattice() = default;
    static TranslationLattice from_basis(const IVec3& t1, const IVec3& t2, const IVec3& t3);

    const std::array<IVec3, 3>& basis() const { return basis_; }
    const std::array<IVec3, 3>& hermite() const { return hnf_; }
    long long index() const { return index_; }

    bool contains(const IVec3& v) const;

    /// Canonical coset representative of v modulo the lattice.
    IVec3 reduce(const IVec3& v) const;

    /// All coset representatives of Z^3 modulo the lattice (index many).
    std::vector<IVec3> residues() const;

    /// Point-group stabilizer: all signed permutations mapping the lattice
    /// onto itself.
    std::vector<SignedPerm> point_stabilizer() const;

    friend bool operator==(const TranslationLattice& a, const TranslationLattice& b) {
        return a.hnf_ == b.hnf_;
    }
    friend bool operator!=(const TranslationLattice& a, const TranslationLattice& b) { return !(a == b); }

private:
    std::array<IVec3, 3> basis_{};
    std::array<IVec3, 3> hnf_{};
    long long index_ = 0;
};

/// Full-rank lattice in the rational plane, canonicalized to the basis
/// ((d,0), (e,f)) with d,f > 0 and 0 <= e < d.  Used for the projected
/// horizontal lattices of twist-axis arrangements.
class PlaneLattice {
public:
    PlaneLattice() = default;

    static PlaneLattice from_vectors(const std::vector<RVec2>& gens);

    Rational xstep() const { return d_; }   // (d, 0)
    Rational yoffset() const { return e_; } // (e, f)
    Rational ystep() const { return f_; }

    bool contains(const RVec2& v) const;

    /// Lattice generated by this one together with extra generators.
    PlaneLattice join(const std::vector<RVec2>& extra) const;

    /// Apply a 2x2 signed permutation given by (a b; c d) entries in {-1,0,1}.
    PlaneLattice transformed(int a, int b, int c, int d) const;

    friend bool operator==(const PlaneLattice& a, const PlaneLattice& b) {
        return a.d_ == b.d_ && a.e_ == b.e_ && a.f_ == b.f_;
    }

private:
    Rational d_, e_, f_;
};

}  // namespace twistoid

#endif
