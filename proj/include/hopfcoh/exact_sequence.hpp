#pragma once

// The exact sequence of pointed sets attached to an inclusion D -> E of
// comodule algebras over the same Hopf algebra:
//   1 -> H0(D) -> H0(E) -> H0(D -> E) -> H1(D) -> H1(E) [-> H1(D -> E)].
// Cosets are left cosets b D^x, so the connecting map sends the class of b
// to the class of d1(b)^-1 d0(b), pulled back to D (x) H.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/cohomology.hpp"

namespace hopfcoh {

struct Inclusion {
    ComodulePtr sub, ambient;
    std::array<Matrix, 3> incl; // D (x) H^n -> E (x) H^n for n = 0, 1, 2
    AlgebraDiagram subDiagram, ambientDiagram;
};

/// Throws NotInjective when `incl` has a kernel and NotAMorphism when it
/// is not a morphism of comodule algebras over one Hopf algebra.
Inclusion makeInclusion(ComodulePtr d, ComodulePtr e, const Matrix& incl);

/// A left coset b D^x, listed by its sorted members.
struct Coset {
    Vec representative; // least member
    std::vector<Vec> members;
};

struct RelativeH0 {
    std::vector<Coset> cosets;       // all of E^x / D^x, the coset of 1 first
    std::vector<std::size_t> points; // cosets with d1(b)^-1 d0(b) in (D (x) H)^x
};

RelativeH0 relativeH0(const Inclusion& inc, const SearchConfig& cfg);

/// Index in `subH1` of the class of d1(b)^-1 d0(b) for a member b of a
/// coset of the relative H0. Throws LiftNotInSubalgebra when that element
/// does not come from a unit of D (x) H or is not a cocycle there.
std::size_t connectingClass(const Inclusion& inc, const std::vector<Orbit>& subH1, const Vec& b);

/// The connecting map on a coset; every member is lifted and the classes
/// must agree (LiftNotInSubalgebra otherwise).
std::size_t connectingMap(const Inclusion& inc, const std::vector<Orbit>& subH1, const Coset& c);

struct ExactSequenceReport {
    std::vector<std::pair<std::string, std::size_t>> termSizes;
    AxiomReport normality; // D-side units normal in E-side units, per level
    bool extended = false; // the sixth term was computed
    AxiomReport exactness; // one check per interior node
    bool passed() const { return exactness.passed(); }
};

/// Computes every term and checks image = preimage of the distinguished
/// point at each interior node. The sixth term is added when the three
/// normality checks pass.
ExactSequenceReport verifyExactSequence(const Inclusion& inc, const SearchConfig& cfg);

} // namespace hopfcoh
