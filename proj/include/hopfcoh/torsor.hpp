#pragma once

// Coactions deformed by a cocycle, Hopf torsors and their classification
// by H^1, the tensor product of torsors in the commutative case, the
// bridge to group torsors over k^G, and torsors of a Hopf module M read
// through End_S(M).
//
// Modules are right E-modules; theta_u(x) = u x.

#include <optional>
#include <vector>

#include "hopfcoh/cohomology.hpp"
#include "hopfcoh/groupcoh.hpp"
#include "hopfcoh/restricted.hpp"

namespace hopfcoh {

/// (E, Delta^X) with Delta^X(x) = X Delta_E(x).
struct DeformedComodule {
    ComodulePtr base;
    Vec cocycle;
    Matrix coaction;
    bool hopfModule = false; // checkHopfModule passes

    HopfModule module() const { return regularHopfModule(base, coaction); }
};

/// Throws NotInvertible unless X is a unit of E (x) H.
DeformedComodule deformCoaction(ComodulePtr e, const Vec& x);

/// Every invertible Hopf-module morphism T -> T', least first in the
/// vectorized order, found by solving the linear morphism conditions and
/// enumerating the solution space.
std::vector<Matrix> hopfModuleIsomorphisms(const HopfModule& t, const HopfModule& u, const SearchConfig& cfg);
std::optional<Matrix> findHopfModuleIsomorphism(const HopfModule& t, const HopfModule& u, const SearchConfig& cfg);

struct Prop17Report {
    AxiomReport checks;
    std::size_t candidates = 0; // invertible X with (id (x) eps) X = 1
    std::size_t cocycles = 0;
    bool passed() const { return checks.passed(); }
};

/// X in Z1 iff (E, Delta^X) is a Hopf module, over every invertible
/// normalized X; and for every pair of cocycles, cohomologous iff the
/// deformed modules are isomorphic (orbit witness x gives tau_x, the
/// generic search cross-checks).
Prop17Report prop17Check(ComodulePtr e, const SearchConfig& cfg);

struct TorsorRecord {
    HopfModule module;
    std::vector<Vec> units;  // T^x, sorted
    std::vector<Vec> bullet; // T^., sorted
    AxiomReport checks;      // Delta_T(T^x) lies in (T (x) H)^x, and T^. = T^x when nonempty

    bool isTorsor() const { return !bullet.empty(); }
};

/// theta_u as a dim T x dim E matrix.
Matrix thetaMatrix(const HopfModule& t, const Vec& u);

TorsorRecord moduleUnits(const HopfModule& t, const SearchConfig& cfg);

struct ExtractedCocycle {
    Vec cocycle; // X_T = (theta_u^-1 (x) id) Delta_T(u)
    AxiomReport checks;
};

/// Throws NotInTBullet unless u is in T^x with Delta_T(u) in (T (x) H)^x.
ExtractedCocycle extractCocycle(const HopfModule& t, const Vec& u);

struct TorsorClassification {
    CohomologyResult cohomology;
    std::vector<DeformedComodule> classes; // one per H^1 class, distinguished first
    AxiomReport checks;
    bool passed() const { return checks.passed(); }
};

TorsorClassification classifyTorsors(ComodulePtr e, const SearchConfig& cfg);

/// T (x)_E T' as the quotient of T (x) T' by (t s) (x) t' - t (x) (t' s),
/// with coaction t (x) t' -> t0 (x) t'0 (x) t1 t'1. Throws NotCommutative
/// unless E and H are commutative.
struct TensorTorsor {
    HopfModule module;
    Matrix projection; // T (x) T' -> quotient
    AxiomReport checks;
};

TensorTorsor torsorTensor(const TorsorRecord& t, const TorsorRecord& u, const SearchConfig& cfg);

struct TorsorMonoidReport {
    std::vector<std::vector<std::size_t>> table; // class of T_i (x)_E T_j
    AxiomReport checks;
    bool passed() const { return checks.passed(); }
};

/// The tensor product of torsor classes against the product of H^1.
TorsorMonoidReport torsorProductCheck(ComodulePtr e, const SearchConfig& cfg);

struct GroupTorsorReport {
    std::size_t hopfClasses = 0, groupClasses = 0;
    std::vector<std::size_t> pairing; // Hopf torsor class i <-> group torsor class pairing[i]
    AxiomReport checks;
    bool passed() const { return checks.passed(); }
};

/// T^x as a (G, E^x)-torsor for every Hopf torsor class, the classical
/// torsors enumerated on the underlying set of E^x, and the class map c.
GroupTorsorReport groupTorsorBridge(ComodulePtr e, const SearchConfig& cfg);

struct RestrictedTorsorReport {
    std::vector<Matrix> coactions; // Delta' on M, one per class of H1(H, End_S(M))
    AxiomReport checks;
    bool passed() const { return checks.passed(); }
};

/// For each torsor class of End_S(M), Delta'(m) = phi0(m0) (x) phi1 m1 where
/// phi0 (x) phi1 = Delta(id_M). Throws ConditionFFailed unless F_0 to F_2 hold.
RestrictedTorsorReport corollary39Check(const RestrictedComplex& c, const SearchConfig& cfg);

} // namespace hopfcoh
