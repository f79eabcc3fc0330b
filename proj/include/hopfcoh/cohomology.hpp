#pragma once

// The coboundary diagram E => E (x) H => E (x) H (x) H of a comodule
// algebra, and its H^0, Z^1 and H^1.

#include <array>
#include <vector>

#include "hopfcoh/comodule.hpp"
#include "hopfcoh/precosimplicial.hpp"
#include "hopfcoh/residue.hpp"

namespace hopfcoh {

/// Three algebras with algebra-morphism cofaces and codegeneracies, all
/// stored as matrices acting on coordinates.
struct AlgebraDiagram {
    using Elem0 = Vec;
    using Elem1 = Vec;
    using Elem2 = Vec;

    AlgebraPtr level0, level1, level2;
    std::array<Matrix, 2> d0;  // level0 -> level1
    std::array<Matrix, 3> d1;  // level1 -> level2
    Matrix s0;                 // level1 -> level0
    std::array<Matrix, 2> s1;  // level2 -> level1

    Vec one0() const { return level0->unit(); }
    Vec one1() const { return level1->unit(); }
    Vec mul0(const Vec& a, const Vec& b) const { return level0->multiply(a, b); }
    Vec mul1(const Vec& a, const Vec& b) const { return level1->multiply(a, b); }
    Vec mul2(const Vec& a, const Vec& b) const { return level2->multiply(a, b); }
    /// Throws NotInvertible.
    Vec inv0(const Vec& a) const;
    Vec inv1(const Vec& a) const;
    Vec coface0(int i, const Vec& x) const;
    Vec coface1(int i, const Vec& x) const;
};

static_assert(PreCosimplicialGroup<AlgebraDiagram>);

/// d0 x = Delta_E(x), d1 x = x (x) 1; d0 X = (Delta_E (x) id) X,
/// d1 X = (id (x) Delta_H) X, d2 X = X (x) 1; codegeneracies apply the
/// counit to one H factor.
AlgebraDiagram buildDiagram(const ComoduleAlgebra& e);

/// Cofaces and codegeneracies are algebra morphisms, d^i d^j = d^j d^(i-1)
/// for i > j, and the cosimplicial identities relating s and d.
AxiomReport checkDiagram(const AlgebraDiagram& d);

using Orbit = OrbitRecord<Vec, Vec>;

struct CohomologyResult {
    ElementGroup h0;
    std::vector<Vec> z1;     // sorted
    std::vector<Orbit> h1;   // h1[0] is the distinguished class
    std::vector<Vec> units0; // the level-0 unit group, sorted
};

/// Units x with d0 x = d1 x, with their table.
ElementGroup diagramH0(const AlgebraDiagram& d, const SearchConfig& cfg);
/// Invertible X with s0 X = 1 satisfying the cocycle relation, sorted.
std::vector<Vec> diagramZ1(const AlgebraDiagram& d, const SearchConfig& cfg);
CohomologyResult diagramCohomology(const AlgebraDiagram& d, const SearchConfig& cfg);

/// Word-sized test of d2(X) d0(X) = d1(X) on residue coordinates of level 1.
/// Compares one output coordinate at a time and stops at the first mismatch.
class ResidueCocycleTest {
public:
    explicit ResidueCocycleTest(const AlgebraDiagram& d);
    bool operator()(const std::uint32_t* X) const;

private:
    struct Term {
        std::uint32_t i, j, c; // e_i e_j contains c e_k
    };
    std::uint32_t p_;
    std::size_t dim2_;
    ResidueMap d0_, d2_;
    std::vector<std::vector<Term>> byOutput_;                             // indexed by k
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> d1Rows_; // row k of d1
};

ElementGroup h0(const ComoduleAlgebra& e, const SearchConfig& cfg);
std::vector<Vec> z1(const ComoduleAlgebra& e, const SearchConfig& cfg);
CohomologyResult h1(const ComoduleAlgebra& e, const SearchConfig& cfg);

/// X <- x = d1(x^-1) X d0(x). Throws NotInvertible when x is not a unit.
Vec cocycleAction(const AlgebraDiagram& d, const Vec& X, const Vec& x);

/// H^1 as a group under the level-1 product, for commutative E and H.
struct H1Group {
    CohomologyResult cohomology;
    std::vector<std::vector<std::uint32_t>> table; // over indices of cohomology.h1
};

/// Throws NotCommutative unless E and H are commutative. Checks that the
/// product of classes does not depend on the chosen members.
H1Group commutativeH1Group(const ComoduleAlgebra& e, const SearchConfig& cfg);

} // namespace hopfcoh
