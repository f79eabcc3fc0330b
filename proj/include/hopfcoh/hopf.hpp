#pragma once

// Hopf algebras given by matrices for the structure maps, their axiom
// checker, the standard builders and grouplike elements.

#include <optional>
#include <string>

#include "hopfcoh/algebra.hpp"
#include "hopfcoh/finite_group.hpp"

namespace hopfcoh {

struct HopfAlgebra {
    AlgebraPtr alg;
    Matrix comult;   // dim^2 x dim, row (k, l) is the e_k (x) e_l coefficient
    Matrix counit;   // 1 x dim
    Matrix antipode; // dim x dim
    std::string name;
    /// Set when built as k^G: the group G, with basis vector i = delta_i.
    std::optional<FiniteGroup> functionGroup;
    /// Set for the Sweedler algebra in characteristic 2.
    bool characteristicTwoWarning = false;

    const StructureAlgebra& algebra() const { return *alg; }
    const FieldSpec& field() const { return alg->field(); }
    std::size_t dim() const { return alg->dim(); }
};

/// x (x) y -> xy as a dim x dim^2 matrix.
Matrix multiplicationMatrix(const StructureAlgebra& a);
/// k -> A, 1 -> unit, as a dim x 1 matrix.
Matrix unitMatrix(const StructureAlgebra& a);

/// Coassociativity, counit laws, multiplicativity of comultiplication and
/// counit, and both antipode laws.
AxiomReport checkHopfAxioms(const HopfAlgebra& h);

/// The ground field as a Hopf algebra.
HopfAlgebra buildTrivialHopf(const FieldSpec& f);

/// k^G with basis delta_g in the order of G's table.
HopfAlgebra buildFunctionHopf(const FiniteGroup& g, const FieldSpec& f);

/// Basis {1, g, h, gh}: g^2 = 1, h^2 = 0, gh = -hg, g grouplike,
/// Delta(h) = h (x) g + 1 (x) h, sigma(h) = gh, sigma(gh) = -h.
HopfAlgebra buildSweedlerH4(const FieldSpec& f);

/// Same structure constants and structure maps in the same basis.
bool sameHopfAlgebra(const HopfAlgebra& a, const HopfAlgebra& b);

/// Grouplike elements (Delta x = x (x) x, eps x = 1) with their table.
ElementGroup grouplikes(const HopfAlgebra& h, const SearchConfig& cfg);

} // namespace hopfcoh
