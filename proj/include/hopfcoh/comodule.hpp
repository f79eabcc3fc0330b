#pragma once

// Comodule algebras and right (H, E)-Hopf modules.

#include <memory>
#include <string>
#include <vector>

#include "hopfcoh/hopf.hpp"

namespace hopfcoh {

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct ComoduleAlgebra {
    HopfPtr hopf;
    AlgebraPtr alg;
    Matrix coaction; // (dimE * dimH) x dimE, pair (i, j) at i * dimH + j
    std::string name;

    const StructureAlgebra& algebra() const { return *alg; }
    const FieldSpec& field() const { return alg->field(); }
    std::size_t dim() const { return alg->dim(); }
};

using ComodulePtr = std::shared_ptr<const ComoduleAlgebra>;

/// Coassociativity, counit law, and multiplicativity of the coaction.
AxiomReport checkComoduleAlgebra(const ComoduleAlgebra& e);

/// k[h]/(h^2) with basis {1, h}.
StructureAlgebra dualNumbers(const FieldSpec& f);
/// k[L] with the basis of L.
StructureAlgebra groupAlgebra(const FiniteGroup& l, const FieldSpec& f);

/// E over the Hopf algebra k with coaction the identity.
ComoduleAlgebra trivialHopfCoefficients(AlgebraPtr e);
/// k over H with coaction 1 -> 1 (x) 1.
ComoduleAlgebra trivialCoefficients(HopfPtr h);
/// H over itself with coaction the comultiplication.
ComoduleAlgebra regularComodule(HopfPtr h);
/// E2 = k[h]/(h^2) over H4: 1 -> 1 (x) 1, h -> h (x) g + 1 (x) h.
ComoduleAlgebra buildDualNumbersComodule(HopfPtr h4);
ComoduleAlgebra buildDualNumbersComodule(const FieldSpec& f);
/// k[L] over k^G for a subgroup G of L listed by `subgroup` (table order
/// of G follows the list): h -> sum over g of g h g^-1 (x) delta_g.
ComoduleAlgebra buildConjugationComodule(const FiniteGroup& l, const std::vector<std::uint32_t>& subgroup,
                                         const FieldSpec& f);

/// A right E-module M with coaction M -> M (x) H.
struct HopfModule {
    ComodulePtr comod;
    std::vector<std::string> labels; // basis of M
    std::vector<Matrix> action;      // action[j] = (m -> m e_j)
    Matrix coaction;                 // (dimM * dimH) x dimM

    std::size_t dim() const { return labels.size(); }
    const FieldSpec& field() const { return comod->field(); }
    const HopfAlgebra& hopf() const { return *comod->hopf; }

    /// m -> m s.
    Matrix actionOf(const Vec& s) const;
};

/// Module axioms, comodule axioms and the compatibility
/// Delta_M(m s) = Delta_M(m) Delta_E(s), on basis elements.
AxiomReport checkHopfModule(const HopfModule& m);

/// The map M (x) H -> M (x) H, m (x) h -> sum (m x) (x) (h y) for
/// X = sum x (x) y in E (x) H.
Matrix rightActOnTensor(const HopfModule& m, const Vec& x);

/// True iff `f` is E-linear and commutes with the coactions.
bool hopfModuleMorphismCheck(const Matrix& f, const HopfModule& m, const HopfModule& n);

/// E as a module over itself by right multiplication, with coaction
/// `coaction` (the coaction of E when omitted).
HopfModule regularHopfModule(ComodulePtr e);
HopfModule regularHopfModule(ComodulePtr e, Matrix coaction);

} // namespace hopfcoh
