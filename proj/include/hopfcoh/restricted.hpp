#pragma once

// Restricted non-abelian Hopf cohomology of an (H, S)-Hopf module M, built
// on the algebras W_S^n(M) = Hom_S(M, M (x) H^n) under the product
//   phi o. phi' = (id (x) mu^n)(id (x) chi_n)(phi (x) id)phi',
// and its comparison with the cohomology of End_S(M) through omega_n.
//
// A map M -> M (x) H^n is a matrix with dim M columns; its vectorization
// lists the columns one after the other, so entry (r, c) sits at
// c * rows + r.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/cohomology.hpp"
#include "hopfcoh/groupcoh.hpp"

namespace hopfcoh {

Vec vectorize(const Matrix& phi);
Matrix unvectorize(const FieldSpec& f, std::size_t rows, std::size_t cols, const Vec& v);

/// The flip T of H (x) H.
Matrix flipH(const HopfAlgebra& h);
/// chi_n : H^n (x) H^n -> (H (x) H)^n, a permutation matrix.
Matrix chiMatrix(const HopfAlgebra& h, int n);

/// One level W_S^n(M). Coordinates are taken relative to the basis of
/// S-linear maps obtained by solving phi(m s) = phi(m) s.
struct WSpace {
    int n = 0;
    FieldSpec field;
    std::size_t rows = 0, cols = 0; // dim M * dim H^n, dim M
    SubspaceCoords slinear;         // inside the vectorized Hom_k(M, M (x) H^n)
    AlgebraPtr algebra;             // W_S^n(M) with o. in these coordinates

    std::size_t dim() const { return slinear.dim(); }
    Matrix toMap(const Vec& coords) const;
    /// nullopt when `phi` is not S-linear.
    std::optional<Vec> coordinates(const Matrix& phi) const;
};

/// The diagram W_S^0 => W_S^1 => W_S^2 of a Hopf module.
class RestrictedComplex {
public:
    /// Throws AxiomError unless `m` passes checkHopfModule.
    explicit RestrictedComplex(HopfModule m);

    const HopfModule& module() const { return m_; }
    const HopfAlgebra& hopf() const { return m_.hopf(); }
    const WSpace& level(int n) const;
    /// Tensor power H^n as an algebra (the ground field for n = 0).
    const StructureAlgebra& hopfPower(int n) const;

    /// m -> m (x) 1^n.
    Matrix unit(int n) const;
    /// Throws LevelMismatch unless both maps live on the same level of M.
    Matrix circDot(const Matrix& phi, const Matrix& psi) const;
    /// b^i on a map of level `from`; throws BadIndex outside i <= from + 1, from <= 1.
    Matrix coboundary(int from, int i, const Matrix& phi) const;
    /// (id (x) eps at factor j) o phi on a map of level 1 or 2.
    Matrix codegeneracy(int from, int j, const Matrix& phi) const;

    /// The b-maps and codegeneracies in S-linear coordinates.
    const AlgebraDiagram& diagram() const { return *diagram_; }

private:
    /// The level read off the shape; the lowest one when dim H = 1.
    int levelOf(const Matrix& phi) const;
    void requireLevel(const Matrix& phi, int n, const std::string& what) const;

    HopfModule m_;
    std::array<std::shared_ptr<const StructureAlgebra>, 3> powers_;
    std::vector<WSpace> levels_;
    std::optional<AlgebraDiagram> diagram_;
};

/// The literal composition formula for o., with chi_n as a matrix.
Matrix circDotByFormula(const RestrictedComplex& c, const Matrix& phi, const Matrix& psi);

/// Two-sided o.-inverse found by solving phi o. X = unit over all of
/// Hom_k(M, M (x) H^n) and checking X o. phi = unit; nullopt otherwise.
std::optional<Matrix> circDotInverse(const RestrictedComplex& c, const Matrix& phi);

struct RestrictedCocycles {
    std::vector<Vec> z1;    // S-linear coordinates, sorted
    AxiomReport crossCheck; // ZC1 to ZC3 and S-linearity of the inverse, per cocycle
};

/// Every invertible S-linear Phi with b2 Phi o. b0 Phi = b1 Phi, searched
/// over all of W_S^1 (p^dim candidates).
RestrictedCocycles restrictedZ1(const RestrictedComplex& c, const SearchConfig& cfg);
/// {phi in Aut_S(M) | b1 phi = b0 phi}.
ElementGroup restrictedH0(const RestrictedComplex& c, const SearchConfig& cfg);
/// Same layout as the general theory: h1[0] is the class of the unit.
CohomologyResult restrictedH1(const RestrictedComplex& c, const SearchConfig& cfg);

/// omega_n : End_S(M) (x) H^n -> W_S^n(M), f (x) h -> (m -> f(m) (x) h), in
/// coordinates (columns (a, b) at a * dim H^n + b).
struct OmegaMap {
    int n = 0;
    Matrix matrix;
    bool bijective = false;
    bool morphism = false;
    bool identity = false; // omega_0 is the identity of End_S(M)

    /// Condition F_n.
    bool holds() const { return bijective && morphism; }
};

OmegaMap omegaN(const RestrictedComplex& c, int n);

/// End_S(M) with Delta = omega_1^-1 o b0. Throws ConditionFFailed unless
/// F_1 and F_2 hold.
ComoduleAlgebra endComoduleStructure(const RestrictedComplex& c);

/// H*(H, End_S(M)) against the restricted H*(H, M) through omega_1, plus
/// omega_j d^i = b^i omega_(j-1). Throws ConditionFFailed unless F_0 to F_2 hold.
ComparisonReport compareTheorem26(const RestrictedComplex& c, const SearchConfig& cfg);

} // namespace hopfcoh
