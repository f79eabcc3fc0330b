#pragma once

// Non-abelian cohomology of a finite group G with coefficients in a
// G-group A, computed on the same pre-cosimplicial engine as the Hopf
// side, and the comparison with Hopf cohomology over k^G.

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcoh/cohomology.hpp"
#include "hopfcoh/finite_group.hpp"

namespace hopfcoh {

/// A finite group A with a left action of G by automorphisms.
struct GGroup {
    FiniteGroup g;
    FiniteGroup a;
    std::vector<std::vector<std::uint32_t>> action; // action[s][x] = ^s x
    /// When A is a unit group E^x: the element of E behind each index, sorted.
    std::vector<Vec> elements;

    std::uint32_t act(std::uint32_t s, std::uint32_t x) const { return action[s][x]; }
};

/// Throws AxiomError unless the identity acts trivially, the action is
/// compatible with the product of G and every ^s is an automorphism.
GGroup makeGGroup(FiniteGroup g, FiniteGroup a, std::vector<std::vector<std::uint32_t>> action);
GGroup trivialGGroup(FiniteGroup g, FiniteGroup a);

/// k^x as a group on the residues 1..p-1 (index r - 1 for residue r).
FiniteGroup multiplicativeGroup(const FieldSpec& f);

/// G acting on E^x by Delta_E(x) = sum over g of ^g x (x) delta_g. Throws
/// NotAFunctionAlgebra unless the Hopf algebra was built as k^G.
GGroup actionFromCoaction(const ComoduleAlgebra& e, const SearchConfig& cfg);

/// Levels A, Map(G, A), Map(G x G, A) with pointwise products and
///   d0 a = (g -> ^g a),           d1 a = (g -> a),
///   d0 f = ((u, v) -> ^u f(v)),   d1 f = ((u, v) -> f(uv)),   d2 f = ((u, v) -> f(u)).
/// Maps are tuples over the indices of G; pairs (u, v) sit at u |G| + v.
struct GroupDiagram {
    using Elem0 = std::uint32_t;
    using Elem1 = std::vector<std::uint32_t>;
    using Elem2 = std::vector<std::uint32_t>;

    const GGroup* gg;

    Elem0 one0() const { return gg->a.identity(); }
    Elem0 mul0(Elem0 x, Elem0 y) const { return gg->a.mul(x, y); }
    Elem0 inv0(Elem0 x) const { return gg->a.inv(x); }
    Elem1 one1() const { return Elem1(gg->g.order(), gg->a.identity()); }
    Elem1 mul1(const Elem1& f, const Elem1& h) const { return pointwise(f, h); }
    Elem2 mul2(const Elem2& f, const Elem2& h) const { return pointwise(f, h); }
    Elem1 coface0(int i, Elem0 x) const;
    Elem2 coface1(int i, const Elem1& f) const;

private:
    std::vector<std::uint32_t> pointwise(const std::vector<std::uint32_t>& f,
                                         const std::vector<std::uint32_t>& h) const;
};

static_assert(PreCosimplicialGroup<GroupDiagram>);

using GroupOrbit = OrbitRecord<std::uint32_t, std::vector<std::uint32_t>>;

struct GroupCohomology {
    std::vector<std::uint32_t> h0;              // fixed points, increasing
    std::vector<std::vector<std::uint32_t>> z1; // sorted
    std::vector<GroupOrbit> h1;                 // h1[0] is the class of the constant map 1
};

/// Maps with f(uv) = f(u) ^u f(v). The budget covers the |A|^(|G|-1) maps
/// with f(e) = 1, which every cocycle satisfies.
std::vector<std::vector<std::uint32_t>> groupZ1(const GGroup& a, const SearchConfig& cfg);
std::vector<std::uint32_t> groupH0(const GGroup& a);
GroupCohomology groupCohomology(const GGroup& a, const SearchConfig& cfg);

/// gamma_n : E (x) (k^G)^(x n) -> Map(G^n, E), reading the coefficient of
/// delta_(g1) (x) ... (x) delta_(gn). Components are indexed like G^n tuples.
std::vector<Vec> gammaComponents(const ComoduleAlgebra& e, int level, const Vec& x);
/// The element of E (x) k^G with gamma_1 components `parts`.
Vec gammaInverse1(const ComoduleAlgebra& e, const std::vector<Vec>& parts);

struct GammaReport {
    AxiomReport checks;
    std::uint64_t level1Maps = 0; // |A|^|G|, the domain of the level-2 intertwining check
};

/// gamma_0 = id; gamma_1 and gamma_2 are algebra isomorphisms onto the
/// pointwise product algebras (hence group isomorphisms on units); and
/// gamma_j d^i = d^i gamma_(j-1) on every unit of levels 0 and 1.
GammaReport gammaIso(const ComoduleAlgebra& e, const SearchConfig& cfg);

/// Outcome of comparing two cohomology theories class by class.
struct ComparisonReport {
    AxiomReport checks;
    std::size_t leftH0 = 0, rightH0 = 0, leftH1 = 0, rightH1 = 0;
    std::vector<std::size_t> pairing; // left class i <-> right class pairing[i]
    bool passed() const { return checks.passed(); }
};

/// Hopf cohomology of E over k^G on the left, group cohomology of G with
/// coefficients E^x on the right, paired through gamma_1.
ComparisonReport compareTheorem15(const ComoduleAlgebra& e, const SearchConfig& cfg);

struct PontryaginReport {
    AxiomReport checks;
    std::size_t characters = 0, grouplikeCount = 0, h1Classes = 0;
    bool passed() const { return checks.passed(); }
};

/// Hom(G, k^x), Gr(k^G) and H1(k^G, k) agree, with the pointwise product of
/// characters matching the product of grouplikes.
PontryaginReport pontryaginCheck(const FiniteGroup& g, const FieldSpec& f, const SearchConfig& cfg);

} // namespace hopfcoh
