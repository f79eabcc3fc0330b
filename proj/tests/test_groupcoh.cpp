#include <doctest.h>

#include <numeric>
#include <set>

#include "hopfcoh/groupcoh.hpp"

using namespace hopfcoh;

namespace {

ComoduleAlgebra s3Conjugation(const FieldSpec& f) {
    const FiniteGroup l = FiniteGroup::symmetric(3);
    return buildConjugationComodule(l, {l.identity(), *l.find("(12)")}, f);
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

} // namespace

TEST_CASE("G-group validation") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    CHECK_NOTHROW(trivialGGroup(z2, z3));
    // Inversion is an automorphism of Z/3 of order 2.
    CHECK_NOTHROW(makeGGroup(z2, z3, {{0, 1, 2}, {0, 2, 1}}));
    CHECK_THROWS_AS(makeGGroup(z2, z3, {{0, 2, 1}, {0, 1, 2}}), AxiomError);
    // x -> x + 1 moves the identity.
    CHECK_THROWS_AS(makeGGroup(z2, z3, {{0, 1, 2}, {1, 2, 0}}), AxiomError);
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    try {
        makeGGroup(z2, z4, {{0, 1, 2, 3}, {0, 2, 1, 3}});
        FAIL("expected an AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.axiom() == "action by automorphisms");
    }
}

TEST_CASE("multiplicative group of a prime field") {
    const FiniteGroup f5 = multiplicativeGroup(FieldSpec::prime(5));
    CHECK(f5.order() == 4);
    CHECK(f5.isAbelian());
    CHECK(f5.labels()[f5.mul(1, 2)] == "1"); // 2 * 3 = 6 = 1
    CHECK_THROWS_AS(multiplicativeGroup(FieldSpec::rational()), RationalFieldNotEnumerable);
}

TEST_CASE("group cocycles with trivial and inverting actions") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GGroup trivial = trivialGGroup(z2, multiplicativeGroup(FieldSpec::prime(3)));
    const auto c = groupCohomology(trivial, {});
    CHECK(c.z1.size() == 2);
    CHECK(std::binary_search(c.z1.begin(), c.z1.end(), std::vector<std::uint32_t>{0, 0}));
    CHECK(c.h1.size() == 2);
    CHECK(c.h0.size() == 2);

    const GGroup one = trivialGGroup(FiniteGroup::trivial(), FiniteGroup::cyclic(5));
    CHECK(groupZ1(one, {}).size() == 1);
    CHECK(groupH0(one).size() == 5);

    // Z/2 inverting Z/3: f(s) + ^s f(s) = 0 for every value, so all three
    // maps are cocycles, and f(s) -> f(s) - 2b is transitive.
    const GGroup inv = makeGGroup(z2, FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 2, 1}});
    const auto ci = groupCohomology(inv, {});
    CHECK(ci.z1.size() == 3);
    CHECK(ci.h1.size() == 1);
    CHECK(ci.h0 == std::vector<std::uint32_t>{0});
    SearchConfig tight;
    tight.budget = 2;
    CHECK_THROWS_AS(groupZ1(inv, tight), EnumerationOverBudget);

    // Coboundaries a^-1 ^s a lie in the class of the constant map.
    const GroupDiagram d{&inv};
    for (std::uint32_t a = 0; a < 3; ++a) CHECK(orbitIndex(ci.h1, actOn(d, d.one1(), a)) == std::optional<std::size_t>{0});
}

TEST_CASE("group diagram satisfies the pre-cosimplicial identities") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GGroup inv = makeGGroup(z2, FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 2, 1}});
    const GroupDiagram d{&inv};
    for (std::uint32_t a = 0; a < 3; ++a) {
        CHECK(d.coface1(1, d.coface0(0, a)) == d.coface1(0, d.coface0(0, a)));
        CHECK(d.coface1(2, d.coface0(0, a)) == d.coface1(0, d.coface0(1, a)));
        CHECK(d.coface1(2, d.coface0(1, a)) == d.coface1(1, d.coface0(1, a)));
    }
    CHECK_THROWS_AS(d.coface0(2, 0), BadIndex);
    CHECK_THROWS_AS(d.coface1(3, d.one1()), BadIndex);
}

TEST_CASE("action read from a coaction") {
    const auto f3 = FieldSpec::prime(3);
    const FiniteGroup l = FiniteGroup::symmetric(3);
    const auto e = s3Conjugation(f3);
    const GGroup gg = actionFromCoaction(e, {});
    auto idx = [&](const char* label) {
        const Vec v = basisVec(f3, 6, *l.find(label));
        return static_cast<std::uint32_t>(std::lower_bound(gg.elements.begin(), gg.elements.end(), v) - gg.elements.begin());
    };
    const std::uint32_t s = 1; // (12) is listed second in the subgroup
    CHECK(gg.act(s, idx("(13)")) == idx("(23)"));
    CHECK(gg.act(s, idx("(123)")) == idx("(132)"));
    for (std::uint32_t x = 0; x < gg.a.order(); ++x) CHECK(gg.act(0, x) == x);

    auto trivialH = std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::trivial(), f3));
    const GGroup t = actionFromCoaction(trivialCoefficients(trivialH), {});
    CHECK(t.a.order() == 2);
    CHECK(t.action == std::vector<std::vector<std::uint32_t>>{{0, 1}});

    CHECK_THROWS_AS(actionFromCoaction(buildDualNumbersComodule(f3), {}), NotAFunctionAlgebra);
}

TEST_CASE("group cohomology of F3[S3] units under conjugation by (12) against a direct oracle") {
    const auto f3 = FieldSpec::prime(3);
    const FiniteGroup l = FiniteGroup::symmetric(3);
    const auto e = s3Conjugation(f3);
    const StructureAlgebra& a = e.algebra();

    // sigma = conjugation by (12), as a permutation of the group basis.
    const std::uint32_t t = *l.find("(12)");
    auto sigma = [&](const Vec& x) {
        Vec y(x.size(), f3.zero());
        for (std::uint32_t i = 0; i < x.size(); ++i) y[l.mul(l.mul(t, i), l.inv(t))] = x[i];
        return y;
    };
    std::vector<Vec> units;
    for (const auto& x : enumerateElements(a, std::nullopt, {}))
        if (matrixRank(a.leftMultMatrix(x)) == a.dim()) units.push_back(x);
    std::size_t fixed = 0;
    std::vector<Vec> cocycles;
    for (const auto& x : units) {
        fixed += sigma(x) == x;
        if (a.multiply(x, sigma(x)) == a.unit()) cocycles.push_back(x);
    }
    std::vector<std::size_t> parent(cocycles.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < cocycles.size(); ++i)
        for (const auto& b : units) {
            const Vec y = a.multiply(a.multiply(*a.tryInverse(b), cocycles[i]), sigma(b));
            const auto j = static_cast<std::size_t>(std::lower_bound(cocycles.begin(), cocycles.end(), y) - cocycles.begin());
            parent[find(parent, i)] = find(parent, j);
        }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < cocycles.size(); ++i) roots.insert(find(parent, i));

    CHECK(units.size() == 324);
    CHECK(fixed == 36);
    CHECK(cocycles.size() == 20);
    CHECK(roots.size() == 4);

    const GGroup gg = actionFromCoaction(e, {});
    const auto c = groupCohomology(gg, {});
    CHECK(gg.a.order() == units.size());
    CHECK(c.h0.size() == fixed);
    CHECK(c.z1.size() == cocycles.size());
    CHECK(c.h1.size() == roots.size());

    SearchConfig three;
    three.threads = 3;
    CHECK(groupZ1(gg, three) == c.z1);
}

TEST_CASE("gamma isomorphisms") {
    const auto f3 = FieldSpec::prime(3);
    auto h = std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::cyclic(2), f3));
    for (const auto& e : {trivialCoefficients(h), s3Conjugation(f3), regularComodule(h)}) {
        const GammaReport r = gammaIso(e, {});
        CHECK(r.checks.passed());
    }
    // gamma1 of the unit is the constant map 1.
    const auto e = s3Conjugation(f3);
    const AlgebraDiagram d = buildDiagram(e);
    for (const auto& part : gammaComponents(e, 1, d.one1())) CHECK(part == e.algebra().unit());

    // gamma2 d0 (x (x) delta_u terms) at (u, v) is ^u x_v; at d1 it is x_(uv).
    const GGroup gg = actionFromCoaction(e, {});
    const Vec x0 = gg.elements[5], x1 = gg.elements[17];
    const Vec X = gammaInverse1(e, {x0, x1});
    const auto d0 = gammaComponents(e, 2, d.coface1(0, X));
    const auto d1 = gammaComponents(e, 2, d.coface1(1, X));
    CHECK(d0[1 * 2 + 1] == gg.elements[gg.act(1, 17)]);
    CHECK(d0[1 * 2 + 0] == gg.elements[gg.act(1, 5)]);
    CHECK(d1[1 * 2 + 1] == x0);
    CHECK(d1[0 * 2 + 1] == x1);
    CHECK_THROWS_AS(gammaIso(buildDualNumbersComodule(f3), {}), NotAFunctionAlgebra);
}

TEST_CASE("Hopf cohomology over k^G equals group cohomology") {
    const auto f3 = FieldSpec::prime(3);
    auto h = std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::cyclic(2), f3));
    const auto k = compareTheorem15(trivialCoefficients(h), {});
    CHECK(k.passed());
    CHECK(k.leftH1 == 2);
    CHECK(k.rightH1 == 2);
    CHECK(k.pairing == std::vector<std::size_t>{0, 1});

    const auto s3 = compareTheorem15(s3Conjugation(f3), {});
    CHECK(s3.passed());
    CHECK(s3.leftH0 == 36);
    CHECK(s3.rightH0 == 36);
    CHECK(s3.leftH1 == 4);
    CHECK(s3.rightH1 == 4);

    auto trivialH = std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::trivial(), f3));
    const auto t = compareTheorem15(regularComodule(trivialH), {});
    CHECK(t.passed());
    CHECK(t.leftH1 == 1);
}

TEST_CASE("Pontryagin duality check") {
    const auto z2 = pontryaginCheck(FiniteGroup::cyclic(2), FieldSpec::prime(3), {});
    CHECK(z2.passed());
    CHECK(z2.characters == 2);
    CHECK(z2.grouplikeCount == 2);
    CHECK(z2.h1Classes == 2);
    const auto z3 = pontryaginCheck(FiniteGroup::cyclic(3), FieldSpec::prime(5), {});
    CHECK(z3.passed());
    CHECK(z3.characters == 1);
    const auto z4 = pontryaginCheck(FiniteGroup::cyclic(4), FieldSpec::prime(5), {});
    CHECK(z4.passed());
    CHECK(z4.characters == 4);
    const auto one = pontryaginCheck(FiniteGroup::trivial(), FieldSpec::prime(3), {});
    CHECK(one.passed());
    CHECK(one.characters == 1);
}
