#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hopfcoh/cohomology.hpp"

using namespace hopfcoh;
using fixtures::closedX;
using fixtures::closedY;
using fixtures::vec;

namespace {

HopfPtr h4(const FieldSpec& f) { return std::make_shared<const HopfAlgebra>(buildSweedlerH4(f)); }
HopfPtr kz2(const FieldSpec& f) {
    return std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::cyclic(2), f));
}
AlgebraPtr e2(const FieldSpec& f) { return std::make_shared<const StructureAlgebra>(dualNumbers(f)); }

std::vector<ComoduleAlgebra> allBuilders(const FieldSpec& f) {
    const auto s3 = FiniteGroup::symmetric(3);
    return {trivialHopfCoefficients(e2(f)),
            trivialCoefficients(h4(f)),
            regularComodule(h4(f)),
            buildDualNumbersComodule(f),
            trivialCoefficients(kz2(f)),
            regularComodule(kz2(f)),
            buildConjugationComodule(s3, {s3.identity(), *s3.find("(12)")}, f)};
}

// Orbit count by union-find over all (X, X <- x) pairs.
std::size_t orbitCountOracle(const AlgebraDiagram& d, const std::vector<Vec>& z1, const std::vector<Vec>& units) {
    std::vector<std::size_t> parent(z1.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < z1.size(); ++i)
        for (const auto& x : units) {
            const Vec img = d.mul1(d.mul1(d.d0[1].apply(*d.level0->tryInverse(x)), z1[i]), d.d0[0].apply(x));
            auto it = std::find(z1.begin(), z1.end(), img);
            REQUIRE(it != z1.end());
            parent[find(i)] = find(static_cast<std::size_t>(it - z1.begin()));
        }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < z1.size(); ++i) roots += find(i) == i;
    return roots;
}

} // namespace

TEST_CASE("diagram identities for every builder") {
    for (std::uint32_t p : {3u, 5u}) {
        const auto f = FieldSpec::prime(p);
        for (const auto& e : allBuilders(f)) {
            const auto rep = checkDiagram(buildDiagram(e));
            INFO(e.name);
            if (auto fail = rep.firstFailure()) INFO(fail->name);
            CHECK(rep.passed());
        }
    }
}

TEST_CASE("diagram examples") {
    const auto f3 = FieldSpec::prime(3);
    const auto d = buildDiagram(trivialHopfCoefficients(e2(f3)));
    CHECK(d.d0[0] == Matrix::identity(f3, 2));
    CHECK(d.d0[1] == Matrix::identity(f3, 2));
    const auto dd = buildDiagram(buildDualNumbersComodule(f3));
    CHECK(dd.coface0(1, vec(f3, {0, 1})) == vec(f3, {0, 0, 0, 0, 1, 0, 0, 0}));
    CHECK_THROWS_AS(dd.coface0(2, vec(f3, {0, 1})), BadIndex);
}

TEST_CASE("first example: trivial Hopf algebra") {
    const auto f3 = FieldSpec::prime(3);
    const SearchConfig cfg;
    const auto e = trivialHopfCoefficients(e2(f3));
    const auto g = h0(e, cfg);
    CHECK(g.elements == enumerateUnits(e.algebra(), cfg));
    CHECK(g.size() == 6);
    CHECK(z1(e, cfg) == std::vector<Vec>{vec(f3, {1, 0})});
    CHECK(h1(e, cfg).h1.size() == 1);
}

TEST_CASE("second example: coefficients k") {
    const auto f3 = FieldSpec::prime(3);
    const SearchConfig cfg;
    const auto e = trivialCoefficients(h4(f3));
    CHECK(h0(e, cfg).elements == std::vector<Vec>{vec(f3, {1}), vec(f3, {2})});
    const auto z = z1(e, cfg);
    CHECK(z == grouplikes(*e.hopf, cfg).elements);
    const auto r = h1(e, cfg);
    REQUIRE(r.h1.size() == 2);
    CHECK(r.h1[0].representative == vec(f3, {1, 0, 0, 0}));
    CHECK(r.h1[1].representative == vec(f3, {0, 1, 0, 0}));
}

TEST_CASE("third example: H over itself") {
    const SearchConfig cfg;
    for (std::uint32_t p : {3u, 5u}) {
        const auto f = FieldSpec::prime(p);
        const auto e = regularComodule(h4(f));
        const auto g = h0(e, cfg);
        CHECK(g.size() == p - 1);
        for (const auto& x : g.elements) {
            CHECK(x[1].isZero());
            CHECK(x[2].isZero());
            CHECK(x[3].isZero());
        }
    }
    // Over F5 the normalized slice has 5^12 points, beyond the default budget.
    const auto e = regularComodule(h4(FieldSpec::prime(3)));
    const auto r = h1(e, cfg);
    CHECK(r.h1.size() == 1);
    CHECK(r.h1[0].representative == r.z1.front());
}

TEST_CASE("cocycles of the dual numbers match the closed forms") {
    const SearchConfig cfg;
    for (std::uint32_t p : {3u, 5u}) {
        const auto f = FieldSpec::prime(p);
        const auto e = buildDualNumbersComodule(f);
        std::vector<Vec> expected;
        for (std::uint32_t u = 0; u < p; ++u) {
            expected.push_back(closedX(f, f.fromResidue(u)));
            expected.push_back(closedY(f, f.fromResidue(u)));
        }
        std::sort(expected.begin(), expected.end());
        const auto z = z1(e, cfg);
        CHECK(z.size() == 2 * p);
        CHECK(z == expected);
        CHECK(h0(e, cfg).size() == p - 1);
    }
}

TEST_CASE("the dual numbers have two classes") {
    const auto f3 = FieldSpec::prime(3);
    const SearchConfig cfg;
    const auto e = buildDualNumbersComodule(f3);
    const auto r = h1(e, cfg);
    REQUIRE(r.h1.size() == 2);
    CHECK(r.h1[0].representative == closedX(f3, f3.zero()));
    CHECK(r.h1[1].representative == closedY(f3, f3.zero()));
    const auto d = buildDiagram(e);
    for (const auto& o : r.h1)
        for (std::size_t i = 0; i < o.members.size(); ++i)
            CHECK(cocycleAction(d, o.representative, o.witnesses[i]) == o.members[i]);
    CHECK(orbitCountOracle(d, r.z1, r.units0) == 2);
}

TEST_CASE("action formulas on the dual numbers") {
    for (std::uint32_t p : {3u, 5u}) {
        const auto f = FieldSpec::prime(p);
        const auto d = buildDiagram(buildDualNumbersComodule(f));
        for (std::uint32_t u = 0; u < p; ++u)
            for (std::uint32_t a = 1; a < p; ++a)
                for (std::uint32_t b = 0; b < p; ++b) {
                    const Scalar su = f.fromResidue(u), sa = f.fromResidue(a), sb = f.fromResidue(b);
                    const Vec x{sa, sb};
                    const Scalar shifted = su + sb * sa.inverse();
                    CHECK(cocycleAction(d, closedX(f, su), x) == closedX(f, shifted));
                    CHECK(cocycleAction(d, closedY(f, su), x) == closedY(f, shifted));
                }
        CHECK_THROWS_AS(cocycleAction(d, closedX(f, f.zero()), vec(f, {0, 1})), NotInvertible);
    }
}

TEST_CASE("action properties on every builder") {
    const SearchConfig cfg;
    std::mt19937_64 rng(99);
    for (const auto& e : allBuilders(FieldSpec::prime(3))) {
        INFO(e.name);
        const auto d = buildDiagram(e);
        const auto r = diagramCohomology(d, cfg);
        CHECK(std::binary_search(r.z1.begin(), r.z1.end(), d.one1()));
        CHECK(std::binary_search(r.h1[0].members.begin(), r.h1[0].members.end(), d.one1()));
        for (const auto& X : r.z1) CHECK(d.s0.apply(X) == d.one0());
        for (int t = 0; t < 30; ++t) {
            const Vec& X = r.z1[rng() % r.z1.size()];
            const Vec& x = r.units0[rng() % r.units0.size()];
            const Vec& y = r.units0[rng() % r.units0.size()];
            CHECK(cocycleAction(d, X, d.one0()) == X);
            CHECK(cocycleAction(d, cocycleAction(d, X, x), y) == cocycleAction(d, X, d.mul0(x, y)));
            CHECK(isCocycle(d, cocycleAction(d, X, x)));
        }
        for (std::size_t i = 0; i < r.h1.size(); ++i) {
            CHECK(r.h1[i].representative == r.h1[i].members.front());
            if (i > 1) CHECK(r.h1[i - 1].representative < r.h1[i].representative);
        }
        CHECK(orbitCountOracle(d, r.z1, r.units0) == r.h1.size());
    }
}

TEST_CASE("cohomology is independent of the thread count") {
    const auto e = buildDualNumbersComodule(FieldSpec::prime(5));
    SearchConfig one, many;
    many.threads = 3;
    const auto a = h1(e, one), b = h1(e, many);
    CHECK(a.z1 == b.z1);
    REQUIRE(a.h1.size() == b.h1.size());
    for (std::size_t i = 0; i < a.h1.size(); ++i) {
        CHECK(a.h1[i].members == b.h1[i].members);
        CHECK(a.h1[i].witnesses == b.h1[i].witnesses);
    }
}

TEST_CASE("commutative H1 groups") {
    const auto f3 = FieldSpec::prime(3);
    const SearchConfig cfg;
    const auto g = commutativeH1Group(trivialCoefficients(kz2(f3)), cfg);
    REQUIRE(g.table.size() == 2);
    CHECK(g.table[0][0] == 0);
    CHECK(g.table[0][1] == 1);
    CHECK(g.table[1][1] == 0);
    CHECK(g.cohomology.h1.size() == grouplikes(*kz2(f3), cfg).size());
    const auto t = commutativeH1Group(trivialHopfCoefficients(e2(f3)), cfg);
    CHECK(t.table.size() == 1);
    CHECK_THROWS_AS(commutativeH1Group(buildDualNumbersComodule(f3), cfg), NotCommutative);
    SearchConfig tight;
    tight.budget = 10;
    CHECK_THROWS_AS(h1(buildDualNumbersComodule(f3), tight), EnumerationOverBudget);
}
