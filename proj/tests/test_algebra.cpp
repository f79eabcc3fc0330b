#include <doctest.h>

#include <random>

#include "hopfcoh/comodule.hpp"

using namespace hopfcoh;

namespace {

Vec vec(const FieldSpec& f, std::vector<std::int64_t> xs) {
    Vec v;
    for (auto x : xs) v.push_back(f.fromInt(x));
    return v;
}

Vec randomVec(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(f.fromInt(static_cast<std::int64_t>(rng() % 11) - 5));
    return v;
}

} // namespace

TEST_CASE("products in the dual numbers and the Sweedler algebra") {
    const auto f3 = FieldSpec::prime(3);
    const auto e2 = std::make_shared<const StructureAlgebra>(dualNumbers(f3));
    const Element h(e2, vec(f3, {0, 1}));
    CHECK(multiply(h, h).coords() == vec(f3, {0, 0}));

    const auto h4 = buildSweedlerH4(f3);
    const Element g(h4.alg, vec(f3, {0, 1, 0, 0})), gh(h4.alg, vec(f3, {0, 0, 0, 1})),
        hh(h4.alg, vec(f3, {0, 0, 1, 0}));
    CHECK(multiply(g, g).coords() == vec(f3, {1, 0, 0, 0}));
    CHECK(multiply(gh, gh).coords() == vec(f3, {0, 0, 0, 0}));
    CHECK(multiply(hh, g).coords() == vec(f3, {0, 0, 0, -1}));
    CHECK_THROWS_AS(multiply(h, g), ParentMismatch);
}

TEST_CASE("algebra axiom checker") {
    const auto f3 = FieldSpec::prime(3), f5 = FieldSpec::prime(5);
    CHECK(checkAlgebraAxioms(dualNumbers(f3)).passed());
    CHECK(checkAlgebraAxioms(buildSweedlerH4(f5).algebra()).passed());

    const StructureAlgebra good = dualNumbers(f3);
    std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) mult[i][j] = good.multiply(good.basisVector(i), good.basisVector(j));
    const StructureAlgebra badUnit(f3, {"1", "h"}, mult, vec(f3, {0, 1}));
    const auto rep = checkAlgebraAxioms(badUnit);
    CHECK_FALSE(rep.passed());
    REQUIRE(rep.firstFailure());
    CHECK(rep.firstFailure()->name == "unit law");
    CHECK(rep.firstFailure()->witness == "1");

    // e_1 e_1 = e_0 + e_1 and e_0 a left but not right identity breaks associativity.
    std::vector<std::vector<Vec>> bad(2, std::vector<Vec>(2, vec(f3, {0, 0})));
    bad[0][0] = vec(f3, {1, 0});
    bad[0][1] = vec(f3, {0, 1});
    bad[1][0] = vec(f3, {0, 0});
    bad[1][1] = vec(f3, {1, 1});
    CHECK_FALSE(checkAlgebraAxioms(StructureAlgebra(f3, {"a", "b"}, bad, vec(f3, {1, 0}))).passed());
}

TEST_CASE("tensor algebras") {
    const auto f3 = FieldSpec::prime(3);
    const auto e2 = dualNumbers(f3);
    const auto h4 = buildSweedlerH4(f3).algebra();
    const auto k = groundAlgebra(f3);
    const auto ke = tensorAlgebra(k, h4);
    CHECK(ke.dim() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t l = 0; l < 4; ++l) CHECK(ke.constant(i, j, l) == h4.constant(i, j, l));
    const auto eh = tensorAlgebra(e2, h4);
    CHECK(eh.dim() == 8);
    CHECK(eh.unit() == tensorVec(e2.unit(), h4.unit()));
    CHECK(eh.labels()[5] == "h⊗g");
    CHECK(checkAlgebraAxioms(eh).passed());
    CHECK(checkAlgebraAxioms(tensorAlgebra(eh, h4)).passed());
    CHECK_THROWS_AS(tensorAlgebra(e2, dualNumbers(FieldSpec::prime(5))), FieldMismatch);
}

TEST_CASE("inverses") {
    const auto f3 = FieldSpec::prime(3);
    const auto e2 = std::make_shared<const StructureAlgebra>(dualNumbers(f3));
    CHECK(tryInverse(Element(e2, vec(f3, {1, 1}))).coords() == vec(f3, {1, 2}));
    CHECK_THROWS_AS(tryInverse(Element(e2, vec(f3, {0, 1}))), NotInvertible);
    CHECK(tryInverse(Element(e2, e2->unit())).coords() == e2->unit());
}

TEST_CASE("enumeration of elements and units") {
    const auto f3 = FieldSpec::prime(3);
    const auto e2 = dualNumbers(f3);
    const SearchConfig cfg;
    const auto all = enumerateElements(e2, std::nullopt, cfg);
    CHECK(all.size() == 9);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == vec(f3, {0, 0}));
    CHECK(all.back() == vec(f3, {2, 2}));
    // alpha + beta h is a unit iff alpha != 0.
    const auto units = enumerateUnits(e2, cfg);
    CHECK(units.size() == 6);
    for (const auto& u : units) CHECK_FALSE(u[0].isZero());

    const auto h4 = buildSweedlerH4(f3);
    const auto eh = tensorAlgebra(e2, h4.algebra());
    const Matrix idEps = kron(Matrix::identity(f3, 2), h4.counit);
    const auto slice = solveLinear(idEps, e2.unit());
    REQUIRE(slice);
    const auto sliceElems = enumerateElements(eh, slice, cfg);
    // Oracle: filter the whole algebra directly.
    std::size_t direct = 0;
    for (const auto& x : enumerateElements(eh, std::nullopt, cfg))
        if (idEps.apply(x) == e2.unit()) ++direct;
    CHECK(direct == 729);
    CHECK(sliceElems.size() == direct);

    SearchConfig tight;
    tight.budget = 8;
    CHECK_THROWS_AS(enumerateElements(e2, std::nullopt, tight), EnumerationOverBudget);
    CHECK_THROWS_AS(enumerateElements(dualNumbers(FieldSpec::rational()), std::nullopt, cfg), RationalFieldNotEnumerable);
}

TEST_CASE("enumeration is independent of the thread count") {
    const auto f3 = FieldSpec::prime(3);
    const auto eh = tensorAlgebra(dualNumbers(f3), buildSweedlerH4(f3).algebra());
    SearchConfig one, four;
    four.threads = 4;
    CHECK(enumerateUnits(eh, one) == enumerateUnits(eh, four));
}

TEST_CASE("algebra properties on seeded samples") {
    std::mt19937_64 rng(7);
    const auto f5 = FieldSpec::prime(5);
    const auto a = tensorAlgebra(dualNumbers(f5), buildSweedlerH4(f5).algebra());
    for (int t = 0; t < 100; ++t) {
        const Vec x = randomVec(f5, a.dim(), rng), x2 = randomVec(f5, a.dim(), rng), y = randomVec(f5, a.dim(), rng);
        CHECK(a.multiply(addVec(x, x2), y) == addVec(a.multiply(x, y), a.multiply(x2, y)));
        CHECK(a.multiply(y, addVec(x, x2)) == addVec(a.multiply(y, x), a.multiply(y, x2)));
        if (auto inv = a.tryInverse(x)) {
            CHECK(a.tryInverse(*inv) == x);
        }
        CHECK(a.leftMultMatrix(x).apply(y) == a.multiply(x, y));
        CHECK(a.rightMultMatrix(x).apply(y) == a.multiply(y, x));
    }
}

TEST_CASE("unit count of a tensor algebra matches a rank oracle") {
    const auto f3 = FieldSpec::prime(3);
    const auto a = tensorAlgebra(dualNumbers(f3), buildSweedlerH4(f3).algebra());
    const SearchConfig cfg;
    std::size_t oracle = 0;
    for (const auto& x : enumerateElements(a, std::nullopt, cfg))
        if (matrixRank(a.leftMultMatrix(x)) == a.dim()) ++oracle;
    CHECK(oracle == 2916);
    CHECK(enumerateUnits(a, cfg).size() == oracle);
}

TEST_CASE("element groups") {
    const auto f3 = FieldSpec::prime(3);
    const auto e2 = dualNumbers(f3);
    const auto g = buildElementGroup(e2, enumerateUnits(e2, SearchConfig{}));
    CHECK(g.size() == 6);
    CHECK(g.elements[g.identity] == e2.unit());
    CHECK_THROWS_AS(buildElementGroup(e2, {e2.unit(), vec(f3, {1, 1})}), NotAGroup);
}
