#include <doctest.h>

#include "hopfcoh/hopf.hpp"

using namespace hopfcoh;

namespace {

Vec vec(const FieldSpec& f, std::vector<std::int64_t> xs) {
    Vec v;
    for (auto x : xs) v.push_back(f.fromInt(x));
    return v;
}

// |Hom(G, F_p^x)| by enumerating maps into the cyclic group of order p - 1.
std::size_t characterCount(const FiniteGroup& g, std::uint32_t p) {
    return groupHomomorphisms(g, FiniteGroup::cyclic(p - 1)).size();
}

} // namespace

TEST_CASE("finite groups") {
    const auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.isAbelian());
    const auto t12 = *s3.find("(12)"), t13 = *s3.find("(13)"), t23 = *s3.find("(23)");
    CHECK(s3.mul(s3.mul(t12, t13), s3.inv(t12)) == t23);
    CHECK(s3.restrict({s3.identity(), t12}).order() == 2);
    CHECK_THROWS_AS(s3.restrict({s3.identity(), t12, t13}), NotASubgroup);
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), NotAGroup);
    CHECK(groupHomomorphisms(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)).size() == 2);
    CHECK(groupHomomorphisms(s3, FiniteGroup::cyclic(2)).size() == 2);
}

TEST_CASE("Hopf axioms of the builders") {
    for (std::uint32_t p : {3u, 5u}) {
        const auto f = FieldSpec::prime(p);
        CHECK(checkHopfAxioms(buildTrivialHopf(f)).passed());
        CHECK(checkHopfAxioms(buildSweedlerH4(f)).passed());
        CHECK(checkHopfAxioms(buildFunctionHopf(FiniteGroup::trivial(), f)).passed());
        CHECK(checkHopfAxioms(buildFunctionHopf(FiniteGroup::cyclic(2), f)).passed());
        CHECK(checkHopfAxioms(buildFunctionHopf(FiniteGroup::cyclic(3), f)).passed());
        CHECK(checkHopfAxioms(buildFunctionHopf(FiniteGroup::symmetric(3), f)).passed());
    }
    CHECK(checkHopfAxioms(buildSweedlerH4(FieldSpec::rational())).passed());
    CHECK_FALSE(buildSweedlerH4(FieldSpec::prime(3)).characteristicTwoWarning);
    CHECK(buildSweedlerH4(FieldSpec::prime(2)).characteristicTwoWarning);
}

TEST_CASE("Sweedler structure maps") {
    const auto f3 = FieldSpec::prime(3);
    const auto h = buildSweedlerH4(f3);
    Vec dh(16, f3.zero());
    dh[2 * 4 + 1] = f3.one(); // h⊗g
    dh[0 * 4 + 2] = f3.one(); // 1⊗h
    CHECK(h.comult.column(2) == dh);
    CHECK(h.counit(0, 3).isZero());
    CHECK(h.antipode.column(2) == vec(f3, {0, 0, 0, 1}));
    CHECK(h.antipode.column(3) == vec(f3, {0, 0, -1, 0}));
}

TEST_CASE("the antipode law catches a wrong antipode") {
    const auto f5 = FieldSpec::prime(5);
    auto h = buildSweedlerH4(f5);
    h.antipode = Matrix::identity(f5, 4);
    const auto rep = checkHopfAxioms(h);
    REQUIRE(rep.firstFailure());
    CHECK(rep.firstFailure()->name == "left antipode");
    CHECK(rep.firstFailure()->witness == "h");

    // sigma(h) = -gh, sigma(gh) = gh also fails.
    auto h2 = buildSweedlerH4(f5);
    h2.antipode = Matrix(f5, 4, 4);
    h2.antipode(0, 0) = f5.one();
    h2.antipode(1, 1) = f5.one();
    h2.antipode(3, 2) = -f5.one();
    h2.antipode(3, 3) = f5.one();
    CHECK_FALSE(checkHopfAxioms(h2).passed());
}

TEST_CASE("function Hopf algebras") {
    const auto f3 = FieldSpec::prime(3);
    const auto k = buildFunctionHopf(FiniteGroup::trivial(), f3);
    CHECK(k.dim() == 1);
    CHECK(k.comult == Matrix::identity(f3, 1));
    const auto z2 = buildFunctionHopf(FiniteGroup::cyclic(2), f3);
    CHECK(z2.comult.column(0) == vec(f3, {1, 0, 0, 1}));
    CHECK(z2.comult.column(1) == vec(f3, {0, 1, 1, 0}));
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {1, 0}}), NotAGroup);
}

TEST_CASE("grouplikes") {
    const auto f3 = FieldSpec::prime(3);
    const SearchConfig cfg;
    CHECK(grouplikes(buildTrivialHopf(f3), cfg).size() == 1);
    const auto gh4 = grouplikes(buildSweedlerH4(f3), cfg);
    REQUIRE(gh4.size() == 2);
    CHECK(gh4.elements[0] == vec(f3, {0, 1, 0, 0}));
    CHECK(gh4.elements[1] == vec(f3, {1, 0, 0, 0}));
    const auto gz2 = grouplikes(buildFunctionHopf(FiniteGroup::cyclic(2), f3), cfg);
    REQUIRE(gz2.size() == 2);
    CHECK(gz2.elements[0] == vec(f3, {1, 1}));
    CHECK(gz2.elements[1] == vec(f3, {1, 2}));
}

TEST_CASE("grouplikes of k^G count the characters of G") {
    const SearchConfig cfg;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto f = FieldSpec::prime(p);
        for (const auto& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                              FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
            const auto gr = grouplikes(buildFunctionHopf(g, f), cfg);
            CHECK(gr.size() == characterCount(g, p));
            for (std::size_t a = 0; a < gr.size(); ++a)
                CHECK(buildFunctionHopf(g, f).algebra().isUnit(gr.elements[a]));
        }
    }
}
