#include <doctest.h>

#include <random>

#include "hopfcoh/cohomology.hpp"
#include "hopfcoh/residue.hpp"

using namespace hopfcoh;

namespace {

Vec randomResidueVec(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(f.fromResidue(static_cast<std::uint32_t>(rng() % f.characteristic())));
    return v;
}

} // namespace

TEST_CASE("residue kernels agree with exact arithmetic") {
    std::mt19937_64 rng(20261016);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto f = FieldSpec::prime(p);
        const auto e = buildDualNumbersComodule(f);
        const AlgebraDiagram d = buildDiagram(e);
        const StructureAlgebra& a2 = *d.level2;
        const ResidueAlgebra r2(a2);
        const ResidueMap m(d.d1[1]);
        for (int trial = 0; trial < 50; ++trial) {
            const Vec x = randomResidueVec(f, a2.dim(), rng), y = randomResidueVec(f, a2.dim(), rng);
            ResVec out(a2.dim());
            r2.multiply(toResidues(x).data(), toResidues(y).data(), out.data());
            CHECK(fromResidues(f, out) == a2.multiply(x, y));
            CHECK(r2.isUnit(toResidues(x).data()) == a2.isUnit(x));

            const Vec X = randomResidueVec(f, d.level1->dim(), rng);
            ResVec img(m.rows());
            m.apply(toResidues(X).data(), img.data());
            CHECK(fromResidues(f, img) == d.d1[1].apply(X));
        }
    }
}

TEST_CASE("residue unit test is exhaustive-equal to the exact one on H4") {
    const auto f3 = FieldSpec::prime(3);
    const auto h4 = buildSweedlerH4(f3);
    const ResidueAlgebra r(h4.algebra());
    std::size_t units = 0;
    for (const auto& x : enumerateElements(h4.algebra(), std::nullopt, {})) {
        const bool exact = h4.algebra().isUnit(x);
        CHECK(r.isUnit(toResidues(x).data()) == exact);
        units += exact;
    }
    // a + bg is invertible in k[g] exactly when a^2 - b^2 != 0; h, gh are nilpotent.
    CHECK(units == 4 * 9);
}

TEST_CASE("residue enumeration matches the exact enumerator on affine slices") {
    const auto f5 = FieldSpec::prime(5);
    const auto e = buildDualNumbersComodule(f5);
    const AlgebraDiagram d = buildDiagram(e);
    const auto slice = solveLinear(d.s0, d.one0());
    REQUIRE(slice);
    const auto& a = *d.level1;
    const auto exact = enumerateFiltered(a, slice, {}, [&](const Vec& X) { return a.isUnit(X) && isCocycle(d, X); });
    CHECK(exact == diagramZ1(d, {}));
    CHECK(exact.size() == 10);

    const auto all = enumerateResidues(f5, *slice, {}, [](const std::uint32_t*) { return true; });
    CHECK(all == enumerateElements(a, slice, {}));
    SearchConfig three;
    three.threads = 3;
    CHECK(enumerateResidues(f5, *slice, three, [](const std::uint32_t*) { return true; }) == all);
}
