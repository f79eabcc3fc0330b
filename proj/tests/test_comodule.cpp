#include <doctest.h>

#include "hopfcoh/comodule.hpp"

using namespace hopfcoh;

namespace {

Vec vec(const FieldSpec& f, std::vector<std::int64_t> xs) {
    Vec v;
    for (auto x : xs) v.push_back(f.fromInt(x));
    return v;
}

HopfPtr h4(const FieldSpec& f) { return std::make_shared<const HopfAlgebra>(buildSweedlerH4(f)); }

} // namespace

TEST_CASE("comodule algebra builders pass their axioms") {
    for (std::uint32_t p : {3u, 5u}) {
        const auto f = FieldSpec::prime(p);
        CHECK(checkComoduleAlgebra(trivialHopfCoefficients(std::make_shared<const StructureAlgebra>(dualNumbers(f))))
                  .passed());
        CHECK(checkComoduleAlgebra(regularComodule(h4(f))).passed());
        CHECK(checkComoduleAlgebra(buildDualNumbersComodule(f)).passed());
        CHECK(checkComoduleAlgebra(trivialCoefficients(h4(f))).passed());
        const auto kg = std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::cyclic(2), f));
        CHECK(checkComoduleAlgebra(trivialCoefficients(kg)).passed());
        CHECK(checkComoduleAlgebra(regularComodule(kg)).passed());
        const auto s3 = FiniteGroup::symmetric(3);
        CHECK(checkComoduleAlgebra(buildConjugationComodule(s3, {s3.identity(), *s3.find("(12)")}, f)).passed());
        CHECK(checkComoduleAlgebra(buildConjugationComodule(s3, {0, 1, 2, 3, 4, 5}, f)).passed());
    }
}

TEST_CASE("dual numbers coaction") {
    const auto f3 = FieldSpec::prime(3);
    const auto e = buildDualNumbersComodule(f3);
    CHECK(e.coaction.column(0) == vec(f3, {1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(e.coaction.column(1) == vec(f3, {0, 0, 1, 0, 0, 1, 0, 0}));
    CHECK(trivialCoefficients(h4(f3)).coaction.column(0) == vec(f3, {1, 0, 0, 0}));
}

TEST_CASE("corrupted coactions are rejected") {
    const auto f3 = FieldSpec::prime(3);
    auto e = buildDualNumbersComodule(f3);
    e.coaction = Matrix(f3, 8, 2);
    e.coaction(0, 0) = f3.one();
    e.coaction(2, 1) = f3.one(); // h -> 1⊗h
    const auto rep = checkComoduleAlgebra(e);
    CHECK_FALSE(rep.passed());
    bool sawCounit = false;
    for (const auto& c : rep.checks)
        if (c.name == "counit") {
            sawCounit = true;
            CHECK_FALSE(c.passed);
            CHECK(c.witness == "h");
        }
    CHECK(sawCounit);
}

TEST_CASE("conjugation coaction") {
    const auto f3 = FieldSpec::prime(3);
    const auto s3 = FiniteGroup::symmetric(3);
    const auto t12 = *s3.find("(12)"), t13 = *s3.find("(13)"), t23 = *s3.find("(23)");
    const auto e = buildConjugationComodule(s3, {s3.identity(), t12}, f3);
    // delta component of (12) in the coaction of (13) is (23).
    const Vec col = e.coaction.column(t13);
    CHECK(col[t23 * 2 + 1].isOne());
    CHECK(col[t13 * 2 + 0].isOne());
    const auto triv = buildConjugationComodule(FiniteGroup::trivial(), {0}, f3);
    CHECK(triv.dim() == 1);
    CHECK(triv.coaction == Matrix::identity(f3, 1));
    // A central element h goes to h⊗1.
    const auto z3 = FiniteGroup::cyclic(3);
    const auto c = buildConjugationComodule(z3, {0, 1, 2}, f3);
    for (std::uint32_t x = 0; x < 3; ++x) {
        Vec expected(9, f3.zero());
        for (std::uint32_t g = 0; g < 3; ++g) expected[x * 3 + g] = f3.one();
        CHECK(c.coaction.column(x) == expected);
    }
    CHECK_THROWS_AS(buildConjugationComodule(s3, {s3.identity(), t12, t13}, f3), NotASubgroup);
}

TEST_CASE("Hopf modules") {
    const auto f3 = FieldSpec::prime(3);
    const auto e = std::make_shared<const ComoduleAlgebra>(buildDualNumbersComodule(f3));
    const auto m = regularHopfModule(e);
    CHECK(checkHopfModule(m).passed());
    CHECK(hopfModuleMorphismCheck(Matrix::identity(f3, 2), m, m));
    CHECK(hopfModuleMorphismCheck(Matrix(f3, 2, 2), m, m));
    CHECK_FALSE(hopfModuleMorphismCheck(e->algebra().leftMultMatrix(vec(f3, {1, 1})), m, m));
    CHECK_THROWS_AS(hopfModuleMorphismCheck(Matrix::identity(f3, 3), m, m), DimensionMismatch);

    for (const auto& c : {regularComodule(h4(f3)), trivialCoefficients(h4(f3)), buildDualNumbersComodule(f3)})
        CHECK(checkHopfModule(regularHopfModule(std::make_shared<const ComoduleAlgebra>(c))).passed());

    // (E2, Y0 Delta) with Y0 = 1⊗g.
    const auto eh = tensorAlgebra(e->algebra(), e->hopf->algebra());
    Vec y0(8, f3.zero());
    y0[1] = f3.one();
    const auto deformed = regularHopfModule(e, eh.leftMultMatrix(y0) * e->coaction);
    CHECK(checkHopfModule(deformed).passed());
    // 1⊗(1 + h) is not a cocycle, so the deformed coaction is not coassociative.
    Vec bad = eh.unit();
    bad[2] = f3.one();
    const auto broken = regularHopfModule(e, eh.leftMultMatrix(bad) * e->coaction);
    CHECK_FALSE(checkHopfModule(broken).passed());
}
