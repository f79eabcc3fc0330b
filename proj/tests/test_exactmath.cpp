#include <doctest.h>

#include <random>

#include "hopfcoh/exactmath.hpp"

using namespace hopfcoh;

namespace {

Matrix rows(const FieldSpec& f, std::vector<std::vector<std::int64_t>> r) {
    std::vector<Vec> out;
    for (auto& row : r) {
        Vec v;
        for (auto x : row) v.push_back(f.fromInt(x));
        out.push_back(v);
    }
    return Matrix::fromRows(f, out);
}

Vec vec(const FieldSpec& f, std::vector<std::int64_t> xs) {
    Vec v;
    for (auto x : xs) v.push_back(f.fromInt(x));
    return v;
}

Matrix randomMatrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zeroBias) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    std::uniform_int_distribution<int> z(0, 9);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zeroBias ? f.zero() : f.fromInt(d(rng));
    return m;
}

} // namespace

TEST_CASE("field construction") {
    CHECK(FieldSpec::prime(3).characteristic() == 3);
    CHECK_THROWS_AS(FieldSpec::prime(4), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(1), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(4294967311ULL), InvalidField);
    CHECK_THROWS_AS(FieldSpec::rational().requireEnumerable(), RationalFieldNotEnumerable);
    CHECK_THROWS_AS(FieldSpec::prime(65537).requireEnumerable(), InvalidField);
    CHECK_NOTHROW(FieldSpec::prime(65521).requireEnumerable());
    CHECK(FieldSpec::prime(5).fromInt(-7).residue() == 3);
}

TEST_CASE("scalar inverse examples") {
    const auto f3 = FieldSpec::prime(3), f5 = FieldSpec::prime(5), q = FieldSpec::rational();
    CHECK(scalarInverse(f3.one(), f3) == f3.one());
    CHECK(scalarInverse(f5.fromInt(2), f5) == f5.fromInt(3));
    CHECK(scalarInverse(q.fromRational(mpq_class(3, 4)), q) == q.fromRational(mpq_class(4, 3)));
    CHECK(scalarInverse(q.fromRational(mpq_class(3, 4)), q).toString() == "4/3");
    CHECK_THROWS_AS(scalarInverse(f5.zero(), f5), ZeroInverse);
    CHECK_THROWS_AS(scalarInverse(f5.one(), f3), FieldMismatch);
}

TEST_CASE("scalar arithmetic and canonical form") {
    const auto q = FieldSpec::rational();
    CHECK(q.fromRational(mpq_class(2, 4)) == q.fromRational(mpq_class(1, 2)));
    CHECK(q.fromRational(mpq_class(-6, 3)).toString() == "-2");
    CHECK((q.fromInt(1) - q.fromInt(1)).isZero());
    CHECK(q.fromInt(1) - q.fromInt(1) == q.zero());
    const auto f7 = FieldSpec::prime(7);
    CHECK(f7.fromRational(mpq_class(1, 2)) == f7.fromInt(4));
    CHECK_THROWS_AS(f7.fromInt(1) + q.fromInt(1), FieldMismatch);
    CHECK(q.fromInt(-1) < q.zero());
}

TEST_CASE("inverse property over several primes") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 65521u}) {
        const auto f = FieldSpec::prime(p);
        std::mt19937_64 rng(p);
        for (int t = 0; t < 200; ++t) {
            const auto a = f.fromResidue(static_cast<std::uint32_t>(1 + rng() % (p - 1)));
            CHECK((a * a.inverse()).isOne());
        }
    }
    const auto big = FieldSpec::prime(4294967291ULL);
    const auto a = big.fromInt(123456789);
    CHECK((a * a.inverse()).isOne());
}

TEST_CASE("solveLinear examples") {
    const auto f3 = FieldSpec::prime(3), q = FieldSpec::rational();
    auto s = solveLinear(Matrix::identity(q, 2), vec(q, {1, 2}));
    REQUIRE(s);
    CHECK(s->particular == vec(q, {1, 2}));
    CHECK(s->kernel.empty());

    s = solveLinear(Matrix(q, 2, 2), vec(q, {0, 0}));
    REQUIRE(s);
    CHECK(s->particular == vec(q, {0, 0}));
    CHECK(s->kernel.size() == 2);

    s = solveLinear(rows(f3, {{1, 1}, {2, 2}}), vec(f3, {1, 2}));
    REQUIRE(s);
    CHECK(s->particular == vec(f3, {1, 0}));
    REQUIRE(s->kernel.size() == 1);
    CHECK(s->kernel[0] == vec(f3, {1, 2}));

    CHECK_FALSE(solveLinear(rows(f3, {{1, 1}, {1, 1}}), vec(f3, {1, 2})));
    CHECK_THROWS_AS(solveLinear(Matrix::identity(q, 2), vec(q, {1})), DimensionMismatch);
}

TEST_CASE("rank and inverse examples") {
    const auto f3 = FieldSpec::prime(3), q = FieldSpec::rational();
    CHECK(matrixRank(Matrix::identity(q, 3)) == 3);
    CHECK(matrixRank(Matrix(q, 2, 5)) == 0);
    CHECK(matrixRank(rows(q, {{1, 2}, {2, 4}})) == 1);

    CHECK(*matrixInverse(Matrix::identity(q, 4)) == Matrix::identity(q, 4));
    const Matrix swap = rows(q, {{0, 1}, {1, 0}});
    CHECK(*matrixInverse(swap) == swap);
    CHECK(*matrixInverse(rows(f3, {{1, 1}, {0, 1}})) == rows(f3, {{1, 2}, {0, 1}}));
    CHECK_FALSE(matrixInverse(rows(q, {{1, 2}, {2, 4}})));
    CHECK_THROWS_AS(matrixInverse(Matrix(q, 2, 3)), NotSquare);
}

TEST_CASE("linear algebra properties on seeded random matrices") {
    std::mt19937_64 rng(20240601);
    for (const auto f : {FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::rational()}) {
        for (int t = 0; t < 60; ++t) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            const Matrix a = randomMatrix(f, r, c, rng, 4);
            const Vec b = randomMatrix(f, r, 1, rng, 3).column(0);
            const std::size_t rank = matrixRank(a);
            const auto ker = kernelBasis(a);
            CHECK(ker.size() + rank == c);
            for (const auto& k : ker) CHECK(isZeroVec(a.apply(k)));
            if (auto s = solveLinear(a, b)) {
                Vec x = s->particular;
                for (const auto& k : s->kernel) x = addVec(x, scaleVec(f.fromInt(static_cast<std::int64_t>(rng() % 7)), k));
                CHECK(a.apply(x) == b);
            } else {
                Matrix aug(f, r, c + 1);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < c; ++j) aug(i, j) = a(i, j);
                    aug(i, c) = b[i];
                }
                CHECK(matrixRank(aug) > rank);
            }
            const Matrix sq = randomMatrix(f, r, r, rng, 3);
            auto inv = matrixInverse(sq);
            CHECK(inv.has_value() == (matrixRank(sq) == r));
            if (inv) {
                CHECK(*inv * sq == Matrix::identity(f, r));
                CHECK(sq * *inv == Matrix::identity(f, r));
            }
        }
    }
}

TEST_CASE("kron, flip and subspace coordinates") {
    const auto f5 = FieldSpec::prime(5);
    const Matrix a = rows(f5, {{1, 2}, {3, 4}});
    const Matrix b = rows(f5, {{0, 1}, {1, 0}});
    const Matrix k = kron(a, b);
    CHECK(k(0, 1) == f5.fromInt(1));
    CHECK(k(3, 2) == f5.fromInt(4));
    const Vec x = vec(f5, {1, 2}), y = vec(f5, {3, 4, 0});
    const Matrix t = flipMatrix(f5, 2, 3);
    CHECK(t.apply(tensorVec(x, y)) == tensorVec(y, x));
    CHECK(t.rows() == 6);

    SubspaceCoords sub(f5, 3, {vec(f5, {1, 0, 2}), vec(f5, {0, 1, 1})});
    auto c = sub.coordinates(vec(f5, {2, 3, 2}));
    REQUIRE(c);
    CHECK(*c == vec(f5, {2, 3}));
    CHECK_FALSE(sub.coordinates(vec(f5, {0, 0, 1})));
}
