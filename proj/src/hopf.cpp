#include "hopfcoh/hopf.hpp"

namespace hopfcoh {

Matrix multiplicationMatrix(const StructureAlgebra& a) {
    const std::size_t n = a.dim();
    Matrix m(a.field(), n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : a.product(i, j)) m(k, i * n + j) = c;
    return m;
}

Matrix unitMatrix(const StructureAlgebra& a) { return Matrix::fromColumns(a.field(), a.dim(), {a.unit()}); }

namespace {

void addMatrixCheck(AxiomReport& rep, const std::string& name, const Matrix& lhs, const Matrix& rhs,
                    const StructureAlgebra& domain) {
    auto diff = firstColumnDifference(lhs, rhs);
    rep.add(name, !diff, diff ? domain.labels()[*diff] : std::string{});
}

} // namespace

AxiomReport checkHopfAxioms(const HopfAlgebra& h) {
    AxiomReport rep;
    const StructureAlgebra& a = h.algebra();
    const FieldSpec& f = a.field();
    const std::size_t n = a.dim();
    if (h.comult.rows() != n * n || h.comult.cols() != n || h.counit.rows() != 1 || h.counit.cols() != n ||
        h.antipode.rows() != n || h.antipode.cols() != n)
        throw DimensionError("Hopf structure maps do not match the algebra dimension " + std::to_string(n));
    const Matrix id = Matrix::identity(f, n);
    const Matrix& d = h.comult;
    addMatrixCheck(rep, "coassociativity", kron(d, id) * d, kron(id, d) * d, a);
    addMatrixCheck(rep, "left counit", kron(h.counit, id) * d, id, a);
    addMatrixCheck(rep, "right counit", kron(id, h.counit) * d, id, a);

    std::string w;
    const StructureAlgebra aa = tensorAlgebra(a, a);
    rep.add("comultiplication is multiplicative", isAlgebraMorphism(d, a, aa, &w), w);
    w.clear();
    rep.add("counit is multiplicative", isAlgebraMorphism(h.counit, a, groundAlgebra(f), &w), w);

    const Matrix mu = multiplicationMatrix(a);
    const Matrix etaEps = unitMatrix(a) * h.counit;
    addMatrixCheck(rep, "left antipode", mu * kron(h.antipode, id) * d, etaEps, a);
    addMatrixCheck(rep, "right antipode", mu * kron(id, h.antipode) * d, etaEps, a);
    return rep;
}

HopfAlgebra buildTrivialHopf(const FieldSpec& f) {
    HopfAlgebra h{std::make_shared<const StructureAlgebra>(groundAlgebra(f)), Matrix::identity(f, 1),
                  Matrix::identity(f, 1), Matrix::identity(f, 1), "k", FiniteGroup::trivial(), false};
    return h;
}

HopfAlgebra buildFunctionHopf(const FiniteGroup& g, const FieldSpec& f) {
    const std::size_t n = g.order();
    std::vector<std::string> labels;
    for (const auto& l : g.labels()) labels.push_back("δ" + l);
    std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n, f.zero())));
    for (std::size_t i = 0; i < n; ++i) mult[i][i][i] = f.one();
    Vec unit(n, f.one());
    auto alg = std::make_shared<const StructureAlgebra>(f, std::move(labels), mult, std::move(unit));

    Matrix comult(f, n * n, n), counit(f, 1, n), antipode(f, n, n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) comult(a * n + b, g.mul(a, b)) = f.one();
    counit(0, g.identity()) = f.one();
    for (std::uint32_t a = 0; a < n; ++a) antipode(g.inv(a), a) = f.one();
    return HopfAlgebra{std::move(alg), std::move(comult), std::move(counit), std::move(antipode),
                       "k^G(|G|=" + std::to_string(n) + ")", g, false};
}

HopfAlgebra buildSweedlerH4(const FieldSpec& f) {
    // g^a h^b sits at index a + 2b.
    std::vector<std::vector<Vec>> mult(4, std::vector<Vec>(4, Vec(4, f.zero())));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (b + d >= 2) continue;
                    const int idx = (a + c) % 2 + 2 * (b + d);
                    mult[a + 2 * b][c + 2 * d][idx] = (b * c) % 2 ? -f.one() : f.one();
                }
    auto alg = std::make_shared<const StructureAlgebra>(f, std::vector<std::string>{"1", "g", "h", "gh"}, mult,
                                                        basisVec(f, 4, 0));
    Matrix comult(f, 16, 4);
    auto set = [&](int col, int k, int l) { comult(k * 4 + l, col) = f.one(); };
    set(0, 0, 0); // 1 -> 1⊗1
    set(1, 1, 1); // g -> g⊗g
    set(2, 2, 1); // h -> h⊗g + 1⊗h
    set(2, 0, 2);
    set(3, 3, 0); // gh -> gh⊗1 + g⊗gh
    set(3, 1, 3);
    Matrix counit = Matrix::fromRows(f, {{f.one(), f.one(), f.zero(), f.zero()}});
    Matrix antipode(f, 4, 4);
    antipode(0, 0) = f.one();
    antipode(1, 1) = f.one();
    antipode(3, 2) = f.one();
    antipode(2, 3) = -f.one();
    return HopfAlgebra{std::move(alg), std::move(comult), std::move(counit), std::move(antipode),
                       "H4", std::nullopt, f.characteristic() == 2};
}

bool sameHopfAlgebra(const HopfAlgebra& a, const HopfAlgebra& b) {
    if (&a == &b) return true;
    if (a.field() != b.field() || a.dim() != b.dim()) return false;
    return a.algebra().unit() == b.algebra().unit() &&
           multiplicationMatrix(a.algebra()) == multiplicationMatrix(b.algebra()) && a.comult == b.comult &&
           a.counit == b.counit && a.antipode == b.antipode;
}

ElementGroup grouplikes(const HopfAlgebra& h, const SearchConfig& cfg) {
    const StructureAlgebra& a = h.algebra();
    auto slice = solveLinear(h.counit, Vec{a.field().one()});
    if (!slice) return buildElementGroup(a, {});
    auto found = enumerateFiltered(a, slice, cfg, [&](const Vec& x) { return h.comult.apply(x) == tensorVec(x, x); });
    return buildElementGroup(a, std::move(found));
}

} // namespace hopfcoh
