#include "hopfcoh/cohomology.hpp"

namespace hopfcoh {

Vec AlgebraDiagram::inv0(const Vec& a) const {
    auto r = level0->tryInverse(a);
    if (!r) throw NotInvertible(level0->format(a) + " is not a unit");
    return std::move(*r);
}

Vec AlgebraDiagram::inv1(const Vec& a) const {
    auto r = level1->tryInverse(a);
    if (!r) throw NotInvertible(level1->format(a) + " is not a unit");
    return std::move(*r);
}

Vec AlgebraDiagram::coface0(int i, const Vec& x) const {
    if (i < 0 || i > 1) throw BadIndex("coface d" + std::to_string(i) + " from level 0");
    return d0[static_cast<std::size_t>(i)].apply(x);
}

Vec AlgebraDiagram::coface1(int i, const Vec& x) const {
    if (i < 0 || i > 2) throw BadIndex("coface d" + std::to_string(i) + " from level 1");
    return d1[static_cast<std::size_t>(i)].apply(x);
}

AlgebraDiagram buildDiagram(const ComoduleAlgebra& e) {
    checkComoduleAlgebra(e).require();
    const HopfAlgebra& h = *e.hopf;
    const FieldSpec& f = e.field();
    const std::size_t nE = e.dim(), nH = h.dim();
    const Matrix idE = Matrix::identity(f, nE), idH = Matrix::identity(f, nH), idEH = Matrix::identity(f, nE * nH);
    const Matrix eta = unitMatrix(h.algebra());
    auto l1 = std::make_shared<const StructureAlgebra>(tensorAlgebra(e.algebra(), h.algebra()));
    auto l2 = std::make_shared<const StructureAlgebra>(tensorAlgebra(*l1, h.algebra()));
    return AlgebraDiagram{e.alg,
                          l1,
                          l2,
                          {e.coaction, kron(idE, eta)},
                          {kron(e.coaction, idH), kron(idE, h.comult), kron(idEH, eta)},
                          kron(idE, h.counit),
                          {kron(kron(idE, h.counit), idH), kron(idEH, h.counit)}};
}

namespace {

void addEquality(AxiomReport& rep, const std::string& name, const Matrix& a, const Matrix& b) {
    auto diff = firstColumnDifference(a, b);
    rep.add(name, !diff, diff ? "basis column " + std::to_string(*diff) : std::string{});
}

void addMorphism(AxiomReport& rep, const std::string& name, const Matrix& m, const StructureAlgebra& a,
                 const StructureAlgebra& b) {
    std::string w;
    rep.add(name + " is an algebra morphism", isAlgebraMorphism(m, a, b, &w), w);
}

} // namespace

AxiomReport checkDiagram(const AlgebraDiagram& d) {
    AxiomReport rep;
    const FieldSpec& f = d.level0->field();
    const auto &A0 = *d.level0, &A1 = *d.level1, &A2 = *d.level2;
    for (int i = 0; i < 2; ++i) addMorphism(rep, "d" + std::to_string(i) + " (level 0)", d.d0[i], A0, A1);
    for (int i = 0; i < 3; ++i) addMorphism(rep, "d" + std::to_string(i) + " (level 1)", d.d1[i], A1, A2);
    addMorphism(rep, "s0 (level 1)", d.s0, A1, A0);
    for (int i = 0; i < 2; ++i) addMorphism(rep, "s" + std::to_string(i) + " (level 2)", d.s1[i], A2, A1);

    addEquality(rep, "d1 d0 = d0 d0", d.d1[1] * d.d0[0], d.d1[0] * d.d0[0]);
    addEquality(rep, "d2 d0 = d0 d1", d.d1[2] * d.d0[0], d.d1[0] * d.d0[1]);
    addEquality(rep, "d2 d1 = d1 d1", d.d1[2] * d.d0[1], d.d1[1] * d.d0[1]);

    const Matrix id0 = Matrix::identity(f, A0.dim()), id1 = Matrix::identity(f, A1.dim());
    addEquality(rep, "s0 d0 = id (level 0)", d.s0 * d.d0[0], id0);
    addEquality(rep, "s0 d1 = id (level 0)", d.s0 * d.d0[1], id0);
    addEquality(rep, "s0 d0 = id (level 1)", d.s1[0] * d.d1[0], id1);
    addEquality(rep, "s0 d1 = id (level 1)", d.s1[0] * d.d1[1], id1);
    addEquality(rep, "s0 d2 = d1 s0", d.s1[0] * d.d1[2], d.d0[1] * d.s0);
    addEquality(rep, "s1 d0 = d0 s0", d.s1[1] * d.d1[0], d.d0[0] * d.s0);
    addEquality(rep, "s1 d1 = id", d.s1[1] * d.d1[1], id1);
    addEquality(rep, "s1 d2 = id", d.s1[1] * d.d1[2], id1);
    addEquality(rep, "s0 s0 = s0 s1", d.s0 * d.s1[0], d.s0 * d.s1[1]);
    return rep;
}

ElementGroup diagramH0(const AlgebraDiagram& d, const SearchConfig& cfg) {
    const StructureAlgebra& a = *d.level0;
    a.field().requireEnumerable();
    AffineSolution space{a.zero(), kernelBasis(d.d0[0] - d.d0[1])};
    const ResidueAlgebra r(a);
    auto found = enumerateResidues(a.field(), space, cfg, [&](const std::uint32_t* x) { return r.isUnit(x); });
    return buildElementGroup(a, std::move(found));
}

ResidueCocycleTest::ResidueCocycleTest(const AlgebraDiagram& d)
    : p_(d.level2->field().characteristic()), dim2_(d.level2->dim()), d0_(d.d1[0]), d2_(d.d1[2]),
      byOutput_(dim2_), d1Rows_(dim2_) {
    const StructureAlgebra& a = *d.level2;
    for (std::uint32_t i = 0; i < dim2_; ++i)
        for (std::uint32_t j = 0; j < dim2_; ++j)
            for (const auto& [k, c] : a.product(i, j)) byOutput_[k].push_back({i, j, c.residue()});
    const Matrix& d1 = d.d1[1];
    for (std::uint32_t k = 0; k < d1.rows(); ++k)
        for (std::uint32_t c = 0; c < d1.cols(); ++c)
            if (!d1(k, c).isZero()) d1Rows_[k].push_back({c, d1(k, c).residue()});
}

bool ResidueCocycleTest::operator()(const std::uint32_t* X) const {
    thread_local ResVec a, b;
    a.resize(dim2_);
    b.resize(dim2_);
    d2_.apply(X, a.data());
    d0_.apply(X, b.data());
    for (std::size_t k = 0; k < dim2_; ++k) {
        std::uint64_t lhs = 0, rhs = 0;
        for (const Term& t : byOutput_[k])
            if (a[t.i] && b[t.j]) lhs += std::uint64_t{a[t.i]} * b[t.j] % p_ * t.c;
        for (const auto& [c, v] : d1Rows_[k]) rhs += std::uint64_t{X[c]} * v;
        if (lhs % p_ != rhs % p_) return false;
    }
    return true;
}

std::vector<Vec> diagramZ1(const AlgebraDiagram& d, const SearchConfig& cfg) {
    d.level1->field().requireEnumerable();
    auto slice = solveLinear(d.s0, d.one0());
    if (!slice) return {};
    const ResidueAlgebra level1(*d.level1);
    const ResidueCocycleTest cocycle(d);
    return enumerateResidues(d.level1->field(), *slice, cfg,
                             [&](const std::uint32_t* X) { return cocycle(X) && level1.isUnit(X); });
}

CohomologyResult diagramCohomology(const AlgebraDiagram& d, const SearchConfig& cfg) {
    CohomologyResult r{diagramH0(d, cfg), diagramZ1(d, cfg), {}, enumerateUnits(*d.level0, cfg)};
    r.h1 = orbitPartition(d, r.z1, r.units0);
    return r;
}

ElementGroup h0(const ComoduleAlgebra& e, const SearchConfig& cfg) { return diagramH0(buildDiagram(e), cfg); }

std::vector<Vec> z1(const ComoduleAlgebra& e, const SearchConfig& cfg) { return diagramZ1(buildDiagram(e), cfg); }

CohomologyResult h1(const ComoduleAlgebra& e, const SearchConfig& cfg) {
    return diagramCohomology(buildDiagram(e), cfg);
}

Vec cocycleAction(const AlgebraDiagram& d, const Vec& X, const Vec& x) { return actOn(d, X, x); }

H1Group commutativeH1Group(const ComoduleAlgebra& e, const SearchConfig& cfg) {
    if (!e.algebra().isCommutative()) throw NotCommutative("coefficient algebra is not commutative");
    if (!e.hopf->algebra().isCommutative()) throw NotCommutative("Hopf algebra is not commutative");
    const AlgebraDiagram d = buildDiagram(e);
    H1Group g{diagramCohomology(d, cfg), {}};
    const auto& orbits = g.cohomology.h1;
    const std::size_t n = orbits.size();
    g.table.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::optional<std::size_t> cls;
            for (const auto& x : orbits[i].members)
                for (const auto& y : orbits[j].members) {
                    auto c = orbitIndex(orbits, d.mul1(x, y));
                    if (!c) throw LevelMismatch("product of cocycles is not a cocycle");
                    if (cls && *cls != *c) throw LevelMismatch("class product depends on representatives");
                    cls = c;
                }
            g.table[i][j] = static_cast<std::uint32_t>(*cls);
        }
    return g;
}

} // namespace hopfcoh
