#include "hopfcoh/comodule.hpp"

namespace hopfcoh {

namespace {

void addMatrixCheck(AxiomReport& rep, const std::string& name, const Matrix& lhs, const Matrix& rhs,
                    const std::vector<std::string>& labels) {
    auto diff = firstColumnDifference(lhs, rhs);
    rep.add(name, !diff, diff ? labels[*diff] : std::string{});
}

} // namespace

AxiomReport checkComoduleAlgebra(const ComoduleAlgebra& e) {
    const HopfAlgebra& h = *e.hopf;
    const StructureAlgebra& a = e.algebra();
    if (e.field() != h.field()) throw FieldMismatch("comodule algebra and Hopf algebra over different fields");
    if (e.coaction.rows() != a.dim() * h.dim() || e.coaction.cols() != a.dim())
        throw DimensionError("coaction must be " + std::to_string(a.dim() * h.dim()) + "x" + std::to_string(a.dim()));
    AxiomReport rep;
    const Matrix idE = Matrix::identity(e.field(), a.dim());
    const Matrix idH = Matrix::identity(e.field(), h.dim());
    addMatrixCheck(rep, "coassociativity", kron(e.coaction, idH) * e.coaction, kron(idE, h.comult) * e.coaction,
                   a.labels());
    addMatrixCheck(rep, "counit", kron(idE, h.counit) * e.coaction, idE, a.labels());
    std::string w;
    rep.add("coaction is multiplicative", isAlgebraMorphism(e.coaction, a, tensorAlgebra(a, h.algebra()), &w), w);
    return rep;
}

StructureAlgebra dualNumbers(const FieldSpec& f) {
    std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2, Vec(2, f.zero())));
    mult[0][0][0] = f.one();
    mult[0][1][1] = f.one();
    mult[1][0][1] = f.one();
    return StructureAlgebra(f, {"1", "h"}, mult, basisVec(f, 2, 0));
}

StructureAlgebra groupAlgebra(const FiniteGroup& l, const FieldSpec& f) {
    const std::size_t n = l.order();
    std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n, f.zero())));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) mult[a][b][l.mul(a, b)] = f.one();
    return StructureAlgebra(f, l.labels(), mult, basisVec(f, n, l.identity()));
}

ComoduleAlgebra trivialHopfCoefficients(AlgebraPtr e) {
    const FieldSpec f = e->field();
    const std::size_t n = e->dim();
    return ComoduleAlgebra{std::make_shared<const HopfAlgebra>(buildTrivialHopf(f)), std::move(e),
                           Matrix::identity(f, n), "E over k"};
}

ComoduleAlgebra trivialCoefficients(HopfPtr h) {
    const FieldSpec f = h->field();
    Matrix coaction = Matrix::fromColumns(f, h->dim(), {h->algebra().unit()});
    std::string name = "k over " + h->name;
    return ComoduleAlgebra{std::move(h), std::make_shared<const StructureAlgebra>(groundAlgebra(f)),
                           std::move(coaction), std::move(name)};
}

ComoduleAlgebra regularComodule(HopfPtr h) {
    AlgebraPtr a = h->alg;
    Matrix coaction = h->comult;
    std::string name = h->name + " over itself";
    return ComoduleAlgebra{std::move(h), std::move(a), std::move(coaction), std::move(name)};
}

ComoduleAlgebra buildDualNumbersComodule(HopfPtr h4) {
    const FieldSpec f = h4->field();
    if (h4->dim() != 4) throw DimensionError("dual numbers coaction needs the four-dimensional Sweedler algebra");
    Matrix coaction(f, 8, 2);
    coaction(0 * 4 + 0, 0) = f.one(); // 1 -> 1⊗1
    coaction(1 * 4 + 1, 1) = f.one(); // h -> h⊗g + 1⊗h
    coaction(0 * 4 + 2, 1) = f.one();
    return ComoduleAlgebra{std::move(h4), std::make_shared<const StructureAlgebra>(dualNumbers(f)),
                           std::move(coaction), "E2 over H4"};
}

ComoduleAlgebra buildDualNumbersComodule(const FieldSpec& f) {
    return buildDualNumbersComodule(std::make_shared<const HopfAlgebra>(buildSweedlerH4(f)));
}

ComoduleAlgebra buildConjugationComodule(const FiniteGroup& l, const std::vector<std::uint32_t>& subgroup,
                                         const FieldSpec& f) {
    const FiniteGroup g = l.restrict(subgroup);
    auto h = std::make_shared<const HopfAlgebra>(buildFunctionHopf(g, f));
    const std::size_t n = l.order(), m = g.order();
    Matrix coaction(f, n * m, n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t gi = 0; gi < m; ++gi) {
            const std::uint32_t s = subgroup[gi];
            coaction(l.mul(l.mul(s, x), l.inv(s)) * m + gi, x) = f.one();
        }
    return ComoduleAlgebra{std::move(h), std::make_shared<const StructureAlgebra>(groupAlgebra(l, f)),
                           std::move(coaction), "k[L] by conjugation"};
}

// ---- Hopf modules ------------------------------------------------------------

Matrix HopfModule::actionOf(const Vec& s) const {
    if (s.size() != action.size()) throw DimensionMismatch("acting element has wrong length");
    Matrix out(field(), dim(), dim());
    for (std::size_t j = 0; j < s.size(); ++j)
        if (!s[j].isZero()) out = out + action[j].scaled(s[j]);
    return out;
}

Matrix rightActOnTensor(const HopfModule& m, const Vec& x) {
    const StructureAlgebra& h = m.hopf().algebra();
    const std::size_t dimH = h.dim();
    if (x.size() != m.action.size() * dimH) throw DimensionMismatch("element of E⊗H has wrong length");
    Matrix out(m.field(), m.dim() * dimH, m.dim() * dimH);
    for (std::size_t a = 0; a < m.action.size(); ++a)
        for (std::size_t b = 0; b < dimH; ++b) {
            const Scalar& c = x[a * dimH + b];
            if (c.isZero()) continue;
            out = out + kron(m.action[a], h.rightMultMatrix(h.basisVector(b))).scaled(c);
        }
    return out;
}

AxiomReport checkHopfModule(const HopfModule& m) {
    const ComoduleAlgebra& e = *m.comod;
    const StructureAlgebra& a = e.algebra();
    const HopfAlgebra& h = m.hopf();
    const FieldSpec& f = m.field();
    const std::size_t n = m.dim();
    if (m.action.size() != a.dim()) throw DimensionError("module needs one action matrix per basis element of E");
    for (const auto& r : m.action)
        if (r.rows() != n || r.cols() != n) throw DimensionError("action matrices must be " + std::to_string(n) + "x" +
                                                                 std::to_string(n));
    if (m.coaction.rows() != n * h.dim() || m.coaction.cols() != n)
        throw DimensionError("module coaction must be " + std::to_string(n * h.dim()) + "x" + std::to_string(n));

    AxiomReport rep;
    const Matrix idM = Matrix::identity(f, n), idH = Matrix::identity(f, h.dim());
    std::string w;
    bool ok = true;
    for (std::size_t i = 0; i < a.dim() && ok; ++i)
        for (std::size_t j = 0; j < a.dim() && ok; ++j) {
            // m (e_i e_j) = (m e_i) e_j
            const Matrix lhs = m.actionOf(a.multiply(a.basisVector(i), a.basisVector(j)));
            if (lhs != m.action[j] * m.action[i]) {
                ok = false;
                w = "(" + a.labels()[i] + ", " + a.labels()[j] + ")";
            }
        }
    rep.add("module associativity", ok, w);
    rep.add("module unit", m.actionOf(a.unit()) == idM, "unit");
    addMatrixCheck(rep, "comodule coassociativity", kron(m.coaction, idH) * m.coaction, kron(idM, h.comult) * m.coaction,
                   m.labels);
    addMatrixCheck(rep, "comodule counit", kron(idM, h.counit) * m.coaction, idM, m.labels);
    ok = true;
    w.clear();
    for (std::size_t j = 0; j < a.dim() && ok; ++j) {
        const Matrix lhs = m.coaction * m.action[j];
        const Matrix rhs = rightActOnTensor(m, e.coaction.column(j)) * m.coaction;
        if (auto d = firstColumnDifference(lhs, rhs)) {
            ok = false;
            w = "(" + m.labels[*d] + ", " + a.labels()[j] + ")";
        }
    }
    rep.add("compatibility", ok, w);
    return rep;
}

bool hopfModuleMorphismCheck(const Matrix& f, const HopfModule& m, const HopfModule& n) {
    if (f.rows() != n.dim() || f.cols() != m.dim())
        throw DimensionMismatch("morphism shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                " does not match modules of dimension " + std::to_string(m.dim()) + " and " +
                                std::to_string(n.dim()));
    if (m.action.size() != n.action.size()) throw DimensionMismatch("modules over different algebras");
    for (std::size_t j = 0; j < m.action.size(); ++j)
        if (f * m.action[j] != n.action[j] * f) return false;
    const Matrix idH = Matrix::identity(f.field(), m.hopf().dim());
    return kron(f, idH) * m.coaction == n.coaction * f;
}

HopfModule regularHopfModule(ComodulePtr e) {
    Matrix coaction = e->coaction;
    return regularHopfModule(std::move(e), std::move(coaction));
}

HopfModule regularHopfModule(ComodulePtr e, Matrix coaction) {
    const StructureAlgebra& a = e->algebra();
    std::vector<Matrix> action;
    for (std::size_t j = 0; j < a.dim(); ++j) action.push_back(a.rightMultMatrix(a.basisVector(j)));
    std::vector<std::string> labels = a.labels();
    return HopfModule{std::move(e), std::move(labels), std::move(action), std::move(coaction)};
}

} // namespace hopfcoh
