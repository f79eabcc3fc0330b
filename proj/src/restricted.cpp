#include "hopfcoh/restricted.hpp"

#include <algorithm>

namespace hopfcoh {

Vec vectorize(const Matrix& phi) {
    Vec v;
    v.reserve(phi.rows() * phi.cols());
    for (std::size_t c = 0; c < phi.cols(); ++c)
        for (std::size_t r = 0; r < phi.rows(); ++r) v.push_back(phi(r, c));
    return v;
}

Matrix unvectorize(const FieldSpec& f, std::size_t rows, std::size_t cols, const Vec& v) {
    if (v.size() != rows * cols) throw DimensionMismatch("vectorized map has wrong length");
    Matrix m(f, rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
    return m;
}

Matrix flipH(const HopfAlgebra& h) { return flipMatrix(h.field(), h.dim(), h.dim()); }

Matrix chiMatrix(const HopfAlgebra& h, int n) {
    const std::size_t d = h.dim();
    const std::size_t hn = saturatingPow(d, static_cast<std::uint64_t>(n));
    Matrix chi(h.field(), hn * hn, hn * hn);
    for (std::size_t a = 0; a < hn; ++a)
        for (std::size_t b = 0; b < hn; ++b) {
            // Digits of a and b, most significant first, interleaved pairwise.
            std::size_t out = 0, ra = a, rb = b, weight = 1;
            for (int i = 0; i < n; ++i) {
                out += (ra % d * d + rb % d) * weight;
                ra /= d;
                rb /= d;
                weight *= d * d;
            }
            chi(out, a * hn + b) = h.field().one();
        }
    return chi;
}

Matrix WSpace::toMap(const Vec& coords) const {
    return unvectorize(field, rows, cols, slinear.embed(coords));
}

std::optional<Vec> WSpace::coordinates(const Matrix& phi) const {
    if (phi.rows() != rows || phi.cols() != cols) return std::nullopt;
    return slinear.coordinates(vectorize(phi));
}

namespace {

std::size_t hopfPowerDim(const HopfAlgebra& h, int n) { return saturatingPow(h.dim(), static_cast<std::uint64_t>(n)); }

} // namespace

RestrictedComplex::RestrictedComplex(HopfModule m) : m_(std::move(m)) {
    checkHopfModule(m_).require();
    const FieldSpec& f = m_.field();
    const HopfAlgebra& h = hopf();
    powers_[0] = std::make_shared<const StructureAlgebra>(groundAlgebra(f));
    powers_[1] = h.alg;
    powers_[2] = std::make_shared<const StructureAlgebra>(tensorAlgebra(h.algebra(), h.algebra()));

    const std::size_t dimM = m_.dim();
    for (int n = 0; n < 3; ++n) {
        const std::size_t hn = hopfPowerDim(h, n), rows = dimM * hn, size = rows * dimM;
        const Matrix idHn = Matrix::identity(f, hn);
        // phi(m s) = phi(m) s for every basis element s, one block of rows per s.
        Matrix constraint(f, m_.action.size() * size, size);
        for (std::size_t j = 0; j < m_.action.size(); ++j) {
            const Matrix& act = m_.action[j];
            const Matrix actHn = kron(act, idHn);
            for (std::size_t c = 0; c < dimM; ++c)
                for (std::size_t r = 0; r < rows; ++r) {
                    Matrix unitMap(f, rows, dimM);
                    unitMap(r, c) = f.one();
                    const Vec v = vectorize(unitMap * act - actHn * unitMap);
                    for (std::size_t k = 0; k < size; ++k) constraint(j * size + k, c * rows + r) = v[k];
                }
        }
        WSpace w{n, f, rows, dimM, SubspaceCoords(f, size, kernelBasis(constraint)), nullptr};

        const std::size_t d = w.dim();
        std::vector<Matrix> maps;
        for (const auto& b : w.slinear.basis()) maps.push_back(unvectorize(f, rows, dimM, b));
        std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                auto c = w.coordinates(circDot(maps[i], maps[k]));
                if (!c) throw LevelMismatch("the product of two S-linear maps is not S-linear");
                mult[i][k] = std::move(*c);
            }
        auto one = w.coordinates(unit(n));
        if (!one) throw LevelMismatch("the unit of W" + std::to_string(n) + " is not S-linear");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < d; ++i) labels.push_back("w" + std::to_string(i));
        w.algebra = std::make_shared<const StructureAlgebra>(f, std::move(labels), mult, std::move(*one));
        levels_.push_back(std::move(w));
    }

    // A linear map between levels, written in S-linear coordinates.
    auto inCoordinates = [&](int from, int to, auto&& map, const std::string& what) {
        const WSpace& src = level(from);
        const WSpace& dst = level(to);
        Matrix out(f, dst.dim(), src.dim());
        for (std::size_t i = 0; i < src.dim(); ++i) {
            auto c = dst.coordinates(map(src.toMap(src.algebra->basisVector(i))));
            if (!c) throw LevelMismatch(what + " leaves the S-linear maps");
            out.setColumn(i, *c);
        }
        return out;
    };
    auto b = [&](int from, int i) {
        return inCoordinates(from, from + 1, [&](const Matrix& p) { return coboundary(from, i, p); },
                             "b" + std::to_string(i));
    };
    auto s = [&](int from, int j) {
        return inCoordinates(from, from - 1, [&](const Matrix& p) { return codegeneracy(from, j, p); },
                             "s" + std::to_string(j));
    };
    diagram_.emplace(AlgebraDiagram{levels_[0].algebra,
                                    levels_[1].algebra,
                                    levels_[2].algebra,
                                    {b(0, 0), b(0, 1)},
                                    {b(1, 0), b(1, 1), b(1, 2)},
                                    s(1, 0),
                                    {s(2, 0), s(2, 1)}});
}

const WSpace& RestrictedComplex::level(int n) const {
    if (n < 0 || n > 2) throw BadIndex("level " + std::to_string(n));
    return levels_[static_cast<std::size_t>(n)];
}

const StructureAlgebra& RestrictedComplex::hopfPower(int n) const {
    if (n < 0 || n > 2) throw BadIndex("level " + std::to_string(n));
    return *powers_[static_cast<std::size_t>(n)];
}

int RestrictedComplex::levelOf(const Matrix& phi) const {
    const std::size_t dimM = m_.dim();
    if (phi.cols() == dimM)
        for (int n = 0; n < 3; ++n)
            if (phi.rows() == dimM * hopfPowerDim(hopf(), n)) return n;
    throw LevelMismatch("a " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                        " matrix is not a map M -> M (x) H^n");
}

void RestrictedComplex::requireLevel(const Matrix& phi, int n, const std::string& what) const {
    if (phi.cols() != m_.dim() || phi.rows() != m_.dim() * hopfPowerDim(hopf(), n))
        throw LevelMismatch(what + " applied to a map of another level");
}

Matrix RestrictedComplex::unit(int n) const {
    const StructureAlgebra& hn = hopfPower(n);
    return kron(Matrix::identity(m_.field(), m_.dim()), Matrix::fromColumns(m_.field(), hn.dim(), {hn.unit()}));
}

Matrix RestrictedComplex::circDot(const Matrix& phi, const Matrix& psi) const {
    const int n = levelOf(phi);
    if (levelOf(psi) != n) throw LevelMismatch("o. of maps from different levels");
    const StructureAlgebra& hn = hopfPower(n);
    const std::size_t d = hn.dim();
    Matrix out(m_.field(), phi.rows(), phi.cols());
    // psi(m) = sum m' (x) h', then m' -> phi(m') = sum m'' (x) h'' and h'' h' multiply.
    for (std::size_t c = 0; c < psi.cols(); ++c)
        for (std::size_t r1 = 0; r1 < psi.rows(); ++r1) {
            const Scalar& a = psi(r1, c);
            if (a.isZero()) continue;
            const std::size_t m1 = r1 / d, h1 = r1 % d;
            for (std::size_t r2 = 0; r2 < phi.rows(); ++r2) {
                const Scalar& b = phi(r2, m1);
                if (b.isZero()) continue;
                const std::size_t m2 = r2 / d, h2 = r2 % d;
                const Scalar ab = a * b;
                for (const auto& [k, coef] : hn.product(h2, h1)) out(m2 * d + k, c) += ab * coef;
            }
        }
    return out;
}

Matrix RestrictedComplex::coboundary(int from, int i, const Matrix& phi) const {
    const FieldSpec& f = m_.field();
    const HopfAlgebra& h = hopf();
    const Matrix idM = Matrix::identity(f, m_.dim()), idH = Matrix::identity(f, h.dim());
    const Matrix mu = multiplicationMatrix(h.algebra()), eta = unitMatrix(h.algebra());
    const Matrix& delta = m_.coaction;
    if (from < 0 || from > 1 || i < 0 || i > from + 1)
        throw BadIndex("b" + std::to_string(i) + " from level " + std::to_string(from));
    requireLevel(phi, from, "b" + std::to_string(i));
    if (from == 0) {
        if (i == 0) return kron(idM, mu) * kron(delta, idH) * kron(phi, h.antipode) * delta;
        return kron(idM, eta) * phi;
    }
    if (i == 0) return kron(kron(idM, mu), idH) * kron(delta, flipH(h)) * kron(phi, h.antipode) * delta;
    if (i == 1) return kron(idM, h.comult) * phi;
    return kron(Matrix::identity(f, m_.dim() * h.dim()), eta) * phi;
}

Matrix RestrictedComplex::codegeneracy(int from, int j, const Matrix& phi) const {
    const FieldSpec& f = m_.field();
    const HopfAlgebra& h = hopf();
    if (from < 1 || from > 2 || j < 0 || j >= from)
        throw BadIndex("s" + std::to_string(j) + " from level " + std::to_string(from));
    requireLevel(phi, from, "s" + std::to_string(j));
    const Matrix idM = Matrix::identity(f, m_.dim()), idH = Matrix::identity(f, h.dim());
    if (from == 1) return kron(idM, h.counit) * phi;
    if (j == 0) return kron(kron(idM, h.counit), idH) * phi;
    return kron(kron(idM, idH), h.counit) * phi;
}

Matrix circDotByFormula(const RestrictedComplex& c, const Matrix& phi, const Matrix& psi) {
    const FieldSpec& f = c.module().field();
    const HopfAlgebra& h = c.hopf();
    const std::size_t dimM = c.module().dim();
    int n = -1;
    for (int k = 0; k < 3; ++k)
        if (phi.rows() == dimM * hopfPowerDim(h, k)) n = k;
    if (n < 0 || phi.cols() != dimM || psi.rows() != phi.rows() || psi.cols() != dimM)
        throw LevelMismatch("o. of maps from different levels");
    const std::size_t hn = hopfPowerDim(h, n);
    Matrix muN = Matrix::identity(f, 1);
    for (int k = 0; k < n; ++k) muN = kron(muN, multiplicationMatrix(h.algebra()));
    const Matrix idM = Matrix::identity(f, dimM);
    return kron(idM, muN) * kron(idM, chiMatrix(h, n)) * kron(phi, Matrix::identity(f, hn)) * psi;
}

std::optional<Matrix> circDotInverse(const RestrictedComplex& c, const Matrix& phi) {
    const FieldSpec& f = c.module().field();
    const std::size_t rows = phi.rows(), cols = phi.cols(), size = rows * cols;
    Matrix left(f, size, size);
    for (std::size_t k = 0; k < size; ++k) {
        Matrix e(f, rows, cols);
        e(k % rows, k / rows) = f.one();
        left.setColumn(k, vectorize(c.circDot(phi, e)));
    }
    int n = 0;
    while (n < 2 && c.unit(n).rows() != rows) ++n;
    const Matrix one = c.unit(n);
    auto sol = solveLinear(left, vectorize(one));
    if (!sol || !sol->kernel.empty()) return std::nullopt;
    Matrix x = unvectorize(f, rows, cols, sol->particular);
    if (c.circDot(x, phi) != one) return std::nullopt;
    return x;
}

RestrictedCocycles restrictedZ1(const RestrictedComplex& c, const SearchConfig& cfg) {
    const AlgebraDiagram& d = c.diagram();
    const StructureAlgebra& w1 = *d.level1;
    w1.field().requireEnumerable();
    AffineSolution space{w1.zero(), {}};
    for (std::size_t i = 0; i < w1.dim(); ++i) space.kernel.push_back(w1.basisVector(i));
    const ResidueCocycleTest relation(d);
    const std::vector<Vec> candidates = enumerateResidues(w1.field(), space, cfg, relation);

    RestrictedCocycles out;
    bool zc1 = true, zc2 = true, zc3 = true, inverseLinear = true;
    std::string w1s, w2s, w3s, w4s;
    const WSpace& level1 = c.level(1);
    const Matrix id0 = c.unit(0);
    for (const auto& coords : candidates) {
        const Matrix phi = level1.toMap(coords);
        auto inv = circDotInverse(c, phi);
        if (!inv) continue;
        const std::string who = "cocycle " + vecToString(coords);
        if (zc1 && level1.coordinates(phi) != coords) zc1 = false, w1s = who;
        if (zc2 && c.codegeneracy(1, 0, phi) != id0) zc2 = false, w2s = who;
        if (zc3 && c.circDot(c.coboundary(1, 2, phi), c.coboundary(1, 0, phi)) != c.coboundary(1, 1, phi))
            zc3 = false, w3s = who;
        if (inverseLinear && !level1.coordinates(*inv)) inverseLinear = false, w4s = who;
        out.z1.push_back(coords);
    }
    out.crossCheck.add("ZC1: S-linear", zc1, w1s);
    out.crossCheck.add("ZC2: (id (x) eps) Phi = id", zc2, w2s);
    out.crossCheck.add("ZC3: b2 Phi o. b0 Phi = b1 Phi", zc3, w3s);
    out.crossCheck.add("the inverse is S-linear", inverseLinear, w4s);
    return out;
}

ElementGroup restrictedH0(const RestrictedComplex& c, const SearchConfig& cfg) {
    const AlgebraDiagram& d = c.diagram();
    return buildElementGroup(*d.level0, equalizer(d, enumerateUnits(*d.level0, cfg)));
}

CohomologyResult restrictedH1(const RestrictedComplex& c, const SearchConfig& cfg) {
    const AlgebraDiagram& d = c.diagram();
    CohomologyResult r{restrictedH0(c, cfg), restrictedZ1(c, cfg).z1, {}, enumerateUnits(*d.level0, cfg)};
    r.h1 = orbitPartition(d, r.z1, r.units0);
    return r;
}

OmegaMap omegaN(const RestrictedComplex& c, int n) {
    const FieldSpec& f = c.module().field();
    const WSpace& end = c.level(0);
    const WSpace& target = c.level(n);
    const StructureAlgebra& hn = c.hopfPower(n);
    const std::size_t dimM = c.module().dim(), d = hn.dim();
    OmegaMap om{n, Matrix(f, target.dim(), end.dim() * d)};
    for (std::size_t a = 0; a < end.dim(); ++a) {
        const Matrix fa = end.toMap(end.algebra->basisVector(a));
        for (std::size_t b = 0; b < d; ++b) {
            Matrix img(f, dimM * d, dimM);
            for (std::size_t m = 0; m < dimM; ++m)
                for (std::size_t m2 = 0; m2 < dimM; ++m2) img(m2 * d + b, m) = fa(m2, m);
            auto coords = target.coordinates(img);
            if (!coords) throw LevelMismatch("omega" + std::to_string(n) + " leaves the S-linear maps");
            om.matrix.setColumn(a * d + b, *coords);
        }
    }
    om.bijective = om.matrix.isSquare() && matrixRank(om.matrix) == om.matrix.rows();
    om.morphism = isAlgebraMorphism(om.matrix, tensorAlgebra(*end.algebra, hn), *target.algebra);
    om.identity = om.matrix == Matrix::identity(f, end.dim());
    return om;
}

namespace {

Matrix requireCondition(const RestrictedComplex& c, int n) {
    OmegaMap om = omegaN(c, n);
    if (!om.holds())
        throw ConditionFFailed("omega" + std::to_string(n) + (om.bijective ? " is not an algebra morphism"
                                                                           : " is not bijective"));
    return std::move(om.matrix);
}

} // namespace

ComoduleAlgebra endComoduleStructure(const RestrictedComplex& c) {
    const Matrix omega1 = requireCondition(c, 1);
    requireCondition(c, 2);
    const Matrix coaction = *matrixInverse(omega1) * c.diagram().d0[0];
    return ComoduleAlgebra{c.module().comod->hopf, c.level(0).algebra, coaction, "End_S(" + c.module().comod->name + ")"};
}

ComparisonReport compareTheorem26(const RestrictedComplex& c, const SearchConfig& cfg) {
    ComparisonReport rep;
    std::array<Matrix, 3> omega{requireCondition(c, 0), requireCondition(c, 1), requireCondition(c, 2)};
    const ComoduleAlgebra end = endComoduleStructure(c);
    const AlgebraDiagram left = buildDiagram(end);
    const AlgebraDiagram& right = c.diagram();

    for (std::size_t i = 0; i < 2; ++i) {
        auto diff = firstColumnDifference(omega[1] * left.d0[i], right.d0[i] * omega[0]);
        rep.checks.add("omega1 d" + std::to_string(i) + " = b" + std::to_string(i) + " omega0", !diff,
                       diff ? "basis column " + std::to_string(*diff) : "");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        auto diff = firstColumnDifference(omega[2] * left.d1[i], right.d1[i] * omega[1]);
        rep.checks.add("omega2 d" + std::to_string(i) + " = b" + std::to_string(i) + " omega1", !diff,
                       diff ? "basis column " + std::to_string(*diff) : "");
    }

    const CohomologyResult general = diagramCohomology(left, cfg);
    const CohomologyResult restricted = restrictedH1(c, cfg);
    rep.leftH0 = general.h0.size();
    rep.rightH0 = restricted.h0.size();
    rep.leftH1 = general.h1.size();
    rep.rightH1 = restricted.h1.size();

    std::vector<Vec> h0image;
    for (const auto& x : general.h0.elements) h0image.push_back(omega[0].apply(x));
    std::sort(h0image.begin(), h0image.end());
    rep.checks.add("H0 equal as sets", h0image == restricted.h0.elements,
                   std::to_string(general.h0.size()) + " invariant units vs " + std::to_string(restricted.h0.size()) +
                       " restricted invariants");

    auto omega1 = [&](const Vec& X) { return omega[1].apply(X); };
    std::vector<Vec> z1image;
    for (const auto& X : general.z1) z1image.push_back(omega1(X));
    std::sort(z1image.begin(), z1image.end());
    rep.checks.add("omega1 maps Z1 onto the restricted cocycles", z1image == restricted.z1,
                   std::to_string(z1image.size()) + " vs " + std::to_string(restricted.z1.size()) + " cocycles");
    rep.pairing = pairOrbits(general.h1, restricted.h1, omega1, rep.checks);
    return rep;
}

} // namespace hopfcoh
