#include "hopfcoh/algebra.hpp"
#include "hopfcoh/residue.hpp"

#include <sstream>

namespace hopfcoh {

void AxiomReport::require() const {
    if (const AxiomCheck* f = firstFailure()) throw AxiomError(f->name, f->witness);
}

StructureAlgebra::StructureAlgebra(FieldSpec f, std::vector<std::string> labels,
                                   const std::vector<std::vector<Vec>>& mult, Vec unit)
    : field_(f), dim_(labels.size()), labels_(std::move(labels)), products_(dim_ * dim_), unit_(std::move(unit)) {
    if (mult.size() != dim_) throw DimensionError("multiplication table has " + std::to_string(mult.size()) +
                                                  " rows, expected " + std::to_string(dim_));
    requireLength(unit_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (mult[i].size() != dim_) throw DimensionError("multiplication row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < dim_; ++j) {
            if (mult[i][j].size() != dim_)
                throw DimensionError("product e" + std::to_string(i) + "*e" + std::to_string(j) + " has wrong length");
            auto& terms = products_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (mult[i][j][k].field() != field_) throw FieldMismatch("structure constant outside " + field_.name());
                if (!mult[i][j][k].isZero()) terms.emplace_back(static_cast<std::uint32_t>(k), mult[i][j][k]);
            }
        }
    }
}

void StructureAlgebra::requireLength(const Vec& a) const {
    if (a.size() != dim_)
        throw DimensionMismatch("vector of length " + std::to_string(a.size()) + " in algebra of dimension " +
                                std::to_string(dim_));
}

Scalar StructureAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [idx, c] : product(i, j))
        if (idx == k) return c;
    return field_.zero();
}

Vec StructureAlgebra::multiply(const Vec& a, const Vec& b) const {
    requireLength(a);
    requireLength(b);
    Vec out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].isZero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].isZero()) continue;
            const Scalar ab = a[i] * b[j];
            for (const auto& [k, c] : products_[i * dim_ + j]) out[k] += ab * c;
        }
    }
    return out;
}

Matrix StructureAlgebra::leftMultMatrix(const Vec& a) const {
    requireLength(a);
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].isZero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& [k, c] : products_[i * dim_ + j]) m(k, j) += a[i] * c;
    }
    return m;
}

Matrix StructureAlgebra::rightMultMatrix(const Vec& a) const {
    requireLength(a);
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (a[j].isZero()) continue;
        for (std::size_t i = 0; i < dim_; ++i)
            for (const auto& [k, c] : products_[i * dim_ + j]) m(k, i) += a[j] * c;
    }
    return m;
}

std::optional<Vec> StructureAlgebra::tryInverse(const Vec& a) const {
    auto sol = solveLinear(leftMultMatrix(a), unit_);
    if (!sol || !sol->kernel.empty()) return std::nullopt;
    if (multiply(sol->particular, a) != unit_) return std::nullopt;
    return std::move(sol->particular);
}

bool StructureAlgebra::isCommutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (products_[i * dim_ + j] != products_[j * dim_ + i]) return false;
    return true;
}

std::string StructureAlgebra::format(const Vec& a) const {
    requireLength(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].isZero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!a[i].isOne()) os << a[i].toString() << '*';
        os << labels_[i];
    }
    if (first) os << '0';
    return os.str();
}

Element::Element(AlgebraPtr parent, Vec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (!parent_) throw ParentMismatch("element without parent algebra");
    if (coords_.size() != parent_->dim())
        throw DimensionMismatch("element has " + std::to_string(coords_.size()) + " coordinates, algebra has dimension " +
                                std::to_string(parent_->dim()));
}

Element multiply(const Element& a, const Element& b) {
    if (a.parent() != b.parent()) throw ParentMismatch("operands belong to different algebras");
    return Element(a.parent(), a.parent()->multiply(a.coords(), b.coords()));
}

Element tryInverse(const Element& a) {
    auto inv = a.parent()->tryInverse(a.coords());
    if (!inv) throw NotInvertible(a.parent()->format(a.coords()) + " is not a unit");
    return Element(a.parent(), std::move(*inv));
}

AxiomReport checkAlgebraAxioms(const StructureAlgebra& a) {
    AxiomReport rep;
    const std::size_t n = a.dim();
    const auto& lab = a.labels();
    std::string witness;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
            const Vec ij = a.multiply(a.basisVector(i), a.basisVector(j));
            for (std::size_t l = 0; l < n && ok; ++l) {
                const Vec jl = a.multiply(a.basisVector(j), a.basisVector(l));
                if (a.multiply(ij, a.basisVector(l)) != a.multiply(a.basisVector(i), jl)) {
                    ok = false;
                    witness = "(" + lab[i] + ", " + lab[j] + ", " + lab[l] + ")";
                }
            }
        }
    rep.add("associativity", ok, witness);

    ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
        const Vec e = a.basisVector(i);
        if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
            ok = false;
            witness = lab[i];
        }
    }
    rep.add("unit law", ok, witness);
    return rep;
}

StructureAlgebra tensorAlgebra(const StructureAlgebra& a, const StructureAlgebra& b) {
    if (a.field() != b.field()) throw FieldMismatch("tensor product of algebras over different fields");
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    const FieldSpec& f = a.field();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
    std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n, f.zero())));
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < nb; ++j1)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    Vec& out = mult[i1 * nb + j1][i2 * nb + j2];
                    for (const auto& [ka, ca] : a.product(i1, i2))
                        for (const auto& [kb, cb] : b.product(j1, j2)) out[ka * nb + kb] += ca * cb;
                }
    Vec unit(n, f.zero());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
    return StructureAlgebra(f, std::move(labels), mult, std::move(unit));
}

StructureAlgebra groundAlgebra(const FieldSpec& f) {
    return StructureAlgebra(f, {"1"}, {{Vec{f.one()}}}, Vec{f.one()});
}

bool isAlgebraMorphism(const Matrix& m, const StructureAlgebra& a, const StructureAlgebra& b, std::string* witness) {
    if (m.rows() != b.dim() || m.cols() != a.dim())
        throw DimensionMismatch("map of shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                " between algebras of dimension " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    if (m.apply(a.unit()) != b.unit()) {
        if (witness) *witness = "unit";
        return false;
    }
    std::vector<Vec> images;
    images.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(m.column(i));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vec lhs = m.apply(a.multiply(a.basisVector(i), a.basisVector(j)));
            if (lhs != b.multiply(images[i], images[j])) {
                if (witness) *witness = "(" + a.labels()[i] + ", " + a.labels()[j] + ")";
                return false;
            }
        }
    return true;
}

AffineEnumerator::AffineEnumerator(const FieldSpec& f, AffineSolution space)
    : field_(f), space_(std::move(space)), count_(saturatingPow(f.characteristic(), space_.kernel.size())) {
    f.requireEnumerable();
}

Vec AffineEnumerator::point(std::uint64_t index) const {
    const std::uint32_t p = field_.characteristic();
    const std::size_t k = space_.kernel.size();
    Vec v = space_.particular;
    // The last kernel direction is the fastest digit.
    for (std::size_t d = k; d-- > 0;) {
        const auto digit = static_cast<std::uint32_t>(index % p);
        index /= p;
        if (digit == 0) continue;
        const Scalar c = field_.fromResidue(digit);
        const Vec& dir = space_.kernel[d];
        for (std::size_t r = 0; r < v.size(); ++r)
            if (!dir[r].isZero()) v[r] += c * dir[r];
    }
    return v;
}

std::vector<Vec> enumerateElements(const StructureAlgebra& a, const std::optional<AffineSolution>& constraint,
                                   const SearchConfig& cfg) {
    return enumerateFiltered(a, constraint, cfg, [](const Vec&) { return true; });
}

std::vector<Vec> enumerateUnits(const StructureAlgebra& a, const SearchConfig& cfg) {
    a.field().requireEnumerable();
    const ResidueAlgebra r(a);
    AffineSolution all{a.zero(), {}};
    for (std::size_t i = 0; i < a.dim(); ++i) all.kernel.push_back(a.basisVector(i));
    return enumerateResidues(a.field(), all, cfg, [&](const std::uint32_t* x) { return r.isUnit(x); });
}

std::optional<std::uint32_t> ElementGroup::indexOf(const Vec& v) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), v);
    if (it == elements.end() || *it != v) return std::nullopt;
    return static_cast<std::uint32_t>(it - elements.begin());
}

ElementGroup buildElementGroup(const StructureAlgebra& a, std::vector<Vec> elements) {
    ElementGroup g;
    std::sort(elements.begin(), elements.end());
    g.elements = std::move(elements);
    auto id = g.indexOf(a.unit());
    if (!id) throw NotAGroup("unit element missing");
    g.identity = *id;
    const std::size_t n = g.size();
    g.table.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto k = g.indexOf(a.multiply(g.elements[i], g.elements[j]));
            if (!k) throw NotAGroup("product of " + a.format(g.elements[i]) + " and " + a.format(g.elements[j]) +
                                    " leaves the set");
            g.table[i][j] = *k;
        }
    return g;
}

} // namespace hopfcoh
