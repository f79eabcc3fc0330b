#pragma once

// Finite-dimensional associative unital algebras given by structure
// constants, their elements, tensor products and unit-group enumeration.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/exactmath.hpp"
#include "hopfcoh/parallel.hpp"
#include "hopfcoh/report.hpp"

namespace hopfcoh {

/// e_i * e_j = sum over the stored (k, c) of c * e_k.
class StructureAlgebra {
public:
    using Term = std::pair<std::uint32_t, Scalar>;

    /// `mult[i][j]` holds the coordinates of e_i * e_j.
    StructureAlgebra(FieldSpec f, std::vector<std::string> labels,
                     const std::vector<std::vector<Vec>>& mult, Vec unit);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Vec& unit() const noexcept { return unit_; }

    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
    /// Dense coefficient of e_k in e_i * e_j.
    Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec basisVector(std::size_t i) const { return basisVec(field_, dim_, i); }
    Vec zero() const { return zeroVec(field_, dim_); }

    /// Matrix of x -> a x.
    Matrix leftMultMatrix(const Vec& a) const;
    /// Matrix of x -> x a.
    Matrix rightMultMatrix(const Vec& a) const;

    /// Two-sided inverse of `a`, or nullopt when `a` is not a unit.
    std::optional<Vec> tryInverse(const Vec& a) const;
    bool isUnit(const Vec& a) const { return tryInverse(a).has_value(); }

    bool isCommutative() const;

    /// "2*g + 1*gh" style rendering with the basis labels.
    std::string format(const Vec& a) const;

private:
    void requireLength(const Vec& a) const;

    FieldSpec field_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Term>> products_;
    Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// An element tied to its parent algebra.
class Element {
public:
    Element(AlgebraPtr parent, Vec coords);

    const AlgebraPtr& parent() const noexcept { return parent_; }
    const Vec& coords() const noexcept { return coords_; }

    bool operator==(const Element& o) const { return parent_ == o.parent_ && coords_ == o.coords_; }

private:
    AlgebraPtr parent_;
    Vec coords_;
};

/// Throws ParentMismatch when the operands live in different algebras.
Element multiply(const Element& a, const Element& b);
/// Throws NotInvertible.
Element tryInverse(const Element& a);

/// Associativity on all basis triples and the unit law on all basis vectors.
AxiomReport checkAlgebraAxioms(const StructureAlgebra& a);

/// A (x) B with (i, j) at i * dim(B) + j.
StructureAlgebra tensorAlgebra(const StructureAlgebra& a, const StructureAlgebra& b);

/// The ground field as a one-dimensional algebra.
StructureAlgebra groundAlgebra(const FieldSpec& f);

/// True when the linear map `m` from A to B preserves products and units.
bool isAlgebraMorphism(const Matrix& m, const StructureAlgebra& a, const StructureAlgebra& b,
                       std::string* witness = nullptr);

/// The affine space particular + span(kernel) as a parameter space.
/// Points are indexed by base-p digits of the kernel coefficients.
class AffineEnumerator {
public:
    AffineEnumerator(const FieldSpec& f, AffineSolution space);

    std::uint64_t count() const noexcept { return count_; }
    Vec point(std::uint64_t index) const;

private:
    FieldSpec field_;
    AffineSolution space_;
    std::uint64_t count_;
};

/// Every element of A, or of the affine subspace `constraint`, passing
/// `keep`, sorted lexicographically. The budget applies to the candidate
/// count before any iteration.
template <class Pred>
std::vector<Vec> enumerateFiltered(const StructureAlgebra& a, const std::optional<AffineSolution>& constraint,
                                   const SearchConfig& cfg, Pred&& keep);

std::vector<Vec> enumerateElements(const StructureAlgebra& a, const std::optional<AffineSolution>& constraint,
                                   const SearchConfig& cfg);

/// All units of A, sorted.
std::vector<Vec> enumerateUnits(const StructureAlgebra& a, const SearchConfig& cfg);

/// A finite group of algebra elements, sorted, with its multiplication
/// table over indices.
struct ElementGroup {
    std::vector<Vec> elements;
    std::vector<std::vector<std::uint32_t>> table;
    std::uint32_t identity = 0;

    std::size_t size() const noexcept { return elements.size(); }
    std::optional<std::uint32_t> indexOf(const Vec& v) const;
};

/// Builds the table of a sorted list of units closed under multiplication.
/// Throws NotAGroup when the list is not closed.
ElementGroup buildElementGroup(const StructureAlgebra& a, std::vector<Vec> elements);

// ---- template implementation ---------------------------------------------

template <class Pred>
std::vector<Vec> enumerateFiltered(const StructureAlgebra& a, const std::optional<AffineSolution>& constraint,
                                   const SearchConfig& cfg, Pred&& keep) {
    a.field().requireEnumerable();
    AffineSolution space;
    if (constraint) {
        if (constraint->particular.size() != a.dim())
            throw DimensionMismatch("constraint lives in dimension " + std::to_string(constraint->particular.size()) +
                                    ", algebra has dimension " + std::to_string(a.dim()));
        space = *constraint;
    } else {
        space.particular = a.zero();
        for (std::size_t i = 0; i < a.dim(); ++i) space.kernel.push_back(a.basisVector(i));
    }
    const std::uint64_t candidates = saturatingPow(a.field().characteristic(), space.kernel.size());
    requireBudget(candidates, cfg, "enumeration");
    AffineEnumerator en(a.field(), std::move(space));
    std::vector<Vec> out = parallelCollect<Vec>(en.count(), cfg.threads, [&](std::uint64_t i) -> std::optional<Vec> {
        Vec v = en.point(i);
        if (keep(v)) return v;
        return std::nullopt;
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hopfcoh
