#pragma once

// Exact scalars over prime fields and the rationals, plus dense linear
// algebra (row reduction, kernels, affine solutions, inverses).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hopfcoh/errors.hpp"

namespace hopfcoh {

class Scalar;

/// The ground field: F_p for a prime p < 2^32, or Q.
class FieldSpec {
public:
    /// Largest prime accepted for enumeration work.
    static constexpr std::uint64_t kEnumerationPrimeBound = 1u << 16;

    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rational() { return FieldSpec{0}; }

    bool isPrime() const noexcept { return p_ != 0; }
    bool isRational() const noexcept { return p_ == 0; }
    /// p for F_p, 0 for Q.
    std::uint32_t characteristic() const noexcept { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar fromInt(std::int64_t n) const;
    Scalar fromRational(const mpq_class& q) const;
    /// The residue `r` read as an element of F_p; `r` must lie in [0, p).
    Scalar fromResidue(std::uint32_t r) const;

    /// Throws RationalFieldNotEnumerable for Q, InvalidField for primes
    /// above kEnumerationPrimeBound.
    void requireEnumerable() const;

    std::string name() const;

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Element of a FieldSpec in canonical form. Residues live in [0, p);
/// rationals are reduced with positive denominator.
class Scalar {
public:
    /// Rational zero. Prefer FieldSpec::zero() in field-generic code.
    Scalar() = default;

    bool isZero() const noexcept;
    bool isOne() const noexcept;
    bool isResidue() const noexcept { return mod_ != 0; }
    std::uint32_t modulus() const noexcept { return mod_; }
    /// Canonical residue; only meaningful when isResidue().
    std::uint32_t residue() const noexcept { return res_; }
    mpq_class rational() const;
    FieldSpec field() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws ZeroInverse on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    std::strong_ordering operator<=>(const Scalar& o) const;

    /// "2" for residues; "3/4" or "-5" for rationals.
    std::string toString() const;

private:
    friend class FieldSpec;
    static Scalar residueOf(std::uint32_t mod, std::uint32_t r) {
        Scalar s;
        s.mod_ = mod;
        s.res_ = r;
        return s;
    }
    static Scalar rationalOf(const mpq_class& q);
    void requireSameField(const Scalar& o) const;

    std::uint32_t mod_ = 0;
    std::uint32_t res_ = 0;
    // Null encodes rational zero.
    std::shared_ptr<const mpq_class> q_;
};

/// Inverse of `a` in `f`.
Scalar scalarInverse(const Scalar& a, const FieldSpec& f);

using Vec = std::vector<Scalar>;

Vec zeroVec(const FieldSpec& f, std::size_t n);
Vec basisVec(const FieldSpec& f, std::size_t n, std::size_t i);
Vec addVec(const Vec& a, const Vec& b);
Vec subVec(const Vec& a, const Vec& b);
Vec scaleVec(const Scalar& s, const Vec& a);
bool isZeroVec(const Vec& a);
/// a (x) b with (i, j) at i * b.size() + j.
Vec tensorVec(const Vec& a, const Vec& b);
std::string vecToString(const Vec& a);

/// Dense row-major matrix. A linear map V -> W is stored as a
/// dim(W) x dim(V) matrix acting on column vectors.
class Matrix {
public:
    Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix fromRows(const FieldSpec& f, const std::vector<Vec>& rows);
    static Matrix fromColumns(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& field() const noexcept { return field_; }
    bool isSquare() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::span<const Scalar> data() const noexcept { return a_; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void setColumn(std::size_t c, const Vec& v);

    Vec apply(const Vec& v) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    bool isZero() const;

    bool operator==(const Matrix& o) const;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> a_;
};

/// Kronecker product; basis pair (i, j) sits at i * dim(right) + j.
Matrix kron(const Matrix& a, const Matrix& b);

/// The flip V (x) W -> W (x) V for dim V = m, dim W = n.
Matrix flipMatrix(const FieldSpec& f, std::size_t m, std::size_t n);

/// Index of the first column where `a` and `b` differ.
std::optional<std::size_t> firstColumnDifference(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivotCols; // one per nonzero row, increasing
};

/// Gauss-Jordan elimination, pivoting on the first nonzero entry.
RowEchelon rowReduce(Matrix a);

std::size_t matrixRank(const Matrix& a);

/// Basis of {x | A x = 0}: one vector per free column, in increasing order,
/// vanishing on the other free columns and scaled so its first nonzero
/// entry is 1.
std::vector<Vec> kernelBasis(const Matrix& a);

struct AffineSolution {
    Vec particular;          // free coordinates set to zero
    std::vector<Vec> kernel; // as kernelBasis
};

/// Solutions of A x = b, or nullopt when rank(A|b) > rank(A).
std::optional<AffineSolution> solveLinear(const Matrix& a, const Vec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> matrixInverse(const Matrix& a);

/// Coordinates relative to a linearly independent family of vectors.
class SubspaceCoords {
public:
    SubspaceCoords(const FieldSpec& f, std::size_t ambientDim, std::vector<Vec> basis);

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t ambientDim() const noexcept { return ambient_; }
    const std::vector<Vec>& basis() const noexcept { return basis_; }

    /// c with sum c_i basis_i = v, or nullopt when v is outside the span.
    std::optional<Vec> coordinates(const Vec& v) const;
    Vec embed(const Vec& coords) const;

private:
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    Matrix leftInverse_; // leftInverse_ * B = I
};

} // namespace hopfcoh
