#include "hopfcoh/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcoh {

namespace {

bool isPrimeNumber(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t invMod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, newT = 1;
    std::int64_t r = p, newR = a;
    while (newR != 0) {
        std::int64_t q = r / newR;
        std::int64_t tmp = t - q * newT;
        t = newT;
        newT = tmp;
        tmp = r - q * newR;
        r = newR;
        newR = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

} // namespace

// ---- FieldSpec -------------------------------------------------------------

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32))
        throw InvalidField("p = " + std::to_string(p) + " does not fit in 32 bits");
    if (!isPrimeNumber(p)) throw InvalidField(std::to_string(p) + " is not prime");
    return FieldSpec{static_cast<std::uint32_t>(p)};
}

Scalar FieldSpec::zero() const {
    return isPrime() ? Scalar::residueOf(p_, 0) : Scalar{};
}

Scalar FieldSpec::one() const {
    return isPrime() ? Scalar::residueOf(p_, 1) : Scalar::rationalOf(mpq_class(1));
}

Scalar FieldSpec::fromInt(std::int64_t n) const {
    if (isRational()) return Scalar::rationalOf(mpq_class(static_cast<long>(n)));
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar::residueOf(p_, static_cast<std::uint32_t>(r));
}

Scalar FieldSpec::fromRational(const mpq_class& q) const {
    if (isRational()) return Scalar::rationalOf(q);
    mpz_class num = q.get_num() % p_;
    if (num < 0) num += p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0) throw ZeroInverse("denominator vanishes in " + name());
    Scalar n = Scalar::residueOf(p_, static_cast<std::uint32_t>(num.get_ui()));
    Scalar d = Scalar::residueOf(p_, static_cast<std::uint32_t>(den.get_ui()));
    return n * d.inverse();
}

Scalar FieldSpec::fromResidue(std::uint32_t r) const {
    if (isRational()) return Scalar::rationalOf(mpq_class(static_cast<unsigned long>(r)));
    return Scalar::residueOf(p_, r % p_);
}

void FieldSpec::requireEnumerable() const {
    if (isRational())
        throw RationalFieldNotEnumerable("enumeration needs a finite field, got Q");
    if (p_ > kEnumerationPrimeBound)
        throw InvalidField("p = " + std::to_string(p_) + " exceeds the enumeration bound 2^16");
}

std::string FieldSpec::name() const {
    return isRational() ? std::string("Q") : "F" + std::to_string(p_);
}

// ---- Scalar ----------------------------------------------------------------

Scalar Scalar::rationalOf(const mpq_class& q) {
    Scalar s;
    if (q != 0) {
        auto v = std::make_shared<mpq_class>(q);
        v->canonicalize();
        s.q_ = std::move(v);
    }
    return s;
}

bool Scalar::isZero() const noexcept {
    return mod_ != 0 ? res_ == 0 : !q_;
}

bool Scalar::isOne() const noexcept {
    return mod_ != 0 ? res_ == 1 : (q_ && *q_ == 1);
}

mpq_class Scalar::rational() const {
    if (mod_ != 0) return mpq_class(static_cast<unsigned long>(res_));
    return q_ ? *q_ : mpq_class(0);
}

FieldSpec Scalar::field() const {
    return mod_ != 0 ? FieldSpec::prime(mod_) : FieldSpec::rational();
}

void Scalar::requireSameField(const Scalar& o) const {
    if (mod_ != o.mod_) {
        std::string a = mod_ ? "F" + std::to_string(mod_) : "Q";
        std::string b = o.mod_ ? "F" + std::to_string(o.mod_) : "Q";
        throw FieldMismatch("cannot combine scalars of " + a + " and " + b);
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    requireSameField(o);
    if (mod_ != 0) {
        std::uint64_t r = std::uint64_t{res_} + o.res_;
        if (r >= mod_) r -= mod_;
        return residueOf(mod_, static_cast<std::uint32_t>(r));
    }
    if (!q_) return o;
    if (!o.q_) return *this;
    return rationalOf(*q_ + *o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    requireSameField(o);
    if (mod_ != 0) {
        std::uint64_t r = std::uint64_t{res_} + mod_ - o.res_;
        if (r >= mod_) r -= mod_;
        return residueOf(mod_, static_cast<std::uint32_t>(r));
    }
    if (!o.q_) return *this;
    return rationalOf(rational() - *o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    requireSameField(o);
    if (mod_ != 0)
        return residueOf(mod_, static_cast<std::uint32_t>(std::uint64_t{res_} * o.res_ % mod_));
    if (!q_ || !o.q_) return Scalar{};
    return rationalOf(*q_ * *o.q_);
}

Scalar Scalar::operator-() const {
    if (mod_ != 0) return residueOf(mod_, res_ == 0 ? 0 : mod_ - res_);
    if (!q_) return *this;
    return rationalOf(-*q_);
}

Scalar Scalar::inverse() const {
    if (isZero()) throw ZeroInverse("zero has no inverse");
    if (mod_ != 0) return residueOf(mod_, invMod(res_, mod_));
    return rationalOf(1 / *q_);
}

bool Scalar::operator==(const Scalar& o) const {
    if (mod_ != o.mod_) return false;
    if (mod_ != 0) return res_ == o.res_;
    if (!q_ || !o.q_) return !q_ && !o.q_;
    return *q_ == *o.q_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    if (mod_ != o.mod_) return mod_ <=> o.mod_;
    if (mod_ != 0) return res_ <=> o.res_;
    int c = cmp(rational(), o.rational());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::toString() const {
    if (mod_ != 0) return std::to_string(res_);
    return rational().get_str();
}

Scalar scalarInverse(const Scalar& a, const FieldSpec& f) {
    if (a.field() != f) throw FieldMismatch("scalar is not in " + f.name());
    return a.inverse();
}

// ---- vectors ---------------------------------------------------------------

Vec zeroVec(const FieldSpec& f, std::size_t n) { return Vec(n, f.zero()); }

Vec basisVec(const FieldSpec& f, std::size_t n, std::size_t i) {
    if (i >= n) throw BadIndex("basis index " + std::to_string(i) + " >= " + std::to_string(n));
    Vec v(n, f.zero());
    v[i] = f.one();
    return v;
}

Vec addVec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec subVec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scaleVec(const Scalar& s, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = s * x;
    return r;
}

bool isZeroVec(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.isZero(); });
}

Vec tensorVec(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

std::string vecToString(const Vec& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].toString();
    os << ')';
    return os.str();
}

// ---- Matrix ----------------------------------------------------------------

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::fromRows(const FieldSpec& f, const std::vector<Vec>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != c) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(r, j) = rows[r][j];
    }
    return m;
}

Matrix Matrix::fromColumns(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.setColumn(c, cols[c]);
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::setColumn(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length " + std::to_string(v.size()) +
                                                   " != " + std::to_string(rows_));
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix has " + std::to_string(cols_) + " columns, vector has " +
                                std::to_string(v.size()) + " entries");
    Vec out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].isZero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& m = (*this)(r, c);
            if (!m.isZero()) out[r] += m * v[c];
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " and " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    if (field_ != o.field_) throw FieldMismatch("matrices over different fields");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.isZero()) out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shapes differ");
    Matrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shapes differ");
    Matrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out(*this);
    for (auto& x : out.a_) x = s * x;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool Matrix::isZero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.isZero(); });
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("kron over different fields");
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (x.isZero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& y = b(k, l);
                    if (!y.isZero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return out;
}

Matrix flipMatrix(const FieldSpec& f, std::size_t m, std::size_t n) {
    Matrix t(f, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) t(j * m + i, i * n + j) = f.one();
    return t;
}

std::optional<std::size_t> firstColumnDifference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("comparing matrices of different shapes");
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != b(r, c)) return c;
    return std::nullopt;
}

// ---- elimination -----------------------------------------------------------

RowEchelon rowReduce(Matrix a) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = pr;
        while (sel < rows && a(sel, c).isZero()) ++sel;
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(pr, j));
        Scalar inv = a(pr, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a(pr, j) = a(pr, j) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a(r, c).isZero()) continue;
            Scalar f = a(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(pr, j).isZero()) a(r, j) -= f * a(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t matrixRank(const Matrix& a) { return rowReduce(a).pivotCols.size(); }

namespace {

std::vector<Vec> kernelFromEchelon(const RowEchelon& e, std::size_t n, const FieldSpec& f) {
    std::vector<bool> isPivot(n, false);
    for (auto c : e.pivotCols) isPivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (isPivot[free]) continue;
        Vec v(n, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < e.pivotCols.size(); ++r) v[e.pivotCols[r]] = -e.reduced(r, free);
        auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.isZero(); });
        if (!lead->isOne()) v = scaleVec(lead->inverse(), v);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<Vec> kernelBasis(const Matrix& a) {
    return kernelFromEchelon(rowReduce(a), a.cols(), a.field());
}

std::optional<AffineSolution> solveLinear(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                                std::to_string(a.rows()) + " rows");
    const std::size_t n = a.cols();
    Matrix aug(a.field(), a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    RowEchelon e = rowReduce(std::move(aug));
    if (!e.pivotCols.empty() && e.pivotCols.back() == n) return std::nullopt;
    AffineSolution sol;
    sol.particular = zeroVec(a.field(), n);
    for (std::size_t r = 0; r < e.pivotCols.size(); ++r) sol.particular[e.pivotCols[r]] = e.reduced(r, n);
    sol.kernel = kernelFromEchelon(e, n, a.field());
    return sol;
}

std::optional<Matrix> matrixInverse(const Matrix& a) {
    if (!a.isSquare())
        throw NotSquare(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix has no inverse");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = a.field().one();
    }
    RowEchelon e = rowReduce(std::move(aug));
    if (e.pivotCols.size() < n || e.pivotCols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

// ---- subspaces -------------------------------------------------------------

SubspaceCoords::SubspaceCoords(const FieldSpec& f, std::size_t ambientDim, std::vector<Vec> basis)
    : field_(f), ambient_(ambientDim), basis_(std::move(basis)), leftInverse_(f, basis_.size(), ambientDim) {
    const std::size_t k = basis_.size();
    Matrix aug(f, ambient_, k + ambient_);
    for (std::size_t c = 0; c < k; ++c) {
        if (basis_[c].size() != ambient_) throw DimensionMismatch("subspace basis vector has wrong length");
        for (std::size_t r = 0; r < ambient_; ++r) aug(r, c) = basis_[c][r];
    }
    for (std::size_t r = 0; r < ambient_; ++r) aug(r, k + r) = f.one();
    RowEchelon e = rowReduce(std::move(aug));
    if (e.pivotCols.size() < k || (k > 0 && e.pivotCols[k - 1] != k - 1))
        throw DimensionMismatch("subspace basis is linearly dependent");
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < ambient_; ++c) leftInverse_(r, c) = e.reduced(r, k + c);
}

std::optional<Vec> SubspaceCoords::coordinates(const Vec& v) const {
    Vec c = leftInverse_.apply(v);
    if (embed(c) != v) return std::nullopt;
    return c;
}

Vec SubspaceCoords::embed(const Vec& coords) const {
    if (coords.size() != basis_.size()) throw DimensionMismatch("coordinate vector has wrong length");
    Vec v = zeroVec(field_, ambient_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].isZero()) continue;
        for (std::size_t r = 0; r < ambient_; ++r)
            if (!basis_[i][r].isZero()) v[r] += coords[i] * basis_[i][r];
    }
    return v;
}

} // namespace hopfcoh
