#include "hopfcoh/residue.hpp"

namespace hopfcoh {

ResVec toResidues(const Vec& v) {
    ResVec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.isResidue()) throw FieldMismatch("residue kernel needs a prime field");
        out.push_back(x.residue());
    }
    return out;
}

Vec fromResidues(const FieldSpec& f, const ResVec& v) {
    Vec out;
    out.reserve(v.size());
    for (auto r : v) out.push_back(f.fromResidue(r));
    return out;
}

ResidueMap::ResidueMap(const Matrix& m) : p_(m.field().characteristic()), rows_(m.rows()), cols_(m.cols()) {
    m.field().requireEnumerable();
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, c).isZero()) cols_[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c).residue());
}

void ResidueMap::apply(const std::uint32_t* in, std::uint32_t* out) const {
    thread_local std::vector<std::uint64_t> acc;
    acc.assign(rows_, 0);
    for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (in[c] == 0) continue;
        for (const auto& [r, v] : cols_[c]) acc[r] += std::uint64_t{in[c]} * v % p_;
    }
    for (std::size_t r = 0; r < rows_; ++r) out[r] = static_cast<std::uint32_t>(acc[r] % p_);
}

ResidueAlgebra::ResidueAlgebra(const StructureAlgebra& a)
    : p_(a.field().characteristic()), dim_(a.dim()), products_(dim_ * dim_) {
    a.field().requireEnumerable();
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& [k, c] : a.product(i, j)) products_[i * dim_ + j].emplace_back(k, c.residue());
}

void ResidueAlgebra::multiply(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
    thread_local std::vector<std::uint64_t> acc;
    thread_local std::vector<std::uint32_t> nzA, nzB;
    acc.assign(dim_, 0);
    nzA.clear();
    nzB.clear();
    for (std::uint32_t i = 0; i < dim_; ++i) {
        if (a[i]) nzA.push_back(i);
        if (b[i]) nzB.push_back(i);
    }
    for (auto i : nzA)
        for (auto j : nzB) {
            const std::uint64_t ab = std::uint64_t{a[i]} * b[j] % p_;
            for (const auto& [k, c] : products_[i * dim_ + j]) acc[k] += ab * c;
        }
    for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p_);
}

bool ResidueAlgebra::isUnit(const std::uint32_t* a) const {
    const std::size_t n = dim_;
    thread_local std::vector<std::uint64_t> m;
    m.assign(n * n, 0);
    // m(k, j) = coefficient of e_k in a e_j
    for (std::size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : products_[i * n + j]) m[k * n + j] += std::uint64_t{a[i]} * c;
    }
    for (auto& x : m) x %= p_;
    return residueNonsingular(m.data(), n, p_);
}

bool residueNonsingular(std::uint64_t* m, std::size_t n, std::uint32_t p) {
    auto inverse = [p](std::uint64_t a) {
        std::uint64_t r = 1, e = p - 2;
        for (; e; e >>= 1, a = a * a % p)
            if (e & 1) r = r * a % p;
        return r;
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv * n + col] == 0) ++piv;
        if (piv == n) return false;
        if (piv != col)
            for (std::size_t j = col; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
        const std::uint64_t inv = inverse(m[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint64_t f = m[r * n + col] * inv % p;
            if (!f) continue;
            for (std::size_t j = col; j < n; ++j) m[r * n + j] = (m[r * n + j] + (p - f) * m[col * n + j]) % p;
        }
    }
    return true;
}

} // namespace hopfcoh
