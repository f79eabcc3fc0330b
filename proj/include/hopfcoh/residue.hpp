#pragma once

// Machine-word kernels for enumeration over F_p with p <= 2^16. They
// agree with the Scalar routines and exist only for speed.

#include <cstdint>
#include <vector>

#include "hopfcoh/algebra.hpp"

namespace hopfcoh {

using ResVec = std::vector<std::uint32_t>;

ResVec toResidues(const Vec& v);
Vec fromResidues(const FieldSpec& f, const ResVec& v);

/// Sparse matrix over F_p, stored by columns.
class ResidueMap {
public:
    explicit ResidueMap(const Matrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_.size(); }
    void apply(const std::uint32_t* in, std::uint32_t* out) const;

private:
    std::uint32_t p_;
    std::size_t rows_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cols_;
};

/// A structure-constant algebra over F_p with word-sized arithmetic.
class ResidueAlgebra {
public:
    explicit ResidueAlgebra(const StructureAlgebra& a);

    std::size_t dim() const noexcept { return dim_; }
    std::uint32_t prime() const noexcept { return p_; }

    void multiply(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
    /// Left multiplication by `a` is bijective. In a finite-dimensional
    /// associative algebra this is equivalent to `a` being a unit.
    bool isUnit(const std::uint32_t* a) const;

private:
    std::uint32_t p_;
    std::size_t dim_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> products_; // (i, j) -> (k, c)
};

/// Whether the n x n matrix m (row-major, entries below p) is invertible
/// over F_p. Destroys m.
bool residueNonsingular(std::uint64_t* m, std::size_t n, std::uint32_t p);

/// Points of the affine space over F_p accepted by pred(const uint32_t*),
/// as sorted Vecs. Checks enumerability and the budget first.
template <class Pred>
std::vector<Vec> enumerateResidues(const FieldSpec& f, const AffineSolution& space, const SearchConfig& cfg,
                                   Pred&& pred) {
    f.requireEnumerable();
    const std::uint32_t p = f.characteristic();
    const std::size_t k = space.kernel.size(), n = space.particular.size();
    const std::uint64_t count = saturatingPow(p, k);
    requireBudget(count, cfg, "enumeration");
    const ResVec base = toResidues(space.particular);
    std::vector<ResVec> dirs;
    for (const auto& d : space.kernel) dirs.push_back(toResidues(d));

    auto found = parallelChunks<ResVec>(count, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi,
                                                                 std::vector<ResVec>& out) {
        if (lo >= hi) return;
        // Digit d multiplies dirs[d]; the last digit runs fastest.
        std::vector<std::uint32_t> digit(k, 0);
        ResVec point = base;
        std::uint64_t idx = lo;
        for (std::size_t d = k; d-- > 0;) {
            digit[d] = static_cast<std::uint32_t>(idx % p);
            idx /= p;
            for (std::size_t r = 0; r < n; ++r)
                point[r] = static_cast<std::uint32_t>((point[r] + std::uint64_t{digit[d]} * dirs[d][r]) % p);
        }
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (pred(point.data())) out.push_back(point);
            // Raising a digit by one, with or without wrap, adds its direction mod p.
            for (std::size_t d = k; d-- > 0;) {
                const ResVec& dir = dirs[d];
                for (std::size_t r = 0; r < n; ++r) {
                    std::uint32_t s = point[r] + dir[r];
                    point[r] = s >= p ? s - p : s;
                }
                if (++digit[d] < p) break;
                digit[d] = 0;
            }
        }
    });
    std::vector<Vec> out;
    out.reserve(found.size());
    for (const auto& r : found) out.push_back(fromResidues(f, r));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hopfcoh
