#pragma once

// Finite groups by multiplication table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfcoh {

class FiniteGroup {
public:
    /// Verifies closure, associativity, identity and inverses; throws
    /// NotAGroup naming the failing axiom and a witness.
    FiniteGroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::uint32_t n);
    /// Permutations of {1..n} in lexicographic order of their images,
    /// composed as (s t)(i) = s(t(i)), labelled in cycle notation.
    static FiniteGroup symmetric(std::uint32_t n);

    std::size_t order() const noexcept { return table_.size(); }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool isAbelian() const;

    /// Index of the element labelled `label`.
    std::optional<std::uint32_t> find(const std::string& label) const;

    /// The subgroup on `elements` (in the given order) with the restricted
    /// table. Throws NotASubgroup when the list is not a subgroup.
    FiniteGroup restrict(const std::vector<std::uint32_t>& elements) const;

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::string> labels_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> inverse_;
};

/// All group homomorphisms G -> K as image tuples indexed by G, in
/// lexicographic order.
std::vector<std::vector<std::uint32_t>> groupHomomorphisms(const FiniteGroup& g, const FiniteGroup& k);

} // namespace hopfcoh
