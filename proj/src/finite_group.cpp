#include "hopfcoh/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "hopfcoh/errors.hpp"

namespace hopfcoh {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw NotAGroup("empty table");
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != n) throw NotAGroup("label count differs from group order");
    for (std::size_t a = 0; a < n; ++a) {
        if (table_[a].size() != n) throw NotAGroup("closure: row " + std::to_string(a) + " has wrong length");
        for (auto c : table_[a])
            if (c >= n) throw NotAGroup("closure: entry " + std::to_string(c) + " out of range in row " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw NotAGroup("associativity fails at (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")");
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw NotAGroup("identity: no two-sided identity");
    inverse_.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        bool ok = false;
        for (std::uint32_t b = 0; b < n && !ok; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                ok = true;
            }
        if (!ok) throw NotAGroup("inverses: " + labels_[a] + " has no inverse");
    }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
    if (n == 0) throw NotAGroup("cyclic group of order 0");
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

namespace {

std::string cycleNotation(const std::vector<std::uint32_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::string out;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s] || perm[s] == s) continue;
        out += '(';
        for (std::size_t i = s; !seen[i]; i = perm[i]) {
            seen[i] = true;
            out += std::to_string(i + 1);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

} // namespace

FiniteGroup FiniteGroup::symmetric(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t m = perms.size();
    std::vector<std::vector<std::uint32_t>> t(m, std::vector<std::uint32_t>(m));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(cycleNotation(perms[a]));
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<std::uint32_t> c(n);
            for (std::uint32_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<std::uint32_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

bool FiniteGroup::isAbelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::optional<std::uint32_t> FiniteGroup::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - labels_.begin());
}

FiniteGroup FiniteGroup::restrict(const std::vector<std::uint32_t>& elements) const {
    const std::size_t m = elements.size();
    if (m == 0) throw NotASubgroup("empty subset");
    std::vector<std::int64_t> pos(order(), -1);
    for (std::size_t i = 0; i < m; ++i) {
        if (elements[i] >= order()) throw NotASubgroup("element index " + std::to_string(elements[i]) + " out of range");
        if (pos[elements[i]] != -1) throw NotASubgroup("duplicate element " + labels_[elements[i]]);
        pos[elements[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<std::vector<std::uint32_t>> t(m, std::vector<std::uint32_t>(m));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(labels_[elements[i]]);
        for (std::size_t j = 0; j < m; ++j) {
            const std::int64_t k = pos[mul(elements[i], elements[j])];
            if (k < 0)
                throw NotASubgroup("product " + labels_[elements[i]] + "*" + labels_[elements[j]] + " leaves the subset");
            t[i][j] = static_cast<std::uint32_t>(k);
        }
    }
    try {
        return FiniteGroup(std::move(t), std::move(labels));
    } catch (const NotAGroup& e) {
        throw NotASubgroup(e.what());
    }
}

std::vector<std::vector<std::uint32_t>> groupHomomorphisms(const FiniteGroup& g, const FiniteGroup& k) {
    std::vector<std::vector<std::uint32_t>> out;
    const std::size_t n = g.order();
    std::vector<std::uint32_t> img(n, 0);
    // Odometer over all maps; desk-scale orders only.
    while (true) {
        bool ok = img[g.identity()] == k.identity();
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                ok = img[g.mul(a, b)] == k.mul(img[a], img[b]);
        if (ok) out.push_back(img);
        std::size_t d = n;
        while (d > 0) {
            --d;
            if (++img[d] < k.order()) break;
            img[d] = 0;
            if (d == 0) return out;
        }
        if (n == 0) return out;
    }
}

} // namespace hopfcoh
