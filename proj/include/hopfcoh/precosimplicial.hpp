#pragma once

// Truncated pre-cosimplicial groups G0 => G1 => G2 and the cohomology
// shared by every instance: the equalizer H^0, the cocycle set Z^1, the
// right action X <- x = d1(x^-1) X d0(x), and the orbit set H^1.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/parallel.hpp"
#include "hopfcoh/report.hpp"

namespace hopfcoh {

template <class D>
concept PreCosimplicialGroup = requires(const D& d, const typename D::Elem0& x, const typename D::Elem1& X,
                                        const typename D::Elem2& Y, int i) {
    { d.one0() } -> std::same_as<typename D::Elem0>;
    { d.mul0(x, x) } -> std::same_as<typename D::Elem0>;
    { d.inv0(x) } -> std::same_as<typename D::Elem0>;
    { d.one1() } -> std::same_as<typename D::Elem1>;
    { d.mul1(X, X) } -> std::same_as<typename D::Elem1>;
    { d.mul2(Y, Y) } -> std::same_as<typename D::Elem2>;
    { d.coface0(i, x) } -> std::same_as<typename D::Elem1>;
    { d.coface1(i, X) } -> std::same_as<typename D::Elem2>;
    requires std::totally_ordered<typename D::Elem0>;
    requires std::totally_ordered<typename D::Elem1>;
};

/// d2(X) d0(X) = d1(X).
template <PreCosimplicialGroup D>
bool isCocycle(const D& d, const typename D::Elem1& X) {
    return d.mul2(d.coface1(2, X), d.coface1(0, X)) == d.coface1(1, X);
}

/// d1(x^-1) X d0(x).
template <PreCosimplicialGroup D>
typename D::Elem1 actOn(const D& d, const typename D::Elem1& X, const typename D::Elem0& x) {
    return d.mul1(d.mul1(d.coface0(1, d.inv0(x)), X), d.coface0(0, x));
}

/// Elements x of `units` with d0(x) = d1(x), in the order given.
template <PreCosimplicialGroup D>
std::vector<typename D::Elem0> equalizer(const D& d, const std::vector<typename D::Elem0>& units) {
    std::vector<typename D::Elem0> out;
    for (const auto& x : units)
        if (d.coface0(0, x) == d.coface0(1, x)) out.push_back(x);
    return out;
}

template <class E0, class E1>
struct OrbitRecord {
    E1 representative;       // least member
    std::vector<E1> members; // sorted
    std::vector<E0> witnesses; // representative <- witnesses[i] = members[i]
};

/// Orbits of the sorted cocycle list `z1` under the level-0 group `units`
/// (sorted). Representatives are least members; the orbit of one1() comes
/// first, the others follow in increasing representative order. Throws
/// LevelMismatch if the action leaves `z1`.
template <PreCosimplicialGroup D>
std::vector<OrbitRecord<typename D::Elem0, typename D::Elem1>>
orbitPartition(const D& d, const std::vector<typename D::Elem1>& z1, const std::vector<typename D::Elem0>& units) {
    using E0 = typename D::Elem0;
    using E1 = typename D::Elem1;
    std::vector<OrbitRecord<E0, E1>> orbits;
    std::vector<bool> assigned(z1.size(), false);
    std::vector<E0> inverses;
    inverses.reserve(units.size());
    for (const auto& x : units) inverses.push_back(d.inv0(x));
    for (std::size_t i = 0; i < z1.size(); ++i) {
        if (assigned[i]) continue;
        const E1& rep = z1[i];
        std::map<E1, E0> seen;
        for (std::size_t u = 0; u < units.size(); ++u) {
            E1 img = d.mul1(d.mul1(d.coface0(1, inverses[u]), rep), d.coface0(0, units[u]));
            seen.emplace(std::move(img), units[u]);
        }
        OrbitRecord<E0, E1> rec{rep, {}, {}};
        for (auto& [member, witness] : seen) {
            auto it = std::lower_bound(z1.begin(), z1.end(), member);
            if (it == z1.end() || *it != member) throw LevelMismatch("cocycle action leaves the cocycle set");
            assigned[static_cast<std::size_t>(it - z1.begin())] = true;
            rec.members.push_back(member);
            rec.witnesses.push_back(witness);
        }
        orbits.push_back(std::move(rec));
    }
    const E1 one = d.one1();
    auto dist = std::find_if(orbits.begin(), orbits.end(), [&](const auto& o) {
        return std::binary_search(o.members.begin(), o.members.end(), one);
    });
    if (dist != orbits.end()) std::rotate(orbits.begin(), dist, dist + 1);
    return orbits;
}

/// Index of the orbit containing X.
template <class E0, class E1>
std::optional<std::size_t> orbitIndex(const std::vector<OrbitRecord<E0, E1>>& orbits, const E1& X) {
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), X)) return i;
    return std::nullopt;
}

/// Sends every member of every left orbit through `map` and returns, per
/// left orbit, the index of the right orbit reached (right.size() when a
/// member lands outside every right orbit). Adds three checks: the class
/// reached does not depend on the member, the induced map is a bijection,
/// and class 0 goes to class 0.
template <class LeftOrbit, class RightOrbit, class Map>
std::vector<std::size_t> pairOrbits(const std::vector<LeftOrbit>& left, const std::vector<RightOrbit>& right, Map&& map,
                                    AxiomReport& checks) {
    std::vector<std::size_t> pairing;
    bool welldefined = true;
    std::string witness;
    for (std::size_t i = 0; i < left.size(); ++i) {
        std::optional<std::size_t> cls;
        for (std::size_t j = 0; j < left[i].members.size(); ++j) {
            auto c = orbitIndex(right, map(left[i].members[j]));
            if (!c || (cls && *cls != *c)) {
                if (welldefined) witness = "member " + std::to_string(j) + " of class " + std::to_string(i);
                welldefined = false;
            }
            if (c && !cls) cls = c;
        }
        pairing.push_back(cls.value_or(right.size()));
    }
    checks.add("H1 pairing is well defined on classes", welldefined, witness);
    const std::set<std::size_t> hit(pairing.begin(), pairing.end());
    checks.add("H1 pairing is a bijection",
               welldefined && pairing.size() == right.size() && hit.size() == right.size() && !hit.count(right.size()),
               std::to_string(hit.size()) + " of " + std::to_string(right.size()) + " classes reached");
    checks.add("distinguished points matched", !pairing.empty() && pairing[0] == 0, "class 0");
    return pairing;
}

} // namespace hopfcoh
