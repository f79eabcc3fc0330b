#include "hopfcoh/groupcoh.hpp"

#include <map>
#include <set>

#include "hopfcoh/residue.hpp"

namespace hopfcoh {

GGroup makeGGroup(FiniteGroup g, FiniteGroup a, std::vector<std::vector<std::uint32_t>> action) {
    const std::size_t m = g.order(), n = a.order();
    if (action.size() != m) throw DimensionMismatch("action table has " + std::to_string(action.size()) + " rows");
    for (const auto& row : action) {
        if (row.size() != n) throw DimensionMismatch("action row has wrong length");
        for (auto y : row)
            if (y >= n) throw AxiomError("action by automorphisms", "image " + std::to_string(y) + " out of range");
    }
    for (std::uint32_t x = 0; x < n; ++x)
        if (action[g.identity()][x] != x) throw AxiomError("identity acts trivially", a.labels()[x]);
    for (std::uint32_t s = 0; s < m; ++s)
        for (std::uint32_t t = 0; t < m; ++t)
            for (std::uint32_t x = 0; x < n; ++x)
                if (action[g.mul(s, t)][x] != action[s][action[t][x]])
                    throw AxiomError("(st).x = s.(t.x)", "(" + g.labels()[s] + ", " + g.labels()[t] + ", " +
                                                            a.labels()[x] + ")");
    for (std::uint32_t s = 0; s < m; ++s)
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y)
                if (action[s][a.mul(x, y)] != a.mul(action[s][x], action[s][y]))
                    throw AxiomError("action by automorphisms", "(" + g.labels()[s] + ", " + a.labels()[x] + ", " +
                                                                    a.labels()[y] + ")");
    return GGroup{std::move(g), std::move(a), std::move(action), {}};
}

GGroup trivialGGroup(FiniteGroup g, FiniteGroup a) {
    std::vector<std::uint32_t> row(a.order());
    for (std::uint32_t x = 0; x < a.order(); ++x) row[x] = x;
    std::vector<std::vector<std::uint32_t>> action(g.order(), row);
    return makeGGroup(std::move(g), std::move(a), std::move(action));
}

FiniteGroup multiplicativeGroup(const FieldSpec& f) {
    f.requireEnumerable();
    const std::uint32_t p = f.characteristic();
    std::vector<std::vector<std::uint32_t>> t(p - 1, std::vector<std::uint32_t>(p - 1));
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (std::uint32_t j = 0; j + 1 < p; ++j)
            t[i][j] = static_cast<std::uint32_t>((std::uint64_t{i + 1} * (j + 1)) % p) - 1;
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

namespace {

const FiniteGroup& requireFunctionGroup(const ComoduleAlgebra& e) {
    if (!e.hopf->functionGroup) throw NotAFunctionAlgebra(e.hopf->name + " was not built as k^G");
    return *e.hopf->functionGroup;
}

std::uint32_t indexIn(const std::vector<Vec>& sorted, const Vec& v, const char* what) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) throw LevelMismatch(std::string(what) + " " + vecToString(v) + " is not a unit");
    return static_cast<std::uint32_t>(it - sorted.begin());
}

} // namespace

GGroup actionFromCoaction(const ComoduleAlgebra& e, const SearchConfig& cfg) {
    const FiniteGroup& g = requireFunctionGroup(e);
    const ElementGroup units = buildElementGroup(e.algebra(), enumerateUnits(e.algebra(), cfg));
    std::vector<std::string> labels;
    for (const auto& x : units.elements) labels.push_back(e.algebra().format(x));
    FiniteGroup a(units.table, std::move(labels));
    std::vector<std::vector<std::uint32_t>> action(g.order(), std::vector<std::uint32_t>(units.size()));
    for (std::uint32_t x = 0; x < units.size(); ++x) {
        const auto parts = gammaComponents(e, 1, e.coaction.apply(units.elements[x]));
        for (std::uint32_t s = 0; s < g.order(); ++s) {
            auto idx = units.indexOf(parts[s]);
            if (!idx) throw AxiomError("action by automorphisms", "^" + g.labels()[s] + " " + a.labels()[x] + " is not a unit");
            action[s][x] = *idx;
        }
    }
    GGroup out = makeGGroup(g, std::move(a), std::move(action));
    out.elements = units.elements;
    return out;
}

std::vector<std::uint32_t> GroupDiagram::pointwise(const std::vector<std::uint32_t>& f,
                                                   const std::vector<std::uint32_t>& h) const {
    std::vector<std::uint32_t> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = gg->a.mul(f[i], h[i]);
    return out;
}

GroupDiagram::Elem1 GroupDiagram::coface0(int i, Elem0 x) const {
    const std::size_t m = gg->g.order();
    Elem1 out(m);
    if (i == 0) {
        for (std::uint32_t s = 0; s < m; ++s) out[s] = gg->act(s, x);
    } else if (i == 1) {
        std::fill(out.begin(), out.end(), x);
    } else {
        throw BadIndex("coface d" + std::to_string(i) + " from level 0");
    }
    return out;
}

GroupDiagram::Elem2 GroupDiagram::coface1(int i, const Elem1& f) const {
    const std::uint32_t m = static_cast<std::uint32_t>(gg->g.order());
    if (i < 0 || i > 2) throw BadIndex("coface d" + std::to_string(i) + " from level 1");
    Elem2 out(std::size_t{m} * m);
    for (std::uint32_t u = 0; u < m; ++u)
        for (std::uint32_t v = 0; v < m; ++v)
            out[u * m + v] = i == 0 ? gg->act(u, f[v]) : i == 1 ? f[gg->g.mul(u, v)] : f[u];
    return out;
}

std::vector<std::vector<std::uint32_t>> groupZ1(const GGroup& a, const SearchConfig& cfg) {
    const std::uint32_t m = static_cast<std::uint32_t>(a.g.order()), n = static_cast<std::uint32_t>(a.a.order());
    const std::uint32_t e = a.g.identity(), one = a.a.identity();
    std::vector<std::uint32_t> free;
    for (std::uint32_t s = 0; s < m; ++s)
        if (s != e) free.push_back(s);
    const std::uint64_t count = saturatingPow(n, free.size());
    requireBudget(count, cfg, "group cocycle search");
    auto out = parallelCollect<std::vector<std::uint32_t>>(
        count, cfg.threads, [&](std::uint64_t idx) -> std::optional<std::vector<std::uint32_t>> {
            std::vector<std::uint32_t> f(m, one);
            for (std::size_t d = free.size(); d-- > 0;) {
                f[free[d]] = static_cast<std::uint32_t>(idx % n);
                idx /= n;
            }
            for (std::uint32_t u = 0; u < m; ++u)
                for (std::uint32_t v = 0; v < m; ++v)
                    if (f[a.g.mul(u, v)] != a.a.mul(f[u], a.act(u, f[v]))) return std::nullopt;
            return f;
        });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> groupH0(const GGroup& a) {
    std::vector<std::uint32_t> all(a.a.order());
    for (std::uint32_t x = 0; x < all.size(); ++x) all[x] = x;
    return equalizer(GroupDiagram{&a}, all);
}

GroupCohomology groupCohomology(const GGroup& a, const SearchConfig& cfg) {
    GroupCohomology c{groupH0(a), groupZ1(a, cfg), {}};
    std::vector<std::uint32_t> all(a.a.order());
    for (std::uint32_t x = 0; x < all.size(); ++x) all[x] = x;
    c.h1 = orbitPartition(GroupDiagram{&a}, c.z1, all);
    return c;
}

std::vector<Vec> gammaComponents(const ComoduleAlgebra& e, int level, const Vec& x) {
    const std::size_t nE = e.dim(), m = e.hopf->dim();
    const std::size_t tuples = level == 0 ? 1 : level == 1 ? m : m * m;
    if (x.size() != nE * tuples) throw DimensionMismatch("element has wrong length for level " + std::to_string(level));
    std::vector<Vec> out(tuples, Vec(nE, e.field().zero()));
    for (std::size_t i = 0; i < nE; ++i)
        for (std::size_t t = 0; t < tuples; ++t) out[t][i] = x[i * tuples + t];
    return out;
}

Vec gammaInverse1(const ComoduleAlgebra& e, const std::vector<Vec>& parts) {
    const std::size_t nE = e.dim(), m = e.hopf->dim();
    if (parts.size() != m) throw DimensionMismatch("need one component per group element");
    Vec x(nE * m, e.field().zero());
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < nE; ++i) x[i * m + g] = parts[g][i];
    return x;
}

GammaReport gammaIso(const ComoduleAlgebra& e, const SearchConfig& cfg) {
    requireFunctionGroup(e);
    GammaReport rep;
    const AlgebraDiagram d = buildDiagram(e);
    const StructureAlgebra& E = e.algebra();

    // gamma_n is an algebra isomorphism onto the pointwise product of copies of E.
    const std::array<const StructureAlgebra*, 2> levels{d.level1.get(), d.level2.get()};
    for (int n = 1; n <= 2; ++n) {
        const StructureAlgebra& L = *levels[static_cast<std::size_t>(n - 1)];
        const std::string name = "gamma" + std::to_string(n);
        bool unitOk = true;
        for (const auto& c : gammaComponents(e, n, L.unit())) unitOk = unitOk && c == E.unit();
        rep.checks.add(name + " preserves the unit", unitOk, "unit");
        std::string witness;
        for (std::size_t i = 0; i < L.dim() && witness.empty(); ++i) {
            const auto gi = gammaComponents(e, n, L.basisVector(i));
            for (std::size_t j = 0; j < L.dim() && witness.empty(); ++j) {
                const auto gj = gammaComponents(e, n, L.basisVector(j));
                const auto prod = gammaComponents(e, n, L.multiply(L.basisVector(i), L.basisVector(j)));
                for (std::size_t t = 0; t < prod.size(); ++t)
                    if (prod[t] != E.multiply(gi[t], gj[t])) {
                        witness = "(" + L.labels()[i] + ", " + L.labels()[j] + ")";
                        break;
                    }
            }
        }
        rep.checks.add(name + " is multiplicative", witness.empty(), witness);
    }

    const GGroup gg = actionFromCoaction(e, cfg);
    const GroupDiagram gd{&gg};
    const auto& units = gg.elements;
    const std::uint32_t n = static_cast<std::uint32_t>(units.size());
    const std::uint32_t m = static_cast<std::uint32_t>(gg.g.order());

    // Level 1 from level 0, on every unit of E.
    for (int i = 0; i < 2; ++i) {
        std::string witness;
        for (std::uint32_t x = 0; x < n && witness.empty(); ++x) {
            std::vector<std::uint32_t> img;
            for (const auto& c : gammaComponents(e, 1, d.coface0(i, units[x]))) img.push_back(indexIn(units, c, "component"));
            if (img != gd.coface0(i, x)) witness = E.format(units[x]);
        }
        rep.checks.add("gamma1 d" + std::to_string(i) + " = d" + std::to_string(i) + " gamma0", witness.empty(), witness);
    }

    // Level 2 from level 1, on every map G -> E^x.
    rep.level1Maps = saturatingPow(n, m);
    requireBudget(rep.level1Maps, cfg, "gamma intertwining check");
    std::map<ResVec, std::uint32_t> unitIndex;
    std::vector<ResVec> unitRes;
    for (std::uint32_t x = 0; x < n; ++x) {
        unitRes.push_back(toResidues(units[x]));
        unitIndex.emplace(unitRes.back(), x);
    }
    const std::array<ResidueMap, 3> maps{ResidueMap(d.d1[0]), ResidueMap(d.d1[1]), ResidueMap(d.d1[2])};
    const std::size_t nE = E.dim(), mm = std::size_t{m} * m;
    for (int i = 0; i < 3; ++i) {
        auto bad = parallelCollect<std::uint64_t>(rep.level1Maps, cfg.threads, [&](std::uint64_t idx) -> std::optional<std::uint64_t> {
            std::vector<std::uint32_t> f(m);
            std::uint64_t rest = idx;
            for (std::size_t g = m; g-- > 0;) {
                f[g] = static_cast<std::uint32_t>(rest % n);
                rest /= n;
            }
            ResVec X(nE * m), Y(nE * mm), comp(nE);
            for (std::size_t g = 0; g < m; ++g)
                for (std::size_t c = 0; c < nE; ++c) X[c * m + g] = unitRes[f[g]][c];
            maps[static_cast<std::size_t>(i)].apply(X.data(), Y.data());
            const auto expected = gd.coface1(i, f);
            for (std::size_t t = 0; t < mm; ++t) {
                for (std::size_t c = 0; c < nE; ++c) comp[c] = Y[c * mm + t];
                auto it = unitIndex.find(comp);
                if (it == unitIndex.end() || it->second != expected[t]) return idx;
            }
            return std::nullopt;
        });
        std::string witness;
        if (!bad.empty()) witness = "map number " + std::to_string(bad.front());
        rep.checks.add("gamma2 d" + std::to_string(i) + " = d" + std::to_string(i) + " gamma1", bad.empty(), witness);
    }
    return rep;
}

ComparisonReport compareTheorem15(const ComoduleAlgebra& e, const SearchConfig& cfg) {
    requireFunctionGroup(e);
    ComparisonReport rep;
    const CohomologyResult hopf = h1(e, cfg);
    const GGroup gg = actionFromCoaction(e, cfg);
    const GroupCohomology grp = groupCohomology(gg, cfg);
    rep.leftH0 = hopf.h0.size();
    rep.rightH0 = grp.h0.size();
    rep.leftH1 = hopf.h1.size();
    rep.rightH1 = grp.h1.size();

    std::vector<Vec> fixed;
    for (auto x : grp.h0) fixed.push_back(gg.elements[x]);
    std::sort(fixed.begin(), fixed.end());
    rep.checks.add("H0 equal as sets", fixed == hopf.h0.elements,
                   std::to_string(hopf.h0.size()) + " invariant units vs " + std::to_string(fixed.size()) + " fixed points");

    auto gamma1 = [&](const Vec& X) {
        std::vector<std::uint32_t> f;
        for (const auto& c : gammaComponents(e, 1, X)) f.push_back(indexIn(gg.elements, c, "component"));
        return f;
    };
    std::vector<std::vector<std::uint32_t>> image;
    for (const auto& X : hopf.z1) image.push_back(gamma1(X));
    std::sort(image.begin(), image.end());
    rep.checks.add("gamma1 maps Z1 onto the group cocycles", image == grp.z1,
                   std::to_string(image.size()) + " vs " + std::to_string(grp.z1.size()) + " cocycles");

    rep.pairing = pairOrbits(hopf.h1, grp.h1, gamma1, rep.checks);
    return rep;
}

PontryaginReport pontryaginCheck(const FiniteGroup& g, const FieldSpec& f, const SearchConfig& cfg) {
    PontryaginReport rep;
    const FiniteGroup kx = multiplicativeGroup(f);
    const auto chars = groupHomomorphisms(g, kx);
    auto h = std::make_shared<const HopfAlgebra>(buildFunctionHopf(g, f));
    const ElementGroup gr = grouplikes(*h, cfg);
    rep.characters = chars.size();
    rep.grouplikeCount = gr.size();

    auto asElement = [&](const std::vector<std::uint32_t>& chi) {
        Vec v;
        for (auto c : chi) v.push_back(f.fromResidue(c + 1));
        return v;
    };
    std::vector<Vec> images;
    for (const auto& chi : chars) images.push_back(asElement(chi));
    std::vector<Vec> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    rep.checks.add("characters are the grouplikes", sorted == gr.elements,
                   std::to_string(chars.size()) + " characters vs " + std::to_string(gr.size()) + " grouplikes");

    bool hom = sorted == gr.elements;
    for (std::size_t i = 0; i < chars.size() && hom; ++i)
        for (std::size_t j = 0; j < chars.size() && hom; ++j) {
            std::vector<std::uint32_t> prod(g.order());
            for (std::size_t s = 0; s < g.order(); ++s) prod[s] = kx.mul(chars[i][s], chars[j][s]);
            auto a = gr.indexOf(images[i]), b = gr.indexOf(images[j]), c = gr.indexOf(asElement(prod));
            hom = a && b && c && gr.table[*a][*b] == *c;
        }
    rep.checks.add("pointwise product matches the product of grouplikes", hom, "a pair of characters");

    const ComoduleAlgebra k = trivialCoefficients(h);
    const CohomologyResult hk = h1(k, cfg);
    rep.h1Classes = hk.h1.size();
    bool reps = hk.h1.size() == chars.size();
    for (const auto& o : hk.h1) reps = reps && gr.indexOf(o.representative).has_value();
    rep.checks.add("H1(k^G, k) classes are the grouplikes", reps,
                   std::to_string(hk.h1.size()) + " classes for " + std::to_string(chars.size()) + " characters");
    const ComparisonReport cmp = compareTheorem15(k, cfg);
    rep.checks.merge("group side: ", cmp.checks);
    return rep;
}

} // namespace hopfcoh
