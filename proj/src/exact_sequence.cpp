#include "hopfcoh/exact_sequence.hpp"

#include <map>
#include <set>

namespace hopfcoh {

Inclusion makeInclusion(ComodulePtr d, ComodulePtr e, const Matrix& incl) {
    if (!sameHopfAlgebra(*d->hopf, *e->hopf)) throw NotAMorphism("D and E are comodule algebras over different Hopf algebras");
    if (incl.rows() != e->dim() || incl.cols() != d->dim())
        throw DimensionMismatch("inclusion has shape " + std::to_string(incl.rows()) + "x" +
                                std::to_string(incl.cols()) + ", expected " + std::to_string(e->dim()) + "x" +
                                std::to_string(d->dim()));
    if (matrixRank(incl) != d->dim()) throw NotInjective("inclusion has a nonzero kernel");
    std::string witness;
    if (!isAlgebraMorphism(incl, d->algebra(), e->algebra(), &witness))
        throw NotAMorphism("inclusion is not an algebra morphism at " + witness);
    const Matrix idH = Matrix::identity(d->field(), d->hopf->dim());
    const Matrix incl1 = kron(incl, idH);
    if (auto col = firstColumnDifference(incl1 * d->coaction, e->coaction * incl))
        throw NotAMorphism("inclusion does not commute with the coactions at " + d->algebra().labels()[*col]);
    Matrix incl2 = kron(incl1, idH);
    return Inclusion{d, e, {incl, incl1, std::move(incl2)}, buildDiagram(*d), buildDiagram(*e)};
}

namespace {

/// The unique y with incl_n(y) = z, when there is one.
std::optional<Vec> pullBack(const Inclusion& inc, int level, const Vec& z) {
    auto sol = solveLinear(inc.incl[static_cast<std::size_t>(level)], z);
    if (!sol) return std::nullopt;
    return std::move(sol->particular);
}

Vec connectingElement(const Inclusion& inc, const Vec& b) {
    const AlgebraDiagram& e = inc.ambientDiagram;
    return e.mul1(e.coface0(1, e.inv0(b)), e.coface0(0, b));
}

std::vector<Vec> embeddedUnits(const Inclusion& inc, int level, const SearchConfig& cfg) {
    const AlgebraDiagram& d = inc.subDiagram;
    const AlgebraPtr& a = level == 0 ? d.level0 : level == 1 ? d.level1 : d.level2;
    std::vector<Vec> out;
    for (const auto& u : enumerateUnits(*a, cfg)) out.push_back(inc.incl[static_cast<std::size_t>(level)].apply(u));
    std::sort(out.begin(), out.end());
    return out;
}

/// Left cosets b S of the sorted unit list `units` modulo the sorted
/// subgroup `sub`, the coset of `one` first.
std::vector<Coset> leftCosets(const StructureAlgebra& a, const std::vector<Vec>& units, const std::vector<Vec>& sub) {
    std::vector<Coset> out;
    std::vector<bool> assigned(units.size(), false);
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (assigned[i]) continue;
        std::set<Vec> members;
        for (const auto& s : sub) members.insert(a.multiply(units[i], s));
        Coset c{*members.begin(), {members.begin(), members.end()}};
        for (const auto& m : c.members) {
            auto it = std::lower_bound(units.begin(), units.end(), m);
            if (it == units.end() || *it != m) throw LevelMismatch("coset leaves the unit group");
            assigned[static_cast<std::size_t>(it - units.begin())] = true;
        }
        out.push_back(std::move(c));
    }
    auto dist = std::find_if(out.begin(), out.end(), [&](const Coset& c) {
        return std::binary_search(c.members.begin(), c.members.end(), a.unit());
    });
    if (dist != out.end()) std::rotate(out.begin(), dist, dist + 1);
    return out;
}

/// The quotient of the ambient unit diagram by the embedded sub-diagram,
/// with each coset stored as its least member. A pre-cosimplicial group
/// when every level of the sub-diagram is normal.
struct QuotientDiagram {
    using Elem0 = Vec;
    using Elem1 = Vec;
    using Elem2 = Vec;

    const AlgebraDiagram* ambient;
    std::array<std::vector<Vec>, 3> sub;
    std::array<bool, 3> full; // the sub-diagram fills the level

    Vec canon(int level, const Vec& b) const {
        const StructureAlgebra& a = level == 0 ? *ambient->level0 : level == 1 ? *ambient->level1 : *ambient->level2;
        if (full[static_cast<std::size_t>(level)]) return a.unit();
        std::optional<Vec> best;
        for (const auto& s : sub[static_cast<std::size_t>(level)]) {
            Vec m = a.multiply(b, s);
            if (!best || m < *best) best = std::move(m);
        }
        return *best;
    }

    Vec one0() const { return canon(0, ambient->one0()); }
    Vec one1() const { return canon(1, ambient->one1()); }
    Vec mul0(const Vec& a, const Vec& b) const { return canon(0, ambient->mul0(a, b)); }
    Vec mul1(const Vec& a, const Vec& b) const { return canon(1, ambient->mul1(a, b)); }
    Vec mul2(const Vec& a, const Vec& b) const { return canon(2, ambient->mul2(a, b)); }
    Vec inv0(const Vec& a) const { return canon(0, ambient->inv0(a)); }
    Vec coface0(int i, const Vec& x) const { return canon(1, ambient->coface0(i, x)); }
    Vec coface1(int i, const Vec& x) const { return canon(2, ambient->coface1(i, x)); }
};

static_assert(PreCosimplicialGroup<QuotientDiagram>);

/// First (u, s) with u s u^-1 outside `sub`, or nullopt when `sub` is normal.
std::optional<std::string> normalityWitness(const StructureAlgebra& a, const std::vector<Vec>& units,
                                            const std::vector<Vec>& sub) {
    for (const auto& u : units) {
        const Vec uInv = *a.tryInverse(u);
        for (const auto& s : sub)
            if (!std::binary_search(sub.begin(), sub.end(), a.multiply(a.multiply(u, s), uInv)))
                return "conjugating " + a.format(s) + " by " + a.format(u);
    }
    return std::nullopt;
}

template <class T>
std::string listString(const std::vector<T>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + "}";
}

void addNode(AxiomReport& rep, const std::string& name, std::vector<std::size_t> image,
             std::vector<std::size_t> preimage) {
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::sort(preimage.begin(), preimage.end());
    const bool ok = image == preimage;
    rep.add(name, ok, "image " + listString(image) + " vs preimage " + listString(preimage));
}

} // namespace

RelativeH0 relativeH0(const Inclusion& inc, const SearchConfig& cfg) {
    const StructureAlgebra& e = inc.ambient->algebra();
    RelativeH0 r;
    r.cosets = leftCosets(e, enumerateUnits(e, cfg), embeddedUnits(inc, 0, cfg));
    for (std::size_t i = 0; i < r.cosets.size(); ++i) {
        auto y = pullBack(inc, 1, connectingElement(inc, r.cosets[i].representative));
        if (y && inc.subDiagram.level1->isUnit(*y)) r.points.push_back(i);
    }
    return r;
}

std::size_t connectingClass(const Inclusion& inc, const std::vector<Orbit>& subH1, const Vec& b) {
    const Vec z = connectingElement(inc, b);
    auto y = pullBack(inc, 1, z);
    if (!y) throw LiftNotInSubalgebra(inc.ambientDiagram.level1->format(z) + " is not in the image of D (x) H");
    if (!inc.subDiagram.level1->isUnit(*y))
        throw LiftNotInSubalgebra(inc.subDiagram.level1->format(*y) + " is not a unit of D (x) H");
    if (!isCocycle(inc.subDiagram, *y))
        throw LiftNotInSubalgebra(inc.subDiagram.level1->format(*y) + " is not a cocycle");
    auto cls = orbitIndex(subH1, *y);
    if (!cls) throw LiftNotInSubalgebra(inc.subDiagram.level1->format(*y) + " is missing from the cocycle set");
    return *cls;
}

std::size_t connectingMap(const Inclusion& inc, const std::vector<Orbit>& subH1, const Coset& c) {
    const std::size_t cls = connectingClass(inc, subH1, c.representative);
    for (const auto& b : c.members)
        if (connectingClass(inc, subH1, b) != cls)
            throw LiftNotInSubalgebra("connecting class depends on the lift " + inc.ambient->algebra().format(b));
    return cls;
}

ExactSequenceReport verifyExactSequence(const Inclusion& inc, const SearchConfig& cfg) {
    const AlgebraDiagram &dD = inc.subDiagram, &dE = inc.ambientDiagram;
    const CohomologyResult hD = diagramCohomology(dD, cfg), hE = diagramCohomology(dE, cfg);
    const RelativeH0 rel = relativeH0(inc, cfg);
    ExactSequenceReport rep;
    rep.termSizes = {{"H0(D)", hD.h0.size()},
                     {"H0(E)", hE.h0.size()},
                     {"H0(D->E)", rel.points.size()},
                     {"H1(D)", hD.h1.size()},
                     {"H1(E)", hE.h1.size()}};

    std::map<Vec, std::size_t> cosetOf;
    for (std::size_t i = 0; i < rel.cosets.size(); ++i)
        for (const auto& m : rel.cosets[i].members) cosetOf.emplace(m, i);

    // H0(phi): 1 -> H0(D) -> H0(E)
    std::vector<std::size_t> phi0;
    bool phi0Defined = true;
    for (const auto& x : hD.h0.elements) {
        auto idx = hE.h0.indexOf(inc.incl[0].apply(x));
        if (!idx) {
            phi0Defined = false;
            break;
        }
        phi0.push_back(*idx);
    }
    rep.exactness.add("H0(phi) lands in H0(E)", phi0Defined, "an invariant unit of D maps outside H0(E)");
    if (!phi0Defined) return rep;
    std::vector<std::size_t> kernel0;
    for (std::size_t i = 0; i < phi0.size(); ++i)
        if (phi0[i] == hE.h0.identity) kernel0.push_back(i);
    addNode(rep.exactness, "exact at H0(D)", {hD.h0.identity}, kernel0);

    // H0(pi): H0(E) -> H0(D -> E)
    std::vector<std::size_t> pi0;
    for (const auto& x : hE.h0.elements) pi0.push_back(cosetOf.at(x));
    std::vector<std::size_t> fiber0;
    for (std::size_t i = 0; i < pi0.size(); ++i)
        if (pi0[i] == 0) fiber0.push_back(i);
    addNode(rep.exactness, "exact at H0(E)", phi0, fiber0);

    // The connecting map H0(D -> E) -> H1(D), indexed by cosets.
    std::map<std::size_t, std::size_t> partial;
    for (auto c : rel.points) partial[c] = connectingMap(inc, hD.h1, rel.cosets[c]);
    bool pi0Defined = true;
    for (auto c : pi0) pi0Defined = pi0Defined && partial.count(c);
    rep.exactness.add("H0(pi) lands in H0(D->E)", pi0Defined, "an invariant unit of E maps outside H0(D->E)");
    std::vector<std::size_t> fiberPartial;
    for (const auto& [c, cls] : partial)
        if (cls == 0) fiberPartial.push_back(c);
    addNode(rep.exactness, "exact at H0(D->E)", pi0, fiberPartial);

    // H1(phi): H1(D) -> H1(E)
    std::vector<std::size_t> phi1;
    for (const auto& o : hD.h1) {
        auto idx = orbitIndex(hE.h1, inc.incl[1].apply(o.representative));
        if (!idx) throw LevelMismatch("the image of a cocycle of D is not a cocycle of E");
        phi1.push_back(*idx);
    }
    std::vector<std::size_t> imagePartial, fiber1;
    for (const auto& [c, cls] : partial) imagePartial.push_back(cls);
    for (std::size_t i = 0; i < phi1.size(); ++i)
        if (phi1[i] == 0) fiber1.push_back(i);
    addNode(rep.exactness, "exact at H1(D)", imagePartial, fiber1);

    // Normality of the embedded unit groups, level by level.
    std::array<std::vector<Vec>, 3> sub;
    std::array<std::vector<Vec>, 3> units;
    std::array<bool, 3> full{};
    const std::array<const StructureAlgebra*, 3> levels{dE.level0.get(), dE.level1.get(), dE.level2.get()};
    bool normal = true;
    for (int level = 0; level < 3 && normal; ++level) {
        const auto n = static_cast<std::size_t>(level);
        const std::string name = "normal at level " + std::to_string(level);
        full[n] = inc.incl[n].rows() == inc.incl[n].cols();
        if (full[n]) {
            rep.normality.add(name, true);
            continue;
        }
        sub[n] = embeddedUnits(inc, level, cfg);
        if (levels[n]->isCommutative()) {
            rep.normality.add(name, true);
            continue;
        }
        units[n] = level == 0 ? hE.units0 : enumerateUnits(*levels[n], cfg);
        auto w = normalityWitness(*levels[n], units[n], sub[n]);
        rep.normality.add(name, !w, w.value_or(""));
        normal = !w;
    }
    if (!normal) return rep;

    // H1(pi): H1(E) -> H1(D -> E) on the quotient pre-cosimplicial group.
    const QuotientDiagram q{&dE, sub, full};
    std::vector<Vec> units0;
    for (const auto& c : rel.cosets) units0.push_back(c.representative);
    std::sort(units0.begin(), units0.end());
    std::set<Vec> classes1;
    if (full[1]) {
        classes1.insert(q.one1());
    } else {
        if (units[1].empty()) units[1] = enumerateUnits(*dE.level1, cfg);
        for (const auto& u : units[1]) classes1.insert(q.canon(1, u));
    }
    std::vector<Vec> z1;
    for (const auto& X : classes1)
        if (isCocycle(q, X)) z1.push_back(X);
    const auto h1C = orbitPartition(q, z1, units0);
    rep.extended = true;
    rep.termSizes.emplace_back("H1(D->E)", h1C.size());

    std::vector<std::size_t> fiber2;
    for (std::size_t j = 0; j < hE.h1.size(); ++j) {
        auto idx = orbitIndex(h1C, q.canon(1, hE.h1[j].representative));
        if (!idx) throw LevelMismatch("the image of a cocycle of E is not a cocycle of the quotient");
        if (*idx == 0) fiber2.push_back(j);
    }
    addNode(rep.exactness, "exact at H1(E)", phi1, fiber2);
    return rep;
}

} // namespace hopfcoh
