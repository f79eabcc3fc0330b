#include <doctest.h>

#include <array>
#include <fstream>
#include <random>
#include <sstream>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/io.hpp"

using namespace hopfcoh;

namespace {

const FieldSpec F3 = FieldSpec::prime(3);

std::string readFile(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool sameAlgebra(const StructureAlgebra& a, const StructureAlgebra& b) {
    if (!(a.field() == b.field()) || a.dim() != b.dim() || a.labels() != b.labels() || a.unit() != b.unit())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!(a.constant(i, j, k) == b.constant(i, j, k))) return false;
    return true;
}

// Serializes, parses back with validation, and demands the same bytes again.
SpecFile roundTrip(const SpecFile& s) {
    const std::string text = serializeSpec(s);
    SpecFile back = parseSpec(text);
    CHECK(serializeSpec(back) == text);
    CHECK(back.name == s.name);
    CHECK(back.field == s.field);
    CHECK(back.kind() == s.kind());
    return back;
}

std::string h4Text() { return serializeSpec(specOf(std::make_shared<const HopfAlgebra>(buildSweedlerH4(F3)))); }

std::string replaceFirst(std::string s, const std::string& from, const std::string& to) {
    const auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
}

} // namespace

TEST_CASE("fnv1a64 reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(hashTag("") == "fnv1a64:cbf29ce484222325");
}

TEST_CASE("round trips of the builders") {
    for (const FieldSpec f : {F3, FieldSpec::prime(5), FieldSpec::rational()}) {
        CAPTURE(f.name());
        auto h4 = std::make_shared<const HopfAlgebra>(buildSweedlerH4(f));
        SpecFile back = roundTrip(specOf(h4));
        REQUIRE(back.hopf);
        CHECK(sameHopfAlgebra(*back.hopf, *h4));
        CHECK(checkHopfAxioms(*back.hopf).passed());

        auto e2 = std::make_shared<const ComoduleAlgebra>(buildDualNumbersComodule(h4));
        back = roundTrip(specOf(e2));
        REQUIRE(back.comodule);
        CHECK(sameAlgebra(back.comodule->algebra(), e2->algebra()));
        CHECK(sameHopfAlgebra(*back.comodule->hopf, *h4));
        CHECK(back.comodule->coaction == e2->coaction);

        const HopfModule m = regularHopfModule(e2);
        back = roundTrip(specOf(m, "regular"));
        REQUIRE(back.module);
        CHECK(back.module->labels == m.labels);
        CHECK(back.module->action == m.action);
        CHECK(back.module->coaction == m.coaction);
    }
}

TEST_CASE("function algebras keep their group") {
    for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
        auto h = std::make_shared<const HopfAlgebra>(buildFunctionHopf(g, F3));
        const SpecFile back = roundTrip(specOf(h));
        REQUIRE(back.hopf);
        REQUIRE(back.hopf->functionGroup);
        CHECK(*back.hopf->functionGroup == g);
        CHECK(sameHopfAlgebra(*back.hopf, *h));
    }
}

TEST_CASE("a function_group table that disagrees with the maps is rejected") {
    auto h = std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::cyclic(2), F3));
    Json j = Json::parse(serializeSpec(specOf(h)));
    // Same group, relabelled so that delta_0 is no longer the identity.
    j["hopf"]["function_group"]["table"] = Json::array({Json::array({1, 0}), Json::array({0, 1})});
    CHECK_THROWS_AS(parseSpec(j.dump()), AxiomError);
}

TEST_CASE("the shipped h4 spec is Sweedler's algebra") {
    const SpecFile s = parseSpecFile(std::filesystem::path(HOPFCOH_SPEC_DIR) / "h4_f3.spec");
    REQUIRE(s.hopf);
    CHECK(checkHopfAxioms(*s.hopf).passed());
    CHECK(sameHopfAlgebra(*s.hopf, buildSweedlerH4(F3)));
}

TEST_CASE("empty and malformed text") {
    CHECK_THROWS_AS(parseSpec(""), ParseError);
    CHECK_THROWS_AS(parseSpec("  \n\t"), ParseError);
    try {
        parseSpec("{\n  \"field\": {\"type\": \"prime\", \"p\": 3},\n  \"algebra\": [1, }\n}");
        FAIL("no ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() > 0);
    }
    CHECK_THROWS_AS(parseSpec("[1, 2, 3]"), ParseError);
    CHECK_THROWS_AS(parseSpec(R"({"field": {"type": "prime", "p": 3}})"), ParseError);
}

TEST_CASE("dimension errors") {
    const std::string text = h4Text();
    Json j = Json::parse(text);
    SUBCASE("mult of the wrong arity") {
        j["algebra"]["mult"].erase(3);
        CHECK_THROWS_AS(parseSpec(j.dump()), DimensionError);
    }
    SUBCASE("short mult entry") {
        j["algebra"]["mult"][1][2] = Json::array({0, 0, 1});
        CHECK_THROWS_AS(parseSpec(j.dump()), DimensionError);
    }
    SUBCASE("counit with too many columns") {
        j["hopf"]["counit"][0].push_back(0);
        CHECK_THROWS_AS(parseSpec(j.dump()), DimensionError);
    }
    SUBCASE("basis shorter than dim") {
        j["algebra"]["basis"].erase(0);
        CHECK_THROWS_AS(parseSpec(j.dump()), DimensionError);
    }
}

TEST_CASE("scalars must be canonical") {
    const std::string text = h4Text();
    CHECK_THROWS_AS(parseSpec(replaceFirst(text, "\"unit\": [1,", "\"unit\": [4,")), ParseError);
    CHECK_THROWS_AS(parseSpec(replaceFirst(text, "\"unit\": [1,", "\"unit\": [-2,")), ParseError);
    CHECK_THROWS_AS(parseSpec(replaceFirst(text, "\"unit\": [1,", "\"unit\": [\"1\",")), ParseError);

    const FieldSpec q = FieldSpec::rational();
    CHECK(parseMatrixText(R"([["1/2", "-3"], ["0", "7/5"]])", q, 2, 2)(0, 0) == q.fromRational(mpq_class(1, 2)));
    CHECK_THROWS_AS(parseMatrixText(R"([["2/4"]])", q, 1, 1), ParseError);
    CHECK_THROWS_AS(parseMatrixText(R"([["1/-2"]])", q, 1, 1), ParseError);
    CHECK_THROWS_AS(parseMatrixText(R"([["3/1"]])", q, 1, 1), ParseError);
    CHECK_THROWS_AS(parseMatrixText(R"([[1]])", q, 1, 1), ParseError);
    CHECK_THROWS_AS(parseMatrixText(R"([[1, 2]])", F3, 1, 1), DimensionError);
}

TEST_CASE("axiom failures name the axiom") {
    Json j = Json::parse(h4Text());
    j["hopf"]["antipode"] = Json::array({Json::array({1, 0, 0, 0}), Json::array({0, 1, 0, 0}),
                                         Json::array({0, 0, 1, 0}), Json::array({0, 0, 0, 1})});
    try {
        parseSpec(j.dump());
        FAIL("no AxiomError");
    } catch (const AxiomError& e) {
        CHECK(!e.axiom().empty());
        CHECK(!e.witness().empty());
    }
    // Without validation the same text still parses.
    CHECK_NOTHROW(parseSpec(j.dump(), {}, false));
}

TEST_CASE("comodule specs may reference the Hopf algebra by path") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hopfcoh_io_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "h4.spec") << h4Text();
    }
    Json j = Json::parse(readFile(std::filesystem::path(HOPFCOH_SPEC_DIR) / "e2_over_h4_f3.spec"));
    j["comodule"]["hopf"] = "h4.spec";
    const SpecFile s = parseSpec(j.dump(), dir);
    REQUIRE(s.comodule);
    CHECK(sameHopfAlgebra(*s.comodule->hopf, buildSweedlerH4(F3)));
    CHECK_THROWS(parseSpec(j.dump(), dir / "missing"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("shipped specs are byte-identical to their builders") {
    const std::filesystem::path dir(HOPFCOH_SPEC_DIR);
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".spec") continue;
        CAPTURE(entry.path().string());
        const std::string text = readFile(entry.path());
        const SpecFile s = parseSpecFile(entry.path());
        CHECK(serializeSpec(s) == text);
        ++seen;
    }
    CHECK(seen == 10);
}

TEST_CASE("random structures round-trip without validation") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 60; ++trial) {
        const bool rational = trial % 3 == 0;
        const FieldSpec f = rational ? FieldSpec::rational() : FieldSpec::prime(std::array{2u, 3u, 5u, 7u, 101u}[trial % 5]);
        const std::size_t n = 1 + rng() % 4;
        auto scalar = [&] {
            if (!rational) return f.fromInt(static_cast<std::int64_t>(rng() % 1000));
            const long num = static_cast<long>(rng() % 41) - 20, den = 1 + static_cast<long>(rng() % 9);
            return f.fromRational(mpq_class(num, den));
        };
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n));
        for (auto& row : mult)
            for (auto& v : row) {
                v = zeroVec(f, n);
                for (auto& c : v) c = rng() % 3 == 0 ? scalar() : f.zero();
            }
        Vec unit = zeroVec(f, n);
        for (auto& c : unit) c = scalar();
        auto a = std::make_shared<const StructureAlgebra>(f, labels, mult, unit);

        const std::string text = serializeSpec(specOf(a, "random " + std::to_string(trial)));
        const SpecFile back = parseSpec(text, {}, false);
        REQUIRE(back.algebra);
        CHECK(sameAlgebra(*back.algebra, *a));
        CHECK(serializeSpec(back) == text);

        Matrix m(f, 1 + rng() % 3, 1 + rng() % 3);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar();
        CHECK(parseMatrixText(toJson(m).dump(), f, m.rows(), m.cols()) == m);
    }
}
