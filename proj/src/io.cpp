#include "hopfcoh/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hopfcoh {

namespace {

[[noreturn]] void shapeError(const std::string& path, const std::string& what) {
    throw ParseError(0, 0, path + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) shapeError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) shapeError(path, std::string("missing \"") + key + "\"");
    return *it;
}

std::size_t count(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        shapeError(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) shapeError(path, "expected an array");
    return j;
}

void requireSize(const Json& j, std::size_t n, const std::string& path) {
    if (array(j, path).size() != n)
        throw DimensionError(path + ": expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
}

Scalar parseScalar(const Json& j, const FieldSpec& f, const std::string& path) {
    if (f.isPrime()) {
        if (!j.is_number_integer()) shapeError(path, "expected an integer residue");
        const std::int64_t v = j.get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(f.characteristic()))
            shapeError(path, "residue " + std::to_string(v) + " outside [0, " + std::to_string(f.characteristic()) + ")");
        return f.fromResidue(static_cast<std::uint32_t>(v));
    }
    if (!j.is_string()) shapeError(path, "expected a rational string \"a/b\"");
    const std::string text = j.get<std::string>();
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) shapeError(path, "malformed rational \"" + text + "\"");
    q.canonicalize();
    const Scalar s = f.fromRational(q);
    if (s.toString() != text) shapeError(path, "rational \"" + text + "\" is not in lowest terms");
    return s;
}

Vec parseVec(const Json& j, const FieldSpec& f, std::size_t n, const std::string& path) {
    requireSize(j, n, path);
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(parseScalar(j[i], f, path + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix parseMatrix(const Json& j, const FieldSpec& f, std::size_t rows, std::size_t cols, const std::string& path) {
    requireSize(j, rows, path);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vec row = parseVec(j[r], f, cols, path + "[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

std::vector<std::string> parseLabels(const Json& j, std::size_t n, const std::string& path) {
    requireSize(j, n, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_string()) shapeError(path + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

FieldSpec parseField(const Json& j) {
    const Json& type = member(j, "type", "field");
    if (type == "rational") return FieldSpec::rational();
    if (type != "prime") shapeError("field.type", "expected \"prime\" or \"rational\"");
    return FieldSpec::prime(count(member(j, "p", "field"), "field.p"));
}

AlgebraPtr parseAlgebra(const Json& j, const FieldSpec& f, const std::string& path) {
    const std::size_t n = count(member(j, "dim", path), path + ".dim");
    auto labels = parseLabels(member(j, "basis", path), n, path + ".basis");
    Vec unit = parseVec(member(j, "unit", path), f, n, path + ".unit");
    const Json& mult = member(j, "mult", path);
    requireSize(mult, n, path + ".mult");
    std::vector<std::vector<Vec>> table(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::string pa = path + ".mult[" + std::to_string(a) + "]";
        requireSize(mult[a], n, pa);
        for (std::size_t b = 0; b < n; ++b)
            table[a].push_back(parseVec(mult[a][b], f, n, pa + "[" + std::to_string(b) + "]"));
    }
    return std::make_shared<const StructureAlgebra>(f, std::move(labels), table, std::move(unit));
}

HopfPtr parseHopfBlock(const Json& j, AlgebraPtr alg, std::string name, bool validate, const std::string& path) {
    const FieldSpec& f = alg->field();
    const std::size_t n = alg->dim();
    HopfAlgebra h{alg,
                  parseMatrix(member(j, "comult", path), f, n * n, n, path + ".comult"),
                  parseMatrix(member(j, "counit", path), f, 1, n, path + ".counit"),
                  parseMatrix(member(j, "antipode", path), f, n, n, path + ".antipode"),
                  std::move(name),
                  std::nullopt,
                  false};
    if (auto it = j.find("function_group"); it != j.end()) {
        const std::string gp = path + ".function_group";
        const Json& rows = member(*it, "table", gp);
        requireSize(rows, n, gp + ".table");
        std::vector<std::vector<std::uint32_t>> table;
        for (std::size_t r = 0; r < n; ++r) {
            requireSize(rows[r], n, gp + ".table[" + std::to_string(r) + "]");
            table.emplace_back();
            for (const auto& x : rows[r]) table.back().push_back(static_cast<std::uint32_t>(count(x, gp + ".table")));
        }
        std::vector<std::string> labels;
        if (auto l = it->find("labels"); l != it->end()) labels = parseLabels(*l, n, gp + ".labels");
        FiniteGroup g(std::move(table), std::move(labels));
        if (!sameHopfAlgebra(h, buildFunctionHopf(g, f)))
            throw AxiomError("function_group", "the structure maps are not those of k^G for the given table");
        h.functionGroup = std::move(g);
    }
    if (validate) checkHopfAxioms(h).require();
    return std::make_shared<const HopfAlgebra>(std::move(h));
}

std::string nameOf(const Json& root) {
    auto it = root.find("name");
    if (it == root.end()) return {};
    if (!it->is_string()) shapeError("name", "expected a string");
    return it->get<std::string>();
}

std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parseJson(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // byte is the 1-based offset of the offending character.
        const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("; "); pos != std::string::npos) what = what.substr(pos + 2);
        throw ParseError(line, col, what);
    }
}

SpecFile parseRoot(const Json& root, const std::filesystem::path& baseDir, bool validate,
                   const std::optional<FieldSpec>& inherited) {
    if (!root.is_object()) shapeError("$", "expected an object");
    SpecFile s;
    s.name = nameOf(root);
    if (auto it = root.find("field"); it != root.end()) {
        s.field = parseField(*it);
        if (inherited && !(*inherited == s.field)) throw FieldMismatch("nested spec over " + s.field.name());
    } else if (inherited) {
        s.field = *inherited;
    } else {
        shapeError("$", "missing \"field\"");
    }
    s.algebra = parseAlgebra(member(root, "algebra", "$"), s.field, "algebra");
    if (validate) checkAlgebraAxioms(*s.algebra).require();

    const bool hasHopf = root.contains("hopf"), hasComodule = root.contains("comodule");
    if (hasHopf && hasComodule) shapeError("$", "\"hopf\" and \"comodule\" exclude each other");
    if (root.contains("module") && !hasComodule) shapeError("module", "requires a \"comodule\" block");
    if (hasHopf) s.hopf = parseHopfBlock(root["hopf"], s.algebra, s.name, validate, "hopf");
    if (!hasComodule) return s;

    const Json& block = root["comodule"];
    const Json& hopfRef = member(block, "hopf", "comodule");
    SpecFile inner;
    if (hopfRef.is_string()) {
        const std::filesystem::path p = baseDir / hopfRef.get<std::string>();
        inner = parseRoot(parseJson(readFile(p)), p.parent_path(), validate, s.field);
    } else {
        inner = parseRoot(hopfRef, baseDir, validate, s.field);
    }
    if (!inner.hopf) shapeError("comodule.hopf", "does not describe a Hopf algebra");
    const std::size_t nE = s.algebra->dim(), nH = inner.hopf->dim();
    auto e = std::make_shared<ComoduleAlgebra>(ComoduleAlgebra{
        inner.hopf, s.algebra, parseMatrix(member(block, "coaction", "comodule"), s.field, nE * nH, nE, "comodule.coaction"),
        s.name});
    if (validate) checkComoduleAlgebra(*e).require();
    s.comodule = e;

    if (auto it = root.find("module"); it != root.end()) {
        const std::size_t n = count(member(*it, "dim", "module"), "module.dim");
        std::vector<std::string> labels;
        if (auto l = it->find("basis"); l != it->end()) {
            labels = parseLabels(*l, n, "module.basis");
        } else {
            for (std::size_t i = 0; i < n; ++i) labels.push_back("m" + std::to_string(i));
        }
        const Json& acts = member(*it, "action", "module");
        requireSize(acts, nE, "module.action");
        std::vector<Matrix> action;
        for (std::size_t j = 0; j < nE; ++j)
            action.push_back(parseMatrix(acts[j], s.field, n, n, "module.action[" + std::to_string(j) + "]"));
        HopfModule m{s.comodule, std::move(labels), std::move(action),
                     parseMatrix(member(*it, "coaction", "module"), s.field, n * nH, n, "module.coaction")};
        if (validate) checkHopfModule(m).require();
        s.module = std::move(m);
    }
    return s;
}

Json fieldJson(const FieldSpec& f) {
    Json j;
    if (f.isPrime()) {
        j["type"] = "prime";
        j["p"] = f.characteristic();
    } else {
        j["type"] = "rational";
    }
    return j;
}

Json algebraJson(const StructureAlgebra& a) {
    Json j;
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    j["unit"] = toJson(a.unit());
    Json mult = Json::array();
    for (std::size_t x = 0; x < a.dim(); ++x) {
        Json row = Json::array();
        for (std::size_t y = 0; y < a.dim(); ++y) row.push_back(toJson(a.multiply(a.basisVector(x), a.basisVector(y))));
        mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    return j;
}

Json hopfJson(const HopfAlgebra& h) {
    Json j;
    j["comult"] = toJson(h.comult);
    j["counit"] = toJson(h.counit);
    j["antipode"] = toJson(h.antipode);
    if (h.functionGroup) {
        Json g;
        g["table"] = h.functionGroup->table();
        g["labels"] = h.functionGroup->labels();
        j["function_group"] = std::move(g);
    }
    return j;
}

bool scalarArray(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

void renderJsonInto(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' '), inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += inner + Json(it.key()).dump() + ": ";
            renderJsonInto(it.value(), out, indent + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (scalarArray(j)) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner;
            renderJsonInto(j[i], out, indent + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

std::string plain(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inlineArray(const Json& j) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + plain(j[i]);
    return out + "]";
}

void renderTextInto(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (v.is_primitive()) {
                out += pad + it.key() + ": " + plain(v) + "\n";
            } else if (scalarArray(v)) {
                out += pad + it.key() + ": " + inlineArray(v) + "\n";
            } else if (v.empty()) {
                out += pad + it.key() + ": " + (v.is_array() ? "[]" : "{}") + "\n";
            } else {
                out += pad + it.key() + ":\n";
                renderTextInto(v, out, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (x.is_primitive()) {
                out += pad + "- " + plain(x) + "\n";
            } else if (scalarArray(x)) {
                out += pad + "- " + inlineArray(x) + "\n";
            } else {
                out += pad + "-\n";
                renderTextInto(x, out, indent + 1);
            }
        }
    } else {
        out += pad + plain(j) + "\n";
    }
}

} // namespace

std::string SpecFile::kind() const {
    if (module) return "module";
    if (comodule) return "comodule";
    if (hopf) return "hopf";
    return "algebra";
}

SpecFile parseSpec(std::string_view text, const std::filesystem::path& baseDir, bool validate) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError(1, 1, "empty spec");
    return parseRoot(parseJson(text), baseDir, validate, std::nullopt);
}

SpecFile parseSpecFile(const std::filesystem::path& path, bool validate) {
    return parseSpec(readFile(path), path.parent_path(), validate);
}

Matrix parseMatrixText(std::string_view text, const FieldSpec& f, std::size_t rows, std::size_t cols) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError(1, 1, "empty matrix");
    return parseMatrix(parseJson(text), f, rows, cols, "$");
}

std::string serializeSpec(const SpecFile& s) {
    Json root;
    if (!s.name.empty()) root["name"] = s.name;
    root["field"] = fieldJson(s.field);
    root["algebra"] = algebraJson(*s.algebra);
    if (s.hopf) root["hopf"] = hopfJson(*s.hopf);
    if (s.comodule) {
        Json inner;
        if (!s.comodule->hopf->name.empty()) inner["name"] = s.comodule->hopf->name;
        inner["algebra"] = algebraJson(s.comodule->hopf->algebra());
        inner["hopf"] = hopfJson(*s.comodule->hopf);
        Json block;
        block["hopf"] = std::move(inner);
        block["coaction"] = toJson(s.comodule->coaction);
        root["comodule"] = std::move(block);
    }
    if (s.module) {
        Json m;
        m["dim"] = s.module->dim();
        m["basis"] = s.module->labels;
        Json acts = Json::array();
        for (const auto& a : s.module->action) acts.push_back(toJson(a));
        m["action"] = std::move(acts);
        m["coaction"] = toJson(s.module->coaction);
        root["module"] = std::move(m);
    }
    return renderJson(root);
}

SpecFile specOf(AlgebraPtr a, std::string name) {
    SpecFile s;
    s.name = std::move(name);
    s.field = a->field();
    s.algebra = std::move(a);
    return s;
}

SpecFile specOf(HopfPtr h) {
    SpecFile s = specOf(h->alg, h->name);
    s.hopf = std::move(h);
    return s;
}

SpecFile specOf(ComodulePtr e) {
    SpecFile s = specOf(e->alg, e->name);
    s.comodule = std::move(e);
    return s;
}

SpecFile specOf(const HopfModule& m, std::string name) {
    SpecFile s = specOf(m.comod);
    if (!name.empty()) s.name = std::move(name);
    s.module = m;
    return s;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hashTag(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string("fnv1a64:") + buf;
}

Json toJson(const Scalar& s) {
    if (s.isResidue()) return s.residue();
    return s.toString();
}

Json toJson(const Vec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(toJson(x));
    return j;
}

Json toJson(const Matrix& m) {
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(toJson(m.row(r)));
    return j;
}

Json toJson(const AxiomReport& r) {
    Json j = Json::array();
    for (const auto& c : r.checks) {
        Json x;
        x["name"] = c.name;
        x["passed"] = c.passed;
        if (!c.passed) x["witness"] = c.witness;
        j.push_back(std::move(x));
    }
    return j;
}

std::string renderJson(const Json& j) {
    std::string out;
    renderJsonInto(j, out, 0);
    return out + "\n";
}

std::string renderText(const Json& j) {
    std::string out;
    renderTextInto(j, out, 0);
    return out;
}

} // namespace hopfcoh
