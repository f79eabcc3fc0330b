#pragma once

// One JSON interchange format for structure specs and computed reports.
//
// A spec file is an object with the blocks
//   "field":    {"type": "prime", "p": 3} or {"type": "rational"}
//   "algebra":  {"dim", "basis", "unit", "mult"}, mult[i][j] = e_i e_j
//   "hopf":     {"comult", "counit", "antipode", optional "function_group"}
//   "comodule": {"hopf": inline spec object or relative path, "coaction"}
//   "module":   {"dim", "basis", "action", "coaction"}, requires "comodule"
// plus an optional top-level "name". Matrices are lists of rows. Prime
// field scalars are integers in [0, p); rationals are strings "a/b" in
// lowest terms. "hopf" and "comodule" exclude each other: a file is an
// algebra, a Hopf algebra, a comodule algebra, or a Hopf module.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hopfcoh/comodule.hpp"
#include "hopfcoh/report.hpp"

namespace hopfcoh {

using Json = nlohmann::ordered_json;

struct SpecFile {
    std::string name;
    FieldSpec field = FieldSpec::prime(2);
    AlgebraPtr algebra;
    HopfPtr hopf;          // the file is a Hopf algebra
    ComodulePtr comodule;  // the file is a comodule algebra (or a module over one)
    std::optional<HopfModule> module;

    std::string kind() const;
};

/// Throws ParseError (syntax, with line and column; shape errors carry 0, 0
/// and the JSON path), DimensionError for inconsistent sizes, and, when
/// `validate` is set, AxiomError for the first failing axiom.
SpecFile parseSpec(std::string_view text, const std::filesystem::path& baseDir = {}, bool validate = true);
SpecFile parseSpecFile(const std::filesystem::path& path, bool validate = true);

/// A bare matrix (a list of rows) in the scalar grammar of spec files.
Matrix parseMatrixText(std::string_view text, const FieldSpec& f, std::size_t rows, std::size_t cols);

/// Canonical text; parseSpec(serializeSpec(s)) rebuilds the same structures
/// and serializing again gives the same bytes.
std::string serializeSpec(const SpecFile& s);

SpecFile specOf(AlgebraPtr a, std::string name = {});
SpecFile specOf(HopfPtr h);
SpecFile specOf(ComodulePtr e);
SpecFile specOf(const HopfModule& m, std::string name = {});

std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:" followed by 16 hex digits.
std::string hashTag(std::string_view bytes);

Json toJson(const Scalar& s);
Json toJson(const Vec& v);
Json toJson(const Matrix& m);
Json toJson(const AxiomReport& r);

/// Pretty JSON with arrays of scalars kept on one line, newline-terminated.
std::string renderJson(const Json& j);
/// Indented "key: value" lines, arrays of scalars inline.
std::string renderText(const Json& j);

} // namespace hopfcoh
