#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfcoh {

/// Base of every error raised by the library. `kind()` is the short name
/// used in reports and CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HOPFCOH_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

HOPFCOH_DEFINE_ERROR(ZeroInverse);
HOPFCOH_DEFINE_ERROR(DimensionMismatch);
HOPFCOH_DEFINE_ERROR(NotSquare);
HOPFCOH_DEFINE_ERROR(FieldMismatch);
HOPFCOH_DEFINE_ERROR(InvalidField);
HOPFCOH_DEFINE_ERROR(ParentMismatch);
HOPFCOH_DEFINE_ERROR(EnumerationOverBudget);
HOPFCOH_DEFINE_ERROR(RationalFieldNotEnumerable);
HOPFCOH_DEFINE_ERROR(NotInvertible);
HOPFCOH_DEFINE_ERROR(NotAGroup);
HOPFCOH_DEFINE_ERROR(NotASubgroup);
HOPFCOH_DEFINE_ERROR(NotAFunctionAlgebra);
HOPFCOH_DEFINE_ERROR(LevelMismatch);
HOPFCOH_DEFINE_ERROR(BadIndex);
HOPFCOH_DEFINE_ERROR(NotCommutative);
HOPFCOH_DEFINE_ERROR(NotInjective);
HOPFCOH_DEFINE_ERROR(NotAMorphism);
HOPFCOH_DEFINE_ERROR(LiftNotInSubalgebra);
HOPFCOH_DEFINE_ERROR(ConditionFFailed);
HOPFCOH_DEFINE_ERROR(NotInTBullet);
HOPFCOH_DEFINE_ERROR(DimensionError);

#undef HOPFCOH_DEFINE_ERROR

/// Raised when a parsed structure fails one of its axiom checks.
class AxiomError : public Error {
public:
    AxiomError(std::string axiom, std::string witness)
        : Error("AxiomError", axiom + " fails at " + witness),
          axiom_(std::move(axiom)), witness_(std::move(witness)) {}

    const std::string& axiom() const noexcept { return axiom_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::string witness_;
};

/// Malformed spec text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& what)
        : Error("ParseError", "line " + std::to_string(line) + ", col " +
                                  std::to_string(col) + ": " + what),
          line_(line), col_(col) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

} // namespace hopfcoh
