#pragma once

// Command-line front end: dispatch, built-in structures and the suite of
// worked examples shared by the `paper-examples` command and the
// acceptance test.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hopfcoh/io.hpp"
#include "hopfcoh/parallel.hpp"

namespace hopfcoh::app {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

/// Runs the CLI on `args` (without the program name). Reports go to `out`
/// or to the --out file; diagnostics go to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Named structures available through `builtin <name>`; the shipped spec
/// files are their serializations.
const std::map<std::string, SpecFile>& builtins();

struct ExampleRow {
    int criterion = 0;
    std::string title;
    std::string expected;
    std::string computed;
    bool correct = false;
    double seconds = 0;      // the timed quantity compared against the limit
    double limitSeconds = 0;

    bool withinLimit() const { return seconds <= limitSeconds; }
};

/// Criteria 1 to 9, in order. Library errors are caught per row and make
/// the row incorrect.
std::vector<ExampleRow> runPaperExamples(const SearchConfig& cfg);

/// The table as a report; timings only when `timing` is set, so that the
/// default report is byte-identical across runs and thread counts.
Json paperExamplesReport(const std::vector<ExampleRow>& rows, bool timing);

} // namespace hopfcoh::app
