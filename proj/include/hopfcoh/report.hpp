#pragma once

#include <string>
#include <vector>

namespace hopfcoh {

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string witness; // first failing basis tuple, empty on success
};

/// Outcome of an axiom suite: one entry per named identity.
struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const AxiomCheck* firstFailure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }

    void add(std::string name, bool ok, std::string witness = {}) {
        checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(witness)});
    }

    void merge(const std::string& prefix, const AxiomReport& other) {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
    }

    /// Throws AxiomError for the first failing check.
    void require() const;
};

} // namespace hopfcoh
