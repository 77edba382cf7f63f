#pragma once

/**
 * @file report.hpp
 * @brief Validation reports shared by every validator in the library.
 *
 * Validators never throw on bad geometry; they return a report whose
 * violations pinpoint the failed condition, a human-readable detail, and a
 * witness (offending indices, points, or values rendered as text). A report
 * is valid exactly when the violation list is empty.
 */

#include <string>
#include <vector>

namespace hyperfan {

/// One failed condition with its context.
struct Violation {
    std::string condition;  ///< stable condition identifier, e.g. "completeness"
    std::string detail;     ///< human-readable explanation
    std::string witness;    ///< offending data rendered as text (may be empty)
};

/// Outcome of a validation pass; valid iff no violations were recorded.
struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    void add(std::string condition, std::string detail, std::string witness = "") {
        violations.push_back({std::move(condition), std::move(detail), std::move(witness)});
    }
    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

}  // namespace hyperfan
