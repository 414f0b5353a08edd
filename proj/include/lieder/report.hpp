#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieder {

/// One failed identity, located by the basis indices it was evaluated on.
struct Violation {
    std::string rule;                  // e.g. "jacobi", "leibniz", "rep1", "lie2:e"
    std::vector<std::size_t> indices;  // basis tuple the check failed on
    std::string detail;
};

/// Outcome of a verification. All violations are collected, not just the first.
struct Report {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }

    void add(std::string rule, std::vector<std::size_t> indices, std::string detail = {}) {
        violations.push_back({std::move(rule), std::move(indices), std::move(detail)});
    }
    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    bool has_rule(const std::string& rule) const {
        for (const auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }
};

/// A mathematical precondition failed (unverified input, non-cocycle, ...).
/// Dimension mismatches are reported as std::invalid_argument instead.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, Report report = {})
        : std::runtime_error(what), report_(std::move(report)) {}
    const Report& report() const { return report_; }

private:
    Report report_;
};

}  // namespace lieder
