#pragma once

// Pass/fail reports produced by the verification suites.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace wallx {

struct CheckResult {
    std::string name;
    bool passed = true;
    long checked = 0; // number of individual equalities asserted
    std::optional<std::int64_t> first_failure;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const
    {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return !checks.empty();
    }

    std::string text() const
    {
        std::ostringstream os;
        os << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << "\n";
        for (const auto &c : checks) {
            os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
            if (c.checked > 1) {
                os << " (" << c.checked << " checks)";
            }
            if (!c.detail.empty()) {
                os << ": " << c.detail;
            }
            os << "\n";
        }
        return os.str();
    }
};

} // namespace wallx
