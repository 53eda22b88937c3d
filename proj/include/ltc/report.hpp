#pragma once

#include <string>
#include <vector>

namespace ltc {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;  // first failing tuple when !passed
};

/// Named pass/fail lines, in evaluation order.
struct CheckReport {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace ltc
