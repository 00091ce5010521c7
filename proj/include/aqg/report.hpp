#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace aqg {

struct Check {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(const std::string& name, double res, double tol) {
        checks.push_back({name, res, tol, res < tol});
    }
    // For rank/flag style checks: residual 0 = ok, 1 = violated.
    void add_flag(const std::string& name, bool ok) {
        checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
    }
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    double worst() const {
        double w = 0.0;
        for (const auto& c : checks) w = std::max(w, c.residual);
        return w;
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

// Toolkit-level error with a coarse category used for CLI exit codes.
struct Error : std::runtime_error {
    enum class Kind { parse = 1, axiom = 2, haar = 3, verification = 4 };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

}  // namespace aqg
