#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace yf {

/// Outcome of a verification sweep: counts every check, keeps the first
/// few failures verbatim so reports stay readable when something breaks.
struct Report {
    std::string suite;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    static constexpr std::size_t kMaxRecorded = 32;

    explicit Report(std::string name = {}) : suite(std::move(name)) {}

    bool ok() const { return failures.empty(); }

    void check(bool cond, const std::string& what) {
        ++checks;
        if (!cond && failures.size() < kMaxRecorded) failures.push_back(what);
        if (!cond && failures.size() >= kMaxRecorded) ++dropped_;
    }

    void merge(const Report& other) {
        checks += other.checks;
        for (const auto& f : other.failures)
            if (failures.size() < kMaxRecorded) failures.push_back(other.suite + ": " + f);
    }

    std::string summary() const {
        std::string s = suite + ": " + (ok() ? "PASS" : "FAIL") + " (" +
                        std::to_string(checks) + " checks";
        if (!ok()) s += ", " + std::to_string(failures.size()) + " failures shown";
        s += ")";
        return s;
    }

  private:
    std::size_t dropped_ = 0;
};

}  // namespace yf
