#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace cqg {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

/// One invariant check: id, outcome, worst absolute residual seen, and a
/// witness naming the offending labels/indices (empty when none).
struct CheckRecord {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    double residual = 0.0;
    std::string witness;
    std::string reason;  // non-empty exactly when status == skipped
};

struct VerificationReport {
    std::string instance;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<CheckRecord> checks;  // sorted by id

    bool all_passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) {
            return c.status == CheckStatus::fail;
        });
    }

    std::vector<CheckRecord> violations() const {
        std::vector<CheckRecord> out;
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) out.push_back(c);
        return out;
    }

    const CheckRecord* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }

    void sort_by_id() {
        std::sort(checks.begin(), checks.end(),
                  [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    }
};

}  // namespace cqg
