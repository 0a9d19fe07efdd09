#ifndef MTC_REPORT_HPP
#define MTC_REPORT_HPP

#include <string>
#include <vector>

namespace mtc {

enum class CheckStatus { pass, fail, unsupported };

inline const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::unsupported: return "unsupported";
    }
    return "unsupported";
}

struct CheckResult {
    std::string check;
    CheckStatus status = CheckStatus::pass;
    std::string witness;  // attached on fail/unsupported, empty otherwise
};

struct Report {
    std::vector<CheckResult> entries;

    void add(std::string check, CheckStatus status, std::string witness = {}) {
        entries.push_back({std::move(check), status, std::move(witness)});
    }
    void add_outcome(std::string check, bool ok, std::string witness = {}) {
        add(std::move(check), ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? std::string{} : std::move(witness));
    }
    void merge(Report other) {
        for (auto& e : other.entries) entries.push_back(std::move(e));
    }
    bool has_failures() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::fail) return true;
        return false;
    }
    bool all_passed() const {
        for (const auto& e : entries)
            if (e.status != CheckStatus::pass) return false;
        return true;
    }
};

}  // namespace mtc

#endif
