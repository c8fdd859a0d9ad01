#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcv {

enum class CheckStatus { pass, fail, skipped };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

// Structured outcome of one identity check. On failure, first_mismatch is
// the smallest mismatching exponent and lhs/rhs hold the two witness values
// there (canonical residues / reduced rationals as strings).
struct VerificationReport {
    std::string check;
    std::optional<long long> ell;
    std::optional<long long> k;
    std::optional<std::size_t> precision;
    std::optional<std::size_t> n_max;
    CheckStatus status = CheckStatus::pass;
    std::optional<std::size_t> first_mismatch;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::optional<std::string> note;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return status != CheckStatus::fail; }

    void fail_at(std::size_t index, std::string lhs_value, std::string rhs_value) {
        status = CheckStatus::fail;
        if (!first_mismatch || index < *first_mismatch) {
            first_mismatch = index;
            lhs = std::move(lhs_value);
            rhs = std::move(rhs_value);
        }
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// JSON (de)serialization and the fixed-width human table live in report.cpp
// to keep nlohmann out of every translation unit.
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);
VerificationReport report_from_json(const std::string& text);
std::vector<VerificationReport> reports_from_json(const std::string& text);
std::string reports_to_table(const std::vector<VerificationReport>& rs);

bool operator==(const VerificationReport& a, const VerificationReport& b);

}  // namespace pcv
