#include "pcv/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace pcv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_ordered_json(const VerificationReport& r) {
    ordered_json j;
    j["check"] = r.check;
    ordered_json params;
    params["ell"] = r.ell ? ordered_json(*r.ell) : ordered_json(nullptr);
    params["k"] = r.k ? ordered_json(*r.k) : ordered_json(nullptr);
    params["N"] = r.precision ? ordered_json(*r.precision) : ordered_json(nullptr);
    params["n_max"] = r.n_max ? ordered_json(*r.n_max) : ordered_json(nullptr);
    j["params"] = params;
    j["status"] = status_name(r.status);
    j["first_mismatch"] =
        r.first_mismatch ? ordered_json(*r.first_mismatch) : ordered_json(nullptr);
    j["lhs"] = r.lhs ? ordered_json(*r.lhs) : ordered_json(nullptr);
    j["rhs"] = r.rhs ? ordered_json(*r.rhs) : ordered_json(nullptr);
    if (r.note) j["note"] = *r.note;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerificationReport from_ordered_json(const ordered_json& j) {
    VerificationReport r;
    r.check = j.at("check").get<std::string>();
    const auto& p = j.at("params");
    if (!p.at("ell").is_null()) r.ell = p.at("ell").get<long long>();
    if (!p.at("k").is_null()) r.k = p.at("k").get<long long>();
    if (!p.at("N").is_null()) r.precision = p.at("N").get<std::size_t>();
    if (!p.at("n_max").is_null()) r.n_max = p.at("n_max").get<std::size_t>();
    std::string st = j.at("status").get<std::string>();
    r.status = st == "pass"     ? CheckStatus::pass
               : st == "fail"   ? CheckStatus::fail
                                : CheckStatus::skipped;
    if (!j.at("first_mismatch").is_null())
        r.first_mismatch = j.at("first_mismatch").get<std::size_t>();
    if (!j.at("lhs").is_null()) r.lhs = j.at("lhs").get<std::string>();
    if (!j.at("rhs").is_null()) r.rhs = j.at("rhs").get<std::string>();
    if (j.contains("note") && !j.at("note").is_null()) r.note = j.at("note").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) { return to_ordered_json(r).dump(); }

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_ordered_json(r));
    return arr.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    return from_ordered_json(ordered_json::parse(text));
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
    ordered_json arr = ordered_json::parse(text);
    std::vector<VerificationReport> out;
    for (const auto& j : arr) out.push_back(from_ordered_json(j));
    return out;
}

std::string reports_to_table(const std::vector<VerificationReport>& rs) {
    std::ostringstream os;
    os << std::left << std::setw(26) << "CHECK" << std::setw(24) << "PARAMS" << std::setw(9)
       << "STATUS" << std::setw(10) << "MISMATCH" << std::setw(16) << "LHS" << std::setw(16)
       << "RHS" << "MS\n";
    for (const auto& r : rs) {
        std::ostringstream params;
        if (r.ell) params << "ell=" << *r.ell << " ";
        if (r.k) params << "k=" << *r.k << " ";
        if (r.precision) params << "N=" << *r.precision << " ";
        if (r.n_max) params << "n<=" << *r.n_max;
        auto clip = [](const std::string& s, std::size_t w) {
            return s.size() <= w ? s : s.substr(0, w - 3) + "...";
        };
        os << std::left << std::setw(26) << clip(r.check, 25) << std::setw(24)
           << clip(params.str(), 23) << std::setw(9) << status_name(r.status) << std::setw(10)
           << (r.first_mismatch ? std::to_string(*r.first_mismatch) : "-") << std::setw(16)
           << clip(r.lhs.value_or("-"), 15) << std::setw(16) << clip(r.rhs.value_or("-"), 15)
           << r.elapsed_ms << "\n";
        if (r.note) os << "    note: " << *r.note << "\n";
    }
    return os.str();
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.check == b.check && a.ell == b.ell && a.k == b.k && a.precision == b.precision &&
           a.n_max == b.n_max && a.status == b.status && a.first_mismatch == b.first_mismatch &&
           a.lhs == b.lhs && a.rhs == b.rhs && a.note == b.note && a.elapsed_ms == b.elapsed_ms;
}

}  // namespace pcv
