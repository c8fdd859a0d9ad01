// Acceptance suite: one pass/fail line per criterion, exact comparisons at
// the stated parameters, wall-clock budgets enforced.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "pcv/congruences.hpp"
#include "subprocess.hpp"

using namespace pcv;

namespace {

struct Criterion {
    int id;
    std::string label;
    std::int64_t budget_ms;
    std::function<bool(std::string&)> run;
};

bool all_pass(const std::vector<VerificationReport>& reports, std::string& detail) {
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) {
            std::ostringstream os;
            os << r.check;
            if (r.ell) os << " ell=" << *r.ell;
            if (r.k) os << " k=" << *r.k;
            if (r.first_mismatch) os << " first_mismatch=" << *r.first_mismatch;
            if (r.lhs) os << " lhs=" << *r.lhs;
            if (r.rhs) os << " rhs=" << *r.rhs;
            detail = os.str();
            return false;
        }
    return true;
}

// Parse "i: value" listing lines emitted by the CLI, skipping '#' headers.
std::vector<std::string> listing_values(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(": ");
        if (colon != std::string::npos) out.push_back(line.substr(colon + 2));
    }
    return out;
}

const std::vector<std::uint64_t> kSweepPrimes = {5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "ell=13 example: raw and mod-13 P_13 coefficients via the CLI",
                        1000, [](std::string& detail) {
        const std::string cli = subprocess::cli_path();
        auto raw = subprocess::run(cli + " series Pell --ell 13 -N 6 --raw");
        auto mod = subprocess::run(cli + " series Pell --ell 13 -N 9");
        if (raw.exit_code != 0 || mod.exit_code != 0) {
            detail = "CLI exited nonzero";
            return false;
        }
        std::vector<std::string> want_raw = {"0", "11", "490", "8349", "89134", "715220"};
        std::vector<std::string> want_mod = {"0", "11", "9", "3", "6", "12", "6", "0", "1"};
        if (listing_values(raw.output) != want_raw) {
            detail = "raw values mismatch: " + raw.output;
            return false;
        }
        if (listing_values(mod.output) != want_mod) {
            detail = "mod-13 values mismatch: " + mod.output;
            return false;
        }
        return true;
    }});

    criteria.push_back({2, "trace side of the ell=13 example: c_13 = 6 and the congruence at N=50", 10000,
                        [](std::string& detail) {
        auto ctx = prime_context(13);
        if (ctx.c != 6) {
            detail = "c_13 = " + std::to_string(ctx.c);
            return false;
        }
        // c_13 T_13 = 3 (Delta|U_13) mod 13 termwise at N=50.
        auto t13 = T_ell_series(13, 50, TraceRoute::rational).scaled(ModResidue(ctx.c, 13));
        auto du = u_operator(reduce_mod(delta(13 * 50).series, 13), 13)
                      .scaled(ModResidue(3, 13));
        if (auto i = first_mismatch(t13, du)) {
            detail = "c T_13 vs 3 Delta|U_13 mismatch at " + std::to_string(*i);
            return false;
        }
        auto rep = verify_theorem1(13, 50);
        return all_pass({rep}, detail);
    }});

    criteria.push_back({3, "theorem1 sweep, ell in {5..31} at N=100, both trace routes",
                        300000, [](std::string& detail) {
        std::vector<VerificationReport> reports;
        for (std::uint64_t ell : kSweepPrimes) {
            reports.push_back(verify_theorem1(ell, 100));
            reports.push_back(verify_tell_routes(ell, 100));
        }
        return all_pass(reports, detail);
    }});

    criteria.push_back({4, "R_k closed forms, k <= 13 with the six exact beta_k, N=200",
                        120000, [](std::string& detail) {
        std::vector<VerificationReport> reports;
        for (unsigned k = 0; k <= 13; ++k) reports.push_back(verify_rk_identity(k, 200));
        return all_pass(reports, detail);
    }});

    criteria.push_back({5, "route equality: operator vs convolution, k <= 13 at N=100", 120000,
                        [](std::string& detail) {
        std::vector<VerificationReport> reports;
        for (unsigned k = 0; k <= 13; ++k) reports.push_back(verify_route_equality(k, 100));
        return all_pass(reports, detail);
    }});

    criteria.push_back({6, "cusp membership of the trace series T_2k, k in {6..15} at N=100",
                        300000, [](std::string& detail) {
        std::vector<VerificationReport> reports;
        for (unsigned k = 6; k <= 15; ++k) reports.push_back(verify_trace_membership(k, 100));
        return all_pass(reports, detail);
    }});

    criteria.push_back({7, "recurrence branches reproduce p(n), n <= 300, k <= 13",
                        180000, [](std::string& detail) {
        std::vector<VerificationReport> reports;
        std::string skips;
        for (unsigned k = 2; k <= 13; ++k) {
            auto rep = verify_recurrence(k, 300);
            if (rep.note && rep.note->find("skipped n: none") == std::string::npos)
                skips += " [k=" + std::to_string(k) + " " + *rep.note + "]";
            reports.push_back(std::move(rep));
        }
        bool ok = all_pass(reports, detail);
        if (ok && !skips.empty()) detail = "degenerate n skipped:" + skips;
        return ok;
    }});

    criteria.push_back({8, "ramanujan exact identities for ell=5,7 to N=300 over Z", 30000,
                        [](std::string& detail) {
        std::vector<VerificationReport> reports{ramanujan_exact_identity(5, 300),
                                                ramanujan_exact_identity(7, 300)};
        return all_pass(reports, detail);
    }});

    criteria.push_back({9, "prop31 for ell <= 31, n <= 50, plus 200 sampled "
                           "g-reduction triples", 60000, [](std::string& detail) {
        std::vector<VerificationReport> reports;
        for (std::uint64_t ell : kSweepPrimes) reports.push_back(verify_prop31(ell, 50));
        int sampled = 0;
        for (std::uint64_t ell : kSweepPrimes)
            for (unsigned long n = 1; n <= 5 && sampled < 200; ++n)
                for (long m = -2; m <= 2 && sampled < 200; ++m) {
                    reports.push_back(g_mod_reduction_check(ell, n, m));
                    ++sampled;
                }
        if (sampled < 200) {
            detail = "only sampled " + std::to_string(sampled) + " triples";
            return false;
        }
        return all_pass(reports, detail);
    }});

    criteria.push_back({10, "theta identity at N=400 for ell <= 31; context consistency to "
                            "ell = 97; binomial sums M <= 64", 30000, [](std::string& detail) {
        std::vector<VerificationReport> reports;
        for (std::uint64_t ell : kSweepPrimes) reports.push_back(verify_theta(ell, 400));
        for (std::uint64_t ell = 5; ell <= 97; ++ell)
            if (is_prime_u64(ell)) reports.push_back(verify_context(ell));
        reports.push_back(verify_binomial_sums(64));
        return all_pass(reports, detail);
    }});

    criteria.push_back({11, "cor13 index resolution for ell in {13,17}, n <= 20",
                        60000, [](std::string& detail) {
        std::string note;
        for (std::uint64_t ell : {13ULL, 17ULL}) {
            Cor13Reports reps = verify_cor13(ell, 20);
            if (reps.direct.status != CheckStatus::pass) {
                detail = "direct form failed for ell=" + std::to_string(ell);
                return false;
            }
            note += " ell=" + std::to_string(ell) + " as-written: " +
                    status_name(reps.as_written.status);
            if (reps.as_written.first_mismatch)
                note += " (first divergence n=" +
                        std::to_string(*reps.as_written.first_mismatch) + ")";
        }
        detail = "direct form passes;" + note;
        return true;
    }});

    int failures = 0;
    for (auto& c : criteria) {
        Stopwatch timer;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::int64_t ms = timer.elapsed_ms();
        if (ok && ms > c.budget_ms) {
            ok = false;
            detail = "exceeded budget of " + std::to_string(c.budget_ms) + " ms";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.label
                  << "  [" << ms << " ms]";
        if (!detail.empty()) std::cout << "  -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed\n");
    return failures == 0 ? 0 : 1;
}
