// pcv: partition-congruence verifier.
//
// verify {theorem1|prop31|cor12|cor13|rk|ramanujan-exact|theta|routes|all}
// series {Pell|Tell|theta|rk|eisenstein|delta2k|trace}
// p
//
// Exit codes: 0 all checks pass (skipped != fail), 1 any check fails,
// 2 usage/validation error.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcv/congruences.hpp"

using namespace pcv;

namespace {

struct Options {
    std::vector<std::uint64_t> ells;
    std::vector<unsigned> ks;
    std::size_t precision = 0;  // 0 = suite default
    unsigned long n_max_flag = 0;
    bool n_max_set = false;
    std::string format = "human";
    std::string out_path;
    unsigned jobs = 1;
    bool raw = false;
};

constexpr std::size_t kCongruenceDefaultN = 50;
constexpr std::size_t kExactDefaultN = 200;

const std::vector<std::uint64_t> kDefaultEells = {5, 7, 11, 13};
const std::vector<unsigned> kDefaultKs = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};

void validate_ells(const std::vector<std::uint64_t>& ells) {
    for (std::uint64_t ell : ells)
        if (ell < 5 || !is_prime_u64(ell))
            raise(errc::invalid_prime, std::to_string(ell) + " is not a prime >= 5");
}

using Task = std::function<std::vector<VerificationReport>()>;

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<std::vector<VerificationReport>> results(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                results[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // Report order follows declaration order, not completion order.
    std::vector<VerificationReport> flat;
    for (auto& group : results)
        for (auto& r : group) flat.push_back(std::move(r));
    return flat;
}

void emit(const std::string& text, const Options& opt) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) raise(errc::invalid_argument, "cannot open output path " + opt.out_path);
    out << text;
}

int emit_reports(const std::vector<VerificationReport>& reports, const Options& opt) {
    if (opt.format == "json")
        emit(reports_to_json(reports), opt);
    else
        emit(reports_to_table(reports), opt);
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) return 1;
    return 0;
}

std::vector<Task> build_suite(const std::string& suite, const Options& opt,
                              bool lenient = false);

std::vector<Task> suite_theorem1(const Options& opt) {
    std::size_t n = opt.precision ? opt.precision : kCongruenceDefaultN;
    auto ells = opt.ells.empty() ? kDefaultEells : opt.ells;
    std::vector<Task> tasks;
    for (std::uint64_t ell : ells)
        tasks.push_back([ell, n] {
            return std::vector<VerificationReport>{verify_theorem1(ell, n),
                                                   verify_tell_routes(ell, n)};
        });
    return tasks;
}

std::vector<Task> suite_prop31(const Options& opt) {
    unsigned long n_max = opt.n_max_set ? opt.n_max_flag : 50;
    auto ells = opt.ells.empty() ? kDefaultEells : opt.ells;
    std::vector<Task> tasks;
    for (std::uint64_t ell : ells)
        tasks.push_back([ell, n_max] {
            return std::vector<VerificationReport>{verify_prop31(ell, n_max)};
        });
    return tasks;
}

std::vector<std::uint64_t> restrict_ells(const std::vector<std::uint64_t>& requested,
                                         std::vector<std::uint64_t> supported,
                                         bool lenient, const char* suite) {
    if (requested.empty()) return supported;
    std::vector<std::uint64_t> kept;
    for (std::uint64_t ell : requested) {
        bool ok = std::find(supported.begin(), supported.end(), ell) != supported.end();
        if (ok)
            kept.push_back(ell);
        else if (!lenient)
            raise(errc::unsupported_prime, std::string(suite) + " does not cover ell = " +
                                               std::to_string(ell));
    }
    return kept.empty() ? supported : kept;
}

std::vector<Task> suite_cor12(const Options& opt, bool lenient) {
    unsigned long n_max = opt.n_max_set ? opt.n_max_flag : 500;
    std::vector<std::uint64_t> ells =
        restrict_ells(opt.ells, {5, 7, 11}, lenient, "cor12");
    std::vector<Task> tasks;
    for (std::uint64_t ell : ells)
        tasks.push_back([ell, n_max] {
            return std::vector<VerificationReport>{verify_cor12(ell, n_max)};
        });
    return tasks;
}

std::vector<Task> suite_cor13(const Options& opt) {
    unsigned long n_max = opt.n_max_set ? opt.n_max_flag : 20;
    auto ells = opt.ells.empty() ? kDefaultEells : opt.ells;
    std::vector<Task> tasks;
    for (std::uint64_t ell : ells)
        tasks.push_back([ell, n_max] {
            Cor13Reports reps = verify_cor13(ell, n_max);
            return std::vector<VerificationReport>{reps.direct, reps.as_written};
        });
    return tasks;
}

std::vector<Task> suite_rk(const Options& opt) {
    std::size_t n = opt.precision ? opt.precision : kExactDefaultN;
    unsigned long n_max = opt.n_max_set ? opt.n_max_flag : 50;
    auto ks = opt.ks.empty() ? kDefaultKs : opt.ks;
    std::vector<Task> tasks;
    for (unsigned k : ks)
        tasks.push_back([k, n, n_max] {
            std::vector<VerificationReport> out{verify_rk_identity(k, n)};
            if (k >= 6) out.push_back(verify_trace_membership(k, n));
            if (k >= 2 && n_max > 0) out.push_back(verify_recurrence(k, n_max));
            return out;
        });
    return tasks;
}

std::vector<Task> suite_routes(const Options& opt) {
    std::size_t n = opt.precision ? opt.precision : kExactDefaultN;
    auto ks = opt.ks.empty() ? kDefaultKs : opt.ks;
    std::vector<Task> tasks;
    for (unsigned k : ks)
        tasks.push_back([k, n] {
            return std::vector<VerificationReport>{verify_route_equality(k, n)};
        });
    return tasks;
}

std::vector<Task> suite_ramanujan(const Options& opt, bool lenient) {
    std::size_t n = opt.precision ? opt.precision : kExactDefaultN;
    std::vector<std::uint64_t> ells = restrict_ells(opt.ells, {5, 7}, lenient, "ramanujan-exact");
    std::vector<Task> tasks;
    for (std::uint64_t ell : ells)
        tasks.push_back([ell, n] {
            return std::vector<VerificationReport>{ramanujan_exact_identity(ell, n)};
        });
    return tasks;
}

std::vector<Task> suite_theta(const Options& opt) {
    std::size_t n = opt.precision ? opt.precision : kExactDefaultN;
    auto ells = opt.ells.empty() ? kDefaultEells : opt.ells;
    std::vector<Task> tasks;
    for (std::uint64_t ell : ells)
        tasks.push_back([ell, n] {
            return std::vector<VerificationReport>{verify_theta(ell, n), verify_context(ell)};
        });
    tasks.push_back([] {
        return std::vector<VerificationReport>{verify_binomial_sums(64)};
    });
    return tasks;
}

std::vector<Task> build_suite(const std::string& suite, const Options& opt, bool lenient) {
    if (suite == "theorem1") return suite_theorem1(opt);
    if (suite == "prop31") return suite_prop31(opt);
    if (suite == "cor12") return suite_cor12(opt, lenient);
    if (suite == "cor13") return suite_cor13(opt);
    if (suite == "rk") return suite_rk(opt);
    if (suite == "routes") return suite_routes(opt);
    if (suite == "ramanujan-exact") return suite_ramanujan(opt, lenient);
    if (suite == "theta") return suite_theta(opt);
    if (suite == "all") {
        std::vector<Task> all;
        for (const char* name :
             {"theorem1", "prop31", "cor12", "cor13", "rk", "routes", "ramanujan-exact",
              "theta"}) {
            auto part = build_suite(name, opt, /*lenient=*/true);
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return all;
    }
    raise(errc::invalid_argument, "unknown suite " + suite);
}

int cmd_verify(const std::string& suite, const Options& opt) {
    validate_ells(opt.ells);
    auto tasks = build_suite(suite, opt);
    auto reports = run_tasks(tasks, opt.jobs);
    return emit_reports(reports, opt);
}

// ---- series / p ----

struct Listing {
    std::string name;
    std::optional<long long> ell;
    std::optional<long long> k;
    std::size_t precision;
    bool raw;
    std::vector<std::string> values;
};

std::string listings_to_text(const std::vector<Listing>& ls) {
    std::string out;
    for (const auto& l : ls) {
        out += "# " + l.name;
        if (l.ell) out += " ell=" + std::to_string(*l.ell);
        if (l.k) out += " k=" + std::to_string(*l.k);
        out += " N=" + std::to_string(l.precision);
        if (l.raw) out += " raw";
        out += "\n";
        for (std::size_t i = 0; i < l.values.size(); ++i)
            out += std::to_string(i) + ": " + l.values[i] + "\n";
    }
    return out;
}

std::string listings_to_json(const std::vector<Listing>& ls) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& l : ls) {
        nlohmann::ordered_json j;
        j["series"] = l.name;
        nlohmann::ordered_json params;
        params["ell"] = l.ell ? nlohmann::ordered_json(*l.ell) : nlohmann::ordered_json(nullptr);
        params["k"] = l.k ? nlohmann::ordered_json(*l.k) : nlohmann::ordered_json(nullptr);
        params["N"] = l.precision;
        params["raw"] = l.raw;
        j["params"] = params;
        j["coefficients"] = l.values;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

template <typename R>
std::vector<std::string> series_strings(const TruncatedSeries<R>& s) {
    std::vector<std::string> out;
    out.reserve(s.precision());
    for (std::size_t i = 0; i < s.precision(); ++i) out.push_back(s.coeff(i).str());
    return out;
}

int cmd_series(const std::string& which, const Options& opt) {
    validate_ells(opt.ells);
    std::vector<Listing> listings;

    auto ells = opt.ells;
    auto ks = opt.ks;
    bool wants_ell = which == "Pell" || which == "Tell" || which == "theta";
    if (wants_ell && ells.empty()) ells = {13};
    if (!wants_ell && ks.empty())
        raise(errc::invalid_argument, "series " + which + " needs --k");

    std::size_t n = opt.precision;
    if (n == 0) n = (which == "Pell" || which == "Tell") ? kCongruenceDefaultN : kExactDefaultN;

    if (which == "Pell") {
        for (std::uint64_t ell : ells) {
            Listing l{"Pell", static_cast<long long>(ell), std::nullopt, n, opt.raw, {}};
            if (opt.raw) {
                for (const mpz_class& v : P_ell_values(ell, n)) l.values.push_back(v.get_str());
            } else {
                l.values = series_strings(P_ell_series(ell, n));
            }
            listings.push_back(std::move(l));
        }
    } else if (which == "Tell") {
        for (std::uint64_t ell : ells) {
            Listing l{"Tell", static_cast<long long>(ell), std::nullopt, n, opt.raw, {}};
            if (opt.raw) {
                // Exact rational trace values Tr_{ell-1}(ell n).
                unsigned weight = static_cast<unsigned>(ell) - 1;
                if (cusp_dim(weight) == 0) {
                    l.values.assign(n, "0");
                } else {
                    auto ts = trace_series(weight, ell * n);
                    for (std::size_t i = 0; i < n; ++i)
                        l.values.push_back(i == 0 ? "0" : ts->series.coeff(ell * i).str());
                }
            } else {
                l.values = series_strings(T_ell_series(ell, n, TraceRoute::rational));
            }
            listings.push_back(std::move(l));
        }
    } else if (which == "theta") {
        for (std::uint64_t ell : ells) {
            Listing l{"theta", static_cast<long long>(ell), std::nullopt, n, false,
                      series_strings(theta_series(ell, n))};
            listings.push_back(std::move(l));
        }
    } else if (which == "rk") {
        for (unsigned k : ks)
            listings.push_back(
                {"rk", std::nullopt, k, n, false, series_strings(r_series_operator(k, n).series)});
    } else if (which == "eisenstein") {
        for (unsigned k : ks)
            listings.push_back({"eisenstein", std::nullopt, k, n, false,
                                series_strings(eisenstein(2 * k, n).series)});
    } else if (which == "delta2k") {
        for (unsigned k : ks)
            listings.push_back(
                {"delta2k", std::nullopt, k, n, false, series_strings(delta_2k(k, n).series)});
    } else if (which == "trace") {
        for (unsigned k : ks)
            listings.push_back({"trace", std::nullopt, k, n, false,
                                series_strings(trace_series(2 * k, n)->series)});
    } else {
        raise(errc::invalid_argument, "unknown series " + which);
    }

    emit(opt.format == "json" ? listings_to_json(listings) : listings_to_text(listings), opt);
    return 0;
}

int cmd_partition(long long n_single, bool n_set, const Options& opt) {
    if (!n_set && !opt.n_max_set)
        raise(errc::invalid_argument, "p needs --n or --n-max");
    if (n_set && n_single < 0) raise(errc::invalid_argument, "n must be >= 0");

    std::string text;
    if (n_set) {
        auto p = shared_partition_values(static_cast<std::size_t>(n_single) + 1);
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["n"] = n_single;
            j["value"] = (*p)[n_single].get_str();
            text = j.dump(2) + "\n";
        } else {
            text = (*p)[n_single].get_str() + "\n";
        }
    } else {
        auto p = shared_partition_values(opt.n_max_flag + 1);
        if (opt.format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (unsigned long i = 0; i <= opt.n_max_flag; ++i) arr.push_back((*p)[i].get_str());
            nlohmann::ordered_json j;
            j["values"] = arr;
            text = j.dump(2) + "\n";
        } else {
            for (unsigned long i = 0; i <= opt.n_max_flag; ++i)
                text += std::to_string(i) + ": " + (*p)[i].get_str() + "\n";
        }
    }
    emit(text, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine for partition congruences"};
    app.require_subcommand(1);

    Options opt;
    std::string suite, which;
    long long n_single = -1;
    bool n_set = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--ell", opt.ells, "prime(s) >= 5")->expected(-1);
        cmd->add_option("--k", opt.ks, "weight index k (weight 2k)")->expected(-1);
        cmd->add_option("-N,--precision", opt.precision, "series precision (coefficient count)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--n-max", opt.n_max_flag, "largest n to check")
            ->each([&](const std::string&) { opt.n_max_set = true; });
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"human", "json"}));
        cmd->add_option("--out", opt.out_path, "write output to PATH");
        cmd->add_option("--jobs", opt.jobs, "worker threads for independent checks")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--raw", opt.raw, "integer view before mod-ell reduction");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("suite", suite, "one of theorem1 prop31 cor12 cor13 rk ramanujan-exact theta routes all")
        ->required()
        ->check(CLI::IsMember({"theorem1", "prop31", "cor12", "cor13", "rk", "ramanujan-exact",
                               "theta", "routes", "all"}));
    add_common(verify);

    CLI::App* series = app.add_subcommand("series", "print series coefficients");
    series
        ->add_option("which", which, "one of Pell Tell theta rk eisenstein delta2k trace")
        ->required()
        ->check(CLI::IsMember({"Pell", "Tell", "theta", "rk", "eisenstein", "delta2k", "trace"}));
    add_common(series);

    CLI::App* part = app.add_subcommand("p", "partition numbers");
    part->add_option("--n", n_single, "single n")->each([&](const std::string&) { n_set = true; });
    add_common(part);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, opt);
        if (series->parsed()) return cmd_series(which, opt);
        return cmd_partition(n_single, n_set, opt);
    } catch (const error& e) {
        std::cerr << "pcv: " << e.what() << "\n";
        switch (e.code()) {
            case errc::invalid_prime:
            case errc::unsupported_prime:
            case errc::unsupported_weight:
            case errc::invalid_argument:
                return 2;
            default:
                return 1;
        }
    }
}
