// seqid command-line front end. Links only the public C API.
#include <seqid.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct StringOut {
    char* value = nullptr;
    ~StringOut() { seqid_string_free(value); }
};

int usage_error(const std::string& message) {
    std::cerr << "seqid: " << message << "\n";
    return kExitUsage;
}

int run_term(long s, long n, bool companion, const std::string& method) {
    StringOut out;
    seqid_status st = companion ? seqid_companion(s, n, method.c_str(), &out.value)
                                : seqid_term(s, n, method.c_str(), &out.value);
    if (st != SEQID_OK) return usage_error(seqid_last_error());
    std::cout << out.value << "\n";
    return kExitOk;
}

int run_identity(const std::string& family, long m, const std::string& parity, bool general,
                 bool cleared, const std::string& format) {
    if (general && family != "odd-multiple")
        return usage_error("--general is valid only with --family odd-multiple");
    if (cleared && family != "melham")
        return usage_error("--cleared is valid only with --family melham");

    seqid_identity* identity = nullptr;
    if (seqid_identity_create(family.c_str(), m, general ? 1 : 0, &identity) != SEQID_OK)
        return usage_error(seqid_last_error());
    std::unique_ptr<seqid_identity, decltype(&seqid_identity_free)> guard(identity,
                                                                          &seqid_identity_free);
    StringOut out;
    if (seqid_identity_render(identity, format.c_str(), parity.c_str(), cleared ? 1 : 0,
                              &out.value) != SEQID_OK)
        return usage_error(seqid_last_error());
    std::cout << out.value << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, long m_max, long n_max, long s_max,
               const std::string& format) {
    seqid_report* report = nullptr;
    if (seqid_verify(suite.c_str(), m_max, n_max, s_max, &report) != SEQID_OK)
        return usage_error(seqid_last_error());
    std::unique_ptr<seqid_report, decltype(&seqid_report_free)> guard(report, &seqid_report_free);
    StringOut out;
    if (seqid_report_render(report, format.c_str(), &out.value) != SEQID_OK)
        return usage_error(seqid_last_error());
    std::cout << out.value << "\n";
    return seqid_report_passed(report) ? kExitOk : kExitVerificationFailed;
}

int run_bench(long n, long s, std::vector<std::string> methods, const std::string& format) {
    if (methods.empty()) {
        methods = {"fast", "matrix"};
        if (n <= 100000) methods.push_back("naive");  // quadratic bit cost beyond this
    }

    struct Result {
        std::string method;
        double milliseconds;
        size_t digits;
        uint64_t low64;
    };
    std::vector<Result> results;
    for (const auto& method : methods) {
        size_t digits = 0;
        uint64_t low64 = 0;
        auto start = std::chrono::steady_clock::now();
        seqid_status st = seqid_term_digest(s, n, method.c_str(), &digits, &low64);
        auto stop = std::chrono::steady_clock::now();
        if (st != SEQID_OK) return usage_error(seqid_last_error());
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        results.push_back(Result{method, ms, digits, low64});
    }

    bool agree = true;
    for (const auto& r : results)
        if (r.digits != results.front().digits || r.low64 != results.front().low64) agree = false;

    char low_hex[32];
    if (format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["s"] = s;
        j["agree"] = agree;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) {
            std::snprintf(low_hex, sizeof low_hex, "0x%016llx",
                          static_cast<unsigned long long>(r.low64));
            arr.push_back(nlohmann::json{{"method", r.method},
                                         {"milliseconds", r.milliseconds},
                                         {"digits", r.digits},
                                         {"low64", low_hex}});
        }
        j["results"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::snprintf(low_hex, sizeof low_hex, "0x%016llx",
                          static_cast<unsigned long long>(r.low64));
            std::printf("%-8s %10.3f ms   %zu digits   low64 %s\n", r.method.c_str(),
                        r.milliseconds, r.digits, low_hex);
        }
        std::cout << (agree ? "digests agree" : "DIGEST MISMATCH") << "\n";
    }

    if (!agree) {
        std::cerr << "seqid: methods disagree on the computed value\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Pell / Pell-Lucas terms, polynomial identity families, and brute-force "
                 "verification"};
    app.require_subcommand(1);

    // term
    auto* term_cmd = app.add_subcommand("term", "Compute one sequence term");
    long term_s = 2;
    long term_n = 0;
    bool term_companion = false;
    std::string term_method = "fast";
    term_cmd->add_option("--s", term_s, "Recurrence multiplier (2 = Pell, 1 = Fibonacci)")
        ->check(CLI::PositiveNumber);
    term_cmd->add_option("--n", term_n, "Term index")->required()->check(CLI::NonNegativeNumber);
    term_cmd->add_flag("--companion", term_companion, "Companion term B_n instead of A_n");
    term_cmd->add_option("--method", term_method, "fast | naive | matrix")
        ->check(CLI::IsMember({"fast", "naive", "matrix"}));

    // identity
    auto* id_cmd = app.add_subcommand("identity", "Emit one identity from a family");
    std::string id_family;
    long id_m = 0;
    std::string id_parity = "odd";
    bool id_general = false;
    bool id_cleared = false;
    std::string id_format = "plain";
    id_cmd->add_option("--family", id_family, "odd-multiple | melham | power-reduction")
        ->required()
        ->check(CLI::IsMember({"odd-multiple", "melham", "power-reduction"}));
    id_cmd->add_option("--m", id_m, "Family parameter m")->required()->check(
        CLI::NonNegativeNumber);
    id_cmd->add_option("--parity", id_parity, "Sign resolution for n (default odd)")
        ->check(CLI::IsMember({"even", "odd"}));
    id_cmd->add_flag("--general", id_general, "s-parameterized family (odd-multiple only)");
    id_cmd->add_flag("--cleared", id_cleared, "Integer-cleared form (melham only)");
    id_cmd->add_option("--format", id_format, "plain | latex | json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run brute-force verification suites");
    std::string v_suite = "all";
    long v_m_max = -1, v_n_max = -1, v_s_max = -1;
    std::string v_format = "plain";
    verify_cmd->add_option("--suite", v_suite, "Suite to run (default all)")
        ->check(CLI::IsMember({"all", "sequences", "odd-multiple", "melham", "power-reduction",
                               "partial-sum", "general"}));
    verify_cmd->add_option("--m-max", v_m_max, "Override the suite default")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--n-max", v_n_max, "Override the suite default")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--s-max", v_s_max, "Override the suite default")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", v_format, "plain | json")
        ->check(CLI::IsMember({"plain", "json"}));

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Time the term-computation methods");
    long b_n = 0;
    long b_s = 2;
    std::vector<std::string> b_methods;
    std::string b_format = "plain";
    bench_cmd->add_option("--n", b_n, "Term index")->required()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--s", b_s, "Recurrence multiplier")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--methods", b_methods, "Comma-separated subset of fast,naive,matrix")
        ->delimiter(',')
        ->check(CLI::IsMember({"fast", "naive", "matrix"}));
    bench_cmd->add_option("--format", b_format, "plain | json")
        ->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (term_cmd->parsed()) return run_term(term_s, term_n, term_companion, term_method);
    if (id_cmd->parsed())
        return run_identity(id_family, id_m, id_parity, id_general, id_cleared, id_format);
    if (verify_cmd->parsed()) return run_verify(v_suite, v_m_max, v_n_max, v_s_max, v_format);
    if (bench_cmd->parsed()) return run_bench(b_n, b_s, b_methods, b_format);
    return usage_error("no subcommand given");
}
