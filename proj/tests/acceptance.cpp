// Acceptance suite: every release criterion, one pass/fail line each.
// Exact comparisons throughout; the only tolerances are wall-clock bounds
// on the two performance criteria. Takes the path to the seqid executable
// as argv[1].
#include <nlohmann/json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "render.hpp"
#include "verifier.hpp"

using namespace seqid;

namespace {

int g_failures = 0;
std::string g_cli_path;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

struct RunResult {
    int exit_code;
    std::string out;
    double seconds;
};

RunResult run_cli(const std::string& args) {
    std::string command = g_cli_path + " " + args + " 2>/dev/null";
    auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {-1, "", 0.0};
    std::string out;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    int status = pclose(pipe);
    auto stop = std::chrono::steady_clock::now();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out,
            std::chrono::duration<double>(stop - start).count()};
}

IntPoly ip(std::vector<long> v) {
    std::vector<mpz_class> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

// ---- criterion 1: odd-multiple coefficients for m = 1..4 -----------------

void criterion_1() {
    bool ok = odd_multiple_poly(1).pair.odd_n == ip({0, -3, 0, 8}) &&
              odd_multiple_poly(2).pair.odd_n == ip({0, 5, 0, -40, 0, 64}) &&
              odd_multiple_poly(3).pair.odd_n == ip({0, -7, 0, 112, 0, -448, 0, 512}) &&
              odd_multiple_poly(4).pair.odd_n == ip({0, 9, 0, -240, 0, 1728, 0, -4608, 0, 4096});
    report(1, "odd-multiple coefficients m=1..4 match the degree-3,5,7,9 displays", ok);
}

// ---- criterion 2: melham polynomials for m = 0..2 -------------------------

void criterion_2() {
    auto m0 = melham_sum_poly(0);
    auto m1 = melham_sum_poly(1);
    auto m2 = melham_sum_poly(2);
    bool ok = m0.cleared == ip({-1, 1}) && m0.multiplier == 2 &&
              m1.cleared == ip({4, -6, 0, 2}) && m1.multiplier == 28 &&
              m2.cleared == ip({-128, 220, 0, -120, 0, 28}) && m2.multiplier == 2296;
    report(2, "melham cleared polynomials and multipliers for m=0,1,2", ok);
}

// ---- criterion 3: full default verification through the CLI ---------------

void criterion_3() {
    auto r = run_cli("verify --suite all");
    bool ok = r.exit_code == 0 && r.seconds < 300.0;
    report(3, "`verify --suite all` passes every grid cell at the defaults", ok,
           "exit " + std::to_string(r.exit_code) + ", " + fmt_seconds(r.seconds));
}

// ---- criterion 4: sign-discrepancy resolution ------------------------------

void criterion_4() {
    auto defaults = suite_defaults("power-reduction");
    auto report_pr = verify_power_reduction(defaults.m_max, defaults.n_max);
    bool default_rule_ok = report_pr.passed();
    bool counterexample = false;
    for (const auto& note : report_pr.notes)
        if (note.find("fails first at (m=2, n=1)") != std::string::npos &&
            note.find("14/64") != std::string::npos && note.find("= 1") != std::string::npos)
            counterexample = true;
    report(4,
           "power-reduction proves the (n+1) sign rule and pins the (n+m)-rule "
           "counterexample 14/64 at (m=2, n=1)",
           default_rule_ok && counterexample);
}

// ---- criterion 5: specialization coherence ---------------------------------

void criterion_5() {
    bool structural = true;
    for (long m = 0; m <= 10 && structural; ++m) {
        auto general = general_odd_multiple_poly(m);
        auto pell = odd_multiple_poly(m);
        structural = substitute_s(general.pair.even_n, 2) == pell.pair.even_n &&
                     substitute_s(general.pair.odd_n, 2) == pell.pair.odd_n;
    }

    // s=1, m=1: F_{3n} = 5 F_n^3 + 3 (-1)^n F_n on n <= 40
    auto fib_id = general_odd_multiple_poly(1);
    IntPoly even = substitute_s(fib_id.pair.even_n, 1);
    IntPoly odd = substitute_s(fib_id.pair.odd_n, 1);
    bool fib_ok = even == ip({0, 3, 0, 5}) && odd == ip({0, -3, 0, 5});
    std::vector<mpz_class> f(3 * 40 + 1);
    f[1] = 1;
    for (std::size_t k = 2; k < f.size(); ++k) f[k] = f[k - 1] + f[k - 2];
    for (long n = 0; n <= 40 && fib_ok; ++n)
        fib_ok = ((n % 2 != 0) ? odd : even)(f[n]) == f[3 * n];

    report(5, "general family specializes to Pell at s=2 (m<=10) and validates F_{3n} at s=1",
           structural && fib_ok);
}

// ---- criterion 6: sequence laws at depth -----------------------------------

void criterion_6() {
    auto general = verify_sequences(8, 500);
    auto pell_deep = verify_sequences(2, 1000);
    report(6, "sequence laws hold to n=1000 (Pell) and n=500 for s<=8",
           general.passed() && pell_deep.passed(),
           std::to_string(general.checks_run + pell_deep.checks_run) + " checks");
}

// ---- criterion 7: term computation at n = 10^6 -----------------------------

void criterion_7() {
    auto r = run_cli("bench --n 1000000 --format json");
    bool ok = r.exit_code == 0;
    std::string detail = "exit " + std::to_string(r.exit_code);
    if (ok) {
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        ok = !j.is_discarded() && j["agree"] == true && j["results"].size() == 2;
        if (ok) {
            std::ostringstream times;
            for (const auto& entry : j["results"]) {
                double ms = entry["milliseconds"].get<double>();
                size_t digits = entry["digits"].get<size_t>();
                std::string method = entry["method"].get<std::string>();
                ok = ok && ms < 5000.0 && method != "naive" && digits > 380000 &&
                     digits < 385000;
                times << method << " " << fmt_seconds(ms / 1000.0) << " ";
            }
            detail = times.str() + std::to_string(j["results"][0]["digits"].get<size_t>()) +
                     " digits";
        }
    }
    report(7, "bench at n=10^6: fast and matrix agree in under 5s each, naive excluded", ok,
           detail);
}

// ---- criterion 8: fault sensitivity ----------------------------------------

bool odd_multiple_faults() {
    auto d = suite_defaults("odd-multiple");
    std::vector<OddMultipleIdentity> base;
    for (long m = 0; m <= d.m_max; ++m) base.push_back(odd_multiple_poly(m));
    for (std::size_t idx = 0; idx < base.size(); ++idx) {
        for (long i = 0; i <= base[idx].m; ++i) {
            for (int which = 0; which < 2; ++which) {
                auto ids = base;
                IntPoly& poly = which == 0 ? ids[idx].pair.odd_n : ids[idx].pair.even_n;
                auto c = poly.coefficients();
                c[2 * i + 1] += 1;
                poly = IntPoly(std::move(c));
                if (check_odd_multiple(ids, d.n_max).passed()) return false;
            }
        }
    }
    return true;
}

bool general_faults() {
    auto d = suite_defaults("general");
    std::vector<GeneralOddMultipleIdentity> base;
    for (long m = 0; m <= d.m_max; ++m) base.push_back(general_odd_multiple_poly(m));
    for (std::size_t idx = 0; idx < base.size(); ++idx) {
        for (long i = 0; i <= base[idx].m; ++i) {
            auto ids = base;
            auto c = ids[idx].pair.odd_n.coefficients();
            auto inner = c[2 * i + 1].coefficients();
            if (inner.empty()) inner.resize(1);
            inner[0] += 1;
            c[2 * i + 1] = IntPoly(std::move(inner));
            ids[idx].pair.odd_n = SPoly(std::move(c));
            if (check_general_odd_multiple(ids, d.n_max, d.s_max).passed()) return false;
        }
    }
    return true;
}

bool power_reduction_faults() {
    auto d = suite_defaults("power-reduction");
    std::vector<PowerReduction> base;
    for (long m = 0; m <= d.m_max; ++m) base.push_back(power_reduction(m));
    for (std::size_t idx = 0; idx < base.size(); ++idx) {
        for (std::size_t t = 0; t < base[idx].terms.size(); ++t) {
            auto ids = base;
            ids[idx].terms[t].weight += 1;
            if (check_power_reduction(ids, d.n_max).passed()) return false;
        }
    }
    return true;
}

bool melham_faults() {
    auto d = suite_defaults("melham");
    std::vector<MelhamIdentity> base;
    for (long m = 0; m <= d.m_max; ++m) base.push_back(melham_sum_poly(m));
    for (std::size_t idx = 0; idx < base.size(); ++idx) {
        for (long deg = 0; deg <= base[idx].rational.degree(); ++deg) {
            if (deg != 0 && is_zero(base[idx].rational.coeff(deg))) continue;
            {
                auto ids = base;
                auto c = ids[idx].rational.coefficients();
                c[deg] += 1;
                ids[idx].rational = RatPoly(std::move(c));
                if (check_melham(ids, d.n_max).passed()) return false;
            }
            {
                auto ids = base;
                auto c = ids[idx].cleared.coefficients();
                c[deg] += 1;
                ids[idx].cleared = IntPoly(std::move(c));
                if (check_melham(ids, d.n_max).passed()) return false;
            }
        }
    }
    return true;
}

void criterion_8() {
    bool ok = odd_multiple_faults() && power_reduction_faults() && melham_faults() &&
              general_faults();
    report(8, "bumping any single generated coefficient by +1 fails its verify suite", ok);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: seqid_acceptance <path-to-seqid-binary>\n";
        return 2;
    }
    g_cli_path = argv[1];

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();

    if (g_failures == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) FAILED\n";
    return 1;
}
