#include "seqid.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include "render.hpp"
#include "sequences.hpp"
#include "verifier.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
seqid_status wrap(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SEQID_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SEQID_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SEQID_ERROR_INTERNAL;
    }
}

void require_out(const void* p) {
    if (p == nullptr) throw std::invalid_argument("output pointer is NULL");
}

mpz_class compute_term(long s, long n, const char* method, bool companion_term) {
    seqid::SequenceSpec spec(s);
    std::string name = method == nullptr ? "fast" : method;
    if (name == "fast") return companion_term ? seqid::companion(spec, n) : seqid::term(spec, n);
    if (name == "naive")
        return companion_term ? seqid::companion_naive(spec, n) : seqid::term_naive(spec, n);
    if (name == "matrix")
        return companion_term ? seqid::matrix_companion(spec, n) : seqid::matrix_term(spec, n);
    throw std::invalid_argument("unknown method: " + name);
}

}  // namespace

struct seqid_identity {
    std::variant<seqid::OddMultipleIdentity, seqid::GeneralOddMultipleIdentity,
                 seqid::PowerReduction, seqid::MelhamIdentity>
        value;
};

struct seqid_report {
    std::vector<seqid::VerificationReport> reports;
};

extern "C" {

const char* seqid_status_name(seqid_status status) {
    switch (status) {
        case SEQID_OK:
            return "ok";
        case SEQID_ERROR_INVALID_ARGUMENT:
            return "invalid argument";
        case SEQID_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown";
}

const char* seqid_last_error(void) { return g_last_error.c_str(); }

void seqid_string_free(char* s) { std::free(s); }

seqid_status seqid_term(long s, long n, const char* method, char** out) {
    return wrap([&] {
        require_out(out);
        *out = dup_string(compute_term(s, n, method, false).get_str());
    });
}

seqid_status seqid_companion(long s, long n, const char* method, char** out) {
    return wrap([&] {
        require_out(out);
        *out = dup_string(compute_term(s, n, method, true).get_str());
    });
}

seqid_status seqid_term_digest(long s, long n, const char* method, size_t* digit_count,
                               uint64_t* low64) {
    return wrap([&] {
        require_out(digit_count);
        require_out(low64);
        mpz_class value = compute_term(s, n, method, false);
        *digit_count = value.get_str().size();
        mpz_class low;
        mpz_fdiv_r_2exp(low.get_mpz_t(), value.get_mpz_t(), 64);
        uint64_t bits = 0;
        for (int limb = 1; limb >= 0; --limb) {
            mpz_class part = low >> (32 * limb);
            bits = (bits << 32) | static_cast<uint64_t>(mpz_get_ui(part.get_mpz_t()) & 0xffffffffu);
        }
        *low64 = bits;
    });
}

seqid_status seqid_identity_create(const char* family, long m, int general,
                                   seqid_identity** out) {
    return wrap([&] {
        require_out(out);
        if (family == nullptr) throw std::invalid_argument("family is NULL");
        std::string name = family;
        auto handle = std::make_unique<seqid_identity>();
        if (name == "odd-multiple") {
            if (general != 0)
                handle->value = seqid::general_odd_multiple_poly(m);
            else
                handle->value = seqid::odd_multiple_poly(m);
        } else if (general != 0) {
            throw std::invalid_argument("general form exists only for family odd-multiple");
        } else if (name == "power-reduction") {
            handle->value = seqid::power_reduction(m);
        } else if (name == "melham") {
            handle->value = seqid::melham_sum_poly(m);
        } else {
            throw std::invalid_argument("unknown identity family: " + name);
        }
        *out = handle.release();
    });
}

seqid_status seqid_identity_render(const seqid_identity* identity, const char* format,
                                   const char* parity, int cleared, char** out) {
    return wrap([&] {
        require_out(out);
        if (identity == nullptr) throw std::invalid_argument("identity handle is NULL");
        seqid::OutputFormat fmt = seqid::parse_format(format == nullptr ? "plain" : format);
        seqid::Parity par = seqid::parse_parity(parity == nullptr ? "odd" : parity);
        if (cleared != 0 && !std::holds_alternative<seqid::MelhamIdentity>(identity->value))
            throw std::invalid_argument("cleared form exists only for family melham");
        std::string text = std::visit(
            [&](const auto& id) -> std::string {
                using T = std::decay_t<decltype(id)>;
                if constexpr (std::is_same_v<T, seqid::OddMultipleIdentity>)
                    return seqid::render_odd_multiple(id, par, fmt);
                else if constexpr (std::is_same_v<T, seqid::GeneralOddMultipleIdentity>)
                    return seqid::render_general_odd_multiple(id, par, fmt);
                else if constexpr (std::is_same_v<T, seqid::PowerReduction>)
                    return seqid::render_power_reduction(id, par, fmt);
                else
                    return seqid::render_melham(id, cleared != 0, fmt);
            },
            identity->value);
        *out = dup_string(text);
    });
}

void seqid_identity_free(seqid_identity* identity) { delete identity; }

seqid_status seqid_verify(const char* suite, long m_max, long n_max, long s_max,
                          seqid_report** out) {
    return wrap([&] {
        require_out(out);
        std::string name = suite == nullptr ? "all" : suite;
        auto handle = std::make_unique<seqid_report>();
        if (name == "all") {
            if (m_max < 0 && n_max < 0 && s_max < 0) {
                handle->reports = seqid::verify_all();
            } else {
                // Explicit bounds replace the per-suite defaults everywhere.
                for (const char* sub : {"sequences", "odd-multiple", "power-reduction",
                                        "partial-sum", "melham", "general"}) {
                    seqid_report* nested = nullptr;
                    seqid_status st = seqid_verify(sub, m_max, n_max, s_max, &nested);
                    if (st != SEQID_OK) throw std::invalid_argument(g_last_error);
                    handle->reports.push_back(std::move(nested->reports.front()));
                    seqid_report_free(nested);
                }
            }
        } else {
            seqid::SuiteDefaults d = seqid::suite_defaults(name);
            long m = m_max >= 0 ? m_max : d.m_max;
            long n = n_max >= 0 ? n_max : d.n_max;
            long s = s_max >= 0 ? s_max : d.s_max;
            if (name == "sequences")
                handle->reports.push_back(seqid::verify_sequences(s, n));
            else if (name == "odd-multiple")
                handle->reports.push_back(seqid::verify_odd_multiple(m, n));
            else if (name == "melham")
                handle->reports.push_back(seqid::verify_melham(m, n));
            else if (name == "power-reduction")
                handle->reports.push_back(seqid::verify_power_reduction(m, n));
            else if (name == "partial-sum")
                handle->reports.push_back(seqid::verify_partial_sum(m, n));
            else if (name == "general")
                handle->reports.push_back(seqid::verify_general_odd_multiple(m, n, s));
        }
        *out = handle.release();
    });
}

int seqid_report_passed(const seqid_report* report) {
    if (report == nullptr) return 0;
    for (const auto& r : report->reports)
        if (!r.passed()) return 0;
    return 1;
}

seqid_status seqid_report_render(const seqid_report* report, const char* format, char** out) {
    return wrap([&] {
        require_out(out);
        if (report == nullptr) throw std::invalid_argument("report handle is NULL");
        seqid::OutputFormat fmt = seqid::parse_format(format == nullptr ? "plain" : format);
        *out = dup_string(seqid::render_reports(report->reports, fmt));
    });
}

void seqid_report_free(seqid_report* report) { delete report; }

}  // extern "C"
