#pragma once

#include <optional>
#include <string>
#include <vector>

#include "identities.hpp"

namespace seqid {

struct Range {
    long lo = 0;
    long hi = -1;

    bool contains(long v) const { return v >= lo && v <= hi; }
};

struct Failure {
    std::string params;
    std::string left;
    std::string right;
};

// Structured pass/fail record for one identity family over a test range.
// All comparisons are exact; failures are collected (capped), never thrown.
// Grid iteration order is fixed, so two runs with the same ranges render
// byte-identically.
struct VerificationReport {
    std::string identity_id;
    Range m_range;
    Range n_range;
    std::optional<Range> s_range;
    long checks_run = 0;
    long failure_count = 0;
    std::vector<Failure> failures;  // at most kMaxStoredFailures entries
    std::vector<std::string> notes;

    bool passed() const { return failure_count == 0; }
    void record(bool ok, const std::string& params, const std::string& left,
                const std::string& right);
};

inline constexpr long kMaxStoredFailures = 32;

// Default grid bounds for the CLI suites. Sized for desk runs of a few
// seconds; the melham ranges are smaller because value magnitude grows with
// the 2m+1 exponent.
struct SuiteDefaults {
    long m_max;
    long n_max;
    long s_max;
};
SuiteDefaults suite_defaults(const std::string& suite);

// Grid checks against pre-built identities. The split from the verify_*
// wrappers below exists so tests can feed perturbed identities through the
// same machinery (fault injection).
VerificationReport check_odd_multiple(const std::vector<OddMultipleIdentity>& ids, long n_max);
VerificationReport check_general_odd_multiple(const std::vector<GeneralOddMultipleIdentity>& ids,
                                              long n_max, long s_max);
VerificationReport check_power_reduction(const std::vector<PowerReduction>& ids, long n_max);
VerificationReport check_melham(const std::vector<MelhamIdentity>& ids, long n_max);

// Generate-then-check entry points, one per identity family.
VerificationReport verify_odd_multiple(long m_max, long n_max);
VerificationReport verify_general_odd_multiple(long m_max, long n_max, long s_max);
VerificationReport verify_power_reduction(long m_max, long n_max);
VerificationReport verify_melham(long m_max, long n_max);
VerificationReport verify_partial_sum(long m_max, long n_max);
VerificationReport verify_sequences(long s_max, long n_max);

// Every suite at its default ranges, in a fixed order.
std::vector<VerificationReport> verify_all();

}  // namespace seqid
