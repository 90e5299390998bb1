#pragma once

#include <string>

#include "identities.hpp"
#include "verifier.hpp"

namespace seqid {

enum class OutputFormat { plain, latex, json };
enum class Parity { even, odd };

OutputFormat parse_format(const std::string& name);
Parity parse_parity(const std::string& name);

// Identity emitters. Zero coefficients are omitted everywhere; big integers
// travel as decimal strings in JSON. JSON output is stable under a
// parse/re-emit round trip.
std::string render_odd_multiple(const OddMultipleIdentity& id, Parity parity, OutputFormat format);
std::string render_general_odd_multiple(const GeneralOddMultipleIdentity& id, Parity parity,
                                        OutputFormat format);
std::string render_power_reduction(const PowerReduction& id, Parity parity, OutputFormat format);
std::string render_melham(const MelhamIdentity& id, bool cleared, OutputFormat format);

// Report emitters (plain or json; latex is not defined for reports).
std::string render_report(const VerificationReport& report, OutputFormat format);
std::string render_reports(const std::vector<VerificationReport>& reports, OutputFormat format);

}  // namespace seqid
