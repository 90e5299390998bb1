#include "render.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace seqid {

namespace {

using nlohmann::json;

struct Term {
    bool negative;
    std::string magnitude;
};

std::string join_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].magnitude;
    }
    return out;
}

std::string plain_power(const std::string& var, long degree) {
    if (degree == 1) return var;
    return var + "^" + std::to_string(degree);
}

std::string latex_power(const std::string& sym, long degree) {
    if (degree == 1) return sym;
    std::string exp = std::to_string(degree);
    if (degree >= 10) exp = "{" + exp + "}";
    return "{" + sym + "}^" + exp;
}

// One term of an integer polynomial, sign split out.
Term plain_term(const mpz_class& coeff, long degree, const std::string& var) {
    mpz_class mag = abs(coeff);
    if (degree == 0) return {sgn(coeff) < 0, mag.get_str()};
    std::string body = (mag == 1) ? plain_power(var, degree)
                                  : mag.get_str() + "*" + plain_power(var, degree);
    return {sgn(coeff) < 0, body};
}

Term latex_term(const mpz_class& coeff, long degree, const std::string& sym) {
    mpz_class mag = abs(coeff);
    if (degree == 0) return {sgn(coeff) < 0, mag.get_str()};
    std::string body = latex_power(sym, degree);
    if (mag != 1) body = mag.get_str() + body;
    return {sgn(coeff) < 0, body};
}

std::string poly_plain(const IntPoly& p, const std::string& var) {
    std::vector<Term> terms;
    for (long d = p.degree(); d >= 0; --d)
        if (!is_zero(p.coeff(d))) terms.push_back(plain_term(p.coeff(d), d, var));
    return join_terms(terms);
}

std::string poly_latex(const IntPoly& p, const std::string& sym) {
    std::vector<Term> terms;
    for (long d = p.degree(); d >= 0; --d)
        if (!is_zero(p.coeff(d))) terms.push_back(latex_term(p.coeff(d), d, sym));
    return join_terms(terms);
}

// The s-coefficients of the general family are c * (s^2+4)^i with i fixed
// by the degree; recover c so the emitted form matches how the identity is
// usually written rather than the expanded polynomial.
mpz_class extract_disc_multiple(const IntPoly& coeff, long i) {
    mpz_class at_zero = coeff(0);  // c * 4^i
    mpz_class four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(i));
    mpz_class c, r;
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), at_zero.get_mpz_t(), four_pow.get_mpz_t());
    if (r != 0) throw std::logic_error("general coefficient is not a multiple of (s^2+4)^i");
    IntPoly rebuilt = IntPoly::constant(c);
    const IntPoly disc(std::vector<mpz_class>{4, 0, 1});
    for (long k = 0; k < i; ++k) rebuilt *= disc;
    if (!(rebuilt == coeff))
        throw std::logic_error("general coefficient does not factor through (s^2+4)^i");
    return c;
}

std::string disc_string(long i, bool latex) {
    if (i == 0) return "";
    std::string base = "(s^2+4)";
    if (i == 1) return base;
    std::string exp = std::to_string(i);
    if (latex) return base + "^{" + exp + "}";
    return base + "^" + exp;
}

Term general_term(const mpz_class& c, long i, long degree, bool latex, const std::string& var) {
    mpz_class mag = abs(c);
    std::string body;
    std::string disc = disc_string(i, latex);
    std::string powed = latex ? latex_power(var, degree) : plain_power(var, degree);
    if (latex) {
        if (mag != 1) body += mag.get_str();
        body += disc + powed;
    } else {
        if (mag != 1) body += mag.get_str() + "*";
        if (!disc.empty()) body += disc + "*";
        body += powed;
    }
    return {sgn(c) < 0, body};
}

json coefficients_json(const IntPoly& p) {
    json arr = json::array();
    for (long d = 0; d <= p.degree(); ++d) {
        if (is_zero(p.coeff(d))) continue;
        arr.push_back(json{{"degree", d}, {"value", p.coeff(d).get_str()}});
    }
    return arr;
}

const char* parity_name(Parity parity) { return parity == Parity::odd ? "odd" : "even"; }

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "latex") return OutputFormat::latex;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format: " + name);
}

Parity parse_parity(const std::string& name) {
    if (name == "even") return Parity::even;
    if (name == "odd") return Parity::odd;
    throw std::invalid_argument("unknown parity: " + name);
}

std::string render_odd_multiple(const OddMultipleIdentity& id, Parity parity,
                                OutputFormat format) {
    const IntPoly& poly = parity == Parity::odd ? id.pair.odd_n : id.pair.even_n;
    long multiple = 2 * id.m + 1;
    switch (format) {
        case OutputFormat::plain: {
            std::ostringstream os;
            os << "P(" << (multiple == 1 ? "n" : std::to_string(multiple) + "n")
               << ") = " << poly_plain(poly, "X") << " where X = P(n), n "
               << parity_name(parity);
            return os.str();
        }
        case OutputFormat::latex: {
            std::ostringstream os;
            os << "P_{" << (multiple == 1 ? "n" : std::to_string(multiple) + "n")
               << "} = " << poly_latex(poly, "P_n");
            return os.str();
        }
        case OutputFormat::json: {
            json j;
            j["kind"] = "odd-multiple";
            j["m"] = id.m;
            j["variable"] = "P(n)";
            j["parity"] = parity_name(parity);
            j["coefficients"] = coefficients_json(poly);
            j["multiplier"] = nullptr;
            j["denominator"] = nullptr;
            return dump(j);
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_general_odd_multiple(const GeneralOddMultipleIdentity& id, Parity parity,
                                        OutputFormat format) {
    const SPoly& poly = parity == Parity::odd ? id.pair.odd_n : id.pair.even_n;
    long multiple = 2 * id.m + 1;

    // Degrees 2i+1 carry c * (s^2+4)^i.
    std::vector<std::pair<long, mpz_class>> factored;  // (degree, c), descending
    for (long d = poly.degree(); d >= 0; --d) {
        if (is_zero(poly.coeff(d))) continue;
        factored.emplace_back(d, extract_disc_multiple(poly.coeff(d), (d - 1) / 2));
    }

    switch (format) {
        case OutputFormat::plain: {
            std::vector<Term> terms;
            for (const auto& [d, c] : factored)
                terms.push_back(general_term(c, (d - 1) / 2, d, false, "X"));
            std::ostringstream os;
            os << "A(" << (multiple == 1 ? "n" : std::to_string(multiple) + "n")
               << ") = " << join_terms(terms) << " where X = A(n), n " << parity_name(parity);
            return os.str();
        }
        case OutputFormat::latex: {
            std::vector<Term> terms;
            for (const auto& [d, c] : factored)
                terms.push_back(general_term(c, (d - 1) / 2, d, true, "A_n"));
            std::ostringstream os;
            os << "A_{" << (multiple == 1 ? "n" : std::to_string(multiple) + "n")
               << "} = " << join_terms(terms);
            return os.str();
        }
        case OutputFormat::json: {
            json arr = json::array();
            for (auto it = factored.rbegin(); it != factored.rend(); ++it) {
                long i = (it->first - 1) / 2;
                std::string value;
                mpz_class c = it->second;
                std::string disc = disc_string(i, false);
                if (disc.empty()) {
                    value = c.get_str();
                } else {
                    mpz_class mag = abs(c);
                    value = (sgn(c) < 0 ? "-" : "");
                    if (mag != 1) value += mag.get_str() + "*";
                    value += disc;
                }
                arr.push_back(json{{"degree", it->first}, {"value", value}});
            }
            json j;
            j["kind"] = "odd-multiple";
            j["m"] = id.m;
            j["variable"] = "A(n)";
            j["parity"] = parity_name(parity);
            j["coefficients"] = arr;
            j["multiplier"] = nullptr;
            j["denominator"] = nullptr;
            return dump(j);
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_power_reduction(const PowerReduction& id, Parity parity, OutputFormat format) {
    // Resolve the sign (-1)^(j(n+1)): +1 everywhere for odd n, (-1)^j for
    // even n.
    auto term_sign = [&](long j) { return (parity == Parity::even && j % 2 != 0) ? -1 : 1; };
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(3 * id.m));

    switch (format) {
        case OutputFormat::plain: {
            std::vector<Term> terms;
            for (const auto& t : id.terms) {
                std::string p = "P(" + (t.index_multiplier == 1
                                            ? std::string("n")
                                            : std::to_string(t.index_multiplier) + "n") +
                                ")";
                std::string body = (t.weight == 1) ? p : t.weight.get_str() + "*" + p;
                terms.push_back({term_sign(t.j) < 0, body});
            }
            std::ostringstream os;
            os << plain_power("P(n)", 2 * id.m + 1) << " = ";
            if (denom == 1)
                os << join_terms(terms);
            else
                os << "(1/" << denom.get_str() << ")*(" << join_terms(terms) << ")";
            os << ", n " << parity_name(parity);
            return os.str();
        }
        case OutputFormat::latex: {
            std::vector<Term> terms;
            for (const auto& t : id.terms) {
                std::string p = "P_{" + (t.index_multiplier == 1
                                             ? std::string("n")
                                             : std::to_string(t.index_multiplier) + "n") +
                                "}";
                std::string body = (t.weight == 1) ? p : t.weight.get_str() + p;
                terms.push_back({term_sign(t.j) < 0, body});
            }
            std::ostringstream os;
            os << latex_power("P_n", 2 * id.m + 1) << " = ";
            if (denom == 1)
                os << join_terms(terms);
            else
                os << "\\frac{1}{" << denom.get_str() << "} \\left( " << join_terms(terms)
                   << " \\right)";
            os << ", \\quad n \\text{ " << parity_name(parity) << "}";
            return os.str();
        }
        case OutputFormat::json: {
            json arr = json::array();
            for (auto it = id.terms.rbegin(); it != id.terms.rend(); ++it) {
                mpz_class signed_weight = term_sign(it->j) < 0 ? mpz_class(-it->weight)
                                                               : it->weight;
                arr.push_back(
                    json{{"degree", it->index_multiplier}, {"value", signed_weight.get_str()}});
            }
            json j;
            j["kind"] = "power-reduction";
            j["m"] = id.m;
            j["variable"] = "P(n)";
            j["parity"] = parity_name(parity);
            j["coefficients"] = arr;
            j["multiplier"] = nullptr;
            j["denominator"] = denom.get_str();
            return dump(j);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string melham_multiplier_label(long m, bool latex) {
    std::string out;
    for (long j = 0; j <= m; ++j) {
        if (latex)
            out += "Q_" + std::to_string(2 * j + 1);
        else
            out += (j > 0 ? "*" : "") + std::string("Q") + std::to_string(2 * j + 1);
    }
    return out;
}

}  // namespace

std::string render_melham(const MelhamIdentity& id, bool cleared, OutputFormat format) {
    long exponent = 2 * id.m + 1;
    auto [numerator, denom] = clear_denominators(id.rational);

    switch (format) {
        case OutputFormat::plain: {
            std::ostringstream os;
            if (cleared)
                os << melham_multiplier_label(id.m, false) << "*S = "
                   << poly_plain(id.cleared, "X");
            else if (denom == 1)
                os << "S = " << poly_plain(numerator, "X");
            else
                os << "S = (1/" << denom.get_str() << ")*(" << poly_plain(numerator, "X") << ")";
            os << "\n  where S = sum_{k=1..n} P(2k)^" << exponent << ", X = P(2n+1)";
            return os.str();
        }
        case OutputFormat::latex: {
            std::string sum = "\\sum_{k=1}^{n} " + latex_power("P_{2k}", exponent);
            std::ostringstream os;
            if (cleared)
                os << melham_multiplier_label(id.m, true) << " " << sum << " = "
                   << poly_latex(id.cleared, "P_{2n+1}");
            else if (denom == 1)
                os << sum << " = " << poly_latex(numerator, "P_{2n+1}");
            else
                os << sum << " = \\frac{1}{" << denom.get_str() << "} \\left( "
                   << poly_latex(numerator, "P_{2n+1}") << " \\right)";
            return os.str();
        }
        case OutputFormat::json: {
            json j;
            j["kind"] = "melham";
            j["m"] = id.m;
            j["variable"] = "P(2n+1)";
            j["parity"] = nullptr;
            if (cleared) {
                j["coefficients"] = coefficients_json(id.cleared);
                j["multiplier"] = id.multiplier.get_str();
                j["denominator"] = nullptr;
            } else {
                j["coefficients"] = coefficients_json(numerator);
                j["multiplier"] = nullptr;
                j["denominator"] = denom.get_str();
            }
            return dump(j);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string range_str(const Range& r) {
    return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

json range_json(const Range& r) { return json::array({r.lo, r.hi}); }

json report_json(const VerificationReport& report) {
    json j;
    j["identity_id"] = report.identity_id;
    j["m_range"] = range_json(report.m_range);
    j["n_range"] = range_json(report.n_range);
    j["s_range"] = report.s_range ? range_json(*report.s_range) : json(nullptr);
    j["checks_run"] = report.checks_run;
    j["failure_count"] = report.failure_count;
    j["status"] = report.passed() ? "pass" : "fail";
    json fails = json::array();
    for (const auto& f : report.failures)
        fails.push_back(json{{"params", f.params}, {"left", f.left}, {"right", f.right}});
    j["failures"] = fails;
    j["notes"] = report.notes;
    return j;
}

std::string report_plain(const VerificationReport& report) {
    std::ostringstream os;
    os << (report.passed() ? "[PASS] " : "[FAIL] ") << report.identity_id << ": m in "
       << range_str(report.m_range) << ", n in " << range_str(report.n_range);
    if (report.s_range) os << ", s in " << range_str(*report.s_range);
    os << "; checks=" << report.checks_run << "; failures=" << report.failure_count;
    if (report.failure_count > static_cast<long>(report.failures.size()))
        os << " (showing first " << report.failures.size() << ")";
    for (const auto& f : report.failures)
        os << "\n  fail at " << f.params << ": left=" << f.left << ", right=" << f.right;
    for (const auto& n : report.notes) os << "\n  note: " << n;
    return os.str();
}

}  // namespace

std::string render_report(const VerificationReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::plain:
            return report_plain(report);
        case OutputFormat::json:
            return dump(report_json(report));
        case OutputFormat::latex:
            throw std::invalid_argument("latex format is not defined for reports");
    }
    throw std::logic_error("unreachable");
}

std::string render_reports(const std::vector<VerificationReport>& reports, OutputFormat format) {
    switch (format) {
        case OutputFormat::plain: {
            std::string out;
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i > 0) out += "\n";
                out += report_plain(reports[i]);
            }
            return out;
        }
        case OutputFormat::json: {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            return dump(arr);
        }
        case OutputFormat::latex:
            throw std::invalid_argument("latex format is not defined for reports");
    }
    throw std::logic_error("unreachable");
}

}  // namespace seqid
