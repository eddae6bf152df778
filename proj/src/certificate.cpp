#include "chflag/certificate.hpp"
#include "chflag/transcriptions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chflag {

namespace {

const Rational kOneThird(1, 3);

void require_dimensions(const Certificate& cert) {
    if (cert.reg_vector.size() != 14) {
        throw std::invalid_argument("reg_vector must have 14 entries");
    }
}

Rational parse_numeral(const nlohmann::json& j, const char* what) {
    if (!j.is_string()) {
        throw std::invalid_argument(std::string(what) + ": expected a decimal string");
    }
    return parse_decimal(j.get<std::string>());
}

RationalVector parse_vector(const nlohmann::json& j, std::size_t expected, const char* what) {
    if (!j.is_array() || j.size() != expected) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                    " entries");
    }
    RationalVector out;
    for (const auto& x : j) {
        out.push_back(parse_numeral(x, what));
    }
    return out;
}

// Every entry written with the same number of places, the most any entry
// needs, so published vectors such as "-24.40" survive a round trip.
nlohmann::json decimal_array(std::span<const Rational> values, int min_places) {
    int places = min_places;
    for (const auto& v : values) {
        auto p = decimal_places(v);
        if (!p) {
            throw std::invalid_argument("value has no finite decimal expansion: " +
                                        to_fraction_string(v));
        }
        places = std::max(places, *p);
    }
    auto out = nlohmann::json::array();
    for (const auto& v : values) {
        out.push_back(to_decimal_string(v, places));
    }
    return out;
}

}  // namespace

void Certificate::validate() const {
    require_dimensions(*this);
    if (ind_t_mult < 0 || ind_v_mult < 0 || fork_mult < 0) {
        throw std::invalid_argument("lemma multipliers must be nonnegative");
    }
    if (threshold_c < kOneThird) {
        throw std::invalid_argument("threshold c must be at least 1/3");
    }
}

RationalVector evaluate_F(const Certificate& cert, const Rational& c) {
    require_dimensions(cert);
    if (c < kOneThird) {
        throw std::invalid_argument("evaluate_F: c must be at least 1/3");
    }
    const ProofForms& pf = proof_forms();
    LinearForm total(named_basis("H"));
    for (const auto& a : cert.cs_vectors) {
        total += quadratic_form(pf.cs, a);
    }
    for (std::size_t j = 0; j < 14; ++j) {
        if (cert.reg_vector[j] != 0) {
            total -= cert.reg_vector[j] * pf.reg.row_form(j, c);
        }
    }
    total += cert.ind_t_mult * pf.ind_t.at(c);
    total += cert.ind_v_mult * pf.ind_v.at(c);
    total += cert.fork_mult * pf.fork.at(c);
    return total.coeffs();
}

RationalVector regularity_induction_slope(const Certificate& cert) {
    require_dimensions(cert);
    const ProofForms& pf = proof_forms();
    RationalVector slope(32);
    for (std::size_t h = 0; h < 32; ++h) {
        Rational s = cert.ind_t_mult * pf.ind_t.c_part[h] + cert.ind_v_mult * pf.ind_v.c_part[h];
        for (std::size_t j = 0; j < 14; ++j) {
            s += cert.reg_vector[j] * pf.reg.a_reg[j][h];
        }
        slope[h] = s;
    }
    return slope;
}

bool verify_monotonicity(const Certificate& cert) {
    if (cert.fork_mult < 0) {
        return false;
    }
    auto slope = regularity_induction_slope(cert);
    return std::all_of(slope.begin(), slope.end(), [](const Rational& s) { return s <= 0; });
}

VerificationReport verify(const Certificate& cert) {
    VerificationReport report;
    report.coefficients = evaluate_F(cert, cert.threshold_c);
    report.max_coefficient =
        *std::max_element(report.coefficients.begin(), report.coefficients.end());
    report.valid = report.max_coefficient < 0;
    report.monotone_in_c = verify_monotonicity(cert);
    return report;
}

Certificate load_certificate(std::string_view text) {
    try {
        return load_certificate_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
    }
}

Certificate load_certificate_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("version") || j.at("version") != 1) {
        throw std::invalid_argument("certificate: expected an object with version 1");
    }
    Certificate cert;
    cert.threshold_c = parse_numeral(j.at("c"), "c");
    for (const auto& v : j.at("cs_vectors")) {
        auto values = parse_vector(v, 8, "cs_vectors");
        CutVector a;
        std::copy(values.begin(), values.end(), a.begin());
        cert.cs_vectors.push_back(a);
    }
    cert.reg_vector = parse_vector(j.at("reg_vector"), 14, "reg_vector");
    cert.ind_t_mult = parse_numeral(j.at("c_T"), "c_T");
    cert.ind_v_mult = parse_numeral(j.at("c_V"), "c_V");
    cert.fork_mult = parse_numeral(j.at("d"), "d");
    cert.validate();
    return cert;
}

std::string save_certificate(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["c"] = to_decimal_string(cert.threshold_c);
    auto cuts = nlohmann::json::array();
    for (const auto& a : cert.cs_vectors) {
        cuts.push_back(decimal_array(a, 0));
    }
    j["cs_vectors"] = cuts;
    j["reg_vector"] = decimal_array(cert.reg_vector, 0);
    j["c_T"] = to_decimal_string(cert.ind_t_mult);
    j["c_V"] = to_decimal_string(cert.ind_v_mult);
    j["d"] = to_decimal_string(cert.fork_mult);
    return j.dump(2) + "\n";
}

Certificate load_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_certificate(buffer.str());
}

Certificate published_certificate() {
    return load_certificate_file((data_dir() / "published_certificate.json").string());
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["valid"] = report.valid;
    j["monotone_in_c"] = report.monotone_in_c;
    j["max_coefficient"] = to_fraction_string(report.max_coefficient);
    auto coeffs = nlohmann::json::array();
    for (const auto& c : report.coefficients) {
        coeffs.push_back(to_fraction_string(c));
    }
    j["coefficients"] = coeffs;
    return j;
}

}  // namespace chflag
