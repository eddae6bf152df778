#pragma once

#include "chflag/inequalities.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace chflag {

using CutVector = std::array<Rational, 8>;

struct Certificate {
    std::vector<CutVector> cs_vectors;
    RationalVector reg_vector = RationalVector(14);
    Rational ind_t_mult;
    Rational ind_v_mult;
    Rational fork_mult;
    Rational threshold_c;

    // Throws std::invalid_argument on a negative multiplier, c < 1/3 or a
    // reg_vector that is not 14 long.
    void validate() const;
};

struct VerificationReport {
    RationalVector coefficients;
    Rational max_coefficient;
    bool valid = false;
    bool monotone_in_c = false;
};

// Coefficients of r_0..r_31 in
//   sum_i a_i CS a_i^T + b (c A_Reg - B_Reg) r^T + c_T Ind_T + c_V Ind_V + d Fork
// with every term in table units.
RationalVector evaluate_F(const Certificate& cert, const Rational& c);

// d/dc of evaluate_F with the fork term dropped (it only contributes
// -72 d (3c - 1) <= 0 for c >= 1/3).
RationalVector regularity_induction_slope(const Certificate& cert);

VerificationReport verify(const Certificate& cert);
bool verify_monotonicity(const Certificate& cert);

Certificate load_certificate(std::string_view text);
Certificate load_certificate_json(const nlohmann::json& j);
std::string save_certificate(const Certificate& cert);
Certificate load_certificate_file(const std::string& path);

// The published certificate shipped under data/.
Certificate published_certificate();

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace chflag
