#pragma once

#include "chflag/algebra.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace chflag {

// Integer multipliers that turn each generated object into the units its
// published table is written in.
struct TableScales {
    static constexpr int kCauchySchwarz = 24;
    static constexpr int kRegularity = 12;
    static constexpr int kInductionT = 24;
    static constexpr int kInductionV = 12;
    static constexpr int kFork = 4;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Symmetric 8x8 matrix of forms over H; entry (i, j) = 24 [[K_i K_j]]_beta.
class CSMatrix {
public:
    static constexpr std::size_t kSize = 8;

    explicit CSMatrix(std::vector<LinearForm> entries);

    const LinearForm& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * kSize + j); }

    // Numeric matrix at a point r.
    std::vector<std::vector<Rational>> at(std::span<const Rational> point) const;

private:
    std::vector<LinearForm> entries_;
};

CSMatrix cs_matrix();

// sum_{i,j} a_i a_j M(i, j).
LinearForm quadratic_form(const CSMatrix& matrix, std::span<const Rational> a);

struct RegMatrices {
    IntMatrix a_reg;  // 14 x 32
    IntMatrix b_reg;  // 14 x 32
    int scale = TableScales::kRegularity;

    // Row j of B_Reg - c A_Reg as a form over H.
    LinearForm row_form(std::size_t j, const Rational& c) const;
};

// Unscaled rows: A_j = [[L_j]]_1 lifted to order 4, B_j = [[L_j alpha]]_1.
struct RegRows {
    std::vector<LinearForm> a_rows;
    std::vector<LinearForm> b_rows;
};
RegRows unscaled_reg_rows();
RegMatrices reg_matrices();

// const_part + c * c_part.
struct AffineForm {
    LinearForm const_part;
    LinearForm c_part;

    LinearForm at(const Rational& c) const;
};

// No edge with an unlabelled tail and a labelled head.
bool is_sigma_source(const Flag& flag);
std::vector<Flag> sigma_sources(const FlagType& sigma, int order);

// [[f(sigma)]]_sigma over H before table scaling; sigma must be T or V.
AffineForm unscaled_induction_form(const FlagType& sigma);
AffineForm induction_form(const FlagType& sigma);

// Fork(c) = linear - 12 (3c - 1)^2 * (all-ones).
struct ForkForm {
    LinearForm linear;
    Rational quadratic_multiplier;

    LinearForm at(const Rational& c) const;
};
ForkForm fork_form();

// Everything the certificate and the LP need, generated once.
struct ProofForms {
    CSMatrix cs;
    RegMatrices reg;
    AffineForm ind_t;
    AffineForm ind_v;
    ForkForm fork;
};
const ProofForms& proof_forms();

}  // namespace chflag
