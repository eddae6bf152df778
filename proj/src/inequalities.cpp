#include "chflag/inequalities.hpp"

#include <stdexcept>

namespace chflag {

namespace {

BasisPtr h_basis() { return named_basis("H"); }

IntMatrix to_int_matrix(const std::vector<LinearForm>& rows, int scale) {
    IntMatrix out;
    for (const auto& row : rows) {
        std::vector<std::int64_t> ints;
        for (const auto& c : row.coeffs()) {
            Rational scaled = c * scale;
            if (scaled.get_den() != 1) {
                throw std::logic_error("regularity entry is not an integer at scale " +
                                       std::to_string(scale));
            }
            ints.push_back(scaled.get_num().get_si());
        }
        out.push_back(std::move(ints));
    }
    return out;
}

}  // namespace

CSMatrix::CSMatrix(std::vector<LinearForm> entries) : entries_(std::move(entries)) {
    if (entries_.size() != kSize * kSize) {
        throw std::invalid_argument("CS matrix needs 64 entries");
    }
}

std::vector<std::vector<Rational>> CSMatrix::at(std::span<const Rational> point) const {
    std::vector<std::vector<Rational>> m(kSize, std::vector<Rational>(kSize));
    for (std::size_t i = 0; i < kSize; ++i) {
        for (std::size_t j = 0; j < kSize; ++j) {
            m[i][j] = evaluate((*this)(i, j), point);
        }
    }
    return m;
}

CSMatrix cs_matrix() {
    BasisPtr k = named_basis("K");
    std::vector<LinearForm> entries;
    entries.reserve(CSMatrix::kSize * CSMatrix::kSize);
    for (std::size_t i = 0; i < CSMatrix::kSize; ++i) {
        for (std::size_t j = 0; j < CSMatrix::kSize; ++j) {
            if (j < i) {
                entries.push_back(entries[j * CSMatrix::kSize + i]);
                continue;
            }
            LinearForm e = average(product((*k)[i], (*k)[j], 4));
            e *= TableScales::kCauchySchwarz;
            entries.push_back(std::move(e));
        }
    }
    return CSMatrix(std::move(entries));
}

LinearForm quadratic_form(const CSMatrix& matrix, std::span<const Rational> a) {
    if (a.size() != CSMatrix::kSize) {
        throw std::invalid_argument("quadratic_form: vector must have 8 entries");
    }
    LinearForm out(h_basis());
    for (std::size_t i = 0; i < CSMatrix::kSize; ++i) {
        for (std::size_t j = 0; j < CSMatrix::kSize; ++j) {
            Rational w = a[i] * a[j];
            if (w == 0) {
                continue;
            }
            const LinearForm& e = matrix(i, j);
            for (std::size_t h = 0; h < out.size(); ++h) {
                out[h] += w * e[h];
            }
        }
    }
    return out;
}

LinearForm RegMatrices::row_form(std::size_t j, const Rational& c) const {
    LinearForm out(h_basis());
    for (std::size_t h = 0; h < out.size(); ++h) {
        out[h] = Rational(b_reg.at(j)[h]) - c * Rational(a_reg.at(j)[h]);
    }
    return out;
}

RegRows unscaled_reg_rows() {
    BasisPtr l = named_basis("L");
    const Flag alpha = named_flag("alpha");
    RegRows rows;
    for (const Flag& lj : l->members()) {
        rows.a_rows.push_back(average(lift_to_order(as_form(lj), 4)));
        rows.b_rows.push_back(average(product(lj, alpha, 4)));
    }
    return rows;
}

RegMatrices reg_matrices() {
    RegRows rows = unscaled_reg_rows();
    RegMatrices m;
    m.scale = TableScales::kRegularity;
    m.a_reg = to_int_matrix(rows.a_rows, m.scale);
    m.b_reg = to_int_matrix(rows.b_rows, m.scale);
    return m;
}

LinearForm AffineForm::at(const Rational& c) const {
    LinearForm out = c_part;
    out *= c;
    out += const_part;
    return out;
}

bool is_sigma_source(const Flag& flag) {
    const int k = flag.type_order();
    for (auto [u, v] : flag.graph().edges()) {
        if (u >= k && v < k) {
            return false;
        }
    }
    return true;
}

std::vector<Flag> sigma_sources(const FlagType& sigma, int order) {
    if (order < sigma.order() || order > 4) {
        throw std::invalid_argument("sigma_sources: order must satisfy |sigma| <= l <= 4");
    }
    std::vector<Flag> out;
    for (const Flag& f : basis_for(sigma, order)->members()) {
        if (is_sigma_source(f)) {
            out.push_back(f);
        }
    }
    return out;
}

AffineForm unscaled_induction_form(const FlagType& sigma) {
    const bool is_t = sigma == t_type();
    if (!is_t && !(sigma == v_type())) {
        throw std::invalid_argument("induction_form: type must be T or V");
    }
    const Flag f0 = named_flag(is_t ? "F0(T)" : "F0(V)");
    BasisPtr basis = basis_for(sigma, 4);
    LinearForm others(basis);
    for (const Flag& f : sigma_sources(sigma, 4)) {
        if (!flags_isomorphic(f, f0)) {
            others[basis->index_of(f)] += 1;
        }
    }
    LinearForm c_part = average(f0);
    c_part -= lift_to_order(average(Flag::unit(sigma)), 4);
    return AffineForm{average(others), c_part};
}

AffineForm induction_form(const FlagType& sigma) {
    AffineForm form = unscaled_induction_form(sigma);
    const int scale = sigma == t_type() ? TableScales::kInductionT : TableScales::kInductionV;
    form.const_part *= scale;
    form.c_part *= scale;
    return form;
}

LinearForm ForkForm::at(const Rational& c) const {
    Rational t = 3 * c - 1;
    Rational shift = quadratic_multiplier * t * t;
    LinearForm out = linear;
    for (std::size_t h = 0; h < out.size(); ++h) {
        out[h] += shift;
    }
    return out;
}

ForkForm fork_form() {
    LinearForm linear = lift_to_order(as_form(named_flag("kappa")), 4);
    linear *= TableScales::kFork;
    // 4 * 3 (3c - 1)^2 spread over the all-ones form, since sum rho_i = 1.
    return ForkForm{std::move(linear), Rational(-TableScales::kFork * 3)};
}

const ProofForms& proof_forms() {
    static const ProofForms forms{cs_matrix(), reg_matrices(), induction_form(t_type()),
                                  induction_form(v_type()), fork_form()};
    return forms;
}

}  // namespace chflag
