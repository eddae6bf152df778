#include "chflag/lp.hpp"

#include <stdexcept>

namespace chflag {

void LPProblem::check_dimensions() const {
    for (const auto* rows : {&equalities, &inequalities}) {
        for (const auto& row : *rows) {
            if (row.coeffs.size() != num_vars) {
                throw std::invalid_argument("LP row length does not match num_vars");
            }
        }
    }
}

bool LPProblem::satisfied_by(const RationalVector& x) const {
    if (x.size() != num_vars) {
        return false;
    }
    if (nonneg) {
        for (const auto& v : x) {
            if (v < 0) {
                return false;
            }
        }
    }
    for (const auto& row : equalities) {
        if (dot(row.coeffs, x) != row.rhs) {
            return false;
        }
    }
    for (const auto& row : inequalities) {
        if (dot(row.coeffs, x) < row.rhs) {
            return false;
        }
    }
    return true;
}

namespace {

// Dense tableau for: minimize sum of artificials subject to A y = b, y >= 0.
// Column layout: structural columns, then one artificial per row, then rhs.
class Tableau {
public:
    Tableau(std::vector<RationalVector> rows, std::size_t structural)
        : rows_(std::move(rows)), structural_(structural) {
        const std::size_t m = rows_.size();
        width_ = structural_ + m;
        basis_.resize(m);
        cost_.assign(width_ + 1, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector& r = rows_[i];
            Rational rhs = r.back();
            r.pop_back();
            if (rhs < 0) {
                for (auto& v : r) {
                    v = -v;
                }
                rhs = -rhs;
            }
            r.resize(width_, Rational(0));
            r[structural_ + i] = 1;
            r.push_back(rhs);
            basis_[i] = structural_ + i;
            // Reduced costs of phase one: c_j - sum over rows.
            for (std::size_t j = 0; j < structural_; ++j) {
                cost_[j] -= r[j];
            }
            cost_[width_] -= rhs;
        }
    }

    void solve() {
        while (true) {
            std::size_t entering = width_;
            for (std::size_t j = 0; j < width_; ++j) {
                if (cost_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == width_) {
                return;
            }
            std::size_t leaving = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][entering];
                if (a <= 0) {
                    continue;
                }
                Rational ratio = rows_[i][width_] / a;
                if (leaving == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (leaving == rows_.size()) {
                throw std::logic_error("phase-one LP reported unbounded; malformed problem");
            }
            pivot(leaving, entering);
        }
    }

    // Minimum of the phase-one objective (sum of artificials).
    Rational objective() const { return -cost_[width_]; }

    RationalVector structural_values() const {
        RationalVector y(structural_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < structural_) {
                y[basis_[i]] = rows_[i][width_];
            }
        }
        return y;
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        RationalVector& p = rows_[row];
        const Rational inv = 1 / p[col];
        for (auto& v : p) {
            v *= inv;
        }
        auto eliminate = [&](RationalVector& r) {
            if (r[col] == 0) {
                return;
            }
            const Rational factor = r[col];
            for (std::size_t j = 0; j <= width_; ++j) {
                if (p[j] != 0) {
                    r[j] -= factor * p[j];
                }
            }
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != row) {
                eliminate(rows_[i]);
            }
        }
        eliminate(cost_);
        basis_[row] = col;
    }

    std::vector<RationalVector> rows_;
    std::size_t structural_;
    std::size_t width_ = 0;
    std::vector<std::size_t> basis_;
    RationalVector cost_;
};

}  // namespace

LPResult lp_feasible(const LPProblem& problem) {
    problem.check_dimensions();
    const std::size_t n = problem.num_vars;
    // Free variables are split as x = x+ - x-.
    const std::size_t var_cols = problem.nonneg ? n : 2 * n;
    const std::size_t slack_cols = problem.inequalities.size();
    const std::size_t structural = var_cols + slack_cols;

    std::vector<RationalVector> rows;
    auto add_row = [&](const LPRow& row, std::ptrdiff_t slack) {
        RationalVector r(structural + 1, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = row.coeffs[j];
            if (!problem.nonneg) {
                r[n + j] = -row.coeffs[j];
            }
        }
        if (slack >= 0) {
            r[var_cols + static_cast<std::size_t>(slack)] = -1;
        }
        r[structural] = row.rhs;
        rows.push_back(std::move(r));
    };
    for (const auto& row : problem.equalities) {
        add_row(row, -1);
    }
    for (std::size_t i = 0; i < problem.inequalities.size(); ++i) {
        add_row(problem.inequalities[i], static_cast<std::ptrdiff_t>(i));
    }

    LPResult result;
    if (rows.empty()) {
        result.status = LPStatus::Feasible;
        result.point.assign(n, Rational(0));
        return result;
    }

    Tableau tableau(std::move(rows), structural);
    tableau.solve();
    if (tableau.objective() != 0) {
        return result;
    }
    RationalVector y = tableau.structural_values();
    result.point.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        result.point[j] = problem.nonneg ? y[j] : y[j] - y[n + j];
    }
    if (!problem.satisfied_by(result.point)) {
        throw std::logic_error("LP solution failed exact re-check");
    }
    result.status = LPStatus::Feasible;
    return result;
}

}  // namespace chflag
