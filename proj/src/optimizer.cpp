#include "chflag/optimizer.hpp"
#include "chflag/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chflag {

namespace {

LPRow form_row(const LinearForm& f, const Rational& rhs) {
    return LPRow{f.coeffs(), rhs};
}

}  // namespace

LPProblem build_Rk(const Rational& c, std::span<const CutVector> cuts) {
    if (c < Rational(1, 3)) {
        throw std::invalid_argument("build_Rk: c must be at least 1/3");
    }
    const ProofForms& pf = proof_forms();
    LPProblem p;
    p.num_vars = 32;
    p.nonneg = true;
    p.equalities.push_back(form_row(LinearForm::ones(named_basis("H")), 1));
    for (std::size_t j = 0; j < 14; ++j) {
        p.equalities.push_back(form_row(pf.reg.row_form(j, c), 0));
    }
    p.inequalities.push_back(form_row(pf.ind_t.at(c), 0));
    p.inequalities.push_back(form_row(pf.ind_v.at(c), 0));
    p.inequalities.push_back(form_row(pf.fork.at(c), 0));
    for (const auto& a : cuts) {
        p.inequalities.push_back(form_row(quadratic_form(pf.cs, a), 0));
    }
    return p;
}

BisectionResult bisect(const std::function<bool(const Rational&)>& feasible, const Rational& lo,
                       const Rational& hi, const Rational& tol) {
    if (!(lo < hi) || tol <= 0) {
        throw std::invalid_argument("bisect: need lo < hi and tol > 0");
    }
    if (!feasible(lo)) {
        throw std::invalid_argument("bisect: infeasible at the lower end of the interval");
    }
    BisectionResult r;
    Rational a = lo;
    Rational b = hi;
    while (b - a > tol) {
        Rational mid = (a + b) / 2;
        if (feasible(mid)) {
            a = mid;
        } else {
            b = mid;
        }
        ++r.steps;
    }
    r.c = a;
    r.hi = b;
    if (r.steps > 0) {
        Rational below = std::max(lo, Rational(a - tol));
        r.post_check_ok = feasible(below);
        Rational above = a + tol;
        if (above <= hi) {
            r.post_check_ok = r.post_check_ok && !feasible(above);
        }
    }
    return r;
}

BisectionResult binary_search_c(std::span<const CutVector> cuts, const Rational& lo,
                                const Rational& hi, const Rational& tol) {
    return bisect([&](const Rational& c) { return lp_feasible(build_Rk(c, cuts)).feasible(); }, lo,
                  hi, tol);
}

CutVector round_cut(const std::vector<double>& eigenvector, int places) {
    if (eigenvector.size() != 8) {
        throw std::invalid_argument("round_cut: expected 8 entries");
    }
    std::size_t big = 0;
    for (std::size_t i = 1; i < 8; ++i) {
        if (std::abs(eigenvector[i]) > std::abs(eigenvector[big])) {
            big = i;
        }
    }
    if (eigenvector[big] == 0.0) {
        throw std::invalid_argument("round_cut: zero vector");
    }
    const double scale = 100.0 / eigenvector[big];
    CutVector cut;
    for (std::size_t i = 0; i < 8; ++i) {
        cut[i] = round_decimal(rational_from_double(eigenvector[i] * scale), places);
    }
    return cut;
}

SearchOutcome cutting_plane_search(const SearchOptions& options) {
    if (options.c_lo < Rational(1, 3) || options.tol_c <= 0 || options.stop_delta <= 0 ||
        options.max_iters <= 0) {
        throw std::invalid_argument("cutting_plane_search: invalid parameters");
    }
    const ProofForms& pf = proof_forms();
    SearchOutcome out;
    std::vector<CutVector> cuts = options.seed_cuts;
    std::optional<Rational> previous;

    for (int k = 0; k < options.max_iters; ++k) {
        SearchRecord rec;
        rec.k = k;
        rec.c_k = binary_search_c(cuts, options.c_lo, options.c_hi, options.tol_c).c;
        LPResult lp = lp_feasible(build_Rk(rec.c_k, cuts));
        rec.r_k = lp.point;

        auto exact = pf.cs.at(rec.r_k);
        Matrix m(8, std::vector<double>(8));
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                m[i][j] = exact[i][j].get_d();
            }
        }
        auto pairs = jacobi_eigen(m);
        rec.min_eig = pairs.front().value;

        const bool converged = previous && *previous - rec.c_k < options.stop_delta;
        previous = rec.c_k;

        if (rec.min_eig >= -1e-9) {
            out.trace.records.push_back(rec);
            out.trace.stop_reason = "no negative eigenvalue";
            break;
        }
        for (int places : {2, 4, 6}) {
            CutVector a = round_cut(pairs.front().vector, places);
            Rational value = 0;
            for (std::size_t i = 0; i < 8; ++i) {
                for (std::size_t j = 0; j < 8; ++j) {
                    value += a[i] * a[j] * exact[i][j];
                }
            }
            if (value < 0) {
                rec.cut = a;
                rec.cut_value = value;
                break;
            }
        }
        out.trace.records.push_back(rec);
        if (!rec.cut) {
            out.trace.stop_reason = "rounding destroyed negativity";
            break;
        }
        if (converged) {
            out.trace.stop_reason = "c decrease below stop_delta";
            break;
        }
        cuts.push_back(*rec.cut);
    }
    if (out.trace.stop_reason.empty()) {
        out.trace.stop_reason = "max_iters reached";
    }

    out.candidate.cs_vectors = cuts;
    // Rounded up to six places so the certificate file can hold it; R_k stays
    // feasible below c_k, so nothing smaller could be certified anyway.
    Rational c = out.trace.records.empty() ? options.c_lo : out.trace.records.back().c_k;
    Rational up = truncate_decimal(c, 6);
    if (up < c) {
        up += make_rational(1, 1000000);
    }
    out.candidate.threshold_c = up;
    return out;
}

nlohmann::ordered_json record_to_json(const SearchRecord& record) {
    nlohmann::ordered_json j;
    j["k"] = record.k;
    j["c_k"] = to_fraction_string(record.c_k);
    auto r = nlohmann::json::array();
    for (const auto& v : record.r_k) {
        r.push_back(to_fraction_string(v));
    }
    j["r_k"] = r;
    if (record.cut) {
        auto cut = nlohmann::json::array();
        for (const auto& v : *record.cut) {
            cut.push_back(to_decimal_string(v));
        }
        j["cut"] = cut;
    } else {
        j["cut"] = nullptr;
    }
    j["min_eig"] = record.min_eig;
    return j;
}

}  // namespace chflag
