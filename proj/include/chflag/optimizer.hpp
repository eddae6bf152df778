#pragma once

#include "chflag/certificate.hpp"
#include "chflag/lp.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace chflag {

// r in R^32 with r >= 0, sum r = 1, the 14 regularity equalities, the two
// induction forms and the fork form >= 0, and a CS a^T >= 0 for every cut a.
LPProblem build_Rk(const Rational& c, std::span<const CutVector> cuts);

struct BisectionResult {
    Rational c;   // last feasible point
    Rational hi;  // first infeasible point seen (or the original hi)
    int steps = 0;
    // Feasible at max(lo, c - tol) and, when c + tol <= hi, infeasible there.
    bool post_check_ok = true;
};

// Bisection with exact midpoints until hi - lo <= tol. Throws
// std::invalid_argument if lo >= hi, tol <= 0 or the predicate fails at lo.
BisectionResult bisect(const std::function<bool(const Rational&)>& feasible, const Rational& lo,
                       const Rational& hi, const Rational& tol);

BisectionResult binary_search_c(std::span<const CutVector> cuts, const Rational& lo,
                                const Rational& hi, const Rational& tol);

struct SearchOptions {
    Rational c_lo{1, 3};
    Rational c_hi{2, 5};
    Rational tol_c{1, 10000};
    Rational stop_delta{1, 10000};
    int max_iters = 8;
    std::vector<CutVector> seed_cuts;
};

struct SearchRecord {
    int k = 0;
    Rational c_k;
    RationalVector r_k;
    std::optional<CutVector> cut;  // empty when CS(r_k) had no negative eigenvalue
    double min_eig = 0;
    Rational cut_value;            // a CS(r_k) a^T, exact
};

struct SearchTrace {
    std::vector<SearchRecord> records;
    std::string stop_reason;
};

struct SearchOutcome {
    Certificate candidate;  // cuts filled in, threshold c_k rounded up to 6 places;
                            // regularity vector and multipliers zero
    SearchTrace trace;
};

// Eigenvector scaled so its largest |entry| is 100 (that entry positive),
// then rounded to `places` decimals.
CutVector round_cut(const std::vector<double>& eigenvector, int places);

SearchOutcome cutting_plane_search(const SearchOptions& options);

nlohmann::ordered_json record_to_json(const SearchRecord& record);

}  // namespace chflag
