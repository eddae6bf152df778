#include "chflag/optimizer.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace chflag;

namespace {

const Rational kThird = make_rational(1, 3);
const Rational kC = make_rational(693, 2000);  // 0.3465

Rational cut_value(const CutVector& a, const RationalVector& r) {
    auto m = proof_forms().cs.at(r);
    Rational v = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            v += a[i] * a[j] * m[i][j];
        }
    }
    return v;
}

}  // namespace

TEST(BuildRk, Shape) {
    LPProblem p = build_Rk(kC, {});
    EXPECT_EQ(p.num_vars, 32u);
    EXPECT_EQ(p.equalities.size(), 15u);
    EXPECT_EQ(p.inequalities.size(), 3u);
    EXPECT_TRUE(p.nonneg);

    auto cuts = published_certificate().cs_vectors;
    for (std::size_t k = 0; k <= cuts.size(); ++k) {
        std::vector<CutVector> some(cuts.begin(), cuts.begin() + static_cast<long>(k));
        EXPECT_EQ(build_Rk(kC, some).inequalities.size(), 3 + k);
    }
    EXPECT_THROW(build_Rk(make_rational(1, 4), {}), std::invalid_argument);
}

TEST(BuildRk, CutFreeRelaxationIsFeasibleAtThreshold) {
    EXPECT_TRUE(lp_feasible(build_Rk(kC, {})).feasible());
}

TEST(BuildRk, PublishedCutsCloseTheRegion) {
    // The valid certificate uses only these four cuts, so R_4(0.3465) = {}.
    auto cuts = published_certificate().cs_vectors;
    EXPECT_FALSE(lp_feasible(build_Rk(kC, cuts)).feasible());
}

TEST(Bisect, StepPredicate) {
    const Rational target = make_rational(35, 100);
    const Rational lo = kThird;
    const Rational hi = make_rational(2, 5);
    const Rational tol = make_rational(1, 1000000);
    BisectionResult r = bisect([&](const Rational& c) { return c <= target; }, lo, hi, tol);
    EXPECT_LE(abs(r.c - target), tol);
    EXPECT_LE(r.c, target);
    EXPECT_TRUE(r.post_check_ok);
    const int expected = static_cast<int>(std::ceil(std::log2(Rational((hi - lo) / tol).get_d())));
    EXPECT_EQ(r.steps, expected);
}

TEST(Bisect, NarrowIntervalReturnsImmediately) {
    const Rational hi = make_rational(2, 5);
    const Rational tol = make_rational(1, 10000);
    int calls = 0;
    BisectionResult r = bisect(
        [&](const Rational&) {
            ++calls;
            return true;
        },
        hi - tol, hi, tol);
    EXPECT_EQ(r.steps, 0);
    EXPECT_EQ(r.c, hi - tol);
    EXPECT_EQ(calls, 1);
}

TEST(Bisect, Errors) {
    auto never = [](const Rational&) { return false; };
    EXPECT_THROW(bisect(never, kThird, make_rational(2, 5), make_rational(1, 100)),
                 std::invalid_argument);
    auto always = [](const Rational&) { return true; };
    EXPECT_THROW(bisect(always, kThird, kThird, make_rational(1, 100)), std::invalid_argument);
    EXPECT_THROW(bisect(always, kThird, make_rational(2, 5), Rational(0)), std::invalid_argument);
}

TEST(Bisect, InconsistentPredicateIsFlagged) {
    // answers c <= 0.34 during the bisection, then "feasible" everywhere
    int calls = 0;
    auto flaky = [&](const Rational& c) { return ++calls > 8 || c <= make_rational(34, 100); };
    BisectionResult r = bisect(flaky, kThird, make_rational(2, 5), make_rational(1, 1000));
    EXPECT_EQ(r.steps, 7);
    EXPECT_FALSE(r.post_check_ok);
}

TEST(BinarySearchC, ZeroCutsExceedThreshold) {
    BisectionResult r = binary_search_c({}, kThird, make_rational(2, 5), make_rational(1, 10000));
    EXPECT_GT(r.c, kC);
    EXPECT_TRUE(r.post_check_ok);
}

TEST(BinarySearchC, PublishedCutsTerminateBelowThreshold) {
    auto cuts = published_certificate().cs_vectors;
    BisectionResult r =
        binary_search_c(cuts, kThird, make_rational(36, 100), make_rational(1, 10000));
    EXPECT_LT(r.c, make_rational(3466, 10000));
    EXPECT_TRUE(r.post_check_ok);
}

TEST(RoundCut, ScalesAndRounds) {
    CutVector a = round_cut({-0.5, 0.25, 0.123456, 0, 0, 0, 0, 0.1}, 2);
    EXPECT_EQ(a[0], 100);
    EXPECT_EQ(a[1], -50);
    EXPECT_EQ(a[2], parse_decimal("-24.69"));
    EXPECT_EQ(a[7], -20);
    EXPECT_THROW(round_cut({0, 0, 0, 0, 0, 0, 0, 0}, 2), std::invalid_argument);
    EXPECT_THROW(round_cut({1, 2}, 2), std::invalid_argument);
}

TEST(CuttingPlane, TraceProperties) {
    SearchOptions options;
    options.max_iters = 4;
    SearchOutcome out = cutting_plane_search(options);
    const auto& recs = out.trace.records;
    ASSERT_GE(recs.size(), 4u);
    for (std::size_t k = 0; k < recs.size(); ++k) {
        EXPECT_EQ(recs[k].k, static_cast<int>(k));
        if (k > 0) {
            EXPECT_LE(recs[k].c_k, recs[k - 1].c_k);
        }
        if (recs[k].cut) {
            EXPECT_LT(cut_value(*recs[k].cut, recs[k].r_k), 0);
            EXPECT_EQ(cut_value(*recs[k].cut, recs[k].r_k), recs[k].cut_value);
            EXPECT_LT(recs[k].min_eig, 0);
        }
    }
    // the first c exceeds the c reached after three cuts
    EXPECT_GT(recs.front().c_k, recs[3].c_k);
    EXPECT_EQ(out.candidate.cs_vectors.size(), 4u);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(out.candidate.cs_vectors[k], *recs[k].cut);
    }
    std::vector<CutVector> before;
    for (std::size_t k = 0; k < recs.size(); ++k) {
        EXPECT_TRUE(build_Rk(recs[k].c_k, before).satisfied_by(recs[k].r_k));
        if (recs[k].cut) {
            before.push_back(*recs[k].cut);
        }
    }

    // deterministic: a shorter run reproduces the prefix
    options.max_iters = 2;
    SearchOutcome again = cutting_plane_search(options);
    ASSERT_EQ(again.trace.records.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(again.trace.records[k].c_k, recs[k].c_k);
        EXPECT_EQ(again.trace.records[k].r_k, recs[k].r_k);
        EXPECT_EQ(again.trace.records[k].cut, recs[k].cut);
    }
}

TEST(CuttingPlane, InvalidParameters) {
    SearchOptions options;
    options.c_lo = make_rational(1, 4);
    EXPECT_THROW(cutting_plane_search(options), std::invalid_argument);
    options = SearchOptions{};
    options.max_iters = 0;
    EXPECT_THROW(cutting_plane_search(options), std::invalid_argument);
    options = SearchOptions{};
    options.c_lo = make_rational(39, 100);
    options.seed_cuts = published_certificate().cs_vectors;
    EXPECT_THROW(cutting_plane_search(options), std::invalid_argument);
}

TEST(CuttingPlane, RecordJson) {
    SearchRecord rec;
    rec.k = 2;
    rec.c_k = make_rational(7, 20);
    rec.r_k = RationalVector(32, make_rational(1, 32));
    CutVector a{};
    a[0] = parse_decimal("-12.5");
    rec.cut = a;
    rec.min_eig = -0.25;
    auto j = record_to_json(rec);
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["c_k"], "7/20");
    EXPECT_EQ(j["r_k"].size(), 32u);
    EXPECT_EQ(j["cut"][0], "-12.5");
    EXPECT_EQ(j["min_eig"], -0.25);
}
