#include "chflag/transcriptions.hpp"

#include <gtest/gtest.h>

using namespace chflag;

TEST(Transcriptions, TableOneRegenerates) {
    DiffReport d = diff_cs(proof_forms().cs, published_tables());
    EXPECT_TRUE(d.ok()) << d.summary();
    EXPECT_EQ(d.summary(), "cs: 64/64 entries match");
}

TEST(Transcriptions, TableTwoRegenerates) {
    DiffReport d = diff_reg(proof_forms().reg, published_tables());
    EXPECT_EQ(d.total, 2u * 14 * 32);
    EXPECT_TRUE(d.ok()) << d.summary();
}

TEST(Transcriptions, InductionFormsRegenerate) {
    const auto& pub = published_tables();
    EXPECT_TRUE(diff_induction("ind_T", proof_forms().ind_t, pub.ind_t).ok());
    EXPECT_TRUE(diff_induction("ind_V", proof_forms().ind_v, pub.ind_v).ok());
}

TEST(Transcriptions, ForkRegenerates) {
    EXPECT_TRUE(diff_fork(proof_forms().fork, published_tables()).ok());
}

TEST(Transcriptions, DiffReportsMismatches) {
    PublishedTables altered = published_tables();
    altered.cs[9][6] += 1;  // entry (1, 1)
    DiffReport d = diff_cs(proof_forms().cs, altered);
    EXPECT_FALSE(d.ok());
    EXPECT_EQ(d.matched, 63u);
    ASSERT_EQ(d.mismatches.size(), 1u);
    EXPECT_NE(d.mismatches[0].find("(1,1)"), std::string::npos);
}

TEST(Transcriptions, FittedScalesEqualPinnedScales) {
    const auto& pub = published_tables();
    RegRows raw = unscaled_reg_rows();
    auto fit_a = fit_scale(raw.a_rows, int_rows_as_forms(pub.a_reg));
    auto fit_b = fit_scale(raw.b_rows, int_rows_as_forms(pub.b_reg));
    ASSERT_TRUE(fit_a && fit_b);
    EXPECT_EQ(*fit_a, TableScales::kRegularity);
    EXPECT_EQ(*fit_b, TableScales::kRegularity);
    EXPECT_NE(pub.reg_scale_in_text, TableScales::kRegularity);

    AffineForm t = unscaled_induction_form(t_type());
    AffineForm v = unscaled_induction_form(v_type());
    EXPECT_EQ(fit_scale({t.const_part, t.c_part}, {pub.ind_t.const_part, pub.ind_t.c_part}),
              Rational(TableScales::kInductionT));
    EXPECT_EQ(fit_scale({v.const_part, v.c_part}, {pub.ind_v.const_part, pub.ind_v.c_part}),
              Rational(TableScales::kInductionV));
}

TEST(Transcriptions, FitScaleRejectsInconsistentRows) {
    LinearForm a(named_basis("H"));
    LinearForm b(named_basis("H"));
    a[0] = 1;
    a[1] = 2;
    b[0] = 3;
    b[1] = 5;
    EXPECT_FALSE(fit_scale({a}, {b}).has_value());
    b[1] = 6;
    EXPECT_EQ(fit_scale({a}, {b}), Rational(3));
}

TEST(Transcriptions, EqFinalHasThirtyTwoDecimals) {
    const auto& pub = published_tables();
    ASSERT_EQ(pub.final_coefficients.size(), 32u);
    EXPECT_EQ(pub.final_c, parse_decimal("0.3465"));
    for (const auto& s : pub.final_coefficients) {
        EXPECT_NO_THROW(parse_decimal(s));
    }
}
