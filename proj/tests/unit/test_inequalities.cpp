#include "chflag/inequalities.hpp"

#include <gtest/gtest.h>

using namespace chflag;

namespace {

LinearForm h_form(std::initializer_list<std::pair<std::size_t, long>> entries) {
    LinearForm f(named_basis("H"));
    for (auto [i, v] : entries) {
        f[i] = v;
    }
    return f;
}

const Flag& K(std::size_t i) { return (*named_basis("K"))[i]; }

}  // namespace

TEST(CSMatrix, Entries) {
    const CSMatrix& cs = proof_forms().cs;
    EXPECT_EQ(cs(0, 0), h_form({{1, 2}, {10, 4}}));
    EXPECT_EQ(cs(1, 2), h_form({{6, 2}, {14, 1}}));
}

TEST(CSMatrix, SymmetricAndNonnegative) {
    const CSMatrix& cs = proof_forms().cs;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_EQ(cs(i, j), cs(j, i));
            for (std::size_t h = 0; h < 32; ++h) {
                EXPECT_GE(cs(i, j)[h], 0);
                EXPECT_EQ(cs(i, j)[h].get_den(), 1);
            }
        }
    }
}

TEST(QuadraticForm, Examples) {
    const CSMatrix& cs = proof_forms().cs;
    std::array<Rational, 8> e0{};
    e0[0] = 1;
    EXPECT_EQ(quadratic_form(cs, e0), h_form({{1, 2}, {10, 4}}));
    std::array<Rational, 8> zero{};
    EXPECT_TRUE(quadratic_form(cs, zero).is_zero());
    std::vector<Rational> seven(7);
    EXPECT_THROW(quadratic_form(cs, seven), std::invalid_argument);
}

TEST(QuadraticForm, MatchesDirectExpansion) {
    // a = first published cut vector; 24 [[(a K^T)^2]]_beta expanded directly.
    std::array<Rational, 8> a{};
    const char* entries[] = {"-69.83", "-27.04", "3.45", "-53.59", "1.74", "28.78", "-9.28", "59.66"};
    for (std::size_t i = 0; i < 8; ++i) {
        a[i] = parse_decimal(entries[i]);
    }
    LinearForm direct(named_basis("H"));
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            direct += (24 * a[i] * a[j]) * average(product(K(i), K(j), 4));
        }
    }
    LinearForm via = quadratic_form(proof_forms().cs, a);
    for (std::size_t h = 0; h < 32; ++h) {
        RationalVector e(32);
        e[h] = 1;
        EXPECT_EQ(evaluate(via, e), evaluate(direct, e));
    }
}

TEST(RegMatrices, PublishedLeadingEntries) {
    const RegMatrices& reg = proof_forms().reg;
    ASSERT_EQ(reg.a_reg.size(), 14u);
    ASSERT_EQ(reg.b_reg.size(), 14u);
    std::vector<std::int64_t> a0(reg.a_reg[0].begin(), reg.a_reg[0].begin() + 10);
    std::vector<std::int64_t> b0(reg.b_reg[0].begin(), reg.b_reg[0].begin() + 9);
    EXPECT_EQ(a0, (std::vector<std::int64_t>{12, 6, 3, 3, 3, 3, 3, 3, 3, 0}));
    EXPECT_EQ(b0, (std::vector<std::int64_t>{0, 1, 2, 1, 0, 3, 2, 1, 0}));
    EXPECT_EQ(reg.scale, 12);
}

TEST(RegMatrices, FirstEntryFromFirstPrinciples) {
    // H0 is empty: q = 1 for its only vertex class and the empty 3-flag has
    // density 1, so the unscaled entry is 1.
    RegRows raw = unscaled_reg_rows();
    EXPECT_EQ(raw.a_rows[0][0], Rational(1));
}

TEST(RegMatrices, EntriesNonnegative) {
    const RegMatrices& reg = proof_forms().reg;
    for (std::size_t j = 0; j < 14; ++j) {
        for (std::size_t h = 0; h < 32; ++h) {
            EXPECT_GE(reg.a_reg[j][h], 0);
            EXPECT_GE(reg.b_reg[j][h], 0);
        }
    }
}

TEST(RegMatrices, RowFormIsBMinusCA) {
    const RegMatrices& reg = proof_forms().reg;
    Rational c = make_rational(1, 3);
    LinearForm row = reg.row_form(4, c);
    for (std::size_t h = 0; h < 32; ++h) {
        EXPECT_EQ(row[h], reg.b_reg[4][h] - c * reg.a_reg[4][h]);
    }
}

TEST(SigmaSources, BetaOrderThree) {
    auto sources = sigma_sources(beta_type(), 3);
    std::vector<std::size_t> indices;
    for (const Flag& f : sources) {
        indices.push_back(named_basis("K")->index_of(f));
    }
    std::sort(indices.begin(), indices.end());
    EXPECT_EQ(indices, (std::vector<std::size_t>{0, 1, 3, 4}));
}

TEST(SigmaSources, PredicateAndMembership) {
    for (const FlagType& sigma : {t_type(), v_type(), beta_type()}) {
        auto all = enumerate_flags(sigma, 4);
        auto sources = sigma_sources(sigma, 4);
        for (const Flag& s : sources) {
            EXPECT_TRUE(is_sigma_source(s));
            // direct edge scan: nothing from an unlabelled vertex into a label
            for (int u = sigma.order(); u < s.order(); ++u) {
                for (int v = 0; v < sigma.order(); ++v) {
                    EXPECT_FALSE(s.graph().has_edge(u, v));
                }
            }
            bool found = false;
            for (const Flag& f : all) {
                found = found || f.key() == s.key();
            }
            EXPECT_TRUE(found);
        }
    }
    bool has_f0 = false;
    for (const Flag& s : sigma_sources(t_type(), 4)) {
        has_f0 = has_f0 || flags_isomorphic(s, named_flag("F0(T)"));
    }
    EXPECT_TRUE(has_f0);
}

TEST(InductionForms, PublishedCoefficients) {
    const AffineForm& t = proof_forms().ind_t;
    EXPECT_EQ(t.const_part[31], 0);
    EXPECT_EQ(t.c_part[31], -3);
    EXPECT_EQ(t.const_part[30], 2);
    EXPECT_EQ(t.c_part[30], -2);
    const AffineForm& v = proof_forms().ind_v;
    EXPECT_EQ(v.const_part[2], 1);
    EXPECT_EQ(v.c_part[2], -1);
    EXPECT_EQ(v.c_part[5], -3);
    EXPECT_THROW(unscaled_induction_form(beta_type()), std::invalid_argument);
}

TEST(InductionForms, PinnedScales) {
    AffineForm raw_t = unscaled_induction_form(t_type());
    AffineForm raw_v = unscaled_induction_form(v_type());
    EXPECT_EQ(Rational(TableScales::kInductionT) * raw_t.c_part, proof_forms().ind_t.c_part);
    EXPECT_EQ(Rational(TableScales::kInductionV) * raw_v.c_part, proof_forms().ind_v.c_part);
}

TEST(ForkForm, Coefficients) {
    const ForkForm& fork = proof_forms().fork;
    EXPECT_EQ(fork.linear[8], 3);
    EXPECT_EQ(fork.linear[0], 0);
    EXPECT_EQ(fork.quadratic_multiplier, -12);
    EXPECT_EQ(fork.at(make_rational(1, 3)), fork.linear);
    LinearForm at_half = fork.at(make_rational(1, 2));
    EXPECT_EQ(at_half[0], -3);  // -12 * (1/2)^2
}
