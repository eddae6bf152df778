#include "chflag/eigen.hpp"
#include "chflag/inequalities.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace chflag;

namespace {

double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

}  // namespace

TEST(Jacobi, Diagonal) {
    Matrix m(8, std::vector<double>(8, 0.0));
    for (int i = 0; i < 8; ++i) {
        m[i][i] = i == 0 ? 2.0 : 1.0;
    }
    auto pairs = jacobi_eigen(m);
    EXPECT_DOUBLE_EQ(pairs.back().value, 2.0);
    EXPECT_DOUBLE_EQ(pairs.front().value, 1.0);
    for (const auto& p : pairs) {
        EXPECT_NEAR(norm(p.vector), 1.0, 1e-12);
    }
}

TEST(Jacobi, TwoByTwoBlock) {
    Matrix m{{0, 1}, {1, 0}};
    auto pairs = jacobi_eigen(m);
    EXPECT_NEAR(pairs[0].value, -1.0, 1e-14);
    EXPECT_NEAR(pairs[1].value, 1.0, 1e-14);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(pairs[0].vector[0]), r, 1e-14);
    EXPECT_NEAR(pairs[0].vector[0], -pairs[0].vector[1], 1e-14);
}

TEST(Jacobi, RejectsAsymmetric) {
    Matrix m{{0, 1}, {0.5, 0}};
    EXPECT_THROW(jacobi_eigen(m), std::invalid_argument);
    Matrix ragged{{0, 1}, {1}};
    EXPECT_THROW(jacobi_eigen(ragged), std::invalid_argument);
}

TEST(Jacobi, CSAtUniformPoint) {
    RationalVector uniform(32, make_rational(1, 32));
    auto exact = proof_forms().cs.at(uniform);
    Matrix m(8, std::vector<double>(8));
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            m[i][j] = exact[i][j].get_d();
        }
    }
    const double fro = frobenius_norm(m);
    for (const auto& p : jacobi_eigen(m)) {
        EXPECT_LE(eigen_residual(m, p), 1e-9 * fro);
    }
}

TEST(JacobiProperty, RandomSymmetricMatrices) {
    gen::Gen gen(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 10));
        Matrix m(n, std::vector<double>(n));
        double trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                m[i][j] = m[j][i] = gen.rational(50).get_d();
            }
            trace += m[i][i];
        }
        auto pairs = jacobi_eigen(m);
        const double fro = frobenius_norm(m);
        double sum = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            EXPECT_LE(eigen_residual(m, pairs[k]), 1e-9 * std::max(fro, 1.0));
            EXPECT_NEAR(norm(pairs[k].vector), 1.0, 1e-12);
            if (k > 0) {
                EXPECT_LE(pairs[k - 1].value, pairs[k].value);
            }
            sum += pairs[k].value;
        }
        EXPECT_NEAR(sum, trace, 1e-9 * std::max(fro, 1.0));
    }
}
