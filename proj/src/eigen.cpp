#include "chflag/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chflag {

double frobenius_norm(const Matrix& m) {
    double s = 0;
    for (const auto& row : m) {
        for (double v : row) {
            s += v * v;
        }
    }
    return std::sqrt(s);
}

double eigen_residual(const Matrix& m, const EigenPair& pair) {
    double s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        double r = -pair.value * pair.vector[i];
        for (std::size_t j = 0; j < m.size(); ++j) {
            r += m[i][j] * pair.vector[j];
        }
        s += r * r;
    }
    return std::sqrt(s);
}

std::vector<EigenPair> jacobi_eigen(const Matrix& input) {
    const std::size_t n = input.size();
    for (const auto& row : input) {
        if (row.size() != n) {
            throw std::invalid_argument("jacobi_eigen: matrix is not square");
        }
    }
    const double norm = frobenius_norm(input);
    const double sym_tol = 1e-12 * std::max(1.0, norm);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(input[i][j] - input[j][i]) > sym_tol) {
                throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
            }
        }
    }

    Matrix a = input;
    Matrix v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        v[i][i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            a[i][j] = a[j][i] = 0.5 * (input[i][j] + input[j][i]);
        }
    }

    auto off_diagonal = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                s += a[i][j] * a[i][j];
            }
        }
        return std::sqrt(s);
    };

    const double target = 1e-15 * std::max(norm, 1e-300);
    for (int sweep = 0; sweep < 100 && off_diagonal() > target; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<EigenPair> pairs(n);
    for (std::size_t i = 0; i < n; ++i) {
        pairs[i].value = a[i][i];
        pairs[i].vector.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            pairs[i].vector[k] = v[k][i];
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const EigenPair& x, const EigenPair& y) { return x.value < y.value; });
    return pairs;
}

}  // namespace chflag
