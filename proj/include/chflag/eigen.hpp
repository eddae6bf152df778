#pragma once

#include <vector>

namespace chflag {

using Matrix = std::vector<std::vector<double>>;

struct EigenPair {
    double value;
    std::vector<double> vector;  // unit length
};

// Cyclic Jacobi rotations on a symmetric matrix. Pairs are sorted by
// ascending eigenvalue. Throws std::invalid_argument when the input is not
// square or not symmetric to within 1e-12 (relative to its norm).
std::vector<EigenPair> jacobi_eigen(const Matrix& m);

double frobenius_norm(const Matrix& m);

// ||M v - lambda v||_2
double eigen_residual(const Matrix& m, const EigenPair& pair);

}  // namespace chflag
