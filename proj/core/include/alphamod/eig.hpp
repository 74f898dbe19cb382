#pragma once

#include <Eigen/Dense>

namespace alphamod {

struct SymEig {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // empty when not requested
};

/// Full symmetric eigendecomposition (LAPACK dsyevd when available).
SymEig sym_eig(const Eigen::MatrixXd& m, bool with_vectors = true);

Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& m);

/// Spectral norm estimate by power iteration on a symmetric matrix.
double operator_norm(const Eigen::MatrixXd& m, int iters = 80);

}  // namespace alphamod
