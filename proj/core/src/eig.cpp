#include "alphamod/eig.hpp"

#include <stdexcept>

#ifdef ALPHAMOD_USE_LAPACKE
#include <lapacke.h>
#endif

namespace alphamod {

SymEig sym_eig(const Eigen::MatrixXd& m, bool with_vectors) {
#ifdef ALPHAMOD_USE_LAPACKE
    const lapack_int n = static_cast<lapack_int>(m.rows());
    SymEig out;
    out.values.resize(n);
    Eigen::MatrixXd work = m;
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'L', n,
                                           work.data(), n, out.values.data());
    if (info != 0) throw std::runtime_error("dsyevd failed, info=" + std::to_string(info));
    if (with_vectors) out.vectors = std::move(work);
    return out;
#else
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        m, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    SymEig out;
    out.values = es.eigenvalues();
    if (with_vectors) out.vectors = es.eigenvectors();
    return out;
#endif
}

Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& m) { return sym_eig(m, false).values; }

double operator_norm(const Eigen::MatrixXd& m, int iters) {
    const Eigen::Index n = m.rows();
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? 1.0 : -0.7;
    v.normalize();
    double norm = 0.0;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXd w = m * v;
        norm = w.norm();
        if (norm == 0.0) return 0.0;
        v = w / norm;
    }
    return norm;
}

}  // namespace alphamod
