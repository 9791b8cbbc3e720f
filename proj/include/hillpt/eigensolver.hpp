#pragma once

#include <complex>

#include <Eigen/Core>

namespace hillpt {

struct EigenDecomposition {
    Eigen::VectorXcd eigenvalues;  // unsorted; conjugate pairs share re and +-im bitwise
    int convergence_iterations = 0;
    double max_residual = 0.0;     // largest deflated subdiagonal over the matrix scale
};

// Dense nonsymmetric eigenvalues: balancing, Householder reduction to upper
// Hessenberg form, then Francis double-shift QR with exceptional shifts every
// ten stalled sweeps and a hard cap of 30 n sweeps total.
EigenDecomposition eigenvalues(const Eigen::MatrixXd& m);

// Unit eigenvector for an eigenvalue near e via inverse iteration on the
// complex-shifted matrix; the largest component is rotated to the positive
// real axis.  Requires e within 1e-6 * ||m||_F of the computed spectrum.
Eigen::VectorXcd eigenvector_near(const Eigen::MatrixXd& m, std::complex<double> e);

}  // namespace hillpt
