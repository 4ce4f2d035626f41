#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace cohdist {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

// centralized numeric tolerances
inline constexpr double TOL_HERM = 1e-10;
inline constexpr double TOL_EIG = 1e-12;
inline constexpr double TOL_PSD = 1e-10;

struct HermitianEigenSystem {
    RealVec eigenvalues;  // sorted descending
    Mat eigenvectors;     // unitary, columns match eigenvalue order
};

// Kronecker product, block (i,j) = a(i,j)*b
Mat tensor(const Mat& a, const Mat& b);

// trace out the subsystems not listed in `keep`; dims are the per-subsystem
// dimensions in tensor order, keep is a strictly increasing index list
Mat partial_trace(const Mat& m, const std::vector<int>& dims,
                  const std::vector<int>& keep);

// eigensystem of a Hermitian matrix; input symmetrized as (m+m^dag)/2 after a
// hermiticity check at TOL_HERM, eigenvector columns phase-fixed so the first
// nonvanishing entry is real nonnegative
HermitianEigenSystem hermitian_eig(const Mat& m);

bool approx_equal(const Mat& a, const Mat& b, double tol);
double max_abs_diff(const Mat& a, const Mat& b);

Mat dag(const Mat& m);
Mat identity(int d);

}  // namespace cohdist
