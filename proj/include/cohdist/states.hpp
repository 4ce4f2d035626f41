#pragma once

#include <cstdint>
#include <random>

#include "cohdist/matrix.hpp"

namespace cohdist {

// Validated density matrix: Hermitian within TOL_HERM, unit trace within
// 1e-10, eigenvalues >= -TOL_PSD. Construction throws on violation.
class DensityMatrix {
  public:
    explicit DensityMatrix(Mat m);

    const Mat& mat() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

  private:
    Mat m_;
};

// Reproducible stream of standard normals. Independent streams are derived
// from (seed, stream) so parallel sweeps give byte-identical output.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    double normal();           // N(0,1), Box-Muller
    double uniform();          // U[0,1)
    Complex complex_normal();  // re, im both N(0,1)

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// |psi> on A x B with Schmidt coefficients sqrt(lambda_i); ket is stored in
// the computational product basis, dim_a * dim_b entries.
struct PureBipartiteState {
    Vec ket;
    int dim_a;
    int dim_b;

    Mat density() const { return ket * ket.adjoint(); }
};

// Canonical purification of rho on H_S (x) H_R with dim R = dim S:
// |Psi> = sum_i sqrt(lambda_i) |v_i> (x) |i>, eigenpairs sorted descending,
// eigenvector phases fixed so the first significant entry is real >= 0.
PureBipartiteState purify(const DensityMatrix& rho);

// sqrt(l0)|00> + sqrt(l1)|11> on two qubits. Requires l0 + l1 = 1 within
// 1e-12 and both nonnegative.
PureBipartiteState schmidt_pair_state(double l0, double l1);

// Qubit marginal of the Schmidt pair written in the |+/-> frame:
// 1/2 [[1, c], [c, 1]] with c = l0 - l1.
DensityMatrix system_state_plus_minus_basis(double l0, double l1);

// Haar-random pure state of dimension d.
DensityMatrix random_pure(int d, RngStream& rng);
Vec random_pure_ket(int d, RngStream& rng);

// G G^dag / Tr(G G^dag) with G a d x rank Ginibre matrix. rank = d samples
// from the Hilbert-Schmidt ensemble.
DensityMatrix random_mixed(int d, int rank, RngStream& rng);

// Haar-random unitary via QR of a Ginibre matrix with phase-fixed R diagonal.
Mat random_unitary(int d, RngStream& rng);

}  // namespace cohdist
