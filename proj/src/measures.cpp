#include "cohdist/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cohdist {

namespace {

double clamp_eigenvalue(double lam) {
    if (lam < -TOL_PSD)
        throw std::invalid_argument("entropy: eigenvalue below -1e-10, input is not a state");
    return lam < 0.0 ? 0.0 : lam;
}

}  // namespace

Basis::Basis(Mat f) : frame(std::move(f)) {
    if (frame.rows() != frame.cols() || frame.rows() < 1)
        throw std::invalid_argument("Basis: frame not square");
    const Mat gram = frame.adjoint() * frame;
    if (max_abs_diff(gram, Mat::Identity(frame.rows(), frame.cols())) > 1e-10)
        throw std::invalid_argument("Basis: frame not unitary within tolerance");
}

Basis Basis::computational(int d) { return Basis(Mat::Identity(d, d)); }

double shannon_entropy(const RealVec& p) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        const double q = clamp_eigenvalue(p(i));
        if (q > 0.0) s -= q * std::log2(q);
    }
    return s;
}

double von_neumann_entropy(const Mat& rho) {
    HermitianEigenSystem sys = hermitian_eig(rho);
    return shannon_entropy(sys.eigenvalues);
}

double relative_entropy(const Mat& rho, const Mat& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw std::invalid_argument("relative_entropy: dimension mismatch");
    HermitianEigenSystem r = hermitian_eig(rho);
    HermitianEigenSystem s = hermitian_eig(sigma);
    const int d = static_cast<int>(rho.rows());

    // -Tr rho log sigma = -sum_ij |<r_i|s_j>|^2 p_i log q_j
    double cross = 0.0;
    for (int j = 0; j < d; ++j) {
        const double q = clamp_eigenvalue(s.eigenvalues(j));
        // rho weight on this sigma eigenvector
        double w = 0.0;
        for (int i = 0; i < d; ++i) {
            const double p = clamp_eigenvalue(r.eigenvalues(i));
            if (p == 0.0) continue;
            const Complex ov = r.eigenvectors.col(i).adjoint() * s.eigenvectors.col(j);
            w += p * std::norm(ov);
        }
        if (q < 1e-12) {
            if (w > 1e-10) return std::numeric_limits<double>::infinity();
            continue;
        }
        cross -= w * std::log2(q);
    }

    double neg_s_rho = 0.0;
    for (int i = 0; i < d; ++i) {
        const double p = clamp_eigenvalue(r.eigenvalues(i));
        if (p > 0.0) neg_s_rho += p * std::log2(p);
    }
    return neg_s_rho + cross;
}

Mat dephase(const Mat& rho, const Basis& basis) {
    if (rho.rows() != basis.frame.rows())
        throw std::invalid_argument("dephase: basis dimension mismatch");
    const Mat in_frame = basis.frame.adjoint() * rho * basis.frame;
    Mat diag = Mat::Zero(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < rho.rows(); ++i) diag(i, i) = in_frame(i, i).real();
    return basis.frame * diag * basis.frame.adjoint();
}

double coherence_relative_entropy(const Mat& rho, const Basis& basis) {
    if (rho.rows() != basis.frame.rows())
        throw std::invalid_argument("coherence_relative_entropy: basis dimension mismatch");
    const Mat in_frame = basis.frame.adjoint() * rho * basis.frame;
    RealVec diag(rho.rows());
    for (Eigen::Index i = 0; i < rho.rows(); ++i) diag(i) = in_frame(i, i).real();
    const double c = shannon_entropy(diag) - von_neumann_entropy(rho);
    return c < 0.0 && c >= -1e-12 ? 0.0 : c;
}

double coherence_l1(const Mat& rho, const Basis& basis) {
    if (rho.rows() != basis.frame.rows())
        throw std::invalid_argument("coherence_l1: basis dimension mismatch");
    const Mat in_frame = basis.frame.adjoint() * rho * basis.frame;
    double s = 0.0;
    for (Eigen::Index i = 0; i < in_frame.rows(); ++i)
        for (Eigen::Index j = 0; j < in_frame.cols(); ++j)
            if (i != j) s += std::abs(in_frame(i, j));
    return s;
}

}  // namespace cohdist
