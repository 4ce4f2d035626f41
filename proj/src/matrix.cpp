#include "cohdist/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cohdist {

Mat dag(const Mat& m) { return m.adjoint(); }

Mat identity(int d) { return Mat::Identity(d, d); }

Mat tensor(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat partial_trace(const Mat& m, const std::vector<int>& dims,
                  const std::vector<int>& keep) {
    const int n = static_cast<int>(dims.size());
    long total = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("partial_trace: subsystem dimension < 1");
        total *= d;
    }
    if (m.rows() != m.cols() || m.rows() != total)
        throw std::invalid_argument("partial_trace: dims product " + std::to_string(total) +
                                    " disagrees with matrix size " + std::to_string(m.rows()));
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    std::vector<bool> kept(n, false);
    for (size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 0 || keep[k] >= n)
            throw std::invalid_argument("partial_trace: keep index out of range");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
        kept[keep[k]] = true;
    }

    long dk = 1, dt = 1;
    for (int s = 0; s < n; ++s) (kept[s] ? dk : dt) *= dims[s];

    // strides of each subsystem index within the flat row index
    std::vector<long> stride(n, 1);
    for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

    // flat offsets contributed by the kept / traced multi-indices
    auto offsets = [&](bool want_kept, long count) {
        std::vector<long> off(count, 0);
        std::vector<int> idx(n, 0);
        for (long c = 0; c < count; ++c) {
            long o = 0;
            long rem = c;
            for (int s = n - 1; s >= 0; --s) {
                if (kept[s] != want_kept) continue;
                long q = rem % dims[s];
                rem /= dims[s];
                o += q * stride[s];
            }
            off[c] = o;
        }
        return off;
    };
    const std::vector<long> koff = offsets(true, dk);
    const std::vector<long> toff = offsets(false, dt);

    Mat out = Mat::Zero(dk, dk);
    for (long i = 0; i < dk; ++i)
        for (long j = 0; j < dk; ++j) {
            Complex acc(0, 0);
            for (long t = 0; t < dt; ++t) acc += m(koff[i] + toff[t], koff[j] + toff[t]);
            out(i, j) = acc;
        }
    return out;
}

HermitianEigenSystem hermitian_eig(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (max_abs_diff(m, m.adjoint()) > TOL_HERM)
        throw std::invalid_argument("hermitian_eig: input not Hermitian within tolerance");
    Mat h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");

    const int d = static_cast<int>(m.rows());
    HermitianEigenSystem sys;
    sys.eigenvalues = RealVec(d);
    sys.eigenvectors = Mat(d, d);
    // Eigen sorts ascending; flip to descending
    for (int k = 0; k < d; ++k) {
        sys.eigenvalues(k) = solver.eigenvalues()(d - 1 - k);
        sys.eigenvectors.col(k) = solver.eigenvectors().col(d - 1 - k);
    }
    // phase convention: first entry of magnitude > TOL_EIG made real nonnegative
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < d; ++i) {
            const Complex v = sys.eigenvectors(i, k);
            if (std::abs(v) > TOL_EIG) {
                sys.eigenvectors.col(k) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
    return sys;
}

bool approx_equal(const Mat& a, const Mat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace cohdist
