#include "cohdist/states.hpp"

#include <cmath>
#include <stdexcept>

namespace cohdist {

namespace {

// SplitMix64: mixes (seed, stream) into a well-spread 64-bit engine seed so
// nearby stream indices give unrelated sequences.
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

DensityMatrix::DensityMatrix(Mat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
        throw std::invalid_argument("DensityMatrix: matrix not square");
    if (max_abs_diff(m_, m_.adjoint()) > TOL_HERM)
        throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(m_.trace().real() - 1.0) > 1e-10 || std::abs(m_.trace().imag()) > 1e-10)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    Mat h = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -TOL_PSD)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
    m_ = h;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (stream * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
    std::uint64_t s0 = splitmix64(x);
    std::uint64_t s1 = splitmix64(x);
    std::uint64_t s2 = splitmix64(x);
    std::seed_seq seq{static_cast<unsigned>(s0), static_cast<unsigned>(s0 >> 32),
                      static_cast<unsigned>(s1), static_cast<unsigned>(s1 >> 32),
                      static_cast<unsigned>(s2), static_cast<unsigned>(s2 >> 32)};
    engine_ = std::mt19937_64(seq);
}

double RngStream::uniform() {
    // 53-bit mantissa from the top bits; bit-exact across platforms
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    // Box-Muller rather than std::normal_distribution: the latter's algorithm
    // is implementation-defined, which would break cross-platform determinism
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

Complex RngStream::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

PureBipartiteState purify(const DensityMatrix& rho) {
    const int d = rho.dim();
    HermitianEigenSystem sys = hermitian_eig(rho.mat());
    Vec ket = Vec::Zero(static_cast<Eigen::Index>(d) * d);
    for (int i = 0; i < d; ++i) {
        const double lam = std::max(sys.eigenvalues(i), 0.0);
        if (lam <= 0.0) continue;
        const double c = std::sqrt(lam);
        for (int r = 0; r < d; ++r) ket(static_cast<Eigen::Index>(r) * d + i) += c * sys.eigenvectors(r, i);
    }
    return {ket, d, d};
}

PureBipartiteState schmidt_pair_state(double l0, double l1) {
    if (l0 < 0.0 || l1 < 0.0 || std::abs(l0 + l1 - 1.0) > 1e-12)
        throw std::invalid_argument("schmidt_pair_state: weights must be nonnegative and sum to 1");
    Vec ket = Vec::Zero(4);
    ket(0) = std::sqrt(l0);
    ket(3) = std::sqrt(l1);
    return {ket, 2, 2};
}

DensityMatrix system_state_plus_minus_basis(double l0, double l1) {
    if (l0 < 0.0 || l1 < 0.0 || std::abs(l0 + l1 - 1.0) > 1e-12)
        throw std::invalid_argument("system_state_plus_minus_basis: weights must be nonnegative and sum to 1");
    const double c = l0 - l1;
    Mat m(2, 2);
    m << 0.5, 0.5 * c, 0.5 * c, 0.5;
    return DensityMatrix(m);
}

Vec random_pure_ket(int d, RngStream& rng) {
    if (d < 1) throw std::invalid_argument("random_pure_ket: dimension < 1");
    Vec v(d);
    for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
    v /= v.norm();
    return v;
}

DensityMatrix random_pure(int d, RngStream& rng) {
    const Vec v = random_pure_ket(d, rng);
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix random_mixed(int d, int rank, RngStream& rng) {
    if (d < 1 || rank < 1 || rank > d)
        throw std::invalid_argument("random_mixed: need 1 <= rank <= d");
    Mat g(d, rank);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
    Mat w = g * g.adjoint();
    w /= w.trace().real();
    return DensityMatrix(w);
}

Mat random_unitary(int d, RngStream& rng) {
    Mat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // absorb R's diagonal phases so the distribution is Haar
    for (int j = 0; j < d; ++j) {
        const Complex rj = r(j, j);
        const double a = std::abs(rj);
        q.col(j) *= (a > 0.0) ? rj / a : Complex(1, 0);
    }
    return q;
}

}  // namespace cohdist
