#include "cohdist/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace cohdist {

namespace {

void require_unit_interval(double v, const char* who) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(who) + ": parameter outside [0,1]");
}

Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Mat pauli_y() {
    Mat m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

KrausChannel two_kraus_flip(double p, const Mat& sigma, const std::string& label) {
    require_unit_interval(p, label.c_str());
    KrausChannel ch;
    ch.dim_in = 2;
    ch.dim_out = 2;
    ch.kraus = {std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * sigma};
    ch.label = label;
    ch.param = p;
    return ch;
}

}  // namespace

bool is_cptp(const KrausChannel& ch, double tol) {
    if (ch.kraus.empty()) return false;
    Mat acc = Mat::Zero(ch.dim_in, ch.dim_in);
    for (const Mat& k : ch.kraus) {
        if (k.rows() != ch.dim_out || k.cols() != ch.dim_in) return false;
        acc += k.adjoint() * k;
    }
    return max_abs_diff(acc, identity(ch.dim_in)) < tol;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.dim_in)
        throw std::invalid_argument("apply: state dimension differs from channel input");
    Mat out = Mat::Zero(ch.dim_out, ch.dim_out);
    for (const Mat& k : ch.kraus) out += k * rho.mat() * k.adjoint();
    return DensityMatrix(out);
}

DensityMatrix apply_extended(const KrausChannel& ch, const PureBipartiteState& psi) {
    if (psi.dim_a != ch.dim_in)
        throw std::invalid_argument("apply_extended: system dimension differs from channel input");
    // amplitude matrix A(s, r) = <s r|psi>; (K (x) I)|psi> reshapes to K A
    Mat amp(psi.dim_a, psi.dim_b);
    for (int s = 0; s < psi.dim_a; ++s)
        for (int r = 0; r < psi.dim_b; ++r) amp(s, r) = psi.ket(static_cast<Eigen::Index>(s) * psi.dim_b + r);

    const Eigen::Index dim = static_cast<Eigen::Index>(ch.dim_out) * psi.dim_b;
    Mat out = Mat::Zero(dim, dim);
    Vec branch(dim);
    for (const Mat& k : ch.kraus) {
        const Mat ka = k * amp;
        for (int s = 0; s < ch.dim_out; ++s)
            for (int r = 0; r < psi.dim_b; ++r) branch(static_cast<Eigen::Index>(s) * psi.dim_b + r) = ka(s, r);
        out.noalias() += branch * branch.adjoint();
    }
    return DensityMatrix(out);
}

DilationResult dilation_isometry(const KrausChannel& ch) {
    const int m = static_cast<int>(ch.kraus.size());
    Mat v = Mat::Zero(static_cast<Eigen::Index>(ch.dim_out) * m, ch.dim_in);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < ch.dim_out; ++i)
            for (int j = 0; j < ch.dim_in; ++j)
                v(static_cast<Eigen::Index>(i) * m + k, j) = ch.kraus[k](i, j);
    return {v, m};
}

KrausChannel concatenate(const KrausChannel& a, const KrausChannel& b) {
    if (b.dim_in != a.dim_out)
        throw std::invalid_argument("concatenate: inner dimensions disagree");
    KrausChannel ch;
    ch.dim_in = a.dim_in;
    ch.dim_out = b.dim_out;
    for (const Mat& kb : b.kraus)
        for (const Mat& ka : a.kraus) ch.kraus.push_back(kb * ka);
    ch.label = b.label + "*" + a.label;
    ch.param = b.param;
    return ch;
}

KrausChannel weak_measurement(double x) {
    require_unit_interval(x, "weak_measurement");
    const double lo = std::sqrt((1.0 - x) / 2.0);
    const double hi = std::sqrt((1.0 + x) / 2.0);
    Mat k_plus = Mat::Zero(2, 2);
    k_plus(0, 0) = lo;
    k_plus(1, 1) = hi;
    Mat k_minus = Mat::Zero(2, 2);
    k_minus(0, 0) = hi;
    k_minus(1, 1) = lo;
    KrausChannel ch;
    ch.dim_in = 2;
    ch.dim_out = 2;
    ch.kraus = {k_plus, k_minus};
    ch.label = "weak";
    ch.param = x;
    ch.measurement_type = true;
    return ch;
}

KrausChannel projective_measurement(const Basis& basis) {
    const int d = basis.dim();
    KrausChannel ch;
    ch.dim_in = d;
    ch.dim_out = d;
    for (int k = 0; k < d; ++k) {
        const Vec b = basis.frame.col(k);
        ch.kraus.push_back(b * b.adjoint());
    }
    ch.label = "projective";
    ch.param = 0.0;
    ch.measurement_type = true;
    return ch;
}

KrausChannel depolarizing(double p, int d) {
    require_unit_interval(p, "depolarizing");
    if (d < 2) throw std::invalid_argument("depolarizing: dimension must be >= 2");
    KrausChannel ch;
    ch.dim_in = d;
    ch.dim_out = d;
    ch.label = "depolarizing";
    ch.param = p;
    if (d == 2) {
        ch.kraus = {std::sqrt(1.0 - 0.75 * p) * identity(2), std::sqrt(0.25 * p) * pauli_x(),
                    std::sqrt(0.25 * p) * pauli_y(), std::sqrt(0.25 * p) * pauli_z()};
        return ch;
    }
    // qudit form: Heisenberg-Weyl displacements X^a Z^b realize
    // rho -> (1-p) rho + p I/d
    Mat shift = Mat::Zero(d, d);
    for (int j = 0; j < d; ++j) shift((j + 1) % d, j) = 1.0;
    Mat clock = Mat::Zero(d, d);
    for (int j = 0; j < d; ++j) clock(j, j) = std::polar(1.0, 2.0 * M_PI * j / d);
    const double w_id = std::sqrt(1.0 - p + p / (d * d));
    const double w_hw = std::sqrt(p) / d;
    Mat xa = identity(d);
    for (int a = 0; a < d; ++a) {
        Mat op = xa;
        for (int b = 0; b < d; ++b) {
            ch.kraus.push_back((a == 0 && b == 0 ? w_id : w_hw) * op);
            op = op * clock;
        }
        xa = shift * xa;
    }
    return ch;
}

KrausChannel amplitude_damping(double q) {
    require_unit_interval(q, "amplitude_damping");
    Mat k1 = Mat::Zero(2, 2);
    k1(0, 1) = std::sqrt(q);
    Mat k2 = Mat::Zero(2, 2);
    k2(0, 0) = 1.0;
    k2(1, 1) = std::sqrt(1.0 - q);
    KrausChannel ch;
    ch.dim_in = 2;
    ch.dim_out = 2;
    ch.kraus = {k1, k2};
    ch.label = "amplitude_damping";
    ch.param = q;
    return ch;
}

KrausChannel bit_flip(double p) { return two_kraus_flip(p, pauli_x(), "bit_flip"); }
KrausChannel phase_flip(double p) { return two_kraus_flip(p, pauli_z(), "phase_flip"); }
KrausChannel bit_phase_flip(double p) { return two_kraus_flip(p, pauli_y(), "bit_phase_flip"); }

KrausChannel unitary_channel(const Mat& u, const std::string& label) {
    if (u.rows() != u.cols()) throw std::invalid_argument("unitary_channel: matrix not square");
    if (max_abs_diff(u.adjoint() * u, identity(static_cast<int>(u.rows()))) > 1e-9)
        throw std::invalid_argument("unitary_channel: matrix not unitary within 1e-9");
    KrausChannel ch;
    ch.dim_in = static_cast<int>(u.rows());
    ch.dim_out = ch.dim_in;
    ch.kraus = {u};
    ch.label = label;
    ch.param = 0.0;
    return ch;
}

KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b) {
    KrausChannel ch;
    ch.dim_in = a.dim_in * b.dim_in;
    ch.dim_out = a.dim_out * b.dim_out;
    for (const Mat& ka : a.kraus)
        for (const Mat& kb : b.kraus) ch.kraus.push_back(tensor(ka, kb));
    ch.label = a.label + "x" + b.label;
    ch.param = a.param;
    return ch;
}

}  // namespace cohdist
