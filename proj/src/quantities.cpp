#include "cohdist/quantities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cohdist/optimize.hpp"

namespace cohdist {

namespace {

double clamp_nonneg(double v) { return (v < 0.0 && v >= -1e-8) ? 0.0 : v; }

// half(1 + n.sigma) for Bloch direction (theta, phi)
Mat bloch_projector(double theta, double phi, int sign) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    const double s = sign >= 0 ? 1.0 : -1.0;
    Mat p(2, 2);
    p << Complex(0.5 * (1.0 + s * nz), 0.0), 0.5 * s * Complex(nx, -ny),
        0.5 * s * Complex(nx, ny), Complex(0.5 * (1.0 - s * nz), 0.0);
    return p;
}

}  // namespace

double coherent_information(const DensityMatrix& rho, const KrausChannel& ch) {
    if (rho.dim() != ch.dim_in)
        throw std::invalid_argument("coherent_information: dimension mismatch");
    const DensityMatrix out = apply(ch, rho);
    const DensityMatrix ext = apply_extended(ch, purify(rho));
    return von_neumann_entropy(out.mat()) - von_neumann_entropy(ext.mat());
}

double disturbance(const DensityMatrix& rho, const KrausChannel& ch) {
    const double d = von_neumann_entropy(rho.mat()) - coherent_information(rho, ch);
    return clamp_nonneg(d);
}

double disturbance_bipartite(const DensityMatrix& rho_ab, int d_a, int d_b,
                             const KrausChannel& ch) {
    if (rho_ab.dim() != d_a * d_b)
        throw std::invalid_argument("disturbance_bipartite: dims product differs from state size");
    if (ch.dim_in != d_a * d_b)
        throw std::invalid_argument("disturbance_bipartite: channel must act on the full AB space");
    return disturbance(rho_ab, ch);
}

double mutual_information(const DensityMatrix& rho_ab, int d_a, int d_b) {
    if (rho_ab.dim() != d_a * d_b)
        throw std::invalid_argument("mutual_information: dims product differs from state size");
    const Mat ra = partial_trace(rho_ab.mat(), {d_a, d_b}, {0});
    const Mat rb = partial_trace(rho_ab.mat(), {d_a, d_b}, {1});
    return von_neumann_entropy(ra) + von_neumann_entropy(rb) -
           von_neumann_entropy(rho_ab.mat());
}

DiscordSolution quantum_discord(const DensityMatrix& rho_ab, int d_a, int d_b) {
    if (rho_ab.dim() != d_a * d_b)
        throw std::invalid_argument("quantum_discord: dims product differs from state size");
    if (d_b != 2)
        throw std::invalid_argument("quantum_discord: only a qubit B is supported");

    const Mat ra = partial_trace(rho_ab.mat(), {d_a, d_b}, {0});
    const double s_a = von_neumann_entropy(ra);
    const double mi = mutual_information(rho_ab, d_a, d_b);
    const Mat ia = identity(d_a);

    // average conditional entropy of A after measuring B along (theta, phi)
    auto cond_entropy = [&](double theta, double phi) {
        double acc = 0.0;
        for (int sign : {+1, -1}) {
            const Mat proj = tensor(ia, bloch_projector(theta, phi, sign));
            const Mat m = proj * rho_ab.mat() * proj;
            const double p = m.trace().real();
            if (p < 1e-14) continue;
            const Mat cond = partial_trace(m, {d_a, d_b}, {0}) / p;
            acc += p * von_neumann_entropy(cond);
        }
        return acc;
    };

    const int grid = 32;
    double best_val = std::numeric_limits<double>::infinity();
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double theta = M_PI * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double phi = 2.0 * M_PI * j / grid;
            const double v = cond_entropy(theta, phi);
            if (v < best_val) {
                best_val = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    SimplexResult refined = nelder_mead(
        [&](const std::vector<double>& ang) { return cond_entropy(ang[0], ang[1]); },
        {best_theta, best_phi}, 0.05, 1e-6, 400);
    if (refined.value > best_val) {
        refined.value = best_val;
        refined.x = {best_theta, best_phi};
    }

    DiscordSolution sol;
    sol.value = clamp_nonneg(mi - (s_a - refined.value));
    sol.theta = refined.x[0];
    sol.phi = refined.x[1];
    sol.refinement_iterations = refined.iterations;
    return sol;
}

double er_upper_bound_product(const DensityMatrix& rho_ab, int d_a, int d_b) {
    if (rho_ab.dim() != d_a * d_b)
        throw std::invalid_argument("er_upper_bound_product: dims product differs from state size");
    const Mat ra = partial_trace(rho_ab.mat(), {d_a, d_b}, {0});
    const Mat rb = partial_trace(rho_ab.mat(), {d_a, d_b}, {1});
    return relative_entropy(rho_ab.mat(), tensor(ra, rb));
}

namespace {

// Mixture parametrization for the separable fit: per term a weight logit,
// then re/im components of unnormalized kets on A and on B.
struct SeparableModel {
    int d_a, d_b, k;

    int params_per_term() const { return 1 + 2 * d_a + 2 * d_b; }
    int num_params() const { return k * params_per_term(); }

    Mat build(const std::vector<double>& p, std::vector<double>* weights_out = nullptr) const {
        const int stride = params_per_term();
        // softmax over logits, shifted for stability
        double max_logit = -std::numeric_limits<double>::infinity();
        for (int m = 0; m < k; ++m) max_logit = std::max(max_logit, p[m * stride]);
        std::vector<double> w(k);
        double norm = 0.0;
        for (int m = 0; m < k; ++m) {
            w[m] = std::exp(p[m * stride] - max_logit);
            norm += w[m];
        }
        Mat sigma = Mat::Zero(d_a * d_b, d_a * d_b);
        for (int m = 0; m < k; ++m) {
            w[m] /= norm;
            const double* q = p.data() + m * stride + 1;
            Vec a(d_a), b(d_b);
            for (int i = 0; i < d_a; ++i) a(i) = Complex(q[2 * i], q[2 * i + 1]);
            q += 2 * d_a;
            for (int i = 0; i < d_b; ++i) b(i) = Complex(q[2 * i], q[2 * i + 1]);
            const double na = a.norm(), nb = b.norm();
            if (na < 1e-12 || nb < 1e-12) continue;
            a /= na;
            b /= nb;
            Vec ab(d_a * d_b);
            for (int i = 0; i < d_a; ++i)
                for (int j = 0; j < d_b; ++j) ab(i * d_b + j) = a(i) * b(j);
            sigma.noalias() += w[m] * (ab * ab.adjoint());
        }
        const double tr = sigma.trace().real();
        if (tr > 0.0) sigma /= tr;
        if (weights_out) *weights_out = w;
        return sigma;
    }
};

// relative entropy with sigma's spectrum floored, so the search objective
// stays finite near the separable-set boundary
double soft_relative_entropy(const Mat& rho, const Mat& sigma) {
    HermitianEigenSystem r = hermitian_eig(rho);
    HermitianEigenSystem s = hermitian_eig(sigma);
    const int d = static_cast<int>(rho.rows());
    double val = 0.0;
    for (int i = 0; i < d; ++i) {
        const double p = std::max(r.eigenvalues(i), 0.0);
        if (p > 0.0) val += p * std::log2(p);
    }
    for (int j = 0; j < d; ++j) {
        const double q = std::max(s.eigenvalues(j), 1e-14);
        double w = 0.0;
        for (int i = 0; i < d; ++i) {
            const double p = std::max(r.eigenvalues(i), 0.0);
            if (p == 0.0) continue;
            const Complex ov = r.eigenvectors.col(i).adjoint() * s.eigenvectors.col(j);
            w += p * std::norm(ov);
        }
        val -= w * std::log2(q);
    }
    return val;
}

}  // namespace

ERSolution relative_entropy_entanglement(const DensityMatrix& rho_ab, int d_a, int d_b,
                                         int restarts) {
    if (rho_ab.dim() != d_a * d_b)
        throw std::invalid_argument("relative_entropy_entanglement: dims product differs from state size");
    if (d_a * d_b > 16)
        throw std::invalid_argument("relative_entropy_entanglement: dimension cap d_a*d_b <= 16 exceeded");
    if (restarts < 1) restarts = 1;

    SeparableModel model{d_a, d_b, (d_a * d_b) * (d_a * d_b)};
    const int stride = model.params_per_term();

    // eigendecompositions of the marginals give the product-seed mixture
    const Mat ra = partial_trace(rho_ab.mat(), {d_a, d_b}, {0});
    const Mat rb = partial_trace(rho_ab.mat(), {d_a, d_b}, {1});
    HermitianEigenSystem ea = hermitian_eig(ra);
    HermitianEigenSystem eb = hermitian_eig(rb);

    std::vector<double> seed(model.num_params(), 0.0);
    {
        int m = 0;
        for (int i = 0; i < d_a; ++i)
            for (int j = 0; j < d_b; ++j, ++m) {
                const double w = std::max(ea.eigenvalues(i), 0.0) * std::max(eb.eigenvalues(j), 0.0);
                double* q = seed.data() + m * stride;
                q[0] = std::log(std::max(w, 1e-30));
                for (int r = 0; r < d_a; ++r) {
                    q[1 + 2 * r] = ea.eigenvectors(r, i).real();
                    q[2 + 2 * r] = ea.eigenvectors(r, i).imag();
                }
                for (int r = 0; r < d_b; ++r) {
                    q[1 + 2 * d_a + 2 * r] = eb.eigenvectors(r, j).real();
                    q[2 + 2 * d_a + 2 * r] = eb.eigenvectors(r, j).imag();
                }
            }
        for (; m < model.k; ++m) {
            double* q = seed.data() + m * stride;
            q[0] = std::log(1e-30);
            q[1] = 1.0;                  // |0> on A
            q[1 + 2 * d_a] = 1.0;        // |0> on B
        }
    }

    auto objective = [&](const std::vector<double>& p) {
        return soft_relative_entropy(rho_ab.mat(), model.build(p));
    };

    ERSolution best;
    best.value = std::numeric_limits<double>::infinity();
    best.mixture_size = model.k;

    RngStream rng(0x5eedabcdULL, 0);
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> init = seed;
        if (r > 0) {
            // keep the product mixture embedded, jitter everything around it
            const double amp = 0.2 + 0.2 * r;
            for (double& v : init) v += amp * rng.normal();
        }
        DescentResult res = gradient_descent(objective, std::move(init), 250);
        const Mat sigma = model.build(res.x);
        const double true_val = relative_entropy(rho_ab.mat(), sigma);
        if (true_val < best.value) {
            best.value = true_val;
            best.closest_separable = sigma;
            best.restarts_used = r + 1;
        }
    }
    best.restarts_used = restarts;

    // the untouched product seed is always a feasible fallback
    const Mat sigma_seed = model.build(seed);
    const double seed_val = relative_entropy(rho_ab.mat(), sigma_seed);
    if (seed_val < best.value) {
        best.value = seed_val;
        best.closest_separable = sigma_seed;
    }
    best.value = clamp_nonneg(best.value);
    return best;
}

}  // namespace cohdist
