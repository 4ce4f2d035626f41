#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace cohdist {

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Downhill simplex (Nelder-Mead) with standard coefficients. Stops when the
// simplex diameter and value spread both fall below tol, or on max_iter.
inline SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                 std::vector<double> x0, double step, double tol,
                                 int max_iter) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    SimplexResult res;
    for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
        std::vector<size_t> order(n + 1);
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        const size_t best = order[0], worst = order[n], second = order[n - 1];

        double diam = 0.0;
        for (size_t i = 0; i < n; ++i)
            diam = std::max(diam, std::abs(pts[worst][i] - pts[best][i]));
        if (diam < tol && std::abs(vals[worst] - vals[best]) < tol) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (size_t i = 0; i < n; ++i) centroid[i] += pts[k][i] / static_cast<double>(n);
        }

        auto blend = [&](double c) {
            std::vector<double> p(n);
            for (size_t i = 0; i < n; ++i) p[i] = centroid[i] + c * (pts[worst][i] - centroid[i]);
            return p;
        };

        std::vector<double> refl = blend(-1.0);
        const double f_refl = f(refl);
        if (f_refl < vals[best]) {
            std::vector<double> expd = blend(-2.0);
            const double f_expd = f(expd);
            if (f_expd < f_refl) {
                pts[worst] = std::move(expd);
                vals[worst] = f_expd;
            } else {
                pts[worst] = std::move(refl);
                vals[worst] = f_refl;
            }
        } else if (f_refl < vals[second]) {
            pts[worst] = std::move(refl);
            vals[worst] = f_refl;
        } else {
            std::vector<double> ctr = blend(0.5);
            const double f_ctr = f(ctr);
            if (f_ctr < vals[worst]) {
                pts[worst] = std::move(ctr);
                vals[worst] = f_ctr;
            } else {
                for (size_t k = 0; k <= n; ++k) {
                    if (k == best) continue;
                    for (size_t i = 0; i < n; ++i)
                        pts[k][i] = pts[best][i] + 0.5 * (pts[k][i] - pts[best][i]);
                    vals[k] = f(pts[k]);
                }
            }
        }
    }

    size_t best = 0;
    for (size_t k = 1; k <= n; ++k)
        if (vals[k] < vals[best]) best = k;
    res.x = pts[best];
    res.value = vals[best];
    return res;
}

struct DescentResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

// Forward-difference gradient descent with Armijo backtracking. Monotone by
// construction: a step is only taken when it strictly decreases f.
inline DescentResult gradient_descent(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> x, int max_iter,
                                      double fd_eps = 1e-6, double tol = 1e-9) {
    const size_t n = x.size();
    double fx = f(x);
    double step = 0.5;
    DescentResult res;
    std::vector<double> grad(n), trial(n);
    for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
        double gnorm2 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double keep = x[i];
            x[i] = keep + fd_eps;
            grad[i] = (f(x) - fx) / fd_eps;
            x[i] = keep;
            gnorm2 += grad[i] * grad[i];
        }
        if (gnorm2 < tol * tol) break;

        bool moved = false;
        for (int bt = 0; bt < 30; ++bt) {
            for (size_t i = 0; i < n; ++i) trial[i] = x[i] - step * grad[i];
            const double ft = f(trial);
            if (ft < fx - 1e-4 * step * gnorm2) {
                x = trial;
                fx = ft;
                step *= 1.6;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    res.x = std::move(x);
    res.value = fx;
    return res;
}

}  // namespace cohdist
