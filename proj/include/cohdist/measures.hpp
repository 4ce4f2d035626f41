#pragma once

#include "cohdist/matrix.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

// Orthonormal reference frame for coherence. frame's columns are the basis
// kets; must be unitary within 1e-10.
struct Basis {
    Mat frame;

    explicit Basis(Mat f);
    static Basis computational(int d);
    int dim() const { return static_cast<int>(frame.rows()); }
};

// S(rho) = -sum lambda log2 lambda, in bits. Eigenvalues in [-TOL_PSD, 0)
// are clamped to zero; anything lower is a contract violation and throws.
double von_neumann_entropy(const Mat& rho);

// Shannon entropy of a probability vector, same clamping rule.
double shannon_entropy(const RealVec& p);

// S(rho || sigma) in bits. Returns +infinity when sigma's support misses
// part of rho's: some sigma eigenvalue < 1e-12 carries rho weight > 1e-10.
double relative_entropy(const Mat& rho, const Mat& sigma);

// Kill off-diagonal terms of rho in the given frame; returns a state in the
// original (computational) representation.
Mat dephase(const Mat& rho, const Basis& basis);

// C_r = S(dephased) - S(rho); equals S(rho || dephased).
double coherence_relative_entropy(const Mat& rho, const Basis& basis);

// Sum of |off-diagonal| magnitudes in the given frame.
double coherence_l1(const Mat& rho, const Basis& basis);

}  // namespace cohdist
