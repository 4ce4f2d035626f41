#pragma once

#include <string>
#include <vector>

#include "cohdist/matrix.hpp"
#include "cohdist/measures.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

// CPTP map given by Kraus operators: rho -> sum_j K_j rho K_j^dag.
// measurement_type marks channels whose Kraus count plays the role of an
// apparatus dimension (weak and projective measurements).
struct KrausChannel {
    int dim_in = 0;
    int dim_out = 0;
    std::vector<Mat> kraus;
    std::string label;
    double param = 0.0;
    bool measurement_type = false;
};

struct DilationResult {
    Mat isometry;  // dim_out * dim_env rows, dim_in cols
    int dim_env;   // number of Kraus operators
};

bool is_cptp(const KrausChannel& ch, double tol);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

// (E (x) I) acting on the system half of a bipartite pure state.
DensityMatrix apply_extended(const KrausChannel& ch, const PureBipartiteState& psi);

// V = sum_k K_k (x) |k>_E; V^dag V = I, Tr_E(V rho V^dag) = apply(ch, rho).
DilationResult dilation_isometry(const KrausChannel& ch);

// Composite: first a, then b (b may have different output dimension).
KrausChannel concatenate(const KrausChannel& a, const KrausChannel& b);

// Constructors. Parameters outside [0,1] throw invalid_argument.
KrausChannel weak_measurement(double x);
KrausChannel projective_measurement(const Basis& basis);
KrausChannel depolarizing(double p, int d = 2);
KrausChannel amplitude_damping(double q);
KrausChannel bit_flip(double p);
KrausChannel phase_flip(double p);
KrausChannel bit_phase_flip(double p);
KrausChannel unitary_channel(const Mat& u, const std::string& label = "unitary");

// Product map ch_a (x) ch_b on a composite system.
KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b);

}  // namespace cohdist
