#pragma once

#include "cohdist/channels.hpp"
#include "cohdist/matrix.hpp"
#include "cohdist/measures.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

struct DiscordSolution {
    double value = 0.0;  // bits, clamped at 0
    double theta = 0.0;  // Bloch angles of the optimal qubit measurement
    double phi = 0.0;
    int refinement_iterations = 0;
};

struct ERSolution {
    double value = 0.0;  // bits, upper bound on the true minimum
    Mat closest_separable;
    int mixture_size = 0;
    int restarts_used = 0;
};

// I_c = S(E(rho)) - S((E (x) I)|Psi_rho>), with |Psi_rho> the canonical
// purification. Independent of the purification choice.
double coherent_information(const DensityMatrix& rho, const KrausChannel& ch);

// D = S(rho) - I_c, in [0, 2 log2 d]. Negatives within 1e-8 clamp to 0.
double disturbance(const DensityMatrix& rho, const KrausChannel& ch);

// Same quantity when the state is bipartite and the channel acts on all of
// A (x) B; the purifying reference has dimension d_a * d_b.
double disturbance_bipartite(const DensityMatrix& rho_ab, int d_a, int d_b,
                             const KrausChannel& ch);

// I(A:B) = S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const DensityMatrix& rho_ab, int d_a, int d_b);

// min over projective qubit measurements on B of I - J, where
// J = S(rho_A) - sum_i p_i S(rho_{A|i}). 32x32 angle grid seeds a simplex
// refinement to 1e-6. Requires d_b = 2.
DiscordSolution quantum_discord(const DensityMatrix& rho_ab, int d_a, int d_b);

// Variational upper bound on min_{separable sigma} S(rho || sigma). sigma is
// an explicit mixture of (d_a d_b)^2 pure product states; multi-restart
// descent over softmax weights and unnormalized ket components. The product
// marginal rho_A (x) rho_B is embedded in every restart, so the result never
// exceeds the mutual information. Requires d_a * d_b <= 16.
ERSolution relative_entropy_entanglement(const DensityMatrix& rho_ab, int d_a, int d_b,
                                         int restarts = 8);

// S(rho_AB || rho_A (x) rho_B), identically the mutual information; the
// cheap certified stand-in for the entanglement term.
double er_upper_bound_product(const DensityMatrix& rho_ab, int d_a, int d_b);

}  // namespace cohdist
