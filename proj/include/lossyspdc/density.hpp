#pragma once

#include <vector>

#include "lossyspdc/exp_kernels.hpp"
#include "lossyspdc/model.hpp"

namespace lossyspdc {

struct TemporalRates {
    cplx P;
    cplx Q;
    double c = 0;
    double t1 = 1;
};

// Integral of exp(P tau - Q tau' - c |tau - tau'|) over [-t1, t1]^2,
// multiplied by exp(log_scale).
cplx double_exp_integral(const TemporalRates& r, double log_scale = 0.0);

// Diagonal density kernels at (omega1, omega2), without the A prefactor.
double theta2_diag(const SimulationConfig& cfg, double omega1, double omega2);
double theta1_diag(const SimulationConfig& cfg, double omega1, double omega2);
double theta0_diag(const SimulationConfig& cfg, double omega1, double omega2);

// The kernels as they enter the exit probabilities:
// theta2 e^{-(a1+a2) L r/2}, theta1 e^{-a1 L r/2} and theta0. These stay
// finite where the raw kernels overflow.
struct ExitKernels {
    double theta2_exit = 0;
    double theta1_exit = 0;
    double theta0 = 0;
};

ExitKernels exit_kernels(const SimulationConfig& cfg, double omega1, double omega2);

// Exit kernels on the full d_grid x d_grid lattice, row-major in
// (omega1, omega2).
struct KernelGrid {
    QuadratureRule grid;
    std::vector<ExitKernels> values;

    const ExitKernels& at(std::size_t i, std::size_t j) const { return values[i * grid.size() + j]; }
};

KernelGrid kernel_grid(const SimulationConfig& cfg);

// N = sum over the grid of w1 w2 theta0 with the sqrt(w1 w2) prefactor
// squared. Throws DegenerateNormalization for N <= 0 or non-finite.
double normalize(const SimulationConfig& cfg);
double normalize(const KernelGrid& kernels);

struct ExitProbabilities {
    double p2 = 0;
    double p1 = 0;
    double p0 = 0;
    double norm = 0;

    double sum() const { return p2 + p1 + p0; }
};

// Throws NegativeProbability if any probability drops below -1e-6.
ExitProbabilities exit_probabilities(const SimulationConfig& cfg);
ExitProbabilities exit_probabilities(const KernelGrid& kernels);

}  // namespace lossyspdc
