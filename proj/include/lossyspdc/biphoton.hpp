#pragma once

#include <complex>

#include <Eigen/Dense>

#include "lossyspdc/exp_kernels.hpp"
#include "lossyspdc/model.hpp"

// Pointwise amplitudes omit the constant prefactor A and its sqrt(w1 w2)
// factor; grid-level results (jsi_grid, probabilities) include sqrt(w1 w2).
namespace lossyspdc {

struct JsiResult {
    QuadratureRule grid;
    Eigen::MatrixXcd amplitude;  // rows: omega1, cols: omega2
    Eigen::MatrixXd intensity;
    bool normalized = false;
};

// sqrt(w) phi_P(w) exp(-alpha_P(w) L/4) sinc(dk L/2)
double pump_kernel_B(const SimulationConfig& cfg, double omega1, double omega2, double omega);

// Lossy two-photon amplitude by quadrature over the pump grid. Throws
// QuadratureUnderresolved when the pump grid misses omega_p +- 5 delta.
cplx phi2_exact(const SimulationConfig& cfg, double omega1, double omega2);

// phi2_exact with every loss set to zero.
cplx lossless_phi(const SimulationConfig& cfg, double omega1, double omega2);

// Energy-conserving approximation |phi_P(s)|^2 s e^{...} |sinc(dk L/2 + i da L/4)|^2.
double jsi_approx(const SimulationConfig& cfg, double omega1, double omega2);

// Square-root form of jsi_approx with the phase of the exact amplitude.
cplx approx_amplitude(const SimulationConfig& cfg, double omega1, double omega2);

JsiResult jsi_grid(const SimulationConfig& cfg, bool use_exact, bool normalize = false);

void check_pump_coverage(const SimulationConfig& cfg);

}  // namespace lossyspdc
