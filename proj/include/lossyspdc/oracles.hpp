#pragma once

#include <cstddef>
#include <cstdint>

#include "lossyspdc/model.hpp"

namespace lossyspdc {

struct SfgParams {
    double p_s = 1;
    double p_i = 1;
    double dk = 0;  // k_S + k_I - k_SH, 1/um
    double alpha_s = 0;
    double alpha_i = 0;
    double alpha_sh = 0;
    double L = 1;   // um
    double pa = 1;  // power x area normalization
};

// Classical sum-frequency power with linear losses.
double sfg_power(const SfgParams& p);

// [sin^2(dk L/2) + sinh^2(g L/4)] / [(dk L/2)^2 + (g L/4)^2], g = a_s + a_i - a_sh.
double sfg_fraction(double dk, double alpha_s, double alpha_i, double alpha_sh, double L);

struct ResemblanceReport {
    std::size_t samples = 0;
    double max_rel_deviation = 0;
};

// Compares the loss/phase fraction of jsi_approx with sfg_fraction at random
// pairs (omega1 from the d grid, omega1 + omega2 within omega_p +- 5 delta).
ResemblanceReport sfg_jsi_resemblance(const SimulationConfig& cfg, std::size_t samples = 100,
                                      std::uint64_t seed = 7);

struct CommutatorCheck {
    double closed = 0;
    double numeric = 0;
    double omega_max = 0;
    double tail_bound = 0;
};

// exp(-b|t - t'|) - exp(-b(2 t1 - t - t')) against the frequency integral
// truncated at omega_max, with the truncation bound reported.
CommutatorCheck fluct_commutator_identity(double beta, double t, double t_prime, double t1);

}  // namespace lossyspdc
