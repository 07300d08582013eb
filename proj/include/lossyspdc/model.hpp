#pragma once

#include <cstddef>
#include <variant>

#include "lossyspdc/quadrature.hpp"

// Units: um, ps, rad/ps; attenuation in 1/um.
namespace lossyspdc {

namespace units {
inline constexpr double per_cm = 1e-4;  // 1/cm in 1/um
inline constexpr double nm = 1e-3;      // nm in um
inline constexpr double mm = 1e3;       // mm in um
inline constexpr double fs = 1e-3;      // fs in ps
}  // namespace units

struct PhysicalConstants {
    double c = 299.792458;               // um/ps
    double hbar = 1.054571817e-22;       // J ps
    double epsilon0 = 8.8541878128e-18;  // F/um
};

struct DispersionModel {
    double k0 = 0;      // 1/um
    double omega0 = 0;  // rad/ps
    double v = 1;       // um/ps
    double Lambda = 0;  // ps^2/um
};

struct PumpPulse {
    double omega_p = 0;  // rad/ps
    double delta = 1;    // rad/ps
};

struct ZeroLoss {};

struct ConstantLoss {
    double alpha = 0;  // 1/um
};

// alpha(w) = coef * (1/2 - w/omega_ref)^2
struct QuadraticLoss {
    double coef = 0;  // 1/um
    double omega_ref = 0;
};

using LossModel = std::variant<ZeroLoss, ConstantLoss, QuadraticLoss>;

struct GridSpec {
    double min = 0;
    double max = 0;
    std::size_t n = 0;
};

struct FrequencyGrids {
    GridSpec d_grid;
    GridSpec p_grid;
    RuleKind rule = RuleKind::Trapezoid;
};

struct SimulationConfig {
    double L = 0;  // um
    DispersionModel disp_d;
    DispersionModel disp_p;
    PumpPulse pump;
    LossModel loss_d;
    LossModel loss_p;
    FrequencyGrids grid;
    PhysicalConstants constants;
    bool phase_matched = true;

    double r() const { return disp_d.v / disp_p.v; }
    double t1() const { return L / (2.0 * disp_p.v); }

    QuadratureRule d_rule() const;
    QuadratureRule p_rule() const;

    // Throws Error(Config) on violated invariants.
    void validate() const;
};

double k_of_omega(const DispersionModel& model, double omega);
double phase_mismatch(const SimulationConfig& cfg, double omega1, double omega2, double omega);

double pump_envelope(const PumpPulse& pump, double omega);
double bandwidth_from_duration(double fwhm_ps);
double omega_from_wavelength(double wavelength_um, const PhysicalConstants& pc = {});

double alpha(const LossModel& loss, double omega);
double beta_from_alpha(double alpha, double v);
double alpha_from_beta(double beta, double v);

bool is_lossless(const LossModel& loss);

}  // namespace lossyspdc
