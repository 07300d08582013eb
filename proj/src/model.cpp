#include "lossyspdc/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lossyspdc/errors.hpp"

namespace lossyspdc {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw Error(ErrorKind::Config, what);
}

void check_grid(const GridSpec& g, RuleKind rule, const char* name)
{
    require(g.n >= 2, std::string(name) + " needs at least 2 points");
    require(std::isfinite(g.min) && std::isfinite(g.max) && g.max > g.min,
            std::string(name) + " must be strictly increasing");
    require(rule != RuleKind::Simpson || g.n % 2 == 1,
            std::string(name) + " needs an odd point count for Simpson");
}

double loss_floor(const LossModel& loss, const GridSpec& g)
{
    return std::min(alpha(loss, g.min), alpha(loss, g.max));
}

}  // namespace

QuadratureRule SimulationConfig::d_rule() const
{
    return make_rule(grid.d_grid.min, grid.d_grid.max, grid.d_grid.n, grid.rule);
}

QuadratureRule SimulationConfig::p_rule() const
{
    return make_rule(grid.p_grid.min, grid.p_grid.max, grid.p_grid.n, grid.rule);
}

void SimulationConfig::validate() const
{
    require(L > 0 && std::isfinite(L), "waveguide length must be positive");
    require(disp_d.v > 0 && disp_p.v > 0, "group velocities must be positive");
    require(pump.delta > 0, "pump bandwidth must be positive");
    require(pump.omega_p > 0, "pump frequency must be positive");
    check_grid(grid.d_grid, grid.rule, "d_grid");
    check_grid(grid.p_grid, grid.rule, "p_grid");
    require(grid.d_grid.min > 0 && grid.p_grid.min > 0, "grid frequencies must be positive");
    for (const LossModel* loss : {&loss_d, &loss_p}) {
        if (auto* c = std::get_if<ConstantLoss>(loss)) require(c->alpha >= 0, "negative loss");
        if (auto* q = std::get_if<QuadraticLoss>(loss))
            require(q->coef >= 0 && q->omega_ref > 0, "quadratic loss needs coef >= 0, omega_ref > 0");
    }
    require(loss_floor(loss_d, grid.d_grid) >= 0 && loss_floor(loss_p, grid.p_grid) >= 0,
            "negative loss on grid");
    if (phase_matched) {
        const double mismatch = k_of_omega(disp_p, pump.omega_p) -
                                2.0 * k_of_omega(disp_d, 0.5 * pump.omega_p);
        require(std::abs(mismatch) <= 1e-12,
                "declared phase matching violated by " + std::to_string(mismatch) + " 1/um");
    }
}

double k_of_omega(const DispersionModel& m, double omega)
{
    const double d = omega - m.omega0;
    return m.k0 + d / m.v + m.Lambda * d * d;
}

double phase_mismatch(const SimulationConfig& cfg, double omega1, double omega2, double omega)
{
    // Expanded about the expansion points so the k0 offsets cancel exactly.
    const double d1 = omega1 - cfg.disp_d.omega0, d2 = omega2 - cfg.disp_d.omega0;
    const double dp = omega - cfg.disp_p.omega0;
    const double k0 = 2.0 * cfg.disp_d.k0 - cfg.disp_p.k0;
    return k0 + (d1 + d2) / cfg.disp_d.v + cfg.disp_d.Lambda * (d1 * d1 + d2 * d2) -
           dp / cfg.disp_p.v - cfg.disp_p.Lambda * dp * dp;
}

double pump_envelope(const PumpPulse& pump, double omega)
{
    const double x = (omega - pump.omega_p) / pump.delta;
    return std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi) * pump.delta);
}

double bandwidth_from_duration(double fwhm_ps)
{
    return 2.0 * std::sqrt(std::numbers::ln2) / fwhm_ps;
}

double omega_from_wavelength(double wavelength_um, const PhysicalConstants& pc)
{
    return 2.0 * std::numbers::pi * pc.c / wavelength_um;
}

double alpha(const LossModel& loss, double omega)
{
    struct Visitor {
        double w;
        double operator()(const ZeroLoss&) const { return 0.0; }
        double operator()(const ConstantLoss& c) const { return c.alpha; }
        double operator()(const QuadraticLoss& q) const
        {
            const double u = 0.5 - w / q.omega_ref;
            return q.coef * u * u;
        }
    };
    return std::visit(Visitor{omega}, loss);
}

double beta_from_alpha(double a, double v) { return 0.5 * a * v; }

double alpha_from_beta(double beta, double v) { return 2.0 * beta / v; }

bool is_lossless(const LossModel& loss)
{
    if (std::holds_alternative<ZeroLoss>(loss)) return true;
    if (auto* c = std::get_if<ConstantLoss>(&loss)) return c->alpha == 0;
    return std::get<QuadraticLoss>(loss).coef == 0;
}

}  // namespace lossyspdc
