#include "lossyspdc/biphoton.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lossyspdc/errors.hpp"
#include "pump_nodes.hpp"

namespace lossyspdc {

namespace detail {

namespace {

double sinc(double x)
{
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

std::vector<PumpNode> pump_nodes(const SimulationConfig& cfg)
{
    const QuadratureRule rule = cfg.p_rule();
    const double t1 = cfg.t1();
    std::vector<PumpNode> nodes(rule.size());
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const double w = rule.nodes[k];
        nodes[k].omega = w;
        nodes[k].amp = rule.weights[k] * std::sqrt(w) * pump_envelope(cfg.pump, w);
        nodes[k].kappa_t1 = beta_from_alpha(alpha(cfg.loss_p, w), cfg.disp_p.v) * t1;
    }
    return nodes;
}

void fill_b(const SimulationConfig& cfg, const std::vector<PumpNode>& nodes, double omega1,
            double omega2, std::vector<double>& b)
{
    b.resize(nodes.size());
    const double half_l = 0.5 * cfg.L;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        b[k] = nodes[k].amp * sinc(phase_mismatch(cfg, omega1, omega2, nodes[k].omega) * half_l);
}

}  // namespace detail

namespace {

cplx phi2_from_nodes(const SimulationConfig& cfg, const std::vector<detail::PumpNode>& nodes,
                     double omega1, double omega2, std::vector<double>& b)
{
    detail::fill_b(cfg, nodes, omega1, omega2, b);
    const double t1 = cfg.t1();
    const double s = omega1 + omega2;
    const double ad_t1 =
        beta_from_alpha(alpha(cfg.loss_d, omega1) + alpha(cfg.loss_d, omega2), cfg.disp_d.v) * t1;
    CompensatedSum<cplx> acc;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double u = (s - nodes[k].omega) * t1;
        acc.add(b[k] * exp_dd1({-2.0 * ad_t1, -u}, {-2.0 * nodes[k].kappa_t1, u}));
    }
    return acc.value() * (t1 / std::numbers::pi);
}

SimulationConfig without_loss(SimulationConfig cfg)
{
    cfg.loss_d = ZeroLoss{};
    cfg.loss_p = ZeroLoss{};
    return cfg;
}

struct ApproxParts {
    double pref;   // sqrt(s) phi_P(s)
    cplx sinc_s;   // scaled_sinc(x + iy)
    double log_e;  // |y| - E/2
};

ApproxParts approx_parts(const SimulationConfig& cfg, double omega1, double omega2)
{
    const double s = omega1 + omega2;
    const double a1 = alpha(cfg.loss_d, omega1), a2 = alpha(cfg.loss_d, omega2);
    const double ap = alpha(cfg.loss_p, s);
    const double r = cfg.r(), L = cfg.L;
    const double x = 0.5 * phase_mismatch(cfg, omega1, omega2, s) * L;
    const double y = 0.25 * ((a1 + a2) * r - ap) * L;
    const double e_half = 0.25 * (ap + (a1 + a2) * r) * L;
    return {std::sqrt(s) * pump_envelope(cfg.pump, s), scaled_sinc({x, y}), std::abs(y) - e_half};
}

}  // namespace

void check_pump_coverage(const SimulationConfig& cfg)
{
    const double lo = cfg.pump.omega_p - 5.0 * cfg.pump.delta;
    const double hi = cfg.pump.omega_p + 5.0 * cfg.pump.delta;
    const double slack = 1e-9 * cfg.pump.delta;
    if (cfg.grid.p_grid.min > lo + slack || cfg.grid.p_grid.max < hi - slack) {
        throw Error(ErrorKind::QuadratureUnderresolved,
                    "p_grid [" + std::to_string(cfg.grid.p_grid.min) + ", " +
                        std::to_string(cfg.grid.p_grid.max) +
                        "] does not cover the pump envelope omega_p +- 5 delta");
    }
}

double pump_kernel_B(const SimulationConfig& cfg, double omega1, double omega2, double omega)
{
    const double x = 0.5 * phase_mismatch(cfg, omega1, omega2, omega) * cfg.L;
    return std::sqrt(omega) * pump_envelope(cfg.pump, omega) *
           std::exp(-0.25 * alpha(cfg.loss_p, omega) * cfg.L) * complex_sinc(x).real();
}

cplx phi2_exact(const SimulationConfig& cfg, double omega1, double omega2)
{
    check_pump_coverage(cfg);
    const auto nodes = detail::pump_nodes(cfg);
    std::vector<double> b;
    return phi2_from_nodes(cfg, nodes, omega1, omega2, b);
}

cplx lossless_phi(const SimulationConfig& cfg, double omega1, double omega2)
{
    return phi2_exact(without_loss(cfg), omega1, omega2);
}

double jsi_approx(const SimulationConfig& cfg, double omega1, double omega2)
{
    const ApproxParts p = approx_parts(cfg, omega1, omega2);
    return p.pref * p.pref * std::norm(p.sinc_s) * std::exp(2.0 * p.log_e);
}

cplx approx_amplitude(const SimulationConfig& cfg, double omega1, double omega2)
{
    const ApproxParts p = approx_parts(cfg, omega1, omega2);
    return p.pref * p.sinc_s * std::exp(p.log_e);
}

JsiResult jsi_grid(const SimulationConfig& cfg, bool use_exact, bool normalize)
{
    if (use_exact) check_pump_coverage(cfg);
    JsiResult out;
    out.grid = cfg.d_rule();
    const auto& w = out.grid.nodes;
    const long n = long(w.size());
    out.amplitude.resize(n, n);
    const auto nodes = use_exact ? detail::pump_nodes(cfg) : std::vector<detail::PumpNode>{};

#pragma omp parallel
    {
        std::vector<double> b;
#pragma omp for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                const cplx phi = use_exact ? phi2_from_nodes(cfg, nodes, w[i], w[j], b)
                                           : approx_amplitude(cfg, w[i], w[j]);
                out.amplitude(i, j) = std::sqrt(w[i] * w[j]) * phi;
            }
        }
    }

    if (normalize) {
        CompensatedSum<double> norm;
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                norm.add(out.grid.weights[i] * out.grid.weights[j] * std::norm(out.amplitude(i, j)));
        if (!(norm.value() > 0) || !std::isfinite(norm.value()))
            throw Error(ErrorKind::DegenerateInput, "amplitude grid has zero norm");
        out.amplitude /= std::sqrt(norm.value());
        out.normalized = true;
    }
    out.intensity = out.amplitude.cwiseAbs2();
    return out;
}

}  // namespace lossyspdc
