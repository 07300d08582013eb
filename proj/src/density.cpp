#include "lossyspdc/density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lossyspdc/biphoton.hpp"
#include "lossyspdc/errors.hpp"
#include "pump_nodes.hpp"

namespace lossyspdc {

namespace {

constexpr double kInvFourPi2 = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);

// Dimensionless form of double_exp_integral / (2 t1)^2 with p = P t1,
// q = Q t1, ct = c t1.
cplx dexp_unit(cplx p, cplx q, double ct, double log_scale)
{
    const cplx w = p - q;
    const cplx lo = log_scale - w, hi = log_scale + w;
    return exp_dd2(lo, 2.0 * (p - ct) + lo, hi) + exp_dd2(lo, -2.0 * (q + ct) + lo, hi);
}

class KernelEvaluator {
public:
    explicit KernelEvaluator(const SimulationConfig& cfg)
        : cfg_(cfg), nodes_(detail::pump_nodes(cfg)), t1_(cfg.t1())
    {
        check_pump_coverage(cfg);
    }

    ExitKernels operator()(double omega1, double omega2)
    {
        detail::fill_b(cfg_, nodes_, omega1, omega2, b_);
        const std::size_t n = nodes_.size();
        const double s = omega1 + omega2;
        const double a1 = beta_from_alpha(alpha(cfg_.loss_d, omega1), cfg_.disp_d.v) * t1_;
        const double a2 = beta_from_alpha(alpha(cfg_.loss_d, omega2), cfg_.disp_d.v) * t1_;

        u_.resize(n);
        for (std::size_t k = 0; k < n; ++k) u_[k] = (s - nodes_[k].omega) * t1_;

        ExitKernels out;

        CompensatedSum<cplx> g;
        for (std::size_t k = 0; k < n; ++k)
            g.add(b_[k] * exp_dd1({-2.0 * (a1 + a2), -u_[k]}, {-2.0 * nodes_[k].kappa_t1, u_[k]}));
        out.theta2_exit = std::norm(g.value() * (2.0 * t1_)) * kInvFourPi2;

        CompensatedSum<double> th1, th0;
        for (std::size_t k = 0; k < n; ++k) {
            const double kk = nodes_[k].kappa_t1;
            const cplx p1{a1 - kk, u_[k]}, p0{-kk, u_[k]};
            for (std::size_t l = k; l < n; ++l) {
                const double kl = nodes_[l].kappa_t1;
                const double bb = (l == k ? 1.0 : 2.0) * b_[k] * b_[l];
                if (bb == 0.0) continue;
                const cplx q1{kl - a1, u_[l]}, q0{kl, u_[l]};
                const double shift = -(kk + kl);
                th1.add(bb * dexp_unit(p1, q1, a2, shift - 2.0 * a1).real());
                th0.add(bb * dexp_unit(p0, q0, a1 + a2, shift).real());
            }
        }
        const double t2 = 4.0 * t1_ * t1_ * kInvFourPi2;
        out.theta1_exit = th1.value() * t2;
        out.theta0 = th0.value() * t2;
        return out;
    }

private:
    const SimulationConfig& cfg_;
    std::vector<detail::PumpNode> nodes_;
    double t1_;
    std::vector<double> b_;
    std::vector<double> u_;
};

double exit_log_factor(const SimulationConfig& cfg, double a)
{
    return 0.5 * a * cfg.L * cfg.r();
}

}  // namespace

cplx double_exp_integral(const TemporalRates& r, double log_scale)
{
    const double T = 2.0 * r.t1;
    return T * T * dexp_unit(r.P * r.t1, r.Q * r.t1, r.c * r.t1, log_scale);
}

ExitKernels exit_kernels(const SimulationConfig& cfg, double omega1, double omega2)
{
    return KernelEvaluator(cfg)(omega1, omega2);
}

double theta2_diag(const SimulationConfig& cfg, double omega1, double omega2)
{
    const double a = alpha(cfg.loss_d, omega1) + alpha(cfg.loss_d, omega2);
    return exit_kernels(cfg, omega1, omega2).theta2_exit * std::exp(exit_log_factor(cfg, a));
}

double theta1_diag(const SimulationConfig& cfg, double omega1, double omega2)
{
    const double a = alpha(cfg.loss_d, omega1);
    return exit_kernels(cfg, omega1, omega2).theta1_exit * std::exp(exit_log_factor(cfg, a));
}

double theta0_diag(const SimulationConfig& cfg, double omega1, double omega2)
{
    return exit_kernels(cfg, omega1, omega2).theta0;
}

KernelGrid kernel_grid(const SimulationConfig& cfg)
{
    KernelGrid out;
    out.grid = cfg.d_rule();
    const long n = long(out.grid.size());
    out.values.resize(std::size_t(n * n));
    KernelEvaluator proto(cfg);
    const auto& w = out.grid.nodes;
#pragma omp parallel
    {
        KernelEvaluator eval = proto;
#pragma omp for schedule(dynamic)
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) out.values[std::size_t(i * n + j)] = eval(w[i], w[j]);
    }
    return out;
}

double normalize(const KernelGrid& kg)
{
    const std::size_t n = kg.grid.size();
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double m = kg.grid.weights[i] * kg.grid.weights[j] * kg.grid.nodes[i] *
                             kg.grid.nodes[j];
            sum.add(m * kg.at(i, j).theta0);
        }
    const double norm = sum.value();
    if (!(norm > 0) || !std::isfinite(norm))
        throw Error(ErrorKind::DegenerateNormalization,
                    "normalization integral is " + std::to_string(norm));
    return norm;
}

double normalize(const SimulationConfig& cfg) { return normalize(kernel_grid(cfg)); }

ExitProbabilities exit_probabilities(const KernelGrid& kg)
{
    const double norm = normalize(kg);
    const std::size_t n = kg.grid.size();
    CompensatedSum<double> s2, s1, s0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double m = kg.grid.weights[i] * kg.grid.weights[j] * kg.grid.nodes[i] *
                             kg.grid.nodes[j];
            const ExitKernels& k = kg.at(i, j);
            s2.add(m * k.theta2_exit);
            s1.add(m * 2.0 * (k.theta1_exit - k.theta2_exit));
            s0.add(m * (k.theta0 - 2.0 * k.theta1_exit + k.theta2_exit));
        }
    ExitProbabilities p{s2.value() / norm, s1.value() / norm, s0.value() / norm, norm};
    for (double v : {p.p2, p.p1, p.p0}) {
        if (v < -1e-6)
            throw Error(ErrorKind::NegativeProbability,
                        "exit probability " + std::to_string(v) + " below zero");
    }
    return p;
}

ExitProbabilities exit_probabilities(const SimulationConfig& cfg)
{
    return exit_probabilities(kernel_grid(cfg));
}

}  // namespace lossyspdc
