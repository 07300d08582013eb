#include "lossyspdc/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <variant>

#include <boost/math/quadrature/gauss.hpp>

#include "lossyspdc/biphoton.hpp"
#include "lossyspdc/errors.hpp"

namespace lossyspdc {

double sfg_fraction(double dk, double alpha_s, double alpha_i, double alpha_sh, double L)
{
    const double x = 0.5 * dk * L;
    const double y = 0.25 * (alpha_s + alpha_i - alpha_sh) * L;
    const double r2 = x * x + y * y;
    if (r2 < 1e-8) return 1.0 - (x * x - y * y) / 3.0;
    const double sx = std::sin(x), sy = std::sinh(y);
    return (sx * sx + sy * sy) / r2;
}

double sfg_power(const SfgParams& p)
{
    const double g = p.alpha_s + p.alpha_i - p.alpha_sh;
    const double e = 0.5 * (p.alpha_sh + p.alpha_s + p.alpha_i) * p.L;
    const double pref = p.p_s * p.p_i * p.L * p.L / p.pa;
    const double ay = 0.25 * std::abs(g) * p.L;
    if (ay < 30.0) return pref * std::exp(-e) * sfg_fraction(p.dk, p.alpha_s, p.alpha_i, p.alpha_sh, p.L);
    // sinh^2(y) e^{-2|y|} = ((1 - e^{-2|y|})/2)^2 keeps large losses finite.
    const double x = 0.5 * p.dk * p.L;
    const double q = std::exp(-2.0 * ay), sx = std::sin(x);
    const double h = 0.5 * -std::expm1(-2.0 * ay);
    return pref * std::exp(2.0 * ay - e) * (sx * sx * q + h * h) / (x * x + ay * ay);
}

ResemblanceReport sfg_jsi_resemblance(const SimulationConfig& cfg, std::size_t samples,
                                      std::uint64_t seed)
{
    for (const LossModel* l : {&cfg.loss_d, &cfg.loss_p})
        if (std::holds_alternative<QuadraticLoss>(*l))
            throw Error(ErrorKind::Config, "resemblance check needs constant losses");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u1(cfg.grid.d_grid.min, cfg.grid.d_grid.max);
    std::uniform_real_distribution<double> us(cfg.pump.omega_p - 5 * cfg.pump.delta,
                                              cfg.pump.omega_p + 5 * cfg.pump.delta);
    const double r = cfg.r(), L = cfg.L;
    ResemblanceReport rep;
    for (std::size_t i = 0; i < samples; ++i) {
        const double w1 = u1(rng), s = us(rng), w2 = s - w1;
        const double a1 = alpha(cfg.loss_d, w1), a2 = alpha(cfg.loss_d, w2);
        const double ap = alpha(cfg.loss_p, s);
        const double phi = pump_envelope(cfg.pump, s);
        const double pref = phi * phi * s * std::exp(-0.5 * ap * L - 0.5 * (a1 + a2) * L * r);
        const double jsi_frac = jsi_approx(cfg, w1, w2) / pref;
        const double sfg_frac = sfg_fraction(phase_mismatch(cfg, w1, w2, s), a1 * r, a2 * r, ap, L);
        rep.max_rel_deviation =
            std::max(rep.max_rel_deviation, std::abs(jsi_frac - sfg_frac) / std::abs(sfg_frac));
        ++rep.samples;
    }
    return rep;
}

CommutatorCheck fluct_commutator_identity(double beta, double t, double t_prime, double t1)
{
    using cplx = std::complex<double>;
    CommutatorCheck out;
    out.closed = std::exp(-beta * std::abs(t - t_prime)) - std::exp(-beta * (2 * t1 - t - t_prime));

    // e^{b(t+t')} folded into both brackets.
    const double a = std::exp(-beta * (t1 - t)), b = std::exp(-beta * (t1 - t_prime));
    auto f = [&](double w) {
        const cplx x{beta, w};
        const cplx left = std::exp(cplx{0, -t * w}) - a * std::exp(cplx{0, -t1 * w});
        const cplx right = std::exp(cplx{0, t_prime * w}) - b * std::exp(cplx{0, t1 * w});
        return (left / x * right / std::conj(x)).real();
    };

    // Expanded numerator: sum_j c_j e^{i w s_j} over beta^2 + w^2.
    const std::array<double, 4> c{1.0, -b, -a, a * b};
    const std::array<double, 4> s{t_prime - t, t1 - t, t_prime - t1, 0.0};
    const double pref = beta / std::numbers::pi;
    double osc = 0, s_max = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (std::abs(s[j]) > 1e-14) {
            osc += 4.0 * std::abs(c[j]) / std::abs(s[j]);
            s_max = std::max(s_max, std::abs(s[j]));
        }
    }
    double omega = 1e3 * beta;
    const double target = 1e-9;
    if (pref * osc / (beta * beta + omega * omega) > target)
        omega = std::min(std::sqrt(pref * osc / target), 1e7 * beta);
    out.omega_max = omega;
    out.tail_bound = pref * osc / (beta * beta + omega * omega);

    // Panels no wider than a quarter period of the fastest oscillation.
    double h = beta;
    if (s_max > 0) h = std::min(h, 0.5 * std::numbers::pi / s_max);
    const auto panels = std::size_t(std::ceil(omega / h));
    h = omega / double(panels);
    using boost::math::quadrature::gauss;
    CompensatedSum<double> acc;
    for (std::size_t k = 0; k < panels; ++k)
        acc.add(gauss<double, 20>::integrate(f, double(k) * h, double(k + 1) * h));
    double numeric = 2.0 * acc.value();

    // Non-oscillating terms have an elementary tail.
    for (std::size_t j = 0; j < 4; ++j)
        if (std::abs(s[j]) <= 1e-14)
            numeric += c[j] * 2.0 * (0.5 * std::numbers::pi - std::atan(omega / beta)) / beta;
    out.numeric = pref * numeric;
    return out;
}

}  // namespace lossyspdc
