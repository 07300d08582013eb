#include "lossyspdc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lossyspdc/biphoton.hpp"
#include "lossyspdc/config_io.hpp"
#include "lossyspdc/density.hpp"
#include "lossyspdc/oracles.hpp"

namespace lossyspdc {

namespace {

CheckResult check(std::string name, double value, double tol)
{
    return {std::move(name), value <= tol, value, tol};
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

cplx brute_double_exp(const TemporalRates& r)
{
    AdaptiveOptions o;
    o.abs_tol = 1e-13;
    o.rel_tol = 1e-11;
    o.y_breaks = [](double x) { return std::vector<double>{x}; };
    return integrate_2d_adaptive(
        std::function<cplx(double, double)>([&](double x, double y) {
            return std::exp(r.P * x - r.Q * y - r.c * std::abs(x - y));
        }),
        {-r.t1, r.t1, -r.t1, r.t1}, o);
}

}  // namespace

std::vector<CheckResult> run_oracle_suite()
{
    std::vector<CheckResult> out;

    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0;
        for (int i = 0; i < 12; ++i) {
            const double t1 = 0.5 + 0.5 * (u(rng) + 1.0);
            TemporalRates r{{2 * u(rng), 3 * u(rng)}, {2 * u(rng), 3 * u(rng)},
                            1.5 * (u(rng) + 1.0), t1};
            if (i % 3 == 1) r.Q = r.P + cplx{1e-9, -1e-9};
            if (i % 3 == 2) r.c = std::abs(r.P.real()) + 1e-10;
            worst = std::max(worst, rel(double_exp_integral(r), brute_double_exp(r)));
        }
        out.push_back(check("double_exp_integral vs adaptive 2D quadrature", worst, 1e-8));
    }

    {
        double worst = 0;
        const double pts[][4] = {{0.7, -0.3, 0.4, 1.0}, {1.0, 0.0, 0.0, 1.0}, {0.2, 0.9, -0.5, 1.0},
                                 {2.5, 0.1, 0.3, 0.8}};
        for (const auto& p : pts) {
            const auto c = fluct_commutator_identity(p[0], p[1], p[2], p[3]);
            worst = std::max(worst, std::abs(c.closed - c.numeric));
        }
        out.push_back(check("commutator identity vs frequency integral", worst, 1e-6));
    }

    {
        const auto cfg = config_from_json(preset("fig1b")).sim;
        out.push_back(check("SFG resemblance of the approximate JSI",
                            sfg_jsi_resemblance(cfg, 100).max_rel_deviation, 1e-12));
    }

    {
        // Matched losses: the power at n pi must undercut both neighbours
        // at distance 1e-10, pinning the zero to that window.
        SfgParams p;
        p.L = 2000;
        p.alpha_s = 2e-4;
        p.alpha_i = 3e-4;
        p.alpha_sh = 5e-4;
        double worst = 0;
        for (int n = 1; n <= 5; ++n) {
            const double x = n * std::numbers::pi;
            auto power = [&](double xx) {
                p.dk = 2 * xx / p.L;
                return sfg_power(p);
            };
            const bool pinned = power(x) < power(x - 1e-10) && power(x) < power(x + 1e-10);
            worst = std::max(worst, pinned ? 0.0 : 1.0);
        }
        out.push_back(check("loss-matched SFG zeros at n pi", worst, 0.0));
    }

    {
        auto doc = preset("lossless");
        doc["grid"]["d"]["n"] = 12;
        doc["grid"]["p"]["n"] = 12;
        const auto cfg = config_from_json(doc).sim;
        const auto p = exit_probabilities(cfg);
        out.push_back(check("lossless pairs exit with unit probability", std::abs(p.p2 - 1.0), 1e-6));
    }

    {
        auto doc = preset("fig1b");
        doc["grid"]["d"]["n"] = 10;
        doc["grid"]["p"]["n"] = 10;
        const auto p = exit_probabilities(config_from_json(doc).sim);
        out.push_back(check("probabilities sum to one", std::abs(p.sum() - 1.0), 1e-6));
    }

    return out;
}

}  // namespace lossyspdc
