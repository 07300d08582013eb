#include "lossyspdc/exp_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lossyspdc {

namespace {

// Below this node spread exp[a, b, c] is summed as a Taylor series about the
// centroid; above it the difference quotient loses at most a few ulps.
constexpr double kSeriesSpread = 2.0;

cplx dd2_series(cplx a, cplx b, cplx c)
{
    const cplx m = (a + b + c) / 3.0;
    const cplx x = a - m, y = b - m, z = c - m;
    // exp[a,b,c] = e^m * sum_k h_k(x,y,z)/(k+2)!, h_k complete homogeneous.
    // h_1 vanishes about the centroid, so stop on the bound
    // |h_k| <= C(k+2, 2) rho^k rather than on a small term.
    const double rho = std::max({std::abs(x), std::abs(y), std::abs(z)});
    cplx xk = 1.0, hxy = 1.0, hxyz = 1.0;
    cplx sum = 0.5;
    double fact = 2.0, rho_k = 1.0;
    for (int k = 1; k < 60; ++k) {
        xk *= x;
        hxy = y * hxy + xk;
        hxyz = z * hxyz + hxy;
        fact *= double(k + 2);
        rho_k *= rho;
        sum += hxyz / fact;
        if (0.5 * (k + 2) * (k + 1) * rho_k / fact < 1e-17 * 0.5) break;
    }
    return std::exp(m) * sum;
}

}  // namespace

cplx cexpm1(cplx z)
{
    const double x = z.real(), y = z.imag();
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

cplx exp_phi1(cplx z)
{
    if (std::abs(z) < 1e-5) return 1.0 + z * (0.5 + z * (1.0 / 6 + z / 24.0));
    return cexpm1(z) / z;
}

cplx exp_dd1(cplx a, cplx b)
{
    if (a.real() < b.real()) std::swap(a, b);
    return std::exp(a) * exp_phi1(b - a);
}

cplx exp_dd2(cplx a, cplx b, cplx c)
{
    const double dab = std::abs(a - b), dac = std::abs(a - c), dbc = std::abs(b - c);
    if (std::max({dab, dac, dbc}) < kSeriesSpread) return dd2_series(a, b, c);
    // Put the farthest pair at the ends.
    if (dab >= dac && dab >= dbc)
        std::swap(b, c);
    else if (dbc >= dac && dbc >= dab)
        std::swap(a, b);
    return (exp_dd1(b, c) - exp_dd1(a, b)) / (c - a);
}

cplx complex_sinc(cplx z)
{
    if (std::abs(z) < 1e-4) {
        const cplx z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

cplx scaled_sinc(cplx z)
{
    const double x = z.real(), y = z.imag(), ay = std::abs(y);
    if (std::abs(z) < 1e-4) return complex_sinc(z) * std::exp(-ay);
    const double e = std::exp(-2.0 * ay);
    const cplx s{std::sin(x) * 0.5 * (1.0 + e),
                 std::copysign(1.0, y) * std::cos(x) * 0.5 * -std::expm1(-2.0 * ay)};
    return s / z;
}

}  // namespace lossyspdc
