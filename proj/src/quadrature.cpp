#include "lossyspdc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lossyspdc/errors.hpp"

namespace lossyspdc {

double QuadratureRule::spacing() const
{
    return nodes.size() < 2 ? 0.0
                            : (nodes.back() - nodes.front()) / double(nodes.size() - 1);
}

QuadratureRule make_rule(double min, double max, std::size_t n, RuleKind kind)
{
    if (n < 2) throw Error(ErrorKind::InvalidRule, "quadrature rule needs n >= 2");
    if (!(max > min)) throw Error(ErrorKind::InvalidRule, "quadrature rule needs max > min");
    if (kind == RuleKind::Simpson && n % 2 == 0)
        throw Error(ErrorKind::InvalidRule,
                    "Simpson rule needs an odd node count, got " + std::to_string(n));

    QuadratureRule rule;
    rule.kind = kind;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double h = (max - min) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        // Pin both ends exactly.
        rule.nodes[i] = (i + 1 == n) ? max : min + double(i) * h;
    }
    if (kind == RuleKind::Trapezoid) {
        std::fill(rule.weights.begin(), rule.weights.end(), h);
        rule.weights.front() = rule.weights.back() = 0.5 * h;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            rule.weights[i] = (i == 0 || i + 1 == n) ? h / 3 : (i % 2 ? 4 * h / 3 : 2 * h / 3);
    }
    return rule;
}

template <typename T>
void CompensatedSum<T>::add(T x)
{
    if constexpr (std::is_same_v<T, double>) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    } else {
        // Component-wise Neumaier on the real and imaginary parts.
        double s_re = sum_.real(), s_im = sum_.imag();
        double c_re = comp_.real(), c_im = comp_.imag();
        auto step = [](double& s, double& c, double v) {
            const double t = s + v;
            if (std::abs(s) >= std::abs(v))
                c += (s - t) + v;
            else
                c += (v - t) + s;
            s = t;
        };
        step(s_re, c_re, x.real());
        step(s_im, c_im, x.imag());
        sum_ = {s_re, s_im};
        comp_ = {c_re, c_im};
    }
}

template class CompensatedSum<double>;
template class CompensatedSum<std::complex<double>>;

namespace {

using boost::math::quadrature::gauss_kronrod;

template <typename V>
V segmented(const std::function<V(double)>& f, double a, double b,
            std::vector<double> breaks, double abs_tol, double rel_tol,
            unsigned max_depth, double& err_total)
{
    breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                                [&](double x) { return !(x > a && x < b); }),
                 breaks.end());
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> pts{a};
    pts.insert(pts.end(), breaks.begin(), breaks.end());
    pts.push_back(b);

    V total{};
    err_total = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        if (pts[k + 1] <= pts[k]) continue;
        double err = 0, l1 = 0;
        V piece = gauss_kronrod<double, 31>::integrate(f, pts[k], pts[k + 1], max_depth,
                                                       rel_tol, &err, &l1);
        total += piece;
        err_total += err;
    }
    const double scale = std::abs(total);
    if (!(err_total <= std::max(abs_tol, rel_tol * scale)) || !std::isfinite(scale)) {
        throw Error(ErrorKind::ToleranceNotMet,
                    "adaptive quadrature error " + std::to_string(err_total) +
                        " above tolerance");
    }
    return total;
}

template <typename V>
V nested(const std::function<V(double, double)>& f, const Rectangle& d,
         const AdaptiveOptions& o)
{
    // Inner integrals run slightly tighter so their error does not dominate.
    const double inner_abs = o.abs_tol / (4 * std::max(1.0, d.x1 - d.x0));
    const double inner_rel = o.rel_tol / 4;
    std::function<V(double)> outer = [&](double x) {
        std::vector<double> br = o.y_breaks ? o.y_breaks(x) : std::vector<double>{};
        std::function<V(double)> g = [&](double y) { return f(x, y); };
        double err = 0;
        return segmented<V>(g, d.y0, d.y1, br, inner_abs, inner_rel, o.max_depth, err);
    };
    double err = 0;
    return segmented<V>(outer, d.x0, d.x1, {}, o.abs_tol, o.rel_tol, o.max_depth, err);
}

}  // namespace

double integrate_2d_adaptive(const std::function<double(double, double)>& f,
                             const Rectangle& domain, const AdaptiveOptions& opts)
{
    return nested<double>(f, domain, opts);
}

std::complex<double> integrate_2d_adaptive(
    const std::function<std::complex<double>(double, double)>& f,
    const Rectangle& domain, const AdaptiveOptions& opts)
{
    return nested<std::complex<double>>(f, domain, opts);
}

std::complex<double> integrate_1d_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breaks, double abs_tol, double rel_tol,
    unsigned max_depth, double* error)
{
    double err = 0;
    auto v = segmented<std::complex<double>>(f, a, b, breaks, abs_tol, rel_tol, max_depth, err);
    if (error) *error = err;
    return v;
}

}  // namespace lossyspdc
