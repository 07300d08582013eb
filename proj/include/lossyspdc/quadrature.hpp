#pragma once

#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

namespace lossyspdc {

enum class RuleKind { Trapezoid, Simpson };

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleKind kind = RuleKind::Trapezoid;

    std::size_t size() const { return nodes.size(); }
    double spacing() const;
};

// Uniform nodes on [min, max]. Throws InvalidRule for n < 2, max <= min,
// or an even node count with Simpson.
QuadratureRule make_rule(double min, double max, std::size_t n, RuleKind kind);

// Neumaier summation.
template <typename T>
class CompensatedSum {
public:
    void add(T x);
    T value() const { return sum_ + comp_; }

private:
    T sum_{};
    T comp_{};
};

extern template class CompensatedSum<double>;
extern template class CompensatedSum<std::complex<double>>;

struct Rectangle {
    double x0, x1, y0, y1;
};

struct AdaptiveOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    unsigned max_depth = 15;
    // Optional kink locations in y for a given x (e.g. y = x for |x - y|).
    std::function<std::vector<double>(double)> y_breaks;
};

// Nested adaptive Gauss-Kronrod. Throws ToleranceNotMet when the error
// estimate stays above tolerance.
double integrate_2d_adaptive(const std::function<double(double, double)>& f,
                             const Rectangle& domain,
                             const AdaptiveOptions& opts = {});

std::complex<double> integrate_2d_adaptive(
    const std::function<std::complex<double>(double, double)>& f,
    const Rectangle& domain, const AdaptiveOptions& opts = {});

// Dispatches a plain callable to the real or complex overload.
template <typename F>
    requires std::invocable<F, double, double> &&
             (!std::is_same_v<std::decay_t<F>, std::function<double(double, double)>>) &&
             (!std::is_same_v<std::decay_t<F>, std::function<std::complex<double>(double, double)>>)
auto integrate_2d_adaptive(F&& f, const Rectangle& domain, const AdaptiveOptions& opts = {})
{
    using R = std::invoke_result_t<F, double, double>;
    if constexpr (std::is_convertible_v<R, double>)
        return integrate_2d_adaptive(std::function<double(double, double)>(std::forward<F>(f)), domain, opts);
    else
        return integrate_2d_adaptive(std::function<std::complex<double>(double, double)>(std::forward<F>(f)),
                                     domain, opts);
}

// 1D counterpart with interior breakpoints.
std::complex<double> integrate_1d_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breaks, double abs_tol, double rel_tol,
    unsigned max_depth = 15, double* error = nullptr);

}  // namespace lossyspdc
