#include "lossyspdc/schmidt.hpp"

#include <algorithm>
#include <cmath>

#include "lossyspdc/errors.hpp"

namespace lossyspdc {

SchmidtResult schmidt_number(const Eigen::MatrixXcd& amplitude, const QuadratureRule& grid,
                             std::size_t max_modes)
{
    const auto n = amplitude.rows();
    if (n == 0 || amplitude.cols() != n || std::size_t(n) != grid.size())
        throw Error(ErrorKind::DegenerateInput, "amplitude must be square on the grid");

    // Cell measure h on both indices.
    const Eigen::MatrixXcd weighted = amplitude * grid.spacing();
    if (!(weighted.cwiseAbs().maxCoeff() > 0))
        throw Error(ErrorKind::DegenerateInput, "amplitude matrix is all zero");

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(weighted);
    const Eigen::VectorXd s2 = svd.singularValues().array().square();
    const double total = s2.sum();

    SchmidtResult out;
    std::vector<double> p(std::size_t(s2.size()));
    for (Eigen::Index i = 0; i < s2.size(); ++i) p[std::size_t(i)] = s2(i) / total;
    std::sort(p.begin(), p.end(), std::greater<>());
    double purity = 0;
    for (double v : p) purity += v * v;
    out.k_number = 1.0 / purity;

    const std::size_t keep = max_modes == 0 ? p.size() : std::min(max_modes, p.size());
    out.mode_weights.assign(p.begin(), p.begin() + long(keep));
    for (std::size_t i = keep; i < p.size(); ++i) out.truncation_error += p[i];
    return out;
}

}  // namespace lossyspdc
