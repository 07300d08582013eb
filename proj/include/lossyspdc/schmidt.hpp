#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "lossyspdc/quadrature.hpp"

namespace lossyspdc {

struct SchmidtResult {
    double k_number = 1;
    std::vector<double> mode_weights;  // descending, sums to 1
    double truncation_error = 0;       // weight of modes not kept in mode_weights
};

// K = 1/sum p_n^2 with p_n the normalized squared singular values of the
// measure-weighted amplitude. Keeps at most max_modes weights (0: all).
// Throws DegenerateInput for an all-zero matrix.
SchmidtResult schmidt_number(const Eigen::MatrixXcd& amplitude, const QuadratureRule& grid,
                             std::size_t max_modes = 0);

}  // namespace lossyspdc
