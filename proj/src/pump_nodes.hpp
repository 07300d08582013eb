#pragma once

#include <vector>

#include "lossyspdc/model.hpp"

namespace lossyspdc::detail {

// Per pump-grid node quantities shared by the amplitude and density kernels.
struct PumpNode {
    double omega;
    double amp;       // w * sqrt(omega) * phi_P(omega)
    double kappa_t1;  // alpha_P(omega) v_P t1 / 2
};

std::vector<PumpNode> pump_nodes(const SimulationConfig& cfg);

// amp * sinc(dk L/2) at (omega1, omega2).
void fill_b(const SimulationConfig& cfg, const std::vector<PumpNode>& nodes, double omega1,
            double omega2, std::vector<double>& b);

}  // namespace lossyspdc::detail
