#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ampbound/histogram.hpp"
#include "ampbound/parallel.hpp"

namespace ampbound {

// Shimazaki-Shinomoto cost scan over the Goldilocks parameter M.
// normalized_cost is referenced to M = 2 and scaled to one at M = 1:
// C_norm(M) = (C_B(M) - C_B(2)) / (C_B(1) - C_B(2)).
struct CostScan {
    std::vector<double> m_grid;
    std::vector<double> delta;            // bin width actually used per M
    std::vector<double> raw_cost;         // C_B per M
    std::vector<double> normalized_cost;  // NaN when normalization degenerate
    std::int64_t n = 0;
    double h_used = 0.0;
    double cost_m1 = 0.0, cost_m2 = 0.0;  // normalization anchors
    bool degenerate_normalization = false;
    std::optional<double> fitted_A;
};

// C_B = (2*mu_B - sigma_B^2) / delta^2 with the biased (population) variance.
double raw_cost(const Histogram& hist);

// Scan the grid (ascending, within [1,4], step <= 0.1). At each M the target
// width from bin_width(h, n, M) is snapped to an integer number of bins over
// the sample span so every bin is complete; the partial-trailing-bin sawtooth
// would otherwise swamp the shape signal for edge-supported pdfs.
CostScan cost_scan(const std::vector<double>& values, double h_nats,
                   const std::vector<double>& m_grid, Exec exec = Exec::Par);

// Closed-form least squares for A in
// C_NR(M) = 1/mu_H - n^(-1/2) + A (n^(-2/M) - 1/n).
double fit_A(const CostScan& scan);

// The fitted model curve at a given M (for plotting / CSV).
double model_cnr(double m, std::int64_t n, double a);

std::vector<double> default_m_grid();  // 1.0, 1.1, ..., 4.0

}  // namespace ampbound
