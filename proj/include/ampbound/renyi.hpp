#pragma once

#include <vector>

#include "ampbound/histogram.hpp"

namespace ampbound {

struct RenyiSpectrum {
    std::vector<double> orders;
    std::vector<double> discrete_values;  // R_q per order
    double delta = 0.0;                   // bin width of the histogram used
};

// Discrete Renyi entropy R_q = ln(sum p_i^q)/(1-q) over occupied bins,
// p_i = n_i/N. q = 1 is the Shannon limit, q = 0 counts occupied bins.
double discrete_renyi(const Histogram& hist, double q);

RenyiSpectrum renyi_spectrum(const Histogram& hist, const std::vector<double>& orders);

// mu'_H = sum p_i n_i = N sum p_i^2 = N exp(-R_2), the weighted entries/bin.
double weighted_entries_per_bin(const Histogram& hist);

// Data-side estimates of F: F_mu = n^(1/m) exp(-R_2), F_E = exp(H_B - R_2).
struct FEstimate {
    double f_mu = 0.0;
    double f_e = 0.0;
};
FEstimate estimate_F(const Histogram& hist, std::int64_t n, double m);

}  // namespace ampbound
