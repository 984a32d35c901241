#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ampbound/parallel.hpp"
#include "ampbound/sample.hpp"

namespace ampbound {

// Fixed-width binned view of a sample. Bins are right-open
// [x_start + i*delta, x_start + (i+1)*delta); the sample maximum is clamped
// into the top bin. A trailing partial bin (range not an integer multiple of
// delta) is kept and flagged.
struct Histogram {
    double x_start = 0.0;
    double delta = 1.0;
    std::vector<std::int64_t> counts;
    std::int64_t n_total = 0;
    bool trailing_partial = false;

    std::size_t n_bins() const { return counts.size(); }
    std::int64_t max_count() const;
    std::int64_t occupied_bins() const;
};

// Entropy-exact bin width: delta = exp(h) * n^(-1/m).
double bin_width(double h_nats, std::int64_t n, double m);

// Mean entries per bin for an m-binned histogram: mu_H = n^(1-1/m).
double mu_entries_per_bin(std::int64_t n, double m);

Histogram build_histogram(const std::vector<double>& values, double delta,
                          double x_start, Exec exec = Exec::Par);
Histogram build_histogram(const Sample& sample, double delta, Exec exec = Exec::Par);

// Plug-in Shannon entropy H_B = -sum (n_i/N) ln(n_i/N), nats. Empty bins
// contribute zero.
double shannon_entropy(const Histogram& hist);

// M_B = ln(n) / H_B.
double m_from_entropy(std::int64_t n, double h_b_nats);

// Max-bin shortcut: H_X(bits) = log2(n/n_max) + 1 (the +1 dropped for a
// uniform histogram); M_X = log2(n) / H_X.
double m_from_max_bin(std::int64_t n, std::int64_t n_max, bool uniform_pdf = false);

// CSV with columns (bin_index, left_edge, count); a leading comment line
// carries x_start, delta and n_total.
void write_histogram_csv(std::ostream& os, const Histogram& hist);

}  // namespace ampbound
