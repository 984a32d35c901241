#include "ampbound/renyi.hpp"

#include <algorithm>
#include <cmath>

#include "ampbound/errors.hpp"

namespace ampbound {
namespace {

bool occupied_counts_flat(const Histogram& hist, std::int64_t& occupied) {
    occupied = 0;
    std::int64_t first = -1;
    bool flat = true;
    for (auto c : hist.counts) {
        if (c <= 0) continue;
        if (first < 0) first = c;
        flat = flat && (c == first);
        ++occupied;
    }
    return flat;
}

}  // namespace

double discrete_renyi(const Histogram& hist, double q) {
    if (!(q >= 0.0)) throw DomainError("discrete_renyi requires q >= 0");
    if (hist.n_total < 1) throw DomainError("discrete_renyi requires a filled histogram");
    std::int64_t occupied = 0;
    if (occupied_counts_flat(hist, occupied))
        return std::log(static_cast<double>(std::max<std::int64_t>(occupied, 1)));
    if (q == 1.0) return shannon_entropy(hist);
    if (q == 0.0) return std::log(static_cast<double>(occupied));

    const long double n = static_cast<long double>(hist.n_total);
    long double sum = 0.0L;
    for (auto c : hist.counts) {
        if (c <= 0) continue;
        sum += std::pow(static_cast<long double>(c) / n, static_cast<long double>(q));
    }
    return static_cast<double>(std::log(sum) / (1.0L - static_cast<long double>(q)));
}

RenyiSpectrum renyi_spectrum(const Histogram& hist, const std::vector<double>& orders) {
    RenyiSpectrum s;
    s.orders = orders;
    s.delta = hist.delta;
    s.discrete_values.reserve(orders.size());
    for (double q : orders) s.discrete_values.push_back(discrete_renyi(hist, q));
    return s;
}

double weighted_entries_per_bin(const Histogram& hist) {
    if (hist.n_total < 1) throw DomainError("weighted_entries_per_bin requires n_total >= 1");
    const long double n = static_cast<long double>(hist.n_total);
    long double sum = 0.0L;
    for (auto c : hist.counts) {
        if (c <= 0) continue;
        const long double p = static_cast<long double>(c) / n;
        sum += p * static_cast<long double>(c);
    }
    return static_cast<double>(sum);
}

FEstimate estimate_F(const Histogram& hist, std::int64_t n, double m) {
    if (!(m >= 1.0)) throw DomainError("estimate_F requires m >= 1");
    const double r2 = discrete_renyi(hist, 2.0);
    const double h_b = shannon_entropy(hist);
    FEstimate f;
    f.f_mu = std::pow(static_cast<double>(n), 1.0 / m) * std::exp(-r2);
    f.f_e = std::exp(h_b - r2);
    return f;
}

}  // namespace ampbound
