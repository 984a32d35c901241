#include "ampbound/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ampbound/errors.hpp"

namespace ampbound {

std::int64_t Histogram::max_count() const {
    std::int64_t m = 0;
    for (auto c : counts) m = std::max(m, c);
    return m;
}

std::int64_t Histogram::occupied_bins() const {
    std::int64_t k = 0;
    for (auto c : counts) k += (c > 0);
    return k;
}

double bin_width(double h_nats, std::int64_t n, double m) {
    if (n < 2) throw DomainError("bin_width requires n >= 2");
    if (!(m >= 1.0)) throw DomainError("bin_width requires m >= 1");
    return std::exp(h_nats) * std::pow(static_cast<double>(n), -1.0 / m);
}

double mu_entries_per_bin(std::int64_t n, double m) {
    if (n < 1) throw DomainError("mu_entries_per_bin requires n >= 1");
    if (!(m >= 1.0)) throw DomainError("mu_entries_per_bin requires m >= 1");
    return std::pow(static_cast<double>(n), 1.0 - 1.0 / m);
}

Histogram build_histogram(const std::vector<double>& values, double delta,
                          double x_start, Exec exec) {
    if (values.empty()) throw EmptyInputError("build_histogram: empty sample");
    if (!(delta > 0.0)) throw DomainError("build_histogram requires delta > 0");
    const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
    if (x_start > *mn_it) throw DomainError("build_histogram: x_start above sample minimum");

    const double span = *mx_it - x_start;
    const double ratio = span / delta;
    std::size_t n_bins = static_cast<std::size_t>(std::ceil(ratio));
    if (n_bins == 0) n_bins = 1;  // all values at x_start

    Histogram h;
    h.x_start = x_start;
    h.delta = delta;
    h.n_total = static_cast<std::int64_t>(values.size());
    h.trailing_partial = std::fabs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio);
    h.counts.assign(n_bins, 0);

    const std::int64_t top = static_cast<std::int64_t>(n_bins) - 1;
    auto bin_of = [&](double x) {
        std::int64_t i = static_cast<std::int64_t>(std::floor((x - x_start) / delta));
        return std::clamp<std::int64_t>(i, 0, top);
    };

#ifdef _OPENMP
    if (exec == Exec::Par && values.size() > 1u << 15) {
        const int threads = hardware_threads();
        std::vector<std::vector<std::int64_t>> local(threads);
#pragma omp parallel num_threads(threads)
        {
            auto& mine = local[omp_get_thread_num()];
            mine.assign(n_bins, 0);
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(values.size()); ++i)
                ++mine[static_cast<std::size_t>(bin_of(values[i]))];
        }
        for (const auto& l : local)
            if (!l.empty())
                for (std::size_t b = 0; b < n_bins; ++b) h.counts[b] += l[b];
        return h;
    }
#else
    (void)exec;
#endif
    for (double x : values) ++h.counts[static_cast<std::size_t>(bin_of(x))];
    return h;
}

Histogram build_histogram(const Sample& sample, double delta, Exec exec) {
    if (sample.values.empty()) throw EmptyInputError("build_histogram: empty sample");
    const double x_start = *std::min_element(sample.values.begin(), sample.values.end());
    return build_histogram(sample.values, delta, x_start, exec);
}

double shannon_entropy(const Histogram& hist) {
    if (hist.n_total < 1) throw DomainError("shannon_entropy requires n_total >= 1");
    const long double n = static_cast<long double>(hist.n_total);
    long double acc = 0.0L;
    std::int64_t occupied = 0;
    for (auto c : hist.counts) {
        if (c <= 0) continue;
        ++occupied;
        const long double p = static_cast<long double>(c) / n;
        acc -= p * std::log(p);
    }
    // H is bounded by ln(occupied bins); guard the flat case against
    // accumulation rounding so the Renyi ordering holds exactly.
    const double cap = std::log(static_cast<double>(std::max<std::int64_t>(occupied, 1)));
    return std::min(static_cast<double>(acc), cap);
}

double m_from_entropy(std::int64_t n, double h_b_nats) {
    if (!(h_b_nats > 0.0)) throw DomainError("m_from_entropy requires H_B > 0");
    return std::log(static_cast<double>(n)) / h_b_nats;
}

double m_from_max_bin(std::int64_t n, std::int64_t n_max, bool uniform_pdf) {
    if (n_max < 1 || n_max > n) throw DomainError("m_from_max_bin requires 1 <= n_max <= n");
    const double h_bits =
        std::log2(static_cast<double>(n) / static_cast<double>(n_max)) + (uniform_pdf ? 0.0 : 1.0);
    if (!(h_bits > 0.0)) throw DomainError("m_from_max_bin: H_X must be positive");
    return std::log2(static_cast<double>(n)) / h_bits;
}

void write_histogram_csv(std::ostream& os, const Histogram& hist) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "# x_start=%.17g delta=%.17g n_total=%lld%s\n",
                  hist.x_start, hist.delta, static_cast<long long>(hist.n_total),
                  hist.trailing_partial ? " trailing_partial=1" : "");
    os << buf << "bin_index,left_edge,count\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%lld\n", i,
                      hist.x_start + static_cast<double>(i) * hist.delta,
                      static_cast<long long>(hist.counts[i]));
        os << buf;
    }
}

}  // namespace ampbound
