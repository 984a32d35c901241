#include "ampbound/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ampbound/errors.hpp"

namespace ampbound {
namespace {

double power(double base, double e) { return std::pow(base, e); }

// Cost of binning `values` at the width nearest delta_target that tiles
// [min, max] with complete bins.
struct SnappedCost {
    double cost;
    double delta;
};

SnappedCost snapped_cost(const std::vector<double>& values, double lo, double hi,
                         double delta_target, Exec exec) {
    const double span = hi - lo;
    std::int64_t nb = std::llround(span / delta_target);
    nb = std::max<std::int64_t>(nb, 2);
    const double delta = span / static_cast<double>(nb);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(nb), 0);
#ifdef _OPENMP
    if (exec == Exec::Par && values.size() > 1u << 15) {
        const int threads = hardware_threads();
        std::vector<std::vector<std::int64_t>> local(threads);
#pragma omp parallel num_threads(threads)
        {
            auto& mine = local[omp_get_thread_num()];
            mine.assign(counts.size(), 0);
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(values.size()); ++i) {
                auto b = static_cast<std::int64_t>((values[i] - lo) / delta);
                ++mine[static_cast<std::size_t>(std::clamp<std::int64_t>(b, 0, nb - 1))];
            }
        }
        for (const auto& l : local)
            if (!l.empty())
                for (std::size_t b = 0; b < counts.size(); ++b) counts[b] += l[b];
    } else
#endif
    {
        (void)exec;
        for (double x : values) {
            auto b = static_cast<std::int64_t>((x - lo) / delta);
            ++counts[static_cast<std::size_t>(std::clamp<std::int64_t>(b, 0, nb - 1))];
        }
    }

    long double mean = 0.0L;
    for (auto c : counts) mean += c;
    mean /= static_cast<long double>(nb);
    long double var = 0.0L;
    for (auto c : counts) {
        const long double d = static_cast<long double>(c) - mean;
        var += d * d;
    }
    var /= static_cast<long double>(nb);
    const double cost = static_cast<double>((2.0L * mean - var)) / (delta * delta);
    return {cost, delta};
}

}  // namespace

double raw_cost(const Histogram& hist) {
    if (hist.n_bins() < 2) throw DomainError("raw_cost requires at least 2 bins");
    const long double nb = static_cast<long double>(hist.n_bins());
    long double mean = 0.0L;
    for (auto c : hist.counts) mean += c;
    mean /= nb;
    long double var = 0.0L;
    for (auto c : hist.counts) {
        const long double d = static_cast<long double>(c) - mean;
        var += d * d;
    }
    var /= nb;
    return static_cast<double>(2.0L * mean - var) / (hist.delta * hist.delta);
}

std::vector<double> default_m_grid() {
    std::vector<double> g;
    for (int i = 10; i <= 40; ++i) g.push_back(i / 10.0);
    return g;
}

CostScan cost_scan(const std::vector<double>& values, double h_nats,
                   const std::vector<double>& m_grid, Exec exec) {
    if (values.empty()) throw EmptyInputError("cost_scan: empty sample");
    if (m_grid.empty()) throw DomainError("cost_scan: empty grid");
    for (std::size_t i = 0; i < m_grid.size(); ++i) {
        if (m_grid[i] < 1.0 - 1e-12 || m_grid[i] > 4.0 + 1e-12)
            throw DomainError("cost_scan: grid must lie within [1,4]");
        if (i > 0 && (m_grid[i] <= m_grid[i - 1] || m_grid[i] - m_grid[i - 1] > 0.1 + 1e-9))
            throw DomainError("cost_scan: grid must ascend with step <= 0.1");
    }
    const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *mn_it, hi = *mx_it;
    if (!(hi > lo)) throw DomainError("cost_scan: degenerate sample range");

    CostScan scan;
    scan.m_grid = m_grid;
    scan.n = static_cast<std::int64_t>(values.size());
    scan.h_used = h_nats;
    const double nd = static_cast<double>(scan.n);

    auto at_m = [&](double m) {
        return snapped_cost(values, lo, hi, std::exp(h_nats) * power(nd, -1.0 / m), exec);
    };
    scan.cost_m1 = at_m(1.0).cost;
    scan.cost_m2 = at_m(2.0).cost;
    const double denom = scan.cost_m1 - scan.cost_m2;
    scan.degenerate_normalization =
        !(std::fabs(denom) > 1e-12 * std::max(std::fabs(scan.cost_m1), 1.0));

    scan.delta.reserve(m_grid.size());
    scan.raw_cost.reserve(m_grid.size());
    scan.normalized_cost.reserve(m_grid.size());
    for (double m : m_grid) {
        const SnappedCost c = at_m(m);
        scan.delta.push_back(c.delta);
        scan.raw_cost.push_back(c.cost);
        scan.normalized_cost.push_back(scan.degenerate_normalization
                                           ? std::numeric_limits<double>::quiet_NaN()
                                           : (c.cost - scan.cost_m2) / denom);
    }
    return scan;
}

double model_cnr(double m, std::int64_t n, double a) {
    const double nd = static_cast<double>(n);
    return power(nd, 1.0 / m - 1.0) - power(nd, -0.5) + a * (power(nd, -2.0 / m) - 1.0 / nd);
}

double fit_A(const CostScan& scan) {
    if (scan.m_grid.size() < 10 || scan.m_grid.front() > 1.0 + 1e-9 ||
        scan.m_grid.back() < 4.0 - 1e-9)
        throw DomainError("fit_A requires >= 10 grid points spanning [1,4]");
    if (scan.degenerate_normalization)
        throw FitError("fit_A: degenerate cost normalization");
    const double nd = static_cast<double>(scan.n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < scan.m_grid.size(); ++i) {
        const double m = scan.m_grid[i];
        const double r = power(nd, -2.0 / m) - 1.0 / nd;
        const double b = power(nd, 1.0 / m - 1.0) - power(nd, -0.5);
        num += r * (scan.normalized_cost[i] - b);
        den += r * r;
    }
    if (!(den > 1e-300)) throw FitError("fit_A: singular design");
    return num / den;
}

}  // namespace ampbound
