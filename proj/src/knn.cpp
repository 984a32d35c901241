#include "ampbound/knn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ampbound/errors.hpp"
#include "ampbound/special.hpp"

namespace ampbound {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sum_logs(const std::vector<double>& d) {
    long double acc = 0.0L;
    for (double v : d) acc += std::log(v);
    return static_cast<double>(acc);
}

void require_positive(const std::vector<double>& d, const char* what) {
    for (double v : d)
        if (!(v > 0.0)) throw EstimationError(std::string(what) + ": zero neighbour distance after tie jitter");
}

}  // namespace

std::vector<double> kth_neighbor_distances(const std::vector<double>& sorted, int k,
                                           Exec exec) {
    const std::int64_t n = static_cast<std::int64_t>(sorted.size());
    if (k < 1) throw DomainError("kth_neighbor_distances requires k >= 1");
    if (n <= k) throw DomainError("kth_neighbor_distances requires n > k");
    std::vector<double> out(sorted.size());
    const double* x = sorted.data();
    parallel_for(sorted.size(), exec, [&](std::size_t ui) {
        const std::int64_t i = static_cast<std::int64_t>(ui);
        std::int64_t lo = i, hi = i;
        double d = 0.0;
        for (int step = 0; step < k; ++step) {
            const double dl = lo > 0 ? x[i] - x[lo - 1] : kInf;
            const double dr = hi < n - 1 ? x[hi + 1] - x[i] : kInf;
            if (dl <= dr) {
                d = dl;
                --lo;
            } else {
                d = dr;
                ++hi;
            }
        }
        out[ui] = d;
    });
    return out;
}

std::vector<double> cross_kth_distances(const std::vector<double>& from,
                                        const std::vector<double>& to, int k, Exec exec) {
    const std::int64_t m = static_cast<std::int64_t>(to.size());
    if (k < 1) throw DomainError("cross_kth_distances requires k >= 1");
    if (m < k) throw DomainError("cross_kth_distances requires |to| >= k");
    std::vector<double> out(from.size());
    const double* y = to.data();
    parallel_for(from.size(), exec, [&](std::size_t ui) {
        const double xi = from[ui];
        std::int64_t j = std::lower_bound(y, y + m, xi) - y;
        std::int64_t lo = j, hi = j - 1;  // empty window [lo, hi]
        double d = 0.0;
        for (int step = 0; step < k; ++step) {
            const double dl = lo > 0 ? xi - y[lo - 1] : kInf;
            const double dr = hi < m - 1 ? y[hi + 1] - xi : kInf;
            if (dl <= dr) {
                d = dl;
                --lo;
            } else {
                d = dr;
                ++hi;
            }
        }
        out[ui] = d;
    });
    return out;
}

std::vector<double> sorted_with_tie_jitter(const std::vector<double>& values, Exec exec) {
    if (values.empty()) throw EmptyInputError("sorted_with_tie_jitter: empty sample");
    std::vector<double> v = values;
    parallel_sort(v, exec);
    const double range = v.back() - v.front();
    bool has_tie = false;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) {
            has_tie = true;
            break;
        }
    if (!has_tie) return v;
    if (!(range > 0.0))
        throw EstimationError("sorted_with_tie_jitter: all values identical");
    const double eps = 1e-12 * range;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i + 1;
        while (j < v.size() && v[j] == v[i]) ++j;
        const std::size_t run = j - i;
        if (run > 1) {
            const double centre = 0.5 * static_cast<double>(run - 1);
            for (std::size_t r = 0; r < run; ++r)
                v[i + r] += (static_cast<double>(r) - centre) * eps;
        }
        i = j;
    }
    parallel_sort(v, exec);  // jitter can reorder against close non-ties
    return v;
}

double knn_entropy(const std::vector<double>& values, int k, Exec exec) {
    const std::int64_t n = static_cast<std::int64_t>(values.size());
    if (k < 1 || n <= k) throw DomainError("knn_entropy requires n > k >= 1");
    const std::vector<double> xs = sorted_with_tie_jitter(values, exec);
    std::vector<double> rho = kth_neighbor_distances(xs, k, exec);
    require_positive(rho, "knn_entropy");
    for (double& d : rho) d *= 2.0;
    return digamma(static_cast<double>(n)) - digamma(static_cast<double>(k)) +
           sum_logs(rho) / static_cast<double>(n);
}

double knn_entropy(const Sample& sample, int k, Exec exec) {
    return knn_entropy(sample.values, k, exec);
}

double knn_kld(const std::vector<double>& p, const std::vector<double>& q, int k,
               Exec exec) {
    const std::int64_t n = static_cast<std::int64_t>(p.size());
    const std::int64_t m = static_cast<std::int64_t>(q.size());
    if (k < 1 || n <= k) throw DomainError("knn_kld requires |p| > k >= 1");
    if (m < k) throw DomainError("knn_kld requires |q| >= k");
    const std::vector<double> xp = sorted_with_tie_jitter(p, exec);
    const std::vector<double> xq = sorted_with_tie_jitter(q, exec);
    const std::vector<double> rho = kth_neighbor_distances(xp, k, exec);
    const std::vector<double> nu = cross_kth_distances(xp, xq, k, exec);
    require_positive(rho, "knn_kld");
    require_positive(nu, "knn_kld");
    long double acc = 0.0L;
    for (std::size_t i = 0; i < xp.size(); ++i) acc += std::log(nu[i] / rho[i]);
    return static_cast<double>(acc) / static_cast<double>(n) +
           std::log(static_cast<double>(m) / static_cast<double>(n - 1));
}

double knn_kld(const Sample& p, const Sample& q, int k, Exec exec) {
    return knn_kld(p.values, q.values, k, exec);
}

double entropy_variance_bracket(double var_log_p, int k) {
    return var_log_p + trigamma(static_cast<double>(k));
}

double kld_variance(std::int64_t n, int n_iter, double rho, double var_log_p, int k) {
    if (n < 2 || n_iter < 1) throw DomainError("kld_variance requires n >= 2, n_iter >= 1");
    if (!(std::fabs(rho) <= 1.0)) throw DomainError("kld_variance requires |rho| <= 1");
    const double v_h = entropy_variance_bracket(var_log_p, k);
    return (3.0 * v_h / n_iter + 0.5 * (1.0 + rho * rho)) / static_cast<double>(n);
}

double kld_scan_variance(std::int64_t n_compared, std::int64_t n_train, int n_iter,
                         double rho, double var_log_p, int k) {
    if (n_compared < 2 || n_train < 2 || n_iter < 1)
        throw DomainError("kld_scan_variance requires n >= 2, n_iter >= 1");
    const double v_h = entropy_variance_bracket(var_log_p, k);
    return 3.0 * v_h / (n_iter * static_cast<double>(n_compared)) +
           0.5 * (1.0 + rho * rho) / static_cast<double>(n_train);
}

KldEstimate averaged_kld(const SampleGenerator& p_gen, const SampleGenerator& q_gen,
                         int k, int n_iter, KldDirection direction,
                         const KldVarianceModel& model, Exec exec) {
    if (n_iter < 1) throw DomainError("averaged_kld requires n_iter >= 1");
    long double acc = 0.0L;
    int ok = 0, failed = 0;
    std::int64_t n_points = 0;
    std::string last_error;
    for (int it = 0; it < n_iter; ++it) {
        try {
            const std::vector<double> p = p_gen(it);
            const std::vector<double> q = q_gen(it);
            n_points = static_cast<std::int64_t>(p.size());
            double v = 0.0;
            switch (direction) {
                case KldDirection::PvsQ: v = knn_kld(p, q, k, exec); break;
                case KldDirection::QvsP: v = knn_kld(q, p, k, exec); break;
                case KldDirection::Symmetrized:
                    v = 0.5 * (knn_kld(p, q, k, exec) + knn_kld(q, p, k, exec));
                    break;
            }
            acc += v;
            ++ok;
        } catch (const EstimationError& e) {
            ++failed;
            last_error = e.what();
        }
    }
    if (failed * 5 > n_iter)
        throw EstimationError("averaged_kld: " + std::to_string(failed) + "/" +
                              std::to_string(n_iter) + " iterations failed (" + last_error + ")");
    KldEstimate est;
    est.value_nats = static_cast<double>(acc) / ok;
    est.k = k;
    est.n = n_points;
    est.n_iterations = ok;
    est.direction = direction;
    const std::int64_t n_train = model.n_train > 0 ? model.n_train : n_points;
    est.predicted_sd_nats =
        std::sqrt(kld_scan_variance(n_points, n_train, ok, model.rho, model.var_log_p, k));
    return est;
}

}  // namespace ampbound
