#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ampbound/parallel.hpp"
#include "ampbound/sample.hpp"

namespace ampbound {

enum class KldDirection { PvsQ, QvsP, Symmetrized };

struct KldEstimate {
    double value_nats = 0.0;
    int k = 1;
    std::int64_t n = 0;  // points per compared sample
    int n_iterations = 1;
    double predicted_sd_nats = 0.0;
    KldDirection direction = KldDirection::PvsQ;
};

// --- neighbour-distance kernels (sorted input) -----------------------------

// Distance from each point to its k-th nearest neighbour within the same
// sorted sample, self excluded. OpenMP-parallel with a serial twin that is
// bit-identical.
std::vector<double> kth_neighbor_distances(const std::vector<double>& sorted, int k,
                                           Exec exec = Exec::Par);

// Distance from each point of `from` (sorted) to its k-th nearest neighbour
// in `to` (sorted).
std::vector<double> cross_kth_distances(const std::vector<double>& from,
                                        const std::vector<double>& to, int k,
                                        Exec exec = Exec::Par);

// Sort a copy and separate exact duplicates by a symmetric jitter of
// 1e-12 * range (amplified data carries near-duplicates; log of a zero
// neighbour distance is undefined). Throws EstimationError when the sample
// has zero range.
std::vector<double> sorted_with_tie_jitter(const std::vector<double>& values,
                                           Exec exec = Exec::Par);

// --- estimators -------------------------------------------------------------

// 1-D Kozachenko-Leonenko entropy: psi(n) - psi(k) + mean ln(2 rho_k), nats.
double knn_entropy(const std::vector<double>& values, int k, Exec exec = Exec::Par);
double knn_entropy(const Sample& sample, int k, Exec exec = Exec::Par);

// kNN Kullback-Leibler divergence D(P||Q) in nats:
// mean ln(nu_k / rho_k) + ln(m/(n-1)). May be slightly negative; not clamped.
double knn_kld(const std::vector<double>& p, const std::vector<double>& q, int k,
               Exec exec = Exec::Par);
double knn_kld(const Sample& p, const Sample& q, int k, Exec exec = Exec::Par);

// --- variance model ---------------------------------------------------------

// Entropy-estimator variance bracket: Var(ln p(x)) + psi_1(k).
double entropy_variance_bracket(double var_log_p, int k);

// Var(KLD) = (1/n) (3 v_h / n_iter + (1 + rho^2)/2), nats^2. With the
// default bracket (normal pdf, k = 1) this is (1/n)(6.44/n_iter + 1/2).
double kld_variance(std::int64_t n, int n_iter, double rho, double var_log_p = 0.5,
                    int k = 1);

// Scan form: the iteration-reducible term scales with the compared sample
// size while the resolution floor is set by the training sample, so the
// error tends to sqrt((1+rho^2)/(2 n_train)) as iterations accumulate.
double kld_scan_variance(std::int64_t n_compared, std::int64_t n_train, int n_iter,
                         double rho, double var_log_p = 0.5, int k = 1);

// --- iterated averaging -----------------------------------------------------

struct KldVarianceModel {
    double var_log_p = 0.5;    // Var(ln p) of the reference model
    std::int64_t n_train = 0;  // 0: use the compared sample size
    double rho = 0.0;
};

using SampleGenerator = std::function<std::vector<double>(int iteration)>;

// Mean of knn_kld over independently regenerated copy pairs. Tolerates up to
// 20% failed iterations; beyond that throws EstimationError.
KldEstimate averaged_kld(const SampleGenerator& p_gen, const SampleGenerator& q_gen,
                         int k, int n_iter,
                         KldDirection direction = KldDirection::PvsQ,
                         const KldVarianceModel& model = {}, Exec exec = Exec::Par);

}  // namespace ampbound
