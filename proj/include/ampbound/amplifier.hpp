#pragma once

#include <cstdint>
#include <string>

#include "ampbound/parallel.hpp"
#include "ampbound/sample.hpp"

namespace ampbound {

enum class BoundVerdict { Within, AtBound, Exceeds };

std::string to_string(BoundVerdict v);

struct AmplificationReport {
    std::int64_t n_train = 0;
    std::int64_t n_generated = 0;
    double gain = 1.0;  // n_generated / n_train
    double m_eff = 2.0;
    BoundVerdict verdict = BoundVerdict::Within;
    double m0 = 2.0;
    double resolution_delta = 0.0;  // exp(h)/sqrt(n_train); 0 when h unknown
    std::string to_json() const;
};

// GenCopy: bin the training sample at the M = 2 width from the entropy rule,
// then emit `gain` randomised copies,每 point replaced by
// x_start + (bin + rnd) * delta. Per-bin counts of the output are exactly
// gain times the input's, which is also the algorithm's documented error
// inflation (bin error G sqrt(N) instead of sqrt(GN)).
Sample gencopy(const Sample& training, std::int64_t gain, double h_nats,
               std::uint64_t seed, Exec exec = Exec::Par);

// M_eff = 2 ln(n_gen) / ln(n_train); base independent.
double m_eff(std::int64_t n_train, std::int64_t n_gen);

// Largest integer gain keeping M_eff at m_cap: round(n^(m_cap/m0 - 1)).
std::int64_t max_gain(std::int64_t n_train, double m_cap = 3.0, double m0 = 2.0);

// Chained amplification: M_eff = 2 m_after / m_pre.
double chain_m_eff(double m_pre, double m_after);

// Bound for data pre-amplified at m_pre: 6 / m_pre.
double chain_bound(double m_pre);

// Verdict against M_eff <= 3 with a 0.005 float-comparison guard. Pass h to
// report the training resolution exp(h)/sqrt(n_train).
AmplificationReport audit(std::int64_t n_train, std::int64_t n_gen, double h_nats = 0.0,
                          bool have_h = false);

}  // namespace ampbound
