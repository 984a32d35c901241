#include "ampbound/amplifier.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "ampbound/errors.hpp"
#include "ampbound/histogram.hpp"
#include "ampbound/rng.hpp"

namespace ampbound {

std::string to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::Within: return "within";
        case BoundVerdict::AtBound: return "at_bound";
        default: return "exceeds";
    }
}

std::string AmplificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["n_train"] = n_train;
    j["n_generated"] = n_generated;
    j["gain"] = gain;
    j["m_eff"] = m_eff;
    j["verdict"] = to_string(verdict);
    j["m0"] = m0;
    if (resolution_delta > 0.0) j["resolution_delta"] = resolution_delta;
    return j.dump(2);
}

Sample gencopy(const Sample& training, std::int64_t gain, double h_nats,
               std::uint64_t seed, Exec exec) {
    if (gain < 1) throw DomainError("gencopy requires gain >= 1");
    const std::int64_t n = static_cast<std::int64_t>(training.n());
    if (n < 2) throw DomainError("gencopy requires a training sample of >= 2 points");

    const double delta = bin_width(h_nats, n, 2.0);
    const auto [mn_it, mx_it] =
        std::minmax_element(training.values.begin(), training.values.end());
    const double x_start = *mn_it;
    const double span = *mx_it - x_start;
    std::int64_t n_bins = static_cast<std::int64_t>(std::ceil(span / delta));
    if (n_bins < 1) n_bins = 1;

    std::vector<std::int32_t> bin(training.n());
    parallel_for(training.n(), exec, [&](std::size_t i) {
        auto b = static_cast<std::int64_t>(std::floor((training.values[i] - x_start) / delta));
        bin[i] = static_cast<std::int32_t>(std::clamp<std::int64_t>(b, 0, n_bins - 1));
    });

    Sample out;
    out.values.resize(static_cast<std::size_t>(gain * n));
    out.provenance = Provenance::Generated;
    out.seed_lineage = training.seed_lineage;
    out.seed_lineage.push_back(seed);

    const CounterRng base(seed);
    for (std::int64_t c = 0; c < gain; ++c) {
        const CounterRng rng = base.stream(static_cast<std::uint64_t>(c));
        double* dst = out.values.data() + c * n;
        parallel_for(training.n(), exec, [&](std::size_t i) {
            dst[i] = x_start + (bin[i] + rng.uniform(i)) * delta;
        });
    }
    return out;
}

double m_eff(std::int64_t n_train, std::int64_t n_gen) {
    if (n_train < 2) throw DomainError("m_eff requires n_train >= 2");
    if (n_gen < n_train) throw DomainError("m_eff requires n_gen >= n_train");
    return 2.0 * std::log(static_cast<double>(n_gen)) /
           std::log(static_cast<double>(n_train));
}

std::int64_t max_gain(std::int64_t n_train, double m_cap, double m0) {
    if (!(m_cap >= m0) || !(m0 >= 2.0))
        throw DomainError("max_gain requires m_cap >= m0 >= 2");
    return std::llround(std::pow(static_cast<double>(n_train), m_cap / m0 - 1.0));
}

double chain_m_eff(double m_pre, double m_after) {
    if (!(m_pre >= 2.0) || !(m_after >= m_pre))
        throw DomainError("chain_m_eff requires 2 <= m_pre <= m_after");
    return 2.0 * m_after / m_pre;
}

double chain_bound(double m_pre) {
    if (!(m_pre >= 2.0)) throw DomainError("chain_bound requires m_pre >= 2");
    return 6.0 / m_pre;
}

AmplificationReport audit(std::int64_t n_train, std::int64_t n_gen, double h_nats,
                          bool have_h) {
    if (n_train < 2 || n_gen < 2) throw DomainError("audit requires counts >= 2");
    AmplificationReport r;
    r.n_train = n_train;
    r.n_generated = n_gen;
    r.gain = static_cast<double>(n_gen) / static_cast<double>(n_train);
    r.m_eff = 2.0 * std::log(static_cast<double>(n_gen)) /
              std::log(static_cast<double>(n_train));
    r.m0 = 2.0;
    if (std::fabs(r.m_eff - 3.0) <= 0.005)
        r.verdict = BoundVerdict::AtBound;
    else
        r.verdict = r.m_eff < 3.0 ? BoundVerdict::Within : BoundVerdict::Exceeds;
    if (have_h)
        r.resolution_delta = std::exp(h_nats) / std::sqrt(static_cast<double>(n_train));
    return r;
}

}  // namespace ampbound
