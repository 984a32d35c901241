#include "ampbound/special.hpp"

#include <cmath>

#include "ampbound/errors.hpp"

namespace ampbound {

// Recurrence shift to x >= 8, then the Bernoulli asymptotic series.
double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma requires x > 0");
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    double s = std::log(x) - 0.5 * inv;
    s -= inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132))));
    return acc + s;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma requires x > 0");
    double acc = 0.0;
    while (x < 8.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    double s = inv * (1.0 + 0.5 * inv);
    s += inv * inv2 * (1.0 / 6 - inv2 * (1.0 / 30 - inv2 * (1.0 / 42 - inv2 / 30)));
    return acc + s;
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z * 0.7071067811865475244);
}

}  // namespace ampbound
