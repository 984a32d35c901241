#pragma once

namespace ampbound {

// Digamma psi(x), |error| < 1e-12 for x > 0.
double digamma(double x);

// Trigamma psi_1(x), |error| < 1e-12 for x > 0.
double trigamma(double x);

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace ampbound
