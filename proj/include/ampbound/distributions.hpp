#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ampbound/parallel.hpp"
#include "ampbound/sample.hpp"

namespace ampbound {

// phi''(0) of the pdf autocorrelation, or the cusp case (pdf with a jump,
// phi'(0) != 0) as a typed result so callers branch explicitly.
struct PhiCurvature {
    bool cusp = false;
    double value = 0.0;  // meaningful only when !cusp
};

// Closed-form 1-D probability model. All entropic quantities are in nats.
class DistributionModel {
  public:
    enum class Kind { Uniform, Normal, LogNormal, Moyal, Exponential };

    static DistributionModel uniform(double a, double b);
    static DistributionModel normal(double mu, double sigma);
    static DistributionModel lognormal(double mu, double sigma);
    static DistributionModel moyal();
    static DistributionModel exponential(double rate);

    Kind kind() const { return kind_; }
    double param1() const { return p1_; }
    double param2() const { return p2_; }

    double pdf(double x) const;
    double pdf_derivative(double x) const;
    double cdf(double x) const;

    // Interval outside which the pdf is below ~1e-16; used to truncate
    // quadrature per the 1e-10 absolute tolerance regime.
    std::pair<double, double> support() const;

    // Differential entropy h. Analytic except Moyal (adaptive quadrature).
    double differential_entropy() const;

    // Continuous Renyi entropy r_q, q >= 0; q = 1 is the Shannon limit.
    double renyi_differential(double q) const;

    // Shape constants from the Renyi spectrum.
    double shape_F() const;  // exp(r1 - r2)
    double song_S() const;   // Var(log p(X)), the tabulated (positive) convention

    PhiCurvature autocorr_second_derivative() const;

    // A = -(1/12) phi''(0) exp(3h); 0 for the uniform (cusp) case.
    double theoretical_A() const;

    double mean() const;

    Sample sample(std::size_t n, std::uint64_t seed, Exec exec = Exec::Par) const;

    // Grammar: normal(mu,sigma) | lognormal(mu,sigma) | uniform(a,b) |
    //          moyal | exponential(rate)
    static DistributionModel parse(const std::string& spec);
    std::string to_spec() const;

  private:
    DistributionModel(Kind k, double p1, double p2) : kind_(k), p1_(p1), p2_(p2) {}
    Kind kind_;
    double p1_, p2_;
};

}  // namespace ampbound
