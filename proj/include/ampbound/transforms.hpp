#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "ampbound/parallel.hpp"
#include "ampbound/sample.hpp"

namespace ampbound {

// Monotone power transforms used to normalise difficult pdfs before
// amplification. box_cox requires strictly positive inputs.
struct TransformSpec {
    enum class Family { BoxCox, YeoJohnson, Log, Identity };
    Family family = Family::Identity;
    double lambda = 0.0;

    static TransformSpec box_cox(double lambda);
    static TransformSpec yeo_johnson(double lambda);
    static TransformSpec log();
    static TransformSpec identity();

    // Grammar: boxcox:<lambda> | yeojohnson:<lambda> | log | identity
    static TransformSpec parse(const std::string& spec);
    std::string to_spec() const;
};

double transform_forward(const TransformSpec& spec, double x);
double transform_inverse(const TransformSpec& spec, double y);

Sample forward(const TransformSpec& spec, const Sample& sample, Exec exec = Exec::Par);
Sample inverse(const TransformSpec& spec, const Sample& sample, Exec exec = Exec::Par);

// map -> gencopy -> unmap. h_transformed is the differential entropy of the
// transformed variable; pass NaN to estimate it with knn_entropy (k = 4).
Sample mapped_amplify(const Sample& training, const TransformSpec& spec,
                      std::int64_t gain, std::uint64_t seed,
                      double h_transformed = std::numeric_limits<double>::quiet_NaN(),
                      Exec exec = Exec::Par);

// Profile-likelihood lambda search for box_cox (golden section on [-2, 2],
// maximising normality of the transformed sample).
double box_cox_lambda_search(const Sample& sample, double lo = -2.0, double hi = 2.0);

}  // namespace ampbound
