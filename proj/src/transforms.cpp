#include "ampbound/transforms.hpp"

#include <cmath>
#include <sstream>

#include "ampbound/amplifier.hpp"
#include "ampbound/errors.hpp"
#include "ampbound/knn.hpp"

namespace ampbound {

TransformSpec TransformSpec::box_cox(double lambda) {
    return {Family::BoxCox, lambda};
}
TransformSpec TransformSpec::yeo_johnson(double lambda) {
    return {Family::YeoJohnson, lambda};
}
TransformSpec TransformSpec::log() { return {Family::Log, 0.0}; }
TransformSpec TransformSpec::identity() { return {Family::Identity, 0.0}; }

TransformSpec TransformSpec::parse(const std::string& spec) {
    if (spec == "log") return log();
    if (spec == "identity") return identity();
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string name = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        double lambda = 0.0;
        try {
            std::size_t used = 0;
            lambda = std::stod(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw ParseError("transform '" + spec + "': bad lambda '" + arg + "'");
        }
        if (name == "boxcox") return box_cox(lambda);
        if (name == "yeojohnson") return yeo_johnson(lambda);
    }
    throw ParseError("unknown transform spec '" + spec + "'");
}

std::string TransformSpec::to_spec() const {
    std::ostringstream o;
    o.precision(12);
    switch (family) {
        case Family::BoxCox: o << "boxcox:" << lambda; break;
        case Family::YeoJohnson: o << "yeojohnson:" << lambda; break;
        case Family::Log: o << "log"; break;
        case Family::Identity: o << "identity"; break;
    }
    return o.str();
}

double transform_forward(const TransformSpec& spec, double x) {
    const double l = spec.lambda;
    switch (spec.family) {
        case TransformSpec::Family::Identity:
            return x;
        case TransformSpec::Family::Log:
            return std::log(x);
        case TransformSpec::Family::BoxCox:
            return l == 0.0 ? std::log(x) : (std::pow(x, l) - 1.0) / l;
        case TransformSpec::Family::YeoJohnson:
            if (x >= 0.0)
                return l == 0.0 ? std::log1p(x) : (std::pow(x + 1.0, l) - 1.0) / l;
            return l == 2.0 ? -std::log1p(-x)
                            : -(std::pow(1.0 - x, 2.0 - l) - 1.0) / (2.0 - l);
    }
    return x;
}

double transform_inverse(const TransformSpec& spec, double y) {
    const double l = spec.lambda;
    switch (spec.family) {
        case TransformSpec::Family::Identity:
            return y;
        case TransformSpec::Family::Log:
            return std::exp(y);
        case TransformSpec::Family::BoxCox:
            return l == 0.0 ? std::exp(y) : std::pow(1.0 + l * y, 1.0 / l);
        case TransformSpec::Family::YeoJohnson:
            if (y >= 0.0)
                return l == 0.0 ? std::expm1(y) : std::pow(1.0 + l * y, 1.0 / l) - 1.0;
            return l == 2.0 ? -std::expm1(-y)
                            : 1.0 - std::pow(1.0 - (2.0 - l) * y, 1.0 / (2.0 - l));
    }
    return y;
}

namespace {

void check_domain(const TransformSpec& spec, const Sample& sample) {
    const bool needs_positive = spec.family == TransformSpec::Family::BoxCox ||
                                spec.family == TransformSpec::Family::Log;
    if (!needs_positive) return;
    std::string bad;
    int shown = 0;
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
        if (sample.values[i] > 0.0) continue;
        if (shown < 8) {
            bad += (shown ? "," : "") + std::to_string(i);
            ++shown;
        }
    }
    if (shown)
        throw DomainError("box_cox/log transform requires positive inputs; offending indices: " + bad);
}

}  // namespace

Sample forward(const TransformSpec& spec, const Sample& sample, Exec exec) {
    check_domain(spec, sample);
    Sample out = sample;
    parallel_for(out.values.size(), exec, [&](std::size_t i) {
        out.values[i] = transform_forward(spec, sample.values[i]);
    });
    return out;
}

Sample inverse(const TransformSpec& spec, const Sample& sample, Exec exec) {
    Sample out = sample;
    parallel_for(out.values.size(), exec, [&](std::size_t i) {
        out.values[i] = transform_inverse(spec, sample.values[i]);
    });
    return out;
}

Sample mapped_amplify(const Sample& training, const TransformSpec& spec,
                      std::int64_t gain, std::uint64_t seed, double h_transformed,
                      Exec exec) {
    const Sample mapped = forward(spec, training, exec);
    const double h = std::isfinite(h_transformed) ? h_transformed
                                                  : knn_entropy(mapped, 4, exec);
    const Sample amplified = gencopy(mapped, gain, h, seed, exec);
    return inverse(spec, amplified, exec);
}

double box_cox_lambda_search(const Sample& sample, double lo, double hi) {
    if (sample.values.empty()) throw EmptyInputError("box_cox_lambda_search: empty sample");
    for (double x : sample.values)
        if (!(x > 0.0)) throw DomainError("box_cox_lambda_search requires positive inputs");
    const double n = static_cast<double>(sample.n());
    double sum_log = 0.0;
    for (double x : sample.values) sum_log += std::log(x);

    auto loglik = [&](double l) {
        const TransformSpec s = TransformSpec::box_cox(l);
        double mean = 0.0;
        std::vector<double> y(sample.n());
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] = transform_forward(s, sample.values[i]);
            mean += y[i];
        }
        mean /= n;
        double var = 0.0;
        for (double v : y) var += (v - mean) * (v - mean);
        var /= n;
        return -0.5 * n * std::log(std::max(var, 1e-300)) + (l - 1.0) * sum_log;
    };

    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = loglik(c), fd = loglik(d);
    for (int it = 0; it < 120 && b - a > 1e-7; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = loglik(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = loglik(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace ampbound
