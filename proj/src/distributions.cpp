#include "ampbound/distributions.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

#include "ampbound/errors.hpp"
#include "ampbound/quadrature.hpp"
#include "ampbound/rng.hpp"
#include "ampbound/special.hpp"

namespace ampbound {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kLnTwoPi = 1.8378770664093454835606594728112;
constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kEulerGamma = 0.57721566490153286060651209008240;
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110;

double sq(double x) { return x * x; }

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Simulated: return "simulated";
        case Provenance::Generated: return "generated";
        default: return "ingested";
    }
}

DistributionModel DistributionModel::uniform(double a, double b) {
    if (!(a < b)) throw ParameterError("uniform(a,b) requires a < b");
    return {Kind::Uniform, a, b};
}
DistributionModel DistributionModel::normal(double mu, double sigma) {
    if (!(sigma > 0.0)) throw ParameterError("normal(mu,sigma) requires sigma > 0");
    return {Kind::Normal, mu, sigma};
}
DistributionModel DistributionModel::lognormal(double mu, double sigma) {
    if (!(sigma > 0.0)) throw ParameterError("lognormal(mu,sigma) requires sigma > 0");
    return {Kind::LogNormal, mu, sigma};
}
DistributionModel DistributionModel::moyal() { return {Kind::Moyal, 0.0, 0.0}; }
DistributionModel DistributionModel::exponential(double rate) {
    if (!(rate > 0.0)) throw ParameterError("exponential(rate) requires rate > 0");
    return {Kind::Exponential, rate, 0.0};
}

double DistributionModel::pdf(double x) const {
    switch (kind_) {
        case Kind::Uniform:
            return (x >= p1_ && x < p2_) ? 1.0 / (p2_ - p1_) : 0.0;
        case Kind::Normal:
            return std::exp(-0.5 * sq((x - p1_) / p2_)) / (p2_ * kSqrtTwoPi);
        case Kind::LogNormal:
            if (x <= 0.0) return 0.0;
            return std::exp(-0.5 * sq((std::log(x) - p1_) / p2_)) / (x * p2_ * kSqrtTwoPi);
        case Kind::Moyal:
            return std::exp(-0.5 * (x + std::exp(-x))) / kSqrtTwoPi;
        case Kind::Exponential:
            return x >= 0.0 ? p1_ * std::exp(-p1_ * x) : 0.0;
    }
    return 0.0;
}

double DistributionModel::pdf_derivative(double x) const {
    switch (kind_) {
        case Kind::Uniform:
            return 0.0;
        case Kind::Normal:
            return -pdf(x) * (x - p1_) / sq(p2_);
        case Kind::LogNormal: {
            if (x <= 0.0) return 0.0;
            return -pdf(x) * (1.0 + (std::log(x) - p1_) / sq(p2_)) / x;
        }
        case Kind::Moyal:
            return -0.5 * (1.0 - std::exp(-x)) * pdf(x);
        case Kind::Exponential:
            return x >= 0.0 ? -p1_ * p1_ * std::exp(-p1_ * x) : 0.0;
    }
    return 0.0;
}

double DistributionModel::cdf(double x) const {
    switch (kind_) {
        case Kind::Uniform:
            if (x <= p1_) return 0.0;
            if (x >= p2_) return 1.0;
            return (x - p1_) / (p2_ - p1_);
        case Kind::Normal:
            return normal_cdf((x - p1_) / p2_);
        case Kind::LogNormal:
            return x <= 0.0 ? 0.0 : normal_cdf((std::log(x) - p1_) / p2_);
        case Kind::Moyal:
            return std::erfc(std::exp(-0.5 * x) * 0.7071067811865475244);
        case Kind::Exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-p1_ * x);
    }
    return 0.0;
}

std::pair<double, double> DistributionModel::support() const {
    switch (kind_) {
        case Kind::Uniform: return {p1_, p2_};
        case Kind::Normal: return {p1_ - 9.0 * p2_, p1_ + 9.0 * p2_};
        case Kind::LogNormal:
            return {std::exp(p1_ - 9.0 * p2_), std::exp(p1_ + 9.0 * p2_)};
        case Kind::Moyal: return {-6.0, 80.0};
        case Kind::Exponential: return {0.0, 40.0 / p1_};
    }
    return {0.0, 1.0};
}

double DistributionModel::differential_entropy() const {
    switch (kind_) {
        case Kind::Uniform: return std::log(p2_ - p1_);
        case Kind::Normal: return 0.5 * std::log(kTwoPi * M_E * sq(p2_));
        case Kind::LogNormal: return p1_ + 0.5 * std::log(kTwoPi * M_E * sq(p2_));
        case Kind::Exponential: return 1.0 - std::log(p1_);
        case Kind::Moyal: {
            const auto [lo, hi] = support();
            return integrate(
                [this](double x) {
                    const double p = pdf(x);
                    return p > 0.0 ? -p * std::log(p) : 0.0;
                },
                lo, hi, 1e-11);
        }
    }
    return 0.0;
}

double DistributionModel::renyi_differential(double q) const {
    if (!(q >= 0.0)) throw DomainError("renyi_differential requires q >= 0");
    if (q == 1.0) return differential_entropy();
    if (kind_ == Kind::Uniform) return std::log(p2_ - p1_);
    if (q == 0.0) throw DivergenceError("r_0 diverges on unbounded support");
    switch (kind_) {
        case Kind::Normal:
            return std::log(p2_ * kSqrtTwoPi) - std::log(q) / (2.0 * (1.0 - q));
        case Kind::LogNormal:
            return std::log(p2_ * kSqrtTwoPi) + p1_ - std::log(q) / (2.0 * (1.0 - q)) +
                   (1.0 - q) * sq(p2_) / (2.0 * q);
        case Kind::Exponential:
            return -std::log(p1_) - std::log(q) / (1.0 - q);
        case Kind::Moyal: {
            const auto [lo, hi] = support();
            const double integral = integrate(
                [this, q](double x) { return std::pow(pdf(x), q); }, lo, hi, 1e-11);
            if (!(integral > 0.0) || !std::isfinite(integral))
                throw DivergenceError("divergent Renyi integral");
            return std::log(integral) / (1.0 - q);
        }
        default: return 0.0;
    }
}

double DistributionModel::shape_F() const {
    return std::exp(differential_entropy() - renyi_differential(2.0));
}

double DistributionModel::song_S() const {
    switch (kind_) {
        case Kind::Uniform: return 0.0;
        case Kind::Normal: return 0.5;
        case Kind::LogNormal: return 0.5 + sq(p2_);
        case Kind::Exponential: return 1.0;
        case Kind::Moyal: {
            const auto [lo, hi] = support();
            const double h = differential_entropy();
            const double m2 = integrate(
                [this](double x) {
                    const double p = pdf(x);
                    return p > 0.0 ? p * sq(std::log(p)) : 0.0;
                },
                lo, hi, 1e-11);
            return m2 - sq(h);
        }
    }
    return 0.0;
}

PhiCurvature DistributionModel::autocorr_second_derivative() const {
    switch (kind_) {
        case Kind::Uniform:
        case Kind::Exponential:
            // pdf jump at the support edge: phi has a cusp at tau = 0.
            return {true, 0.0};
        case Kind::Normal:
            return {false, -1.0 / (4.0 * std::sqrt(M_PI) * sq(p2_) * p2_)};
        default: {
            const auto [lo, hi] = support();
            const double v = integrate(
                [this](double x) { return sq(pdf_derivative(x)); }, lo, hi, 1e-11);
            return {false, -v};
        }
    }
}

double DistributionModel::theoretical_A() const {
    if (kind_ == Kind::Uniform) return 0.0;
    const PhiCurvature c = autocorr_second_derivative();
    if (c.cusp) throw DomainError("theoretical_A undefined for a cusp autocorrelation");
    return -c.value * std::exp(3.0 * differential_entropy()) / 12.0;
}

double DistributionModel::mean() const {
    switch (kind_) {
        case Kind::Uniform: return 0.5 * (p1_ + p2_);
        case Kind::Normal: return p1_;
        case Kind::LogNormal: return std::exp(p1_ + 0.5 * sq(p2_));
        case Kind::Moyal: return kEulerGamma + kLn2;
        case Kind::Exponential: return 1.0 / p1_;
    }
    return 0.0;
}

Sample DistributionModel::sample(std::size_t n, std::uint64_t seed, Exec exec) const {
    if (n < 1) throw DomainError("sample requires n >= 1");
    Sample s;
    s.values.resize(n);
    s.provenance = Provenance::Simulated;
    s.seed_lineage = {seed};
    const CounterRng rng(seed);
    double* out = s.values.data();
    switch (kind_) {
        case Kind::Uniform: {
            const double a = p1_, w = p2_ - p1_;
            parallel_for(n, exec, [&](std::size_t i) { out[i] = a + w * rng.uniform(i); });
            break;
        }
        case Kind::Normal: {
            const double mu = p1_, sg = p2_;
            parallel_for(n, exec, [&](std::size_t i) { out[i] = mu + sg * rng.normal(i); });
            break;
        }
        case Kind::LogNormal: {
            const double mu = p1_, sg = p2_;
            parallel_for(n, exec,
                         [&](std::size_t i) { out[i] = std::exp(mu + sg * rng.normal(i)); });
            break;
        }
        case Kind::Moyal: {
            parallel_for(n, exec, [&](std::size_t i) {
                double z = std::fabs(rng.normal(i));
                if (z == 0.0) z = 0x1.0p-40;
                out[i] = -2.0 * std::log(z);
            });
            break;
        }
        case Kind::Exponential: {
            const double rate = p1_;
            parallel_for(n, exec, [&](std::size_t i) {
                out[i] = -std::log(rng.uniform_open(i)) / rate;
            });
            break;
        }
    }
    return s;
}

DistributionModel DistributionModel::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
    auto args = [&](const std::string& name, int count) {
        std::vector<double> v;
        const auto open = s.find('(');
        if (open == std::string::npos || s.back() != ')')
            throw ParseError("model '" + spec + "': expected " + name + "(...)");
        std::string body = s.substr(open + 1, s.size() - open - 2);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("model '" + spec + "': bad number '" + tok + "'");
            }
        }
        if (static_cast<int>(v.size()) != count)
            throw ParseError("model '" + spec + "': " + name + " takes " +
                             std::to_string(count) + " parameter(s)");
        return v;
    };
    if (s.rfind("normal(", 0) == 0) {
        auto v = args("normal", 2);
        return normal(v[0], v[1]);
    }
    if (s.rfind("lognormal(", 0) == 0) {
        auto v = args("lognormal", 2);
        return lognormal(v[0], v[1]);
    }
    if (s.rfind("uniform(", 0) == 0) {
        auto v = args("uniform", 2);
        return uniform(v[0], v[1]);
    }
    if (s == "moyal") return moyal();
    if (s.rfind("exponential(", 0) == 0) {
        auto v = args("exponential", 1);
        return exponential(v[0]);
    }
    throw ParseError("unknown model spec '" + spec + "'");
}

std::string DistributionModel::to_spec() const {
    std::ostringstream o;
    o.precision(12);
    switch (kind_) {
        case Kind::Uniform: o << "uniform(" << p1_ << "," << p2_ << ")"; break;
        case Kind::Normal: o << "normal(" << p1_ << "," << p2_ << ")"; break;
        case Kind::LogNormal: o << "lognormal(" << p1_ << "," << p2_ << ")"; break;
        case Kind::Moyal: o << "moyal"; break;
        case Kind::Exponential: o << "exponential(" << p1_ << ")"; break;
    }
    return o.str();
}

}  // namespace ampbound
