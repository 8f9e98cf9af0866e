#pragma once

#include "snlab/config.hpp"
#include "snlab/types.hpp"

namespace snlab {

// Partial-sum profile S(N_i) = sum_{n < N_i} |c_n|^p.
struct GrowthProfile {
    std::vector<long long> checkpoints;  // strictly increasing
    std::vector<double> sums;            // nondecreasing
    double p = 1.0;
};

enum class Verdict { bounded, log_divergent, power_divergent };
const char* to_string(Verdict v);

GrowthProfile lp_partial_profile(const CoefficientSequence& c, double p,
                                 const std::vector<long long>& checkpoints);

struct SlopeFit {
    double slope = 0.0;
    double residual = 0.0;  // rms of log-log fit residuals
};

// Least-squares slope of log S against log N. Needs >= 3 checkpoints.
SlopeFit growth_exponent_fit(const GrowthProfile& g);

Verdict membership_verdict(const GrowthProfile& g,
                           const VerdictThresholds& th = config().verdict);

// Dyadic checkpoints 2, 4, ..., n (n a power of two).
std::vector<long long> dyadic_checkpoints(long long n);

}  // namespace snlab
