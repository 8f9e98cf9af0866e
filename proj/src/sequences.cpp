#include "snlab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::bounded: return "bounded";
        case Verdict::log_divergent: return "log-divergent";
        case Verdict::power_divergent: return "power-divergent";
    }
    return "?";
}

GrowthProfile lp_partial_profile(const CoefficientSequence& c, double p,
                                 const std::vector<long long>& checkpoints) {
    if (!(p > 0.0)) throw std::domain_error("lp_partial_profile: p must be positive");
    if (checkpoints.empty())
        throw std::domain_error("lp_partial_profile: no checkpoints");
    long long prev = 0;
    for (long long n : checkpoints) {
        if (n <= prev)
            throw std::domain_error("lp_partial_profile: checkpoints must be strictly increasing");
        if (n > static_cast<long long>(c.size()))
            throw std::domain_error("lp_partial_profile: checkpoint beyond sequence length");
        prev = n;
    }
    std::vector<double> terms(c.size());
    for (size_t i = 0; i < c.size(); ++i) terms[i] = std::pow(std::abs(c[i]), p);

    GrowthProfile g;
    g.p = p;
    g.checkpoints = checkpoints;
    g.sums.reserve(checkpoints.size());
    std::vector<double> prefix;
    for (long long n : checkpoints) {
        // Descending-magnitude summation limits cancellation on heavy tails.
        prefix.assign(terms.begin(), terms.begin() + n);
        std::sort(prefix.begin(), prefix.end(), std::greater<>());
        double s = 0.0;
        for (double t : prefix) s += t;
        g.sums.push_back(s);
    }
    return g;
}

SlopeFit growth_exponent_fit(const GrowthProfile& g) {
    const size_t m = g.checkpoints.size();
    if (m < 3) throw std::domain_error("growth_exponent_fit: need >= 3 checkpoints");
    for (double s : g.sums)
        if (!(s > 0.0))
            throw std::domain_error("growth_exponent_fit: sums must be positive");
    double xbar = 0.0, ybar = 0.0;
    std::vector<double> x(m), y(m);
    for (size_t i = 0; i < m; ++i) {
        x[i] = std::log(static_cast<double>(g.checkpoints[i]));
        y[i] = std::log(g.sums[i]);
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= double(m);
    ybar /= double(m);
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < m; ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    const double icept = ybar - fit.slope * xbar;
    double rss = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double e = y[i] - (icept + fit.slope * x[i]);
        rss += e * e;
    }
    fit.residual = std::sqrt(rss / double(m));
    return fit;
}

Verdict membership_verdict(const GrowthProfile& g, const VerdictThresholds& th) {
    const SlopeFit fit = growth_exponent_fit(g);
    if (fit.slope < th.bounded_slope) return Verdict::bounded;
    const double ratio = g.sums.back() / g.sums.front();
    if (fit.slope < th.power_slope && ratio < th.log_ratio_cap)
        return Verdict::log_divergent;
    return Verdict::power_divergent;
}

std::vector<long long> dyadic_checkpoints(long long n) {
    std::vector<long long> cps;
    for (long long c = 2; c <= n; c *= 2) cps.push_back(c);
    return cps;
}

}  // namespace snlab
