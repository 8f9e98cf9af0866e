#include "snlab/carleman.hpp"

#include <cmath>
#include <stdexcept>

#include "snlab/linalg.hpp"

namespace snlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

CoefficientSequence carleman_coefficients(int n, double beta) {
    if (n < 8 || !is_pow2(n))
        throw std::domain_error("carleman_coefficients: n must be a power of two >= 8");
    if (!(beta > 1.0))
        throw std::domain_error("carleman_coefficients: beta must exceed 1 (sup-norm control fails otherwise)");
    CoefficientSequence c(n);
    for (int j = 0; j < n; ++j) {
        const double x = double(j) + 2.0;
        const double modulus = std::pow(x, -0.5) * std::pow(std::log(x), -beta);
        c[j] = modulus;
    }
    // Quadratic Gauss-sum phase per dyadic block [2^k, 2^{k+1}).
    for (int block = 1; block < n; block *= 2) {
        const int hi = std::min(2 * block, n);
        for (int j = block; j < hi; ++j) {
            const double off = double(j - block);
            const double arg = kPi * off * off / double(block);
            c[j] *= std::polar(1.0, arg);
        }
    }
    return c;
}

std::vector<cx> synthesize(const CoefficientSequence& c, int oversample) {
    if (c.empty()) throw std::invalid_argument("synthesize: empty coefficients");
    if (oversample < 1) throw std::domain_error("synthesize: oversample must be >= 1");
    std::vector<cx> padded(c.size() * static_cast<size_t>(oversample));
    std::copy(c.begin(), c.end(), padded.begin());
    return dft(padded, /*inverse=*/true);
}

double sup_norm_estimate(const std::vector<cx>& samples) {
    if (samples.empty()) throw std::invalid_argument("sup_norm_estimate: empty samples");
    double best = 0.0;
    for (const cx& z : samples) best = std::max(best, std::abs(z));
    return best;
}

CarlemanSymbol make_carleman_symbol(int n, double beta, int oversample) {
    CarlemanSymbol s;
    s.n = n;
    s.beta = beta;
    s.oversample = oversample;
    s.coefficients = carleman_coefficients(n, beta);
    s.grid_samples = synthesize(s.coefficients, oversample);
    return s;
}

}  // namespace snlab
