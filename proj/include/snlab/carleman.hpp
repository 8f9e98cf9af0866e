#pragma once

#include "snlab/types.hpp"

namespace snlab {

// Truncated Carleman-type symbol: coefficient moduli (n+2)^{-1/2} ln(n+2)^{-beta}
// (square-summable but p-divergent for every p < 2) with quadratic Gauss-sum
// phases per dyadic block, which keep the sup norm of the synthesized function
// uniformly bounded for beta > 1.
struct CarlemanSymbol {
    int n = 0;            // truncation length, power of two
    double beta = 1.5;
    int oversample = 4;
    CoefficientSequence coefficients;  // length n
    std::vector<cx> grid_samples;      // length oversample * n
};

// Moduli per the profile above; phase of index j in dyadic block [2^k, 2^{k+1})
// is exp(i pi (j - 2^k)^2 / 2^k), phase of j = 0 is 0.
// n must be a power of two >= 8; beta must exceed 1.
CoefficientSequence carleman_coefficients(int n, double beta);

// f(t_j) = sum_n c_n e^{2 pi i n t_j / M} on M = oversample * len(c) points.
std::vector<cx> synthesize(const CoefficientSequence& c, int oversample);

// Max modulus over the oversampled grid.
double sup_norm_estimate(const std::vector<cx>& samples);

CarlemanSymbol make_carleman_symbol(int n, double beta, int oversample = 4);

}  // namespace snlab
