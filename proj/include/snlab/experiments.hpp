#pragma once

#include "snlab/factorization.hpp"
#include "snlab/sequences.hpp"

namespace snlab {

// Eigenvalues of T*T for T the circulant convolution by the sampled symbol:
// exactly the squares of the forward dft coefficients, sorted by modulus.
EigenSpectrum square_eigen_sequence(const std::vector<cx>& symbol_samples);

struct RotationReport {
    std::vector<double> rel_errors;  // one per k = 1..k_max
    bool pass = false;
};

// trace((BUA)^k) vs trace((UAB)^k) for k = 1..k_max.
RotationReport rotation_trace_check(const Matrix& a, const Matrix& u,
                                    const Matrix& b, int k_max);

struct Pi2Result {
    double value = 0.0;
    bool certified = false;     // a feasible weight was found at `value`
    std::vector<double> mu;     // probability weight of the domination
    double lower = 0.0;         // search bracket, lower end
    double upper = 0.0;         // search bracket (||A||_HS)
};

// Pietsch-style upper estimate for A with linf domain and l2 codomain:
// smallest c found with A^H A <= c^2 diag(mu) for a probability weight mu,
// searched by multiplicative-weight updates with bisection on c. The result
// is kept inside [linf_l2_bound(A), ||A||_HS].
Pi2Result pi2_upper_bound(const Matrix& a);

struct SweepRow {
    int n = 0;
    double beta = 0.0;
    double exponent = 0.0;  // p of the profile
    double partial_sum = 0.0;
    double slope = 0.0;
    Verdict verdict = Verdict::bounded;
    double sup_norm = 0.0;
    double inferred_r_lower = 0.0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::uint64_t seed = 0;
    VerdictThresholds thresholds;
    std::string timestamp;
    bool degenerate = false;  // every tested profile was bounded
};

// For each N: Carleman symbol, spectrum of TT, l_s profiles with verdicts,
// sup norm, and the inferred lower bound r >= (1/s_hat - 1/2)^{-1} where
// s_hat is the smallest tested s whose profile is bounded.
SweepReport sharpness_sweep(const std::vector<int>& n_list, double beta,
                            const std::vector<double>& s_list,
                            std::uint64_t seed);

}  // namespace snlab
