#pragma once

namespace snlab {

// Verdict thresholds for growth-profile classification. Defaults separate
// harmonic-type log divergence from N^{1/4} power divergence at desk scale
// (N <= 2^16); they are heuristics and are always reported next to the raw
// fitted slopes.
struct VerdictThresholds {
    double bounded_slope = 0.02;   // slope below this -> bounded
    double power_slope = 0.1;      // slope at or above this -> power-divergent
    double log_ratio_cap = 5.0;    // S(N_max)/S(N_min) cap for log-divergent
};

// All tolerance constants live here.
struct Config {
    double svd_off_threshold = 1e-13;   // Jacobi off-diagonal convergence
    double svd_relative = 1e-10;        // promised relative accuracy of svd
    double dft_roundtrip = 1e-12;
    double reconstruction_rel = 1e-8;   // ||BUA - T||_HS / ||T||_HS
    double gamma_slack = 1e-9;          // gamma <= nu_product * (1 + slack)
    double trace_rel = 1e-9;
    double exponent_exact = 1e-14;
    double chain_norm_slack = 1e-12;    // ||A|| <= 1 + slack in canonical chains
    double pi2_bisect_rel = 1e-6;
    int pi2_mwu_iterations = 200;
    int sign_enum_max_cols = 14;        // exact (linf->l2) enumeration cutoff
    VerdictThresholds verdict;
};

const Config& config();

}  // namespace snlab
