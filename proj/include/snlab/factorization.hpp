#pragma once

#include <string>

#include "snlab/operators.hpp"

namespace snlab {

// The composite exponent 1/r = sum 1/s_k - (n+1)/2; r is +infinity when the
// right-hand side is not positive.
struct ExponentBudget {
    std::vector<double> s_list;
    int n = 0;
    double inv_r = 0.0;
    double r = 0.0;  // +infinity sentinel allowed
};

ExponentBudget compose_exponent(const std::vector<double>& s_list);

// One piece of the middle product with its Schatten exponent contribution.
struct PlanPiece {
    std::string label;
    double inv_exponent = 0.0;  // 1/p of the Schatten class the piece lives in
};

struct FactorizationCertificate {
    Matrix a;  // domain of T -> l2
    Matrix u;  // l2 -> l2
    Matrix b;  // l2 -> codomain of T
    ExponentBudget budget;
    double sigma_r_u = 0.0;  // operator norm when r = infinity
    OpNorm a_norm;
    OpNorm b_norm;
    double gamma_value = 0.0;  // ||A|| * sigma_r(U) * ||B||
    double nu_product = 0.0;   // product of the chain's nu certificates
    std::vector<PlanPiece> plan;
};

// Explicit factorization T_n...T_1 = B U A by diagonal splitting of the
// canonical chains: the boundary diagonals donate the power s/2 to A and B,
// each bridge A_{k+1} B_k is sandwiched between l2 halves of its neighboring
// diagonals (Hilbert-Schmidt), and the leftover d^{1-s} diagonals act on l2
// with exponent s/(1-s). The exponents telescope to 1/r and the peeled norms
// to prod nu_bound_k.
FactorizationCertificate factor_product(const std::vector<MarkedOperator>& chain);

struct VerificationReport {
    double residual = 0.0;  // ||BUA - T||_HS / ||T||_HS
    double sigma_r_u = 0.0;
    OpNorm a_norm;
    OpNorm b_norm;
    double gamma_value = 0.0;
    double nu_product = 0.0;
    bool reconstruction_ok = false;
    bool gamma_ok = false;
    bool pass = false;
};

VerificationReport verify_certificate(const FactorizationCertificate& cert,
                                      const Matrix& t);

struct HoelderReport {
    double r = 0.0;
    double lhs = 0.0;  // sigma_r(Mp Mq)
    double rhs = 0.0;  // sigma_p(Mp) sigma_q(Mq)
    bool ok = false;
};

// sigma_r(Mp Mq) <= sigma_p(Mp) sigma_q(Mq), 1/r = 1/p + 1/q.
HoelderReport schatten_hoelder_check(const Matrix& mp, double p,
                                     const Matrix& mq, double q);

}  // namespace snlab
