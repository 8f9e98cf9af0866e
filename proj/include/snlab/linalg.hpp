#pragma once

#include "snlab/types.hpp"

namespace snlab {

Matrix adjoint(const Matrix& m);

// C = A * B; result tags are (B.domain -> A.codomain).
Matrix matmul(const Matrix& a, const Matrix& b);

// diag(w) as a map from `from`-tagged space to `to`-tagged space.
Matrix diag_matrix(const std::vector<double>& w, Norm from, Norm to);

double hs_norm(const Matrix& m);

// All singular values (Euclidean geometry, norm tags ignored), nonincreasing.
// One-sided Jacobi, relative accuracy 1e-10.
SingularSpectrum svd(const Matrix& m);

// Full decomposition m = U diag(sigma) V^H (thin: U is rows x k, V is cols x k,
// k = min(rows, cols)). Columns for zero singular values are zero.
struct SvdResult {
    Matrix u;
    std::vector<double> sigma;
    Matrix v;
};
SvdResult svd_full(const Matrix& m);

// (sum mu_n^p)^{1/p}; p = +infinity means the largest singular value.
double schatten_norm(const Matrix& m, double p);

struct OpNorm {
    double value = 0.0;
    bool exact = true;  // false when the value is only an upper bound
};

// Operator norm of m between the given sequence geometries.
// Supported pairs: linf->linf, l1->linf, l1->l2, l2->l2, linf->l2, l1->l1,
// and the adjoint pairs l2->linf, l2->l1 needed on the codomain side of
// Hilbert factorizations. (linf->l2) and (l2->l1) are exact by sign
// enumeration for small real matrices and upper bounds otherwise.
OpNorm operator_norm(const Matrix& m, Norm from, Norm to);

// Bracket flag min(||m||_HS, sqrt(cols) * ||m||_{2->2}) used as the lower end
// of the Pietsch search for linf->l2 maps. Not an operator-norm bound.
double linf_l2_bound(const Matrix& m);

// trace(m^k), m square, k >= 1.
cx trace_power(const Matrix& m, int k);

// forward: c_hat_k = (1/N) sum_t c_t e^{-2 pi i k t / N}
// inverse: c_t = sum_k c_hat_k e^{+2 pi i k t / N}
std::vector<cx> dft(const std::vector<cx>& c, bool inverse);

// Smallest eigenvalue of a Hermitian matrix with a witness eigenvector,
// computed by Jacobi on the shifted positive form.
struct MinEig {
    double value = 0.0;
    std::vector<cx> vector;
};
MinEig min_eig_hermitian(const Matrix& g);

}  // namespace snlab
