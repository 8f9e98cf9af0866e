#pragma once

#include <cstdint>

#include "snlab/linalg.hpp"
#include "snlab/types.hpp"

namespace snlab {

double vector_norm(const std::vector<cx>& v, Norm n);

// One term <x', .> y of a nuclear representation. The functional is paired
// bilinearly: <x', x> = sum_j x'_j x_j. Functional norms are taken in the
// dual of the declared domain tag.
struct NuclearTerm {
    std::vector<cx> functional;  // length = domain dimension
    std::vector<cx> vec;         // length = codomain dimension
};

struct NuclearRep {
    std::vector<NuclearTerm> terms;
    double s = 1.0;  // in (0, 1]
    Norm domain = Norm::linf;
    Norm codomain = Norm::linf;
};

// Drops zero terms; validates finiteness, dimensions and s.
NuclearRep make_rep(std::vector<NuclearTerm> terms, double s, Norm domain,
                    Norm codomain);

// (sum ||x'_k||^s ||y_k||^s)^{1/s} -- an upper certificate for nu_s.
double nu_s_from_rep(const NuclearRep& rep);

// Exact nu_s in Hilbert geometry (both tags l2): equals the Schatten s-norm.
double nu_s_hilbert_exact(const Matrix& m, double s);

// Operator together with a finite s-nuclear representation and its
// certificate; matrix = sum y_k x'_k.
struct MarkedOperator {
    Matrix matrix;
    NuclearRep rep;
    double nu_bound = 0.0;
};

MarkedOperator marked_from_rep(const NuclearRep& rep);

// Convolution by the sampled symbol on the discretized circle, with the
// normalized counting measure: T[s][t] = (1/N) f((s - t) mod N), tags
// linf->linf. The representation pairs coordinate evaluations with shifted
// kernel columns, so nu_bound = max_j |f(t_j)| with s = 1.
MarkedOperator circulant_operator(const std::vector<cx>& symbol_samples);

// Seeded test-ensemble generator; the representation is rescaled so that
// nu_s_from_rep equals target_nu.
MarkedOperator random_nuclear(int rows, int cols, double s, double target_nu,
                              int term_count, std::uint64_t seed,
                              Norm domain = Norm::linf,
                              Norm codomain = Norm::linf,
                              bool real_entries = false);

// T = B diag(d) A with ||A: X -> linf|| <= 1, ||B: l1 -> Y|| <= 1 and
// ||d||_s = nu_bound.
struct CanonicalChain {
    Matrix a;               // m x cols, rows x'_k / ||x'_k||
    std::vector<double> d;  // ||x'_k|| * ||y_k||, all > 0
    Matrix b;               // rows x m, columns y_k / ||y_k||
};

CanonicalChain canonical_factorization(const MarkedOperator& op);

}  // namespace snlab
