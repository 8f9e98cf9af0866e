#include "snlab/operators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace snlab {

double vector_norm(const std::vector<cx>& v, Norm n) {
    double acc = 0.0;
    switch (n) {
        case Norm::linf:
            for (const cx& z : v) acc = std::max(acc, std::abs(z));
            return acc;
        case Norm::l1:
            for (const cx& z : v) acc += std::abs(z);
            return acc;
        case Norm::l2:
            for (const cx& z : v) acc += std::norm(z);
            return std::sqrt(acc);
    }
    throw std::invalid_argument("bad norm tag");
}

NuclearRep make_rep(std::vector<NuclearTerm> terms, double s, Norm domain,
                    Norm codomain) {
    if (!(s > 0.0) || s > 1.0)
        throw std::domain_error("nuclear representation: s must lie in (0, 1]");
    NuclearRep rep;
    rep.s = s;
    rep.domain = domain;
    rep.codomain = codomain;
    size_t cols = 0, rows = 0;
    for (auto& t : terms) {
        for (const cx& z : t.functional)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("nuclear representation: non-finite functional");
        for (const cx& z : t.vec)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("nuclear representation: non-finite vector");
        if (t.functional.empty() || t.vec.empty())
            throw std::invalid_argument("nuclear representation: empty term");
        if (cols == 0) {
            cols = t.functional.size();
            rows = t.vec.size();
        } else if (t.functional.size() != cols || t.vec.size() != rows) {
            throw std::invalid_argument("nuclear representation: inconsistent term dimensions");
        }
        // zero terms carry no mass and are dropped
        if (vector_norm(t.functional, dual(domain)) == 0.0 ||
            vector_norm(t.vec, codomain) == 0.0)
            continue;
        rep.terms.push_back(std::move(t));
    }
    if (rep.terms.empty())
        throw std::invalid_argument("nuclear representation: all terms are zero");
    return rep;
}

double nu_s_from_rep(const NuclearRep& rep) {
    if (!(rep.s > 0.0) || rep.s > 1.0)
        throw std::domain_error("nu_s_from_rep: s must lie in (0, 1]");
    const Norm fn = dual(rep.domain);
    double acc = 0.0;
    for (const auto& t : rep.terms) {
        const double prod =
            vector_norm(t.functional, fn) * vector_norm(t.vec, rep.codomain);
        acc += std::pow(prod, rep.s);
    }
    return std::pow(acc, 1.0 / rep.s);
}

double nu_s_hilbert_exact(const Matrix& m, double s) {
    if (m.domain != Norm::l2 || m.codomain != Norm::l2)
        throw std::domain_error("nu_s_hilbert_exact: both norm tags must be l2");
    if (!(s > 0.0) || s > 1.0)
        throw std::domain_error("nu_s_hilbert_exact: s must lie in (0, 1]");
    return schatten_norm(m, s);
}

MarkedOperator marked_from_rep(const NuclearRep& rep) {
    const int cols = static_cast<int>(rep.terms.front().functional.size());
    const int rows = static_cast<int>(rep.terms.front().vec.size());
    Matrix m = Matrix::zero(rows, cols, rep.domain, rep.codomain);
    for (const auto& t : rep.terms)
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) += t.vec[i] * t.functional[j];
    return {std::move(m), rep, nu_s_from_rep(rep)};
}

MarkedOperator circulant_operator(const std::vector<cx>& symbol_samples) {
    const int n = static_cast<int>(symbol_samples.size());
    if (n < 1) throw std::invalid_argument("circulant_operator: empty symbol");
    std::vector<NuclearTerm> terms;
    terms.reserve(n);
    for (int t = 0; t < n; ++t) {
        NuclearTerm term;
        term.functional.assign(n, cx{});
        term.functional[t] = 1.0;  // point evaluation at t
        term.vec.resize(n);
        for (int s = 0; s < n; ++s)
            term.vec[s] = symbol_samples[((s - t) % n + n) % n] / double(n);
        terms.push_back(std::move(term));
    }
    return marked_from_rep(make_rep(std::move(terms), 1.0, Norm::linf, Norm::linf));
}

MarkedOperator random_nuclear(int rows, int cols, double s, double target_nu,
                              int term_count, std::uint64_t seed, Norm domain,
                              Norm codomain, bool real_entries) {
    if (rows < 1 || cols < 1 || term_count < 1)
        throw std::domain_error("random_nuclear: bad dimensions");
    if (!(target_nu > 0.0))
        throw std::domain_error("random_nuclear: target_nu must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&](int len, Norm norm_tag) {
        std::vector<cx> v(len);
        double nn = 0.0;
        while (nn == 0.0) {
            for (cx& z : v) {
                const double re = gauss(rng);
                const double im = real_entries ? 0.0 : gauss(rng);
                z = cx{re, im};
            }
            nn = vector_norm(v, norm_tag);
        }
        for (cx& z : v) z /= nn;
        return v;
    };
    std::vector<NuclearTerm> terms;
    terms.reserve(term_count);
    for (int k = 0; k < term_count; ++k) {
        NuclearTerm t;
        t.functional = draw(cols, dual(domain));
        t.vec = draw(rows, codomain);
        terms.push_back(std::move(t));
    }
    NuclearRep rep = make_rep(std::move(terms), s, domain, codomain);
    const double nu = nu_s_from_rep(rep);
    const double scale = target_nu / nu;
    for (auto& t : rep.terms)
        for (cx& z : t.vec) z *= scale;
    return marked_from_rep(rep);
}

CanonicalChain canonical_factorization(const MarkedOperator& op) {
    const NuclearRep& rep = op.rep;
    if (rep.terms.empty())
        throw std::domain_error("canonical_factorization: empty representation");
    const int m = static_cast<int>(rep.terms.size());
    const int cols = op.matrix.cols;
    const int rows = op.matrix.rows;
    const Norm fn = dual(rep.domain);

    CanonicalChain chain{
        Matrix::zero(m, cols, rep.domain, Norm::linf),
        std::vector<double>(m),
        Matrix::zero(rows, m, Norm::l1, rep.codomain),
    };
    for (int k = 0; k < m; ++k) {
        const auto& t = rep.terms[k];
        const double fx = vector_norm(t.functional, fn);
        const double fy = vector_norm(t.vec, rep.codomain);
        chain.d[k] = fx * fy;
        for (int j = 0; j < cols; ++j) chain.a.at(k, j) = t.functional[j] / fx;
        for (int i = 0; i < rows; ++i) chain.b.at(i, k) = t.vec[i] / fy;
    }
    return chain;
}

}  // namespace snlab
