#include "snlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "snlab/config.hpp"

namespace snlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double abs2(const cx& z) { return z.real() * z.real() + z.imag() * z.imag(); }

}  // namespace

Matrix adjoint(const Matrix& m) {
    Matrix r = Matrix::zero(m.cols, m.rows, dual(m.codomain), dual(m.domain));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = std::conj(m.at(i, j));
    return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::domain_error("matmul: shape mismatch");
    Matrix c = Matrix::zero(a.rows, b.cols, b.domain, a.codomain);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const cx aik = a.at(i, k);
            if (aik == cx{}) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

Matrix diag_matrix(const std::vector<double>& w, Norm from, Norm to) {
    const int n = static_cast<int>(w.size());
    Matrix m = Matrix::zero(n, n, from, to);
    for (int i = 0; i < n; ++i) m.at(i, i) = w[i];
    return m;
}

double hs_norm(const Matrix& m) {
    double s = 0.0;
    for (const cx& z : m.entries) s += abs2(z);
    return std::sqrt(s);
}

namespace {

// One-sided Jacobi on the columns of work (m x n, m >= n). Rotations are
// optionally accumulated into v (n x n). Columns of work converge to
// sigma_j * u_j.
void one_sided_jacobi(std::vector<std::vector<cx>>& work,
                      std::vector<std::vector<cx>>* v) {
    const int n = static_cast<int>(work.size());
    const double tol = config().svd_off_threshold;
    const int max_sweeps = 100;
    std::vector<double> colsq(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (const cx& z : work[j]) s += abs2(z);
        colsq[j] = s;
    }
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double a = colsq[i], b = colsq[j];
                if (a == 0.0 || b == 0.0) continue;
                cx g{};
                const auto& ci = work[i];
                const auto& cj = work[j];
                for (size_t k = 0; k < ci.size(); ++k)
                    g += std::conj(ci[k]) * cj[k];
                const double gm = std::abs(g);
                if (gm <= tol * std::sqrt(a * b)) continue;
                rotated = true;
                const cx phase_conj = std::conj(g) / gm;
                const double zeta = (b - a) / (2.0 * gm);
                const double t =
                    (zeta >= 0 ? 1.0 : -1.0) /
                    (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                auto rotate = [&](std::vector<cx>& x, std::vector<cx>& y) {
                    for (size_t k = 0; k < x.size(); ++k) {
                        const cx xk = x[k];
                        const cx yk = phase_conj * y[k];
                        x[k] = c * xk - s * yk;
                        y[k] = s * xk + c * yk;
                    }
                };
                rotate(work[i], work[j]);
                if (v) rotate((*v)[i], (*v)[j]);
                double si = 0.0, sj = 0.0;
                for (const cx& z : work[i]) si += abs2(z);
                for (const cx& z : work[j]) sj += abs2(z);
                colsq[i] = si;
                colsq[j] = sj;
            }
        }
        if (!rotated) return;
    }
}

std::vector<std::vector<cx>> columns_of(const Matrix& m) {
    std::vector<std::vector<cx>> cols(m.cols, std::vector<cx>(m.rows));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) cols[j][i] = m.at(i, j);
    return cols;
}

}  // namespace

SingularSpectrum svd(const Matrix& m) {
    const bool wide = m.rows < m.cols;
    auto work = columns_of(wide ? adjoint(m) : m);
    one_sided_jacobi(work, nullptr);
    SingularSpectrum s;
    s.values.reserve(work.size());
    for (const auto& col : work) {
        double q = 0.0;
        for (const cx& z : col) q += abs2(z);
        s.values.push_back(std::sqrt(q));
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

SvdResult svd_full(const Matrix& m) {
    const bool wide = m.rows < m.cols;
    const Matrix& base = wide ? adjoint(m) : m;
    const int rows = base.rows, n = base.cols;
    auto work = columns_of(base);
    std::vector<std::vector<cx>> v(n, std::vector<cx>(n));
    for (int j = 0; j < n; ++j) v[j][j] = 1.0;
    one_sided_jacobi(work, &v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> sigma(n);
    for (int j = 0; j < n; ++j) {
        double q = 0.0;
        for (const cx& z : work[j]) q += abs2(z);
        sigma[j] = std::sqrt(q);
    }
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return sigma[x] > sigma[y]; });

    Matrix u = Matrix::zero(rows, n, Norm::l2, Norm::l2);
    Matrix vt = Matrix::zero(n, n, Norm::l2, Norm::l2);
    std::vector<double> sig(n);
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        sig[j] = sigma[src];
        if (sigma[src] > 0.0)
            for (int i = 0; i < rows; ++i)
                u.at(i, j) = work[src][i] / sigma[src];
        for (int i = 0; i < n; ++i) vt.at(i, j) = v[src][i];
    }
    if (wide) return {vt, sig, u};  // m = (base)^H = V Sigma U^H
    return {u, sig, vt};
}

double schatten_norm(const Matrix& m, double p) {
    if (!(p > 0.0)) throw std::domain_error("schatten_norm: p must be positive");
    const SingularSpectrum s = svd(m);
    if (std::isinf(p)) return s.values.empty() ? 0.0 : s.values.front();
    double acc = 0.0;
    for (double mu : s.values)
        if (mu > 0.0) acc += std::pow(mu, p);
    return acc == 0.0 ? 0.0 : std::pow(acc, 1.0 / p);
}

double linf_l2_bound(const Matrix& m) {
    const SingularSpectrum s = svd(m);
    const double spectral = s.values.empty() ? 0.0 : s.values.front();
    return std::min(hs_norm(m), std::sqrt(double(m.cols)) * spectral);
}

namespace {

// Genuine upper bound for ||.||_{linf->l2}: each row pairs below its l1 norm,
// and a sign vector has Euclidean length sqrt(cols).
double linf_l2_upper(const Matrix& m) {
    double rows_sq = 0.0;
    for (int i = 0; i < m.rows; ++i) {
        double r = 0.0;
        for (int j = 0; j < m.cols; ++j) r += std::abs(m.at(i, j));
        rows_sq += r * r;
    }
    const SingularSpectrum s = svd(m);
    const double spectral = s.values.empty() ? 0.0 : s.values.front();
    return std::min(std::sqrt(rows_sq), std::sqrt(double(m.cols)) * spectral);
}

bool all_real(const Matrix& m) {
    for (const cx& z : m.entries)
        if (z.imag() != 0.0) return false;
    return true;
}

// max over sign patterns of ||M eps||_2, eps in {-1, +1}^cols; eps_0 fixed.
double sign_enumeration_linf_l2(const Matrix& m) {
    const int n = m.cols;
    double best = 0.0;
    std::vector<double> acc(m.rows);
    const std::uint64_t patterns = 1ull << (n - 1);
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
        for (int i = 0; i < m.rows; ++i) {
            double s = m.at(i, 0).real();
            for (int j = 1; j < n; ++j) {
                const double e = (bits >> (j - 1)) & 1 ? -1.0 : 1.0;
                s += e * m.at(i, j).real();
            }
            acc[i] = s;
        }
        double q = 0.0;
        for (double x : acc) q += x * x;
        best = std::max(best, q);
    }
    return std::sqrt(best);
}

}  // namespace

OpNorm operator_norm(const Matrix& m, Norm from, Norm to) {
    if (from == Norm::linf && to == Norm::linf) {
        double best = 0.0;
        for (int i = 0; i < m.rows; ++i) {
            double s = 0.0;
            for (int j = 0; j < m.cols; ++j) s += std::abs(m.at(i, j));
            best = std::max(best, s);
        }
        return {best, true};
    }
    if (from == Norm::l1 && to == Norm::linf) {
        double best = 0.0;
        for (const cx& z : m.entries) best = std::max(best, std::abs(z));
        return {best, true};
    }
    if (from == Norm::l1 && to == Norm::l1) {
        double best = 0.0;
        for (int j = 0; j < m.cols; ++j) {
            double s = 0.0;
            for (int i = 0; i < m.rows; ++i) s += std::abs(m.at(i, j));
            best = std::max(best, s);
        }
        return {best, true};
    }
    if (from == Norm::l1 && to == Norm::l2) {
        double best = 0.0;
        for (int j = 0; j < m.cols; ++j) {
            double s = 0.0;
            for (int i = 0; i < m.rows; ++i) s += abs2(m.at(i, j));
            best = std::max(best, s);
        }
        return {std::sqrt(best), true};
    }
    if (from == Norm::l2 && to == Norm::l2) {
        const SingularSpectrum s = svd(m);
        return {s.values.empty() ? 0.0 : s.values.front(), true};
    }
    if (from == Norm::l2 && to == Norm::linf) {
        double best = 0.0;
        for (int i = 0; i < m.rows; ++i) {
            double s = 0.0;
            for (int j = 0; j < m.cols; ++j) s += abs2(m.at(i, j));
            best = std::max(best, s);
        }
        return {std::sqrt(best), true};
    }
    if (from == Norm::linf && to == Norm::l2) {
        if (m.cols <= config().sign_enum_max_cols && all_real(m))
            return {sign_enumeration_linf_l2(m), true};
        return {linf_l2_upper(m), false};
    }
    if (from == Norm::l2 && to == Norm::l1) {
        // adjoint of linf->l2
        const Matrix mh = adjoint(m);
        if (mh.cols <= config().sign_enum_max_cols && all_real(mh))
            return {sign_enumeration_linf_l2(mh), true};
        return {linf_l2_upper(mh), false};
    }
    throw std::domain_error("operator_norm: unsupported norm pair");
}

cx trace_power(const Matrix& m, int k) {
    if (m.rows != m.cols) throw std::domain_error("trace_power: matrix not square");
    if (k < 1) throw std::domain_error("trace_power: k must be >= 1");
    Matrix p = m;
    for (int i = 1; i < k; ++i) p = matmul(p, m);
    cx t{};
    for (int i = 0; i < p.rows; ++i) t += p.at(i, i);
    return t;
}

namespace {

bool is_pow2(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In place radix-2 transform: a_k <- sum_t a_t e^{sign * 2 pi i k t / N}.
void fft_pow2(std::vector<cx>& a, double sign) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cx> roots(n / 2);
    for (size_t k = 0; k < n / 2; ++k)
        roots[k] = std::polar(1.0, sign * 2.0 * kPi * double(k) / double(n));
    for (size_t len = 2; len <= n; len <<= 1) {
        const size_t stride = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                const cx w = roots[k * stride];
                const cx u = a[i + k];
                const cx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

std::vector<cx> direct_transform(const std::vector<cx>& c, double sign) {
    const size_t n = c.size();
    std::vector<cx> out(n);
    for (size_t k = 0; k < n; ++k) {
        cx acc{};
        for (size_t t = 0; t < n; ++t)
            acc += c[t] * std::polar(1.0, sign * 2.0 * kPi * double(k * t % n) /
                                              double(n));
        out[k] = acc;
    }
    return out;
}

}  // namespace

std::vector<cx> dft(const std::vector<cx>& c, bool inverse) {
    if (c.empty()) throw std::invalid_argument("dft: empty sequence");
    for (const cx& z : c)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("dft: non-finite input");
    const double sign = inverse ? +1.0 : -1.0;
    std::vector<cx> out;
    if (is_pow2(c.size())) {
        out = c;
        fft_pow2(out, sign);
    } else {
        out = direct_transform(c, sign);
    }
    if (!inverse) {
        const double scale = 1.0 / double(c.size());
        for (cx& z : out) z *= scale;
    }
    return out;
}

MinEig min_eig_hermitian(const Matrix& g) {
    if (g.rows != g.cols) throw std::domain_error("min_eig_hermitian: not square");
    const int n = g.rows;
    // Gershgorin upper bound for the largest eigenvalue.
    double bound = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = g.at(i, i).real();
        for (int j = 0; j < n; ++j)
            if (j != i) row += std::abs(g.at(i, j));
        bound = std::max(bound, row);
    }
    bound += 1.0;
    Matrix h = Matrix::zero(n, n, Norm::l2, Norm::l2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h.at(i, j) = (i == j ? cx{bound} : cx{}) - g.at(i, j);
    const SvdResult sv = svd_full(h);
    MinEig r;
    r.value = bound - (sv.sigma.empty() ? 0.0 : sv.sigma.front());
    r.vector.resize(n);
    for (int i = 0; i < n; ++i) r.vector[i] = sv.u.at(i, 0);
    return r;
}

}  // namespace snlab
