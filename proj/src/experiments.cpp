#include "snlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "snlab/carleman.hpp"
#include "snlab/config.hpp"

namespace snlab {

EigenSpectrum square_eigen_sequence(const std::vector<cx>& symbol_samples) {
    if (symbol_samples.size() < 8)
        throw std::domain_error("square_eigen_sequence: need at least 8 samples");
    std::vector<cx> hat = dft(symbol_samples, /*inverse=*/false);
    EigenSpectrum spec;
    spec.values.reserve(hat.size());
    for (const cx& z : hat) spec.values.push_back(z * z);
    std::sort(spec.values.begin(), spec.values.end(),
              [](const cx& x, const cx& y) { return std::abs(x) > std::abs(y); });
    return spec;
}

RotationReport rotation_trace_check(const Matrix& a, const Matrix& u,
                                    const Matrix& b, int k_max) {
    if (k_max < 1) throw std::domain_error("rotation_trace_check: k_max must be >= 1");
    if (u.cols != a.rows || b.cols != u.rows || a.cols != b.rows)
        throw std::domain_error("rotation_trace_check: shape mismatch");
    const Matrix bua = matmul(b, matmul(u, a));
    const Matrix uab = matmul(u, matmul(a, b));
    RotationReport rep;
    rep.pass = true;
    for (int k = 1; k <= k_max; ++k) {
        const cx lhs = trace_power(bua, k);
        const cx rhs = trace_power(uab, k);
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        const double err = std::abs(lhs - rhs) / scale;
        rep.rel_errors.push_back(err);
        if (err > config().trace_rel) rep.pass = false;
    }
    return rep;
}

namespace {

// Feasibility of A^H A <= c^2 diag(mu) for some probability mu, searched by
// multiplicative-weight updates seeded with the column masses. Returns the
// weight found and whether the domination holds at this c.
bool pi2_feasible(const Matrix& gram, double c, int iterations,
                  std::vector<double>* mu_out) {
    const int n = gram.cols;
    double gmax = 0.0;
    for (int i = 0; i < n; ++i) gmax = std::max(gmax, gram.at(i, i).real());
    const double tol = 1e-9 * std::max(1.0, c * c + gmax);

    std::vector<double> score(n);
    for (int i = 0; i < n; ++i) score[i] = gram.at(i, i).real() + 1e-12;
    std::vector<double> mu(n);
    for (int it = 0; it < iterations; ++it) {
        double total = 0.0;
        for (double s : score) total += s;
        for (int i = 0; i < n; ++i) mu[i] = score[i] / total;

        Matrix g = Matrix::zero(n, n, Norm::l2, Norm::l2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g.at(i, j) = (i == j ? cx{c * c * mu[i]} : cx{}) - gram.at(i, j);
        const MinEig me = min_eig_hermitian(g);
        if (me.value >= -tol) {
            if (mu_out) *mu_out = mu;
            return true;
        }
        // Shift weight toward the coordinates carrying the violating direction.
        for (int i = 0; i < n; ++i) score[i] += std::norm(me.vector[i]);
    }
    return false;
}

}  // namespace

Pi2Result pi2_upper_bound(const Matrix& a) {
    if (a.domain != Norm::linf || a.codomain != Norm::l2)
        throw std::domain_error("pi2_upper_bound: tags must be linf -> l2");
    const Matrix gram = matmul(adjoint(a), a);
    Pi2Result res;
    res.lower = linf_l2_bound(a);
    res.upper = hs_norm(a);

    const int iters = config().pi2_mwu_iterations;
    Pi2Result best = res;
    best.value = res.upper;
    std::vector<double> mu;
    if (res.upper <= 0.0) {
        res.value = 0.0;
        res.certified = true;
        return res;
    }
    // Keep the estimate inside [lower-flag bound, HS]; HS is the fallback.
    best.certified = pi2_feasible(gram, res.upper * (1.0 + 1e-12), iters, &mu);
    if (best.certified) best.mu = mu;
    double lo = std::min(res.lower, res.upper), hi = res.upper;
    if (best.certified && pi2_feasible(gram, lo, iters, &mu)) {
        best.value = lo;
        best.mu = mu;
    } else if (best.certified) {
        while (hi - lo > config().pi2_bisect_rel * hi) {
            const double mid = 0.5 * (lo + hi);
            if (pi2_feasible(gram, mid, iters, &mu)) {
                hi = mid;
                best.mu = mu;
            } else {
                lo = mid;
            }
        }
        best.value = hi;
    }
    best.lower = res.lower;
    best.upper = res.upper;
    return best;
}

namespace {

std::string now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

SweepReport sharpness_sweep(const std::vector<int>& n_list, double beta,
                            const std::vector<double>& s_list,
                            std::uint64_t seed) {
    if (n_list.empty()) throw std::domain_error("sharpness_sweep: empty n list");
    for (size_t i = 0; i + 1 < n_list.size(); ++i)
        if (n_list[i + 1] <= n_list[i])
            throw std::domain_error("sharpness_sweep: n list must be ascending");
    std::vector<double> exps = s_list;
    for (double s : exps)
        if (!(s > 0.0) || s > 1.0)
            throw std::domain_error("sharpness_sweep: exponents must lie in (0, 1]");
    if (std::find(exps.begin(), exps.end(), 1.0) == exps.end())
        exps.push_back(1.0);  // the l_1 profile is always reported
    std::sort(exps.begin(), exps.end());

    SweepReport report;
    report.seed = seed;
    report.thresholds = config().verdict;
    report.timestamp = now_iso8601();
    report.degenerate = false;

    for (int n : n_list) {
        const CoefficientSequence coeffs = carleman_coefficients(n, beta);
        const std::vector<cx> samples = synthesize(coeffs, 1);
        const double sup = sup_norm_estimate(synthesize(coeffs, 4));
        const EigenSpectrum spectrum = square_eigen_sequence(samples);
        const auto cps = dyadic_checkpoints(n);

        struct Row {
            double s;
            GrowthProfile profile;
            SlopeFit fit;
            Verdict verdict;
        };
        std::vector<Row> rows;
        for (double s : exps) {
            Row r;
            r.s = s;
            r.profile = lp_partial_profile(spectrum.values, s, cps);
            r.fit = growth_exponent_fit(r.profile);
            r.verdict = membership_verdict(r.profile, report.thresholds);
            rows.push_back(std::move(r));
        }
        // s_hat: smallest tested s whose profile is bounded; 1/r = 1/s - 1/2.
        // All-bounded (flat symbol) or none-bounded sweeps carry no sharpness
        // information and are flagged degenerate.
        double s_hat = exps.back();
        bool degenerate = true;
        for (const Row& r : rows)
            if (r.verdict == Verdict::bounded) {
                s_hat = r.s;
                degenerate = r.s == exps.front();
                break;
            }
        if (degenerate) report.degenerate = true;
        const double r_lower = 1.0 / (1.0 / s_hat - 0.5);

        for (const Row& r : rows) {
            SweepRow out;
            out.n = n;
            out.beta = beta;
            out.exponent = r.s;
            out.partial_sum = r.profile.sums.back();
            out.slope = r.fit.slope;
            out.verdict = r.verdict;
            out.sup_norm = sup;
            out.inferred_r_lower = r_lower;
            report.rows.push_back(out);
        }
    }
    return report;
}

}  // namespace snlab
