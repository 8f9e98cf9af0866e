// Command-line front end for the s-nuclear factorization lab.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snlab/carleman.hpp"
#include "snlab/experiments.hpp"
#include "snlab/io.hpp"

namespace {

using namespace snlab;

int run_factor(const std::vector<std::string>& inputs, const std::string& out) {
    std::vector<MarkedOperator> chain;
    for (const auto& path : inputs)
        chain.push_back(bundle_from_json_text(read_file(path)));
    const FactorizationCertificate cert = factor_product(chain);
    write_file(out, certificate_to_json(cert));
    std::printf("r = %s  sigma_r(U) = %.12g  gamma = %.12g  nu_product = %.12g\n",
                std::isinf(cert.budget.r) ? "inf"
                                          : std::to_string(cert.budget.r).c_str(),
                cert.sigma_r_u, cert.gamma_value, cert.nu_product);
    std::printf("certificate written to %s\n", out.c_str());
    return 0;
}

int run_verify(const std::string& cert_path,
               const std::vector<std::string>& inputs) {
    const FactorizationCertificate cert =
        certificate_from_json_text(read_file(cert_path));
    std::vector<MarkedOperator> chain;
    for (const auto& path : inputs)
        chain.push_back(bundle_from_json_text(read_file(path)));
    Matrix t = chain.front().matrix;
    for (size_t k = 1; k < chain.size(); ++k) t = matmul(chain[k].matrix, t);

    const VerificationReport rep = verify_certificate(cert, t);
    std::printf("reconstruction residual  %.3e  (%s)\n", rep.residual,
                rep.reconstruction_ok ? "ok" : "FAIL");
    std::printf("sigma_r(U)               %.12g\n", rep.sigma_r_u);
    std::printf("||A||                    %.12g%s\n", rep.a_norm.value,
                rep.a_norm.exact ? "" : " (upper bound)");
    std::printf("||B||                    %.12g%s\n", rep.b_norm.value,
                rep.b_norm.exact ? "" : " (upper bound)");
    std::printf("gamma = ||A|| sigma_r ||B|| = %.12g  vs  nu_product = %.12g  (%s)\n",
                rep.gamma_value, rep.nu_product, rep.gamma_ok ? "ok" : "FAIL");
    std::printf("verdict: %s\n", rep.pass ? "PASS" : "FAIL");
    return rep.pass ? 0 : 1;
}

int run_carleman(int n, double beta, int oversample, const std::string& out,
                 const std::string& samples_out) {
    const CarlemanSymbol sym = make_carleman_symbol(n, beta, oversample);
    write_file(out, coefficients_to_csv(sym.coefficients));
    std::printf("wrote %d coefficients to %s (sup-norm estimate %.6f)\n", sym.n,
                out.c_str(), sup_norm_estimate(sym.grid_samples));
    if (!samples_out.empty()) {
        std::string csv = "index,re,im\n";
        char buf[80];
        for (size_t i = 0; i < sym.grid_samples.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i,
                          sym.grid_samples[i].real(), sym.grid_samples[i].imag());
            csv += buf;
        }
        write_file(samples_out, csv);
    }
    return 0;
}

int run_sweep(const std::vector<int>& n_list, double beta,
              const std::vector<double>& s_list, std::uint64_t seed,
              const std::string& out) {
    const SweepReport rep = sharpness_sweep(n_list, beta, s_list, seed);
    write_file(out, sweep_to_csv(rep));
    std::printf("sweep report (%zu rows) written to %s%s\n", rep.rows.size(),
                out.c_str(), rep.degenerate ? " [degenerate]" : "");
    for (const SweepRow& row : rep.rows)
        if (row.n == rep.rows.back().n)
            std::printf("  N=%d s=%.3g slope=%.4f %s r_lower=%.4g\n", row.n,
                        row.exponent, row.slope, to_string(row.verdict),
                        row.inferred_r_lower);
    return 0;
}

int run_diag(const std::string& coeffs_path, double p,
             const std::string& out) {
    const CoefficientSequence c = coefficients_from_csv_text(read_file(coeffs_path));
    std::vector<long long> cps = dyadic_checkpoints(static_cast<long long>(c.size()));
    if (cps.size() < 3)
        throw std::invalid_argument("diag: sequence too short for a profile");
    const GrowthProfile g = lp_partial_profile(c, p, cps);
    const SlopeFit fit = growth_exponent_fit(g);
    if (!out.empty()) write_file(out, profile_to_csv(g));
    std::printf("p=%.4g  S(N)=%.10g  slope=%.6f  residual=%.2e  verdict=%s\n", p,
                g.sums.back(), fit.slope, fit.residual,
                to_string(membership_verdict(g)));
    return 0;
}

bool check(const char* name, bool ok) {
    std::printf("  %-44s %s\n", name, ok ? "ok" : "FAIL");
    return ok;
}

int run_selftest() {
    bool ok = true;
    {
        const ExponentBudget b = compose_exponent({1.0, 1.0});
        ok &= check("exponent formula (1,1) -> r=2", std::abs(b.r - 2.0) < 1e-14);
    }
    {
        const Matrix m = Matrix::create(2, 2, {1.0, 1.0, 0.0, 1.0}, Norm::l2, Norm::l2);
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        ok &= check("svd of [[1,1],[0,1]]",
                    std::abs(svd(m).values[0] - phi) < 1e-10);
    }
    {
        const MarkedOperator op =
            random_nuclear(6, 5, 1.0, 1.0, 8, 42, Norm::linf, Norm::l1);
        const FactorizationCertificate cert = factor_product({op});
        const VerificationReport rep = verify_certificate(cert, op.matrix);
        ok &= check("single-op factorization round trip", rep.pass);
    }
    {
        const MarkedOperator t1 = random_nuclear(8, 6, 1.0, 1.0, 10, 7, Norm::linf, Norm::l2);
        const MarkedOperator t2 = random_nuclear(5, 8, 1.0, 1.0, 9, 8, Norm::l2, Norm::l1);
        const FactorizationCertificate cert = factor_product({t1, t2});
        const Matrix t = matmul(t2.matrix, t1.matrix);
        const VerificationReport rep = verify_certificate(cert, t);
        ok &= check("two-op chain certificate (r=2)",
                    rep.pass && std::abs(cert.budget.r - 2.0) < 1e-14);
    }
    {
        const CarlemanSymbol sym = make_carleman_symbol(256, 1.5);
        double coef_energy = 0.0, grid_energy = 0.0;
        for (const cx& z : sym.coefficients) coef_energy += std::norm(z);
        for (const cx& z : sym.grid_samples) grid_energy += std::norm(z);
        grid_energy /= double(sym.grid_samples.size());
        ok &= check("carleman Parseval identity",
                    std::abs(grid_energy - coef_energy) < 1e-10 * coef_energy);
    }
    {
        const CoefficientSequence c = carleman_coefficients(512, 1.5);
        const EigenSpectrum spec = square_eigen_sequence(synthesize(c, 1));
        double err = 0.0;
        for (size_t k = 0; k < c.size(); ++k)
            err = std::max(err, std::abs(spec.values[k] - c[k] * c[k]));
        ok &= check("circulant square spectrum = dft^2", err < 1e-10);
    }
    std::printf("selftest: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale laboratory for factoring products of s-nuclear operators"};
    app.require_subcommand(1);

    auto* factor = app.add_subcommand("factor", "factor a chain of operator bundles");
    std::vector<std::string> factor_in;
    std::string factor_out = "certificate.json";
    factor->add_option("--in", factor_in, "operator bundle files, first-applied first")
        ->required()->expected(-1);
    factor->add_option("--out", factor_out, "output certificate file");

    auto* verify = app.add_subcommand("verify", "verify a certificate against operators");
    std::string verify_cert;
    std::vector<std::string> verify_in;
    verify->add_option("--cert", verify_cert, "certificate file")->required();
    verify->add_option("--in", verify_in, "operator bundle files, first-applied first")
        ->required()->expected(-1);

    auto* carleman = app.add_subcommand("carleman", "emit a Carleman-type symbol");
    int car_n = 1024;
    double car_beta = 1.5;
    int car_oversample = 4;
    std::string car_out = "carleman.csv", car_samples;
    carleman->add_option("--n", car_n, "truncation length (power of two >= 8)");
    carleman->add_option("--beta", car_beta, "log-decay exponent (> 1)");
    carleman->add_option("--oversample", car_oversample, "grid oversampling factor");
    carleman->add_option("--out", car_out, "coefficient CSV output");
    carleman->add_option("--samples-out", car_samples, "optional grid-sample CSV output");

    auto* sweep = app.add_subcommand("sweep", "run the sharpness sweep");
    std::vector<int> sweep_n = {256, 1024, 4096, 16384};
    double sweep_beta = 1.5;
    std::vector<double> sweep_s = {0.75, 0.9, 1.0};
    std::uint64_t sweep_seed = 0;
    std::string sweep_out = "sweep.csv";
    sweep->add_option("--n-list", sweep_n, "ascending dyadic truncations");
    sweep->add_option("--beta", sweep_beta, "log-decay exponent");
    sweep->add_option("--s-list", sweep_s, "exponents in (0,1] to test");
    sweep->add_option("--seed", sweep_seed, "report seed (sweep itself is deterministic)");
    sweep->add_option("--out", sweep_out, "CSV output");

    auto* diag = app.add_subcommand("diag", "growth profile of a coefficient file");
    std::string diag_coeffs, diag_out;
    double diag_p = 2.0;
    diag->add_option("--coeffs", diag_coeffs, "coefficient CSV file")->required();
    diag->add_option("--p", diag_p, "profile exponent");
    diag->add_option("--out", diag_out, "profile CSV output");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*factor) return run_factor(factor_in, factor_out);
        if (*verify) return run_verify(verify_cert, verify_in);
        if (*carleman)
            return run_carleman(car_n, car_beta, car_oversample, car_out, car_samples);
        if (*sweep) return run_sweep(sweep_n, sweep_beta, sweep_s, sweep_seed, sweep_out);
        if (*diag) return run_diag(diag_coeffs, diag_p, diag_out);
        if (*selftest) return run_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
