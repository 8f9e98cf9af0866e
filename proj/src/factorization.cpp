#include "snlab/factorization.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "snlab/config.hpp"

namespace snlab {

ExponentBudget compose_exponent(const std::vector<double>& s_list) {
    if (s_list.empty()) throw std::domain_error("compose_exponent: empty exponent list");
    double inv_r = 0.0;
    for (double s : s_list) {
        if (!(s > 0.0) || s > 1.0)
            throw std::domain_error("compose_exponent: every s must lie in (0, 1]");
        inv_r += 1.0 / s;
    }
    const int n = static_cast<int>(s_list.size());
    inv_r -= double(n + 1) / 2.0;
    ExponentBudget b;
    b.s_list = s_list;
    b.n = n;
    b.inv_r = inv_r;
    b.r = inv_r > 0.0 ? 1.0 / inv_r : std::numeric_limits<double>::infinity();
    return b;
}

namespace {

std::vector<double> powered(const std::vector<double>& d, double e) {
    std::vector<double> out(d.size());
    for (size_t i = 0; i < d.size(); ++i) out[i] = std::pow(d[i], e);
    return out;
}

}  // namespace

FactorizationCertificate factor_product(const std::vector<MarkedOperator>& chain) {
    if (chain.empty()) throw std::domain_error("factor_product: empty chain");
    const int n = static_cast<int>(chain.size());
    std::vector<double> s_list;
    s_list.reserve(n);
    for (int k = 0; k + 1 < n; ++k) {
        if (chain[k + 1].matrix.cols != chain[k].matrix.rows)
            throw std::domain_error("factor_product: chain dimensions not conformable");
        if (chain[k + 1].matrix.domain != chain[k].matrix.codomain)
            throw std::domain_error("factor_product: chain norm tags not conformable");
    }
    for (const auto& op : chain) s_list.push_back(op.rep.s);

    std::vector<CanonicalChain> canon;
    canon.reserve(n);
    for (const auto& op : chain) canon.push_back(canonical_factorization(op));

    FactorizationCertificate cert;
    cert.budget = compose_exponent(s_list);

    // Outermost maps: A = diag(d_1^{s_1/2}) A_1 into l2, B = B_n diag(d_n^{s_n/2}).
    const Matrix a_half =
        diag_matrix(powered(canon.front().d, s_list.front() / 2.0), Norm::linf, Norm::l2);
    cert.a = matmul(a_half, canon.front().a);
    const Matrix b_half =
        diag_matrix(powered(canon.back().d, s_list.back() / 2.0), Norm::l2, Norm::l1);
    cert.b = matmul(canon.back().b, b_half);

    // Middle product, applied right to left:
    //   U = D_n^{1-s_n} (D_n^{s_n/2} M_{n-1} D_{n-1}^{s_{n-1}/2}) ... D_1^{1-s_1}
    Matrix u = diag_matrix(powered(canon[0].d, 1.0 - s_list[0]), Norm::l2, Norm::l2);
    cert.plan.push_back({"diag_1", (1.0 - s_list[0]) / s_list[0]});
    for (int k = 0; k + 1 < n; ++k) {
        const Matrix bridge = matmul(canon[k + 1].a, canon[k].b);
        Matrix sandwiched = matmul(
            diag_matrix(powered(canon[k + 1].d, s_list[k + 1] / 2.0), Norm::l2, Norm::l2),
            matmul(bridge,
                   diag_matrix(powered(canon[k].d, s_list[k] / 2.0), Norm::l2, Norm::l2)));
        u = matmul(sandwiched, u);
        cert.plan.push_back({"bridge_" + std::to_string(k + 1), 0.5});
        u = matmul(
            diag_matrix(powered(canon[k + 1].d, 1.0 - s_list[k + 1]), Norm::l2, Norm::l2),
            u);
        cert.plan.push_back(
            {"diag_" + std::to_string(k + 2), (1.0 - s_list[k + 1]) / s_list[k + 1]});
    }
    u.domain = Norm::l2;
    u.codomain = Norm::l2;
    cert.u = std::move(u);

    cert.sigma_r_u = schatten_norm(cert.u, cert.budget.r);
    cert.a_norm = operator_norm(cert.a, chain.front().matrix.domain, Norm::l2);
    cert.b_norm = operator_norm(cert.b, Norm::l2, chain.back().matrix.codomain);
    cert.gamma_value = cert.a_norm.value * cert.sigma_r_u * cert.b_norm.value;
    cert.nu_product = 1.0;
    for (const auto& op : chain) cert.nu_product *= op.nu_bound;
    return cert;
}

VerificationReport verify_certificate(const FactorizationCertificate& cert,
                                      const Matrix& t) {
    if (cert.a.cols != t.cols || cert.b.rows != t.rows ||
        cert.u.cols != cert.a.rows || cert.b.cols != cert.u.rows)
        throw std::domain_error("verify_certificate: shape mismatch");

    VerificationReport rep;
    const Matrix recon = matmul(cert.b, matmul(cert.u, cert.a));
    Matrix diff = recon;
    for (size_t i = 0; i < diff.entries.size(); ++i)
        diff.entries[i] -= t.entries[i];
    const double tn = hs_norm(t);
    rep.residual = tn > 0.0 ? hs_norm(diff) / tn : hs_norm(diff);
    rep.sigma_r_u = schatten_norm(cert.u, cert.budget.r);
    rep.a_norm = operator_norm(cert.a, t.domain, Norm::l2);
    rep.b_norm = operator_norm(cert.b, Norm::l2, t.codomain);
    rep.gamma_value = rep.a_norm.value * rep.sigma_r_u * rep.b_norm.value;
    rep.nu_product = cert.nu_product;
    rep.reconstruction_ok = rep.residual <= config().reconstruction_rel;
    rep.gamma_ok = rep.gamma_value <= rep.nu_product * (1.0 + config().gamma_slack);
    rep.pass = rep.reconstruction_ok && rep.gamma_ok;
    return rep;
}

HoelderReport schatten_hoelder_check(const Matrix& mp, double p, const Matrix& mq,
                                     double q) {
    if (mp.cols != mq.rows)
        throw std::domain_error("schatten_hoelder_check: shape mismatch");
    HoelderReport rep;
    rep.r = 1.0 / (1.0 / p + 1.0 / q);
    rep.lhs = schatten_norm(matmul(mp, mq), rep.r);
    rep.rhs = schatten_norm(mp, p) * schatten_norm(mq, q);
    rep.ok = rep.lhs <= (1.0 + config().gamma_slack) * rep.rhs;
    return rep;
}

}  // namespace snlab
