#include "snlab/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace snlab {

using nlohmann::json;

namespace {

json matrix_to_jobj(const Matrix& m) {
    json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["domain_norm"] = to_string(m.domain);
    j["codomain_norm"] = to_string(m.codomain);
    std::vector<double> re, im;
    re.reserve(m.entries.size());
    im.reserve(m.entries.size());
    for (const cx& z : m.entries) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    j["entries_re"] = re;
    j["entries_im"] = im;
    return j;
}

Matrix matrix_from_jobj(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto re = j.at("entries_re").get<std::vector<double>>();
    const auto im = j.at("entries_im").get<std::vector<double>>();
    if (re.size() != im.size())
        throw std::invalid_argument("matrix: entries_re/entries_im length mismatch");
    std::vector<cx> entries(re.size());
    for (size_t i = 0; i < re.size(); ++i) entries[i] = cx{re[i], im[i]};
    return Matrix::create(rows, cols, std::move(entries),
                          norm_from_string(j.at("domain_norm").get<std::string>()),
                          norm_from_string(j.at("codomain_norm").get<std::string>()));
}

std::vector<double> reals(const std::vector<cx>& v, bool imag) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const cx& z : v) out.push_back(imag ? z.imag() : z.real());
    return out;
}

std::vector<cx> complexes(const std::vector<double>& re,
                          const std::vector<double>& im) {
    if (re.size() != im.size())
        throw std::invalid_argument("bundle: re/im length mismatch");
    std::vector<cx> out(re.size());
    for (size_t i = 0; i < re.size(); ++i) out[i] = cx{re[i], im[i]};
    return out;
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return matrix_to_jobj(m).dump(2); }

Matrix matrix_from_json_text(const std::string& text) {
    return matrix_from_jobj(json::parse(text));
}

std::string bundle_to_json(const MarkedOperator& op) {
    json j = matrix_to_jobj(op.matrix);
    json rep = json::array();
    for (const auto& t : op.rep.terms) {
        json term;
        term["xprime_re"] = reals(t.functional, false);
        term["xprime_im"] = reals(t.functional, true);
        term["y_re"] = reals(t.vec, false);
        term["y_im"] = reals(t.vec, true);
        rep.push_back(term);
    }
    j["rep"] = rep;
    j["s"] = op.rep.s;
    j["nu_bound"] = op.nu_bound;
    return j.dump(2);
}

MarkedOperator bundle_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    const Matrix m = matrix_from_jobj(j);
    std::vector<NuclearTerm> terms;
    for (const auto& term : j.at("rep")) {
        NuclearTerm t;
        t.functional = complexes(term.at("xprime_re").get<std::vector<double>>(),
                                 term.at("xprime_im").get<std::vector<double>>());
        t.vec = complexes(term.at("y_re").get<std::vector<double>>(),
                          term.at("y_im").get<std::vector<double>>());
        terms.push_back(std::move(t));
    }
    const NuclearRep rep =
        make_rep(std::move(terms), j.at("s").get<double>(), m.domain, m.codomain);
    MarkedOperator op = marked_from_rep(rep);
    // The stored nu_bound must agree with the representation.
    const double stored = j.at("nu_bound").get<double>();
    if (std::abs(stored - op.nu_bound) > 1e-6 * std::max(1.0, op.nu_bound))
        throw std::invalid_argument("bundle: stored nu_bound does not match representation");
    return op;
}

std::string certificate_to_json(const FactorizationCertificate& cert) {
    json j;
    j["A"] = matrix_to_jobj(cert.a);
    j["U"] = matrix_to_jobj(cert.u);
    j["B"] = matrix_to_jobj(cert.b);
    j["s_list"] = cert.budget.s_list;
    j["inv_r"] = cert.budget.inv_r;
    if (std::isinf(cert.budget.r))
        j["r"] = "inf";
    else
        j["r"] = cert.budget.r;
    j["sigma_r_U"] = cert.sigma_r_u;
    j["gamma_value"] = cert.gamma_value;
    j["nu_product"] = cert.nu_product;
    return j.dump(2);
}

FactorizationCertificate certificate_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    FactorizationCertificate cert;
    cert.a = matrix_from_jobj(j.at("A"));
    cert.u = matrix_from_jobj(j.at("U"));
    cert.b = matrix_from_jobj(j.at("B"));
    cert.budget = compose_exponent(j.at("s_list").get<std::vector<double>>());
    const double stored_inv_r = j.at("inv_r").get<double>();
    if (std::abs(stored_inv_r - cert.budget.inv_r) > 1e-12)
        throw std::invalid_argument("certificate: inv_r does not match s_list");
    cert.sigma_r_u = j.at("sigma_r_U").get<double>();
    cert.gamma_value = j.at("gamma_value").get<double>();
    cert.nu_product = j.at("nu_product").get<double>();
    return cert;
}

std::string coefficients_to_csv(const CoefficientSequence& c) {
    std::ostringstream out;
    out.precision(17);
    out << "index,modulus,phase\n";
    for (size_t i = 0; i < c.size(); ++i)
        out << i << ',' << std::abs(c[i]) << ',' << std::arg(c[i]) << '\n';
    return out.str();
}

CoefficientSequence coefficients_from_csv_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("index,", 0) != 0)
        throw std::invalid_argument("coefficient file: missing header");
    CoefficientSequence c;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string idx, modulus, phase;
        if (!std::getline(row, idx, ',') || !std::getline(row, modulus, ',') ||
            !std::getline(row, phase, ','))
            throw std::invalid_argument("coefficient file: malformed row: " + line);
        c.push_back(std::polar(std::stod(modulus), std::stod(phase)));
    }
    if (c.empty()) throw std::invalid_argument("coefficient file: no rows");
    return c;
}

std::string profile_to_csv(const GrowthProfile& g) {
    std::ostringstream out;
    out.precision(17);
    out << "N,S,p\n";
    for (size_t i = 0; i < g.checkpoints.size(); ++i)
        out << g.checkpoints[i] << ',' << g.sums[i] << ',' << g.p << '\n';
    return out.str();
}

std::string sweep_to_csv(const SweepReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "N,beta,exponent,partial_sum,slope,verdict,sup_norm,inferred_r_lower\n";
    for (const SweepRow& row : r.rows)
        out << row.n << ',' << row.beta << ',' << row.exponent << ','
            << row.partial_sum << ',' << row.slope << ',' << to_string(row.verdict)
            << ',' << row.sup_norm << ',' << row.inferred_r_lower << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace snlab
