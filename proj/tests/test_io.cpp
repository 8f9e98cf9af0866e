#include <doctest.h>

#include <cmath>

#include "snlab/carleman.hpp"
#include "snlab/io.hpp"
#include "test_util.hpp"

using namespace snlab;

TEST_CASE("matrix json round trip preserves entries and tags") {
    const Matrix m = testutil::random_matrix(3, 4, 401, Norm::linf, Norm::l1);
    const Matrix back = matrix_from_json_text(matrix_to_json(m));
    CHECK(back.rows == m.rows);
    CHECK(back.cols == m.cols);
    CHECK(back.domain == m.domain);
    CHECK(back.codomain == m.codomain);
    REQUIRE(back.entries.size() == m.entries.size());
    for (size_t i = 0; i < m.entries.size(); ++i)
        CHECK(std::abs(back.entries[i] - m.entries[i]) < 1e-15);

    CHECK_THROWS(matrix_from_json_text("not json"));
    CHECK_THROWS(matrix_from_json_text("{\"rows\": 2}"));
}

TEST_CASE("bundle json round trip") {
    const auto op = random_nuclear(4, 3, 0.7, 2.0, 3, 402, Norm::linf, Norm::l1);
    const auto back = bundle_from_json_text(bundle_to_json(op));
    CHECK(back.nu_bound == doctest::Approx(op.nu_bound).epsilon(1e-12));
    CHECK(back.rep.s == op.rep.s);
    CHECK(back.rep.terms.size() == op.rep.terms.size());
    REQUIRE(back.matrix.entries.size() == op.matrix.entries.size());
    for (size_t i = 0; i < op.matrix.entries.size(); ++i)
        CHECK(std::abs(back.matrix.entries[i] - op.matrix.entries[i]) < 1e-12);
}

TEST_CASE("bundle json rejects an inconsistent nu_bound") {
    const auto op = random_nuclear(3, 3, 1.0, 1.0, 2, 403);
    std::string text = bundle_to_json(op);
    const auto pos = text.find("\"nu_bound\"");
    REQUIRE(pos != std::string::npos);
    const auto end = text.find_first_of(",}", pos);
    text.replace(pos, end - pos, "\"nu_bound\": 123.0");
    CHECK_THROWS_AS(bundle_from_json_text(text), std::invalid_argument);
}

TEST_CASE("certificate json round trip and inv_r validation") {
    const auto op1 = random_nuclear(4, 3, 1.0, 1.0, 2, 404);
    const auto op2 = random_nuclear(3, 4, 0.8, 2.0, 3, 405);
    const auto cert = factor_product({op1, op2});
    const auto back = certificate_from_json_text(certificate_to_json(cert));
    CHECK(back.budget.inv_r == doctest::Approx(cert.budget.inv_r).epsilon(1e-14));
    CHECK(back.budget.s_list == cert.budget.s_list);
    CHECK(back.sigma_r_u == doctest::Approx(cert.sigma_r_u).epsilon(1e-14));
    CHECK(back.gamma_value == doctest::Approx(cert.gamma_value).epsilon(1e-14));
    CHECK(back.nu_product == doctest::Approx(cert.nu_product).epsilon(1e-14));
    const Matrix t = matmul(op2.matrix, op1.matrix);
    CHECK(verify_certificate(back, t).pass);

    // r = infinity survives serialization as the string "inf"
    const auto flat = factor_product({op1});
    const std::string text = certificate_to_json(flat);
    CHECK(text.find("\"inf\"") != std::string::npos);
    CHECK(std::isinf(certificate_from_json_text(text).budget.r));

    // a stored inv_r at odds with s_list is refused
    std::string bad = certificate_to_json(cert);
    const auto pos = bad.find("\"inv_r\"");
    REQUIRE(pos != std::string::npos);
    const auto end = bad.find_first_of(",}", pos);
    bad.replace(pos, end - pos, "\"inv_r\": 99.0");
    CHECK_THROWS_AS(certificate_from_json_text(bad), std::invalid_argument);
}

TEST_CASE("coefficient csv round trip") {
    const auto c = carleman_coefficients(32, 1.5);
    const auto back = coefficients_from_csv_text(coefficients_to_csv(c));
    REQUIRE(back.size() == c.size());
    for (size_t i = 0; i < c.size(); ++i)
        CHECK(std::abs(back[i] - c[i]) < 1e-14);

    CHECK_THROWS_AS(coefficients_from_csv_text(""), std::invalid_argument);
    CHECK_THROWS_AS(coefficients_from_csv_text("index,modulus,phase\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(coefficients_from_csv_text("index,modulus,phase\n0,1\n"),
                    std::invalid_argument);
}

TEST_CASE("profile and sweep csv formatting") {
    GrowthProfile g;
    g.p = 1.5;
    g.checkpoints = {2, 4};
    g.sums = {0.5, 0.75};
    const std::string csv = profile_to_csv(g);
    CHECK(csv.rfind("N,S,p\n", 0) == 0);
    CHECK(csv.find("2,0.5,1.5\n") != std::string::npos);
    CHECK(csv.find("4,0.75,1.5\n") != std::string::npos);

    const auto report = sharpness_sweep({256}, 1.5, {0.9}, 5);
    const std::string sweep = sweep_to_csv(report);
    CHECK(sweep.rfind(
              "N,beta,exponent,partial_sum,slope,verdict,sup_norm,"
              "inferred_r_lower\n",
              0) == 0);
    // one line per profile plus the header
    size_t lines = 0;
    for (char ch : sweep)
        if (ch == '\n') ++lines;
    CHECK(lines == report.rows.size() + 1);
}

TEST_CASE("read_file and write_file") {
    const std::string path = "io_test_scratch.txt";
    write_file(path, "alpha\nbeta\n");
    CHECK(read_file(path) == "alpha\nbeta\n");
    CHECK_THROWS_AS(read_file("definitely/not/here.txt"), std::invalid_argument);
}
