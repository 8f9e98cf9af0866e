#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "snlab/carleman.hpp"
#include "snlab/linalg.hpp"
#include "snlab/operators.hpp"
#include "test_util.hpp"

using namespace snlab;

TEST_CASE("vector_norm") {
    const std::vector<cx> v = {cx{3, 4}, cx{0, -2}, cx{1, 0}};
    CHECK(vector_norm(v, Norm::linf) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(vector_norm(v, Norm::l1) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(vector_norm(v, Norm::l2) ==
          doctest::Approx(std::sqrt(30.0)).epsilon(1e-15));
}

TEST_CASE("make_rep: validation and zero-term dropping") {
    NuclearTerm t1{{cx{1}, cx{0}}, {cx{0}, cx{2}, cx{0}}};
    NuclearTerm zero{{cx{0}, cx{0}}, {cx{0}, cx{1}, cx{0}}};
    const auto rep = make_rep({t1, zero}, 1.0, Norm::linf, Norm::linf);
    CHECK(rep.terms.size() == 1);

    CHECK_THROWS_AS(make_rep({t1}, 0.0, Norm::linf, Norm::linf),
                    std::domain_error);
    CHECK_THROWS_AS(make_rep({t1}, 1.5, Norm::linf, Norm::linf),
                    std::domain_error);
    NuclearTerm ragged{{cx{1}, cx{0}}, {cx{1}}};
    CHECK_THROWS_AS(make_rep({t1, ragged}, 1.0, Norm::linf, Norm::linf),
                    std::invalid_argument);
}

TEST_CASE("nu_s_from_rep: closed-form examples") {
    // single term: nu_s = ||x'|| ||y|| for every s; functional norm is taken
    // in the dual of the domain tag (here dual(linf) = l1)
    NuclearTerm t{{cx{1}, cx{-2}}, {cx{0}, cx{0, 3}}};
    for (double s : {0.5, 0.75, 1.0}) {
        const auto rep = make_rep({t}, s, Norm::linf, Norm::linf);
        CHECK(nu_s_from_rep(rep) == doctest::Approx(9.0).epsilon(1e-14));
    }

    // two unit terms: (1 + 1)^{1/s}
    NuclearTerm u1{{cx{1}, cx{0}}, {cx{1}, cx{0}}};
    NuclearTerm u2{{cx{0}, cx{1}}, {cx{0}, cx{1}}};
    CHECK(nu_s_from_rep(make_rep({u1, u2}, 1.0, Norm::linf, Norm::linf)) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(nu_s_from_rep(make_rep({u1, u2}, 0.5, Norm::linf, Norm::linf)) ==
          doctest::Approx(4.0).epsilon(1e-14));

    // splitting a term in half leaves the s = 1 certificate unchanged
    NuclearTerm h1{{cx{1}, cx{-2}}, {cx{0}, cx{0, 1.5}}};
    const auto split = make_rep({h1, h1}, 1.0, Norm::linf, Norm::linf);
    CHECK(nu_s_from_rep(split) == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("nu_s_hilbert_exact: diagonal example and Schatten identity") {
    Matrix d = diag_matrix({1.0, 0.25}, Norm::l2, Norm::l2);
    // (1^{1/2} + (1/4)^{1/2})^2 = 2.25
    CHECK(nu_s_hilbert_exact(d, 0.5) == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(nu_s_hilbert_exact(d, 1.0) == doctest::Approx(1.25).epsilon(1e-12));

    const Matrix m = testutil::random_matrix(5, 5, 77);
    CHECK(nu_s_hilbert_exact(m, 0.7) ==
          doctest::Approx(schatten_norm(m, 0.7)).epsilon(1e-12));
    Matrix wrong = testutil::random_matrix(3, 3, 1, Norm::linf, Norm::l2);
    CHECK_THROWS_AS(nu_s_hilbert_exact(wrong, 1.0), std::domain_error);
}

TEST_CASE("svd-built representation attains the Hilbert nu_s") {
    // T = sum sigma_k u_k v_k^H; terms x'_k = sigma_k conj(v_k), y_k = u_k
    // turn the Schatten s-norm into a representation certificate exactly
    const Matrix m = testutil::random_matrix(6, 4, 2024);
    const auto f = svd_full(m);
    const double s = 0.6;
    std::vector<NuclearTerm> terms;
    for (size_t k = 0; k < f.sigma.size(); ++k) {
        NuclearTerm t;
        t.functional.resize(m.cols);
        t.vec.resize(m.rows);
        for (int j = 0; j < m.cols; ++j)
            t.functional[j] = f.sigma[k] * std::conj(f.v.at(j, int(k)));
        for (int i = 0; i < m.rows; ++i) t.vec[i] = f.u.at(i, int(k));
        terms.push_back(std::move(t));
    }
    const auto rep = make_rep(terms, s, Norm::l2, Norm::l2);
    CHECK(nu_s_from_rep(rep) ==
          doctest::Approx(nu_s_hilbert_exact(m, s)).epsilon(1e-10));

    // and the rep reassembles the matrix
    const auto op = marked_from_rep(rep);
    Matrix diff = op.matrix;
    for (size_t i = 0; i < diff.entries.size(); ++i)
        diff.entries[i] -= m.entries[i];
    CHECK(hs_norm(diff) / hs_norm(m) < 1e-12);
}

TEST_CASE("circulant_operator: constant and delta symbols") {
    // f == 1 on 4 points: every entry 1/4, nu_bound = 1
    const auto flat = circulant_operator({cx{1}, cx{1}, cx{1}, cx{1}});
    CHECK(flat.matrix.rows == 4);
    CHECK(flat.matrix.domain == Norm::linf);
    CHECK(flat.matrix.codomain == Norm::linf);
    for (const cx& z : flat.matrix.entries)
        CHECK(std::abs(z - cx{0.25}) < 1e-15);
    CHECK(flat.nu_bound == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(flat.rep.s == 1.0);

    // f = N delta_0: the identity, nu_bound = N
    const auto id = circulant_operator({cx{4}, cx{0}, cx{0}, cx{0}});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(id.matrix.at(i, j) - (i == j ? cx{1} : cx{0})) <
                  1e-15);
    CHECK(id.nu_bound == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("circulant_operator: singular values are the symbol coefficients") {
    // samples synthesized from coefficients c have forward dft equal to c,
    // so the circulant's singular values are the moduli |c_k| sorted
    CoefficientSequence c = {cx{0.9, 0.1}, cx{-0.3, 0.4}, cx{0.05, 0},
                             cx{0, -0.2}, cx{0.6, 0.6},  cx{0.01, 0.02},
                             cx{-0.11, 0}, cx{0, 0.07}};
    const auto op = circulant_operator(synthesize(c, 1));
    const auto spec = svd(op.matrix);
    std::vector<double> expect;
    for (const cx& z : c) expect.push_back(std::abs(z));
    std::sort(expect.rbegin(), expect.rend());
    REQUIRE(spec.values.size() == expect.size());
    for (size_t k = 0; k < expect.size(); ++k)
        CHECK(spec.values[k] == doctest::Approx(expect[k]).epsilon(1e-10));

    // nu certificate dominates the nuclear norm it certifies
    CHECK(op.nu_bound + 1e-12 >= spec.values[0]);
}

TEST_CASE("random_nuclear: determinism, target nu, rank control") {
    const auto a = random_nuclear(5, 4, 0.8, 3.0, 6, 42);
    const auto b = random_nuclear(5, 4, 0.8, 3.0, 6, 42);
    CHECK(a.matrix.entries == b.matrix.entries);
    CHECK(a.nu_bound == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(nu_s_from_rep(a.rep) == doctest::Approx(3.0).epsilon(1e-12));

    const auto c = random_nuclear(5, 4, 0.8, 3.0, 6, 43);
    CHECK(a.matrix.entries != c.matrix.entries);

    const auto r1 = random_nuclear(6, 6, 1.0, 2.0, 1, 7);
    const auto spec = svd(r1.matrix);
    CHECK(spec.values[1] < 1e-12 * spec.values[0]);

    const auto re = random_nuclear(3, 3, 1.0, 1.0, 3, 9, Norm::linf,
                                   Norm::linf, true);
    for (const cx& z : re.matrix.entries) CHECK(z.imag() == 0.0);
}

TEST_CASE("canonical_factorization: chain invariants") {
    for (std::uint64_t seed : {11ull, 12ull}) {
        const auto op = random_nuclear(5, 6, 0.75, 2.5, 4, seed, Norm::linf,
                                       Norm::l1);
        const auto ch = canonical_factorization(op);
        REQUIRE(ch.d.size() == op.rep.terms.size());

        // A maps the domain into linf with norm <= 1 (unit rows in the dual
        // norm); B maps l1 into the codomain with norm <= 1 (unit columns)
        CHECK(ch.a.domain == Norm::linf);
        CHECK(ch.a.codomain == Norm::linf);
        CHECK(ch.b.domain == Norm::l1);
        CHECK(ch.b.codomain == Norm::l1);
        const auto na = operator_norm(ch.a, ch.a.domain, Norm::linf);
        const auto nb = operator_norm(ch.b, Norm::l1, ch.b.codomain);
        CHECK(na.value <= 1.0 + 1e-12);
        CHECK(nb.value <= 1.0 + 1e-12);

        // ||d||_s reproduces the certificate
        double sum = 0.0;
        for (double w : ch.d) {
            CHECK(w > 0.0);
            sum += std::pow(w, op.rep.s);
        }
        CHECK(std::pow(sum, 1.0 / op.rep.s) ==
              doctest::Approx(op.nu_bound).epsilon(1e-12));

        // B diag(d) A == T
        const Matrix mid = diag_matrix(ch.d, Norm::linf, Norm::l1);
        const Matrix t = matmul(ch.b, matmul(mid, ch.a));
        Matrix diff = t;
        for (size_t i = 0; i < diff.entries.size(); ++i)
            diff.entries[i] -= op.matrix.entries[i];
        CHECK(hs_norm(diff) / hs_norm(op.matrix) < 1e-12);
    }
}
