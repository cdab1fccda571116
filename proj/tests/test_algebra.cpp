/*
   Copyright 2026 The screwline Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "screwline/matrix_polynomial.hpp"
#include "screwline/roots.hpp"
#include "test_support.hpp"

using namespace screwline;
using namespace screwline::testing;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK(to_string(parse_rational("-3/9")) == "-1/3");
}

TEST_CASE("symbolic scalars") {
    Scalar two_pi = Scalar(2) * Scalar::pi();
    Scalar q0 = Scalar(1) / two_pi.sqrt();
    REQUIRE(q0.is_exact());
    CHECK(q0.str() == "1/2*sqrt(2)*pi^(-1/2)");
    CHECK(std::abs(q0.value() - 1.0 / std::sqrt(2.0 * M_PI)) < 1e-15);
    Scalar back = q0 * q0 * two_pi;
    CHECK(back.exactly_equals(Scalar(1)).value());
    CHECK((Scalar::pi() * Scalar::pi() * Scalar::pi()).str() == "1*pi^(3)");
    // Unlike terms fall back to floating point.
    Scalar mixed = Scalar(1) + Scalar::pi();
    CHECK_FALSE(mixed.is_exact());
    CHECK(std::abs(mixed.value() - (1.0 + M_PI)) < 1e-15);
    CHECK(Scalar(-4).sqrt().exactly_equals(Scalar(ExactComplex(0, 2))).value());
    CHECK(Angle::pi_times(Rational(1, 2)).cos().is_zero());
    CHECK(Angle::pi_times(Rational(3, 4)).sin().exactly_equals(Scalar(Rational(1, 2)) * Scalar(2).sqrt()).value());
    CHECK(Angle::parse("pi/2").str() == "pi/2");
    CHECK(Angle::parse("3*pi/4").pi_multiple() == Rational(3, 4));
    CHECK_FALSE(Angle::parse("0.25").pi_multiple().has_value());
}

TEST_CASE("poly_eval") {
    Polynomial E = E0();
    CHECK(poly_eval(E, ExactComplex(0)) == ExactComplex(0, -1));
    // Horner oracle: i^3 + 2i*i^2 - i - i = -5i.
    CHECK(poly_eval(E, ExactComplex::i()) == ExactComplex(0, -5));
    CHECK(std::abs(poly_eval(E, Complex(0, 1)) - Complex(0, -5)) < 1e-15);
    CHECK(poly_eval(Polynomial(), ExactComplex(7)).is_zero());
}

TEST_CASE("sharp") {
    Polynomial E = E0();
    CHECK(sharp(E) == poly({{0, 1}, {-1}, {0, -2}, {1}}));
    Polynomial real = poly({{1}, {-3}, {5}});
    CHECK(sharp(real) == real);
    CHECK(sharp(sharp(E)) == E);
    std::mt19937 rng(3);
    for (int k = 0; k < 10; ++k) {
        Polynomial p = random_poly(rng, 3), q = random_poly(rng, 4);
        CHECK(sharp(p * q) == sharp(p) * sharp(q));
    }
}

TEST_CASE("ab_split") {
    auto [A, B] = ab_split(E0());
    CHECK(A == poly({{0}, {-1}, {0}, {1}}));
    CHECK(B == poly({{1}, {0}, {-2}}));
    CHECK(A.is_real());
    CHECK(B.is_real());
    auto [A1, B1] = ab_split(Polynomial(1));
    CHECK(A1 == Polynomial(1));
    CHECK(B1.is_zero());
    std::mt19937 rng(5);
    for (int k = 0; k < 10; ++k) {
        Polynomial E = random_poly(rng, 4);
        auto [a, b] = ab_split(E);
        CHECK(a - b * ExactComplex::i() == E);
    }
}

TEST_CASE("roots") {
    auto r = roots(E0());
    REQUIRE(r.size() == 3);
    std::vector<Complex> expected{{-0.744862, -0.122561}, {0.0, -1.75488}, {0.744862, -0.122561}};
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(r[k] - expected[k]) < 5e-6);

    auto ri = roots(poly({{1}, {0}, {1}}));
    CHECK(std::abs(ri[0] - Complex(0, -1)) < 1e-14);
    CHECK(std::abs(ri[1] - Complex(0, 1)) < 1e-14);

    auto [A, B] = ab_split(E0());
    auto ra = roots(A);
    CHECK(std::abs(ra[0] + 1.0) < 1e-14);
    CHECK(std::abs(ra[1]) < 1e-14);
    CHECK(std::abs(ra[2] - 1.0) < 1e-14);

    CHECK_THROWS_WITH(roots(Polynomial(3)), "no roots");
    CHECK_THROWS_WITH(roots(Polynomial()), "no roots");
}

TEST_CASE("roots agree with companion-matrix eigenvalues and re-expand") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(rng, 3 + trial % 6);
        CPolynomial c = p.to_complex();
        int n = c.degree();
        auto r = roots(p);
        // Independent oracle: eigenvalues of the companion matrix.
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i < n; ++i) M(i, i - 1) = 1.0;
        for (int i = 0; i < n; ++i) M(i, n - 1) = -c.coeff(i) / c.coeff(n);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
        for (int i = 0; i < n; ++i) {
            double best = 1e300;
            for (Complex x : r) best = std::min(best, std::abs(x - es.eigenvalues()(i)));
            CHECK(best < 1e-8);
        }
        CPolynomial prod{Complex(1.0)};
        for (Complex x : r) prod = prod * CPolynomial{-x, 1.0};
        CPolynomial normalized = c * (1.0 / c.coeff(n));
        CHECK(distance(prod, normalized) < 1e-10 * normalized.max_abs_coeff());
    }
}

TEST_CASE("hb_test") {
    CHECK(hb_test(E0()));
    CHECK_FALSE(hb_test(poly({{0, -1}, {1}})));
    CHECK_FALSE(hb_test(Polynomial::x()));
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0), v(0.01, 3.0);
    Polynomial E = E0();
    for (int k = 0; k < 100; ++k) {
        Complex z(u(rng), v(rng));
        CHECK(std::abs(sharp(E)(z) / E(z)) < 1.0);
    }
}

TEST_CASE("partial_fractions") {
    RationalFunction q0 = Q0();
    auto pf = partial_fractions(q0);
    REQUIRE(pf.poles.size() == 3);
    CHECK(pf.polynomial_part.is_zero());
    // poles sorted -1, 0, 1
    CHECK(*pf.exact_poles[0] == ExactComplex(-1));
    CHECK(*pf.exact_poles[1] == ExactComplex(0));
    CHECK(*pf.exact_poles[2] == ExactComplex(1));
    CHECK(*pf.exact_residues[0] == ExactComplex(Rational(-1, 2)));
    CHECK(*pf.exact_residues[1] == ExactComplex(-1));
    CHECK(*pf.exact_residues[2] == ExactComplex(Rational(-1, 2)));

    RationalFunction r(poly({{-1}, {0}, {1}}), E0());
    auto pr = partial_fractions(r);
    REQUIRE(pr.poles.size() == 3);
    Complex sum = 0.0;
    for (Complex x : pr.residues) sum += x;
    CHECK(std::abs(sum - 1.0) < 1e-12);

    auto pp = partial_fractions(RationalFunction(E0()));
    CHECK(pp.poles.empty());
    CHECK(pp.polynomial_part == E0());

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (const RationalFunction& f : {q0, r}) {
        auto d = partial_fractions(f);
        for (int k = 0; k < 20; ++k) {
            Complex z(u(rng), u(rng));
            CHECK(std::abs(d(z) - f(z)) < 1e-10 * (1.0 + std::abs(f(z))));
        }
    }
    RationalFunction doubled(Polynomial(1), poly({{0}, {0}, {1}}));
    CHECK_THROWS_WITH(partial_fractions(doubled), "unsupported multiplicity");
}

TEST_CASE("matrix polynomials") {
    MatrixPolynomial W = W0();
    CHECK(matpoly_det(W) == Polynomial(1));
    CHECK(W * MatrixPolynomial::identity() == W);
    std::mt19937 rng(29);
    for (int k = 0; k < 10; ++k) {
        MatrixPolynomial a(random_poly(rng, 2), random_poly(rng, 1), random_poly(rng, 3), random_poly(rng, 2));
        MatrixPolynomial b(random_poly(rng, 1), random_poly(rng, 2), random_poly(rng, 2), random_poly(rng, 1));
        CHECK(matpoly_det(matpoly_mul(a, b)) == matpoly_det(a) * matpoly_det(b));
    }
    ExactMatrix2 at0 = matpoly_eval(W, ExactComplex(0));
    CHECK(at0 == identity_matrix2());
}
