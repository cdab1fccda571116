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

#include "screwline/canonical.hpp"
#include "screwline/roots.hpp"
#include "test_support.hpp"

using namespace screwline;
using namespace screwline::testing;

namespace {

ExactComplex half(long p) { return q(p, 2); }

Hamiltonian H0() {
    return Hamiltonian({Segment(Rational(1, 2), Angle::pi_times(Rational(1, 2))), Segment(Rational(4), Angle()),
                        Segment(Rational(1, 2), Angle::pi_times(Rational(1, 2)))});
}

/// The (C, D) row of a random Hermite-Biehler cubic with symmetric zeros,
/// scaled so that D(0) = 1.
std::pair<Polynomial, Polynomial> random_row(std::mt19937& rng) {
    Polynomial E = hb_cubic(rng);
    auto [A, B] = ab_split(E);
    ExactComplex s = ExactComplex(1) / B(ExactComplex(0));
    return {A * s, B * s};
}

}  // namespace

TEST_CASE("validate_transfer") {
    CHECK(validate_transfer(W0()).pass);
    CHECK(validate_transfer(MatrixPolynomial::identity()).pass);
    MatrixPolynomial bad = W0();
    bad(0, 1) = bad(0, 1) * ExactComplex(-1);
    TransferReport r = validate_transfer(bad);
    CHECK_FALSE(r.pass);
    CHECK(std::find(r.failures.begin(), r.failures.end(), "det W != 1") != r.failures.end());
    // det = 1 and W(0) = I but the lower kernel quotient is negative.
    TransferReport wrong_sign = validate_transfer(MatrixPolynomial(Polynomial(1), Polynomial(), Polynomial::x(), Polynomial(1)));
    CHECK_FALSE(wrong_sign.pass);
    CHECK(wrong_sign.failures.front().rfind("(D conj C - C conj D)", 0) == 0);
}

TEST_CASE("bezout completion") {
    Polynomial C = W0().C(), D = W0().D();
    auto [A, B] = bezout_complete(C, D);
    CHECK(A == poly({{1}, {0}, {-2}}));
    CHECK(B == poly({{0}, {4}}));

    auto unit = bezout_solve(Polynomial::x(), Polynomial(1));
    CHECK(unit.first == Polynomial(1));
    CHECK(unit.second.is_zero());
    // (z, 1) completes algebraically but [[1, 0], [z, 1]] is not J-inner;
    // the orientation (-z, 1) is.
    CHECK_THROWS_WITH(bezout_complete(Polynomial::x(), Polynomial(1)), "completion not J-inner");
    CHECK(bezout_complete(poly({{0}, {-1}}), Polynomial(1)).first == Polynomial(1));
    CHECK_THROWS_WITH(bezout_complete(C, Polynomial::x()), "C,D not coprime");

    std::mt19937 rng(83);
    for (int k = 0; k < 10; ++k) {
        auto [c, d] = random_row(rng);
        auto [a, b] = bezout_complete(c, d);
        CHECK(a * d - b * c == Polynomial(1));
        CHECK(a.degree() < c.degree());
        CHECK(b.degree() < d.degree());
    }
}

TEST_CASE("peel_factor") {
    auto [V, M] = peel_factor(W0());
    CHECK(M.alpha == 0);
    CHECK(M.beta == 0);
    CHECK(M.gamma == Rational(1, 2));
    CHECK(V == MatrixPolynomial(Polynomial(1), poly({{0}, {4}}), poly({{0}, half(-1)}), poly({{1}, {0}, {-2}})));
    auto [V2, M2] = peel_factor(V);
    CHECK(M2.alpha == 4);
    CHECK(M2.beta == 0);
    CHECK(M2.gamma == 0);
    CHECK(V2 == MatrixPolynomial(Polynomial(1), Polynomial(), poly({{0}, half(-1)}), Polynomial(1)));

    std::mt19937 rng(89);
    std::uniform_int_distribution<long> n(-6, 6), d(1, 6);
    for (int k = 0; k < 10; ++k) {
        Rational a(n(rng), d(rng)), b(n(rng), d(rng)), lam(d(rng), d(rng));
        a.canonicalize();
        b.canonicalize();
        lam.canonicalize();
        if (sgn(a) == 0 && sgn(b) == 0) a = 1;
        ElementaryFactor m{lam * a * a, lam * a * b, lam * b * b};
        auto [I, got] = peel_factor(m.factor());
        CHECK(I == MatrixPolynomial::identity());
        CHECK(got.alpha == m.alpha);
        CHECK(got.beta == m.beta);
        CHECK(got.gamma == m.gamma);
    }
    CHECK_THROWS_WITH(peel_factor(MatrixPolynomial::identity()), "not factorable: matrix is not of canonical-product form");
    // det 1 and W(0) = I, but the only candidate factor has gamma = -1.
    MatrixPolynomial lower(Polynomial(1), Polynomial(), Polynomial::x(), Polynomial(1));
    CHECK_THROWS_WITH(peel_factor(lower), "not factorable: matrix is not of canonical-product form");
}

TEST_CASE("factorize W0") {
    Hamiltonian H = factorize(W0());
    REQUIRE(H.size() == 3);
    CHECK(H.segments()[0].length == Rational(1, 2));
    CHECK(H.segments()[1].length == 4);
    CHECK(H.segments()[2].length == Rational(1, 2));
    CHECK(H.segments()[0].theta.str() == "pi/2");
    CHECK(H.segments()[1].theta.str() == "0");
    CHECK(H.segments()[2].theta.str() == "pi/2");
    CHECK(H.breakpoints() == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(9, 2), Rational(5)});
    CHECK(regular_points(H) == H.breakpoints());
    CHECK(H.trace_integral().exactly_equals(Scalar(5)).value());

    Hamiltonian one = factorize(ElementaryFactor{Rational(4), Rational(0), Rational(0)}.factor());
    REQUIRE(one.size() == 1);
    CHECK(one.segments()[0].length == 4);
    CHECK(one.segments()[0].theta.str() == "0");

    CHECK_THROWS_WITH(Hamiltonian({Segment(Rational(1), Angle()), Segment(Rational(2), Angle())}), "consecutive factors of equal type");
    CHECK_THROWS_AS(Hamiltonian({Segment(Rational(0), Angle())}), std::invalid_argument);
    MatrixPolynomial bad = W0();
    bad(0, 1) = bad(0, 1) * ExactComplex(-1);
    CHECK_THROWS_AS(factorize(bad), std::invalid_argument);
}

TEST_CASE("fundamental solution of H0") {
    Hamiltonian H = H0();
    CHECK(fundamental_solution(H, Rational(5)) == W0());
    CHECK(fundamental_solution(H, Rational(0)) == MatrixPolynomial::identity());
    Polynomial z = Polynomial::x();

    MatrixPolynomial a = fundamental_solution(H, Rational(1, 4));
    CHECK(a == MatrixPolynomial(Polynomial(1), Polynomial(), poly({{0}, q(-1, 4)}), Polynomial(1)));
    MatrixPolynomial b = fundamental_solution(H, Rational(3));
    CHECK(b == MatrixPolynomial(Polynomial(1), poly({{0}, half(5)}), poly({{0}, half(-1)}), poly({{1}, {0}, q(-5, 4)})));
    MatrixPolynomial c = fundamental_solution(H, Rational(19, 4));
    CHECK(c == MatrixPolynomial(poly({{1}, {0}, {-1}}), poly({{0}, {4}}), poly({{0}, q(-3, 4), {0}, half(1)}), poly({{1}, {0}, {-2}})));

    for (const Rational& t : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2), Rational(9, 2), Rational(24, 5), Rational(5)}) {
        MatrixPolynomial W = fundamental_solution(H, t);
        CHECK(matpoly_det(W) == Polynomial(1));
        ComplexMatrix2 f = fundamental_solution(H, t.get_d(), Complex(0.3, 0.7));
        ComplexMatrix2 e = W(Complex(0.3, 0.7));
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) CHECK(std::abs(f[i][j] - e[i][j]) < 1e-13);
        }
    }
    CHECK_THROWS_AS(fundamental_solution(H, Rational(6)), std::out_of_range);
    CHECK_THROWS_AS(fundamental_solution(H, -0.1, Complex(1.0)), std::out_of_range);

    // d/dt W J = z W H, checked by central differences inside each segment.
    Complex zz(0.4, -1.1);
    for (double t : {0.2, 1.0, 3.7, 4.8}) {
        double h = 1e-5;
        ComplexMatrix2 p = fundamental_solution(H, t + h, zz), m = fundamental_solution(H, t - h, zz), w = fundamental_solution(H, t, zz);
        const auto& dir = H.segments()[H.segment_at(t)].direction;
        Complex hm[2][2] = {{dir[0].value(), dir[1].value()}, {dir[1].value(), dir[2].value()}};
        for (int i = 0; i < 2; ++i) {
            // (dW/dt J)_{i0} = dW_{i1}/dt, (dW/dt J)_{i1} = -dW_{i0}/dt
            Complex lhs0 = (p[i][1] - m[i][1]) / (2 * h), lhs1 = -(p[i][0] - m[i][0]) / (2 * h);
            Complex rhs0 = zz * (w[i][0] * hm[0][0] + w[i][1] * hm[1][0]);
            Complex rhs1 = zz * (w[i][0] * hm[0][1] + w[i][1] * hm[1][1]);
            CHECK(std::abs(lhs0 - rhs0) < 1e-7);
            CHECK(std::abs(lhs1 - rhs1) < 1e-7);
        }
    }
}

TEST_CASE("round trip on random transfer matrices") {
    std::mt19937 rng(97);
    for (int k = 0; k < 10; ++k) {
        auto [c, d] = random_row(rng);
        auto [a, b] = bezout_complete(c, d);
        MatrixPolynomial W(a, b, c, d);
        Hamiltonian H = factorize(W);
        CHECK(static_cast<int>(H.size()) == W.degree());
        for (const auto& s : H.segments()) {
            CHECK(sgn(s.length) > 0);
            Rational c2 = s.direction[0].rational()->re(), cs = s.direction[1].rational()->re(), s2 = s.direction[2].rational()->re();
            CHECK(c2 * s2 == cs * cs);
            CHECK(sgn(c2) >= 0);
            CHECK(sgn(s2) >= 0);
        }
        CHECK(fundamental_solution(H, H.total_length()) == W);
    }
}

TEST_CASE("inexact directions") {
    Hamiltonian H({Segment(Rational(1), Angle::pi_times(Rational(1, 3))), Segment(Rational(2), Angle::pi_times(Rational(1, 4)))});
    CHECK_FALSE(H.segments()[0].exact());
    CHECK(H.segments()[1].exact());
    CHECK_THROWS_AS(fundamental_solution(H, Rational(3)), std::domain_error);
    ComplexMatrix2 w = fundamental_solution(H, 3.0, Complex(0.5, 0.5));
    CHECK(std::abs(w[0][0] * w[1][1] - w[0][1] * w[1][0] - 1.0) < 1e-13);
}

TEST_CASE("subspace chain") {
    std::vector<ChainLink> chain = subspace_chain(H0());
    REQUIRE(chain.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(chain[k].dimension == k);
    CHECK(chain[0].E == Polynomial(ExactComplex(0, -1)));
    CHECK(chain[1].E == poly({{0, -1}, half(-1)}));
    CHECK(chain[2].E == poly({{0, -1}, half(-1), {0, 2}}));
    CHECK(chain[3].E == E0());
    for (int k = 1; k < 4; ++k) CHECK(hb_test(chain[k].E));
    for (Complex z : {Complex(0.2, 0.5), Complex(-1.0, 2.0), Complex(3.0, -0.4)}) {
        CHECK(chain_kernel_diagonal(H0(), 0.0, z) == 0.0);
        CHECK(chain_kernel_diagonal(H0(), 2.0, z) > 0.0);
        CHECK(chain_kernel_diagonal(H0(), 5.0, z) >= chain_kernel_diagonal(H0(), 2.0, z));
    }
}
