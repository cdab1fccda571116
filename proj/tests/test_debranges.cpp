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

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "screwline/debranges.hpp"
#include "screwline/quadrature.hpp"
#include "screwline/roots.hpp"
#include "test_support.hpp"

using namespace screwline;
using namespace screwline::testing;

namespace {

const double PI = std::numbers::pi;

Scalar pi_times(long p, long d = 1) { return Scalar(Rational(p, d)) * Scalar::pi(); }

bool exactly(const Scalar& a, const Scalar& b) { return a.exactly_equals(b).value_or(false); }

/// p equals s * expected, exactly.
bool same(const ScaledPolynomial& p, const Scalar& s, const Polynomial& expected) {
    if (!p.is_exact()) return false;
    auto r = (p.scale / s).rational();
    return r && p.poly * *r == expected;
}

ScaledPolynomial sp(const Polynomial& p) { return ScaledPolynomial(Scalar(1), p); }

/// int_R p(x) conj q(x) / |E(x)|^2 dx via x = tan(u); an oracle independent
/// of the level set.
Complex l2_oracle(const Polynomial& E, const Polynomial& p, const Polynomial& q) {
    auto f = [&](double u) {
        double x = std::tan(u), c = std::cos(u);
        Complex e = E(Complex(x));
        return p(Complex(x)) * std::conj(q(Complex(x))) / std::norm(e) / (c * c);
    };
    const double h = PI / 2;
    return quad::adaptive([&](double u) { return f(u).real(); }, -h, h, 1e-14, 12) +
           Complex(0, 1) * quad::adaptive([&](double u) { return f(u).imag(); }, -h, h, 1e-14, 12);
}

Polynomial unit_rotated_cubic(std::mt19937& rng) { return hb_cubic(rng) * ExactComplex(Rational(3, 5), Rational(4, 5)); }

}  // namespace

TEST_CASE("frame construction") {
    HermiteBiehlerFrame f = make_frame(E0());
    CHECK(f.A == poly({{0}, {-1}, {0}, {1}}));
    CHECK(f.B == poly({{1}, {0}, {-2}}));
    CHECK(f.mu.exactly_equals(level_set_masses(E0())));
    CHECK_THROWS_WITH(make_frame(poly({{0, -1}, {1}})), "not Hermite-Biehler");
    CHECK_THROWS_AS(make_frame(Polynomial(1)), std::invalid_argument);
    // E = 1 - iz: A = 1 has no zeros.
    CHECK_THROWS_AS(make_frame(poly({{1}, {0, -1}})), std::domain_error);
}

TEST_CASE("inner products on H(E0)") {
    HermiteBiehlerFrame f = make_frame(E0());
    Polynomial one(1), z = Polynomial::x(), z2 = z * z;
    CHECK(exactly(inner_product(f, one, one), pi_times(2)));
    CHECK(exactly(inner_product(f, z, z), Scalar::pi()));
    CHECK(exactly(inner_product(f, one, z2), Scalar::pi()));
    CHECK(exactly(inner_product(f, one, z), Scalar(0)));
    CHECK(exactly(inner_product(f, z, z2), Scalar(0)));
    CHECK(exactly(inner_product(f, z2, z2), Scalar::pi()));
    CHECK(exactly(inner_product(f, Polynomial(), z2), Scalar(0)));
    CHECK_THROWS_WITH(inner_product(f, z * z2, one), "not a member of H(E)");

    Polynomial p = z2 - one;
    Scalar level = inner_product(f, p, p);
    CHECK(exactly(level, Scalar::pi()));
    CHECK(std::abs(l2_oracle(E0(), p, p) - level.value()) < 1e-6);
}

TEST_CASE("level-set inner product matches the L2(R) integral on random frames") {
    std::mt19937 rng(41);
    for (int k = 0; k < 5; ++k) {
        Polynomial E = unit_rotated_cubic(rng);
        HermiteBiehlerFrame f = make_frame(E);
        Polynomial p = random_poly(rng, 2), q = random_poly(rng, 1);
        Complex a = inner_product(f, p, q).value();
        CHECK(std::abs(a - l2_oracle(E, p, q)) < 1e-8 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("moments and Hankel determinants") {
    MomentTable t = moments(make_frame(E0()));
    REQUIRE(t.moments.size() == 5);
    CHECK(exactly(t.moments[0], pi_times(2)));
    for (int k = 1; k <= 4; ++k) CHECK(exactly(t.moments[k], pi_times(k % 2 ? 0 : 1)));
    REQUIRE(t.hankel.size() == 3);
    CHECK(exactly(t.hankel[0], pi_times(2)));
    CHECK(exactly(t.hankel[1], Scalar(2) * Scalar::pi() * Scalar::pi()));
    CHECK(exactly(t.hankel[2], Scalar::pi() * Scalar::pi() * Scalar::pi()));

    HermiteBiehlerFrame one = make_frame(poly({{0, 1}, {1}}));
    MomentTable t1 = moments(one);
    REQUIRE(t1.moments.size() == 1);
    CHECK(exactly(t1.moments[0], one.mu.total_mass()));

    // Oracle: Gram matrix from the L2(R) integral, determinants by Eigen.
    std::mt19937 rng(43);
    for (int k = 0; k < 3; ++k) {
        Polynomial E = unit_rotated_cubic(rng);
        MomentTable m = moments(make_frame(E));
        Eigen::MatrixXcd G(3, 3);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) G(i, j) = l2_oracle(E, Polynomial::monomial(1, i), Polynomial::monomial(1, j));
        }
        for (int n = 0; n < 3; ++n) {
            double h = m.hankel[n].real();
            CHECK(h > 0.0);
            Complex oracle = G.topLeftCorner(n + 1, n + 1).determinant();
            CHECK(std::abs(oracle - h) < 1e-7 * h);
        }
    }
}

TEST_CASE("Bareiss determinant") {
    ScalarMatrix m{{Scalar(0), Scalar(2), Scalar(1)}, {Scalar(3), Scalar(1), Scalar(4)}, {Scalar(1), Scalar(5), Scalar(9)}};
    // 0*(9-20) - 2*(27-4) + 1*(15-1) = -32
    CHECK(exactly(det_bareiss(m), Scalar(-32)));
    ScalarMatrix singular{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK(det_bareiss(singular).is_zero());
    CHECK(exactly(det_bareiss({}), Scalar(1)));
}

TEST_CASE("reproducing kernel: two formulas") {
    HermiteBiehlerFrame f = make_frame(E0());
    for (Complex w : {Complex(0.3, 0.2), Complex(-2.0, 0.0), Complex(1.5, -0.7)}) {
        CHECK(std::abs(kernel_ab(f, 0.0, w) - (1.0 - w * w) / PI) < 1e-14);
    }
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::mt19937 prng(53);
    for (const Polynomial& E : {E0(), unit_rotated_cubic(prng)}) {
        HermiteBiehlerFrame g = make_frame(E);
        for (int k = 0; k < 20; ++k) {
            Complex z(u(rng), u(rng)), w(u(rng), u(rng));
            Complex a = kernel_ab(g, z, w), m = kernel_moment(g, z, w);
            CHECK(std::abs(a - m) < 1e-10 * (1.0 + std::abs(a)));
            CHECK(std::abs(a - std::conj(kernel_ab(g, w, z))) < 1e-12 * (1.0 + std::abs(a)));
        }
        // The diagonal w = conj z goes through the same polynomial quotient.
        Complex z(0.4, 0.9);
        CHECK(std::abs(kernel_ab(g, z, std::conj(z)) - kernel_moment(g, z, std::conj(z))) < 1e-10);
        CHECK(kernel_ab(g, z, z).real() > 0.0);
    }
}

TEST_CASE("reproducing property") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (const Polynomial& E : {E0(), unit_rotated_cubic(rng)}) {
        HermiteBiehlerFrame f = make_frame(E);
        for (int k = 0; k < 10; ++k) {
            Polynomial p = random_poly(rng, 2);
            Complex w(u(rng), k % 2 ? u(rng) : 0.0);
            Complex acc = 0.0;
            for (const auto& a : f.mu.atoms()) {
                double g = a.point.real();
                acc += p(Complex(g)) * std::conj(kernel_ab(f, w, g)) * a.mass.real() / std::norm(E(Complex(g)));
            }
            CHECK(std::abs(acc - p(w)) < 1e-10 * (1.0 + std::abs(p(w))));
        }
    }
}

TEST_CASE("Gram-Schmidt basis") {
    HermiteBiehlerFrame f = make_frame(E0());
    auto q = gram_schmidt_basis(f);
    REQUIRE(q.size() == 3);
    CHECK(same(q[0], Scalar(1) / pi_times(2).sqrt(), Polynomial(1)));
    CHECK(same(q[1], Scalar(1) / Scalar::sqrt_pi(), Polynomial::x()));
    CHECK(same(q[2], Scalar(1) / pi_times(2).sqrt(), poly({{-1}, {0}, {2}})));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(exactly(inner_product(f, q[i], q[j]), Scalar(i == j ? 1 : 0)));
    }

    HermiteBiehlerFrame one = make_frame(poly({{0, 1}, {1}}));
    auto q1 = gram_schmidt_basis(one);
    REQUIRE(q1.size() == 1);
    CHECK(same(q1[0], Scalar(1) / one.mu.total_mass().sqrt(), Polynomial(1)));

    std::mt19937 rng(61);
    for (int k = 0; k < 5; ++k) {
        HermiteBiehlerFrame g = make_frame(unit_rotated_cubic(rng));
        auto b = gram_schmidt_basis(g);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(degree(b[i]) == static_cast<int>(i));
            for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(inner_product(g, b[i], b[j]).value() - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("S_theta and membership") {
    HermiteBiehlerFrame f = make_frame(E0());
    ScaledPolynomial s0 = s_theta(f, Angle());
    CHECK(same(s0, Scalar(1), poly({{0, -2}, {0}, {0, 4}})));
    CHECK(s_theta_in_space(f, Angle()));
    Angle half = Angle::pi_times(Rational(1, 2));
    CHECK(same(s_theta(f, half), Scalar(1), poly({{0}, {0, -2}, {0}, {0, 2}})));
    CHECK_FALSE(s_theta_in_space(f, half));

    // Oracle: S_theta drops degree iff e^{i theta} l = e^{-i theta} conj(l).
    auto leading_cancels = [](const Polynomial& E, double t) {
        Complex l = E.lead().to_complex();
        return std::abs(std::exp(Complex(0, t)) * l - std::exp(Complex(0, -t)) * std::conj(l)) < 1e-12;
    };
    int hits = 0;
    for (int k = 0; k < 64; ++k) {
        Angle t = Angle::pi_times(Rational(k, 64));
        bool in = s_theta_in_space(f, t);
        CHECK(in == leading_cancels(E0(), t.radians()));
        hits += in;
    }
    CHECK(hits == 1);

    std::mt19937 rng(67);
    for (int trial = 0; trial < 5; ++trial) {
        HermiteBiehlerFrame g = make_frame(unit_rotated_cubic(rng));
        Angle m = member_angle(g);
        CHECK(m.radians() >= 0.0);
        CHECK(m.radians() < PI);
        CHECK(s_theta_in_space(g, m, 1e-12));
        int count = 0;
        for (int k = 0; k < 64; ++k) count += s_theta_in_space(g, Angle(k * PI / 64 + 1e-3), 1e-12);
        CHECK(count == 0);
    }
}

TEST_CASE("eigenbasis of M_{pi/2} on H(E0)") {
    HermiteBiehlerFrame f = make_frame(E0());
    ExtensionEigenbasis e = extension_eigenbasis(f, Angle::pi_times(Rational(1, 2)));
    CHECK_FALSE(e.s_theta_member);
    REQUIRE(e.eigenvalues.size() == 3);
    CHECK(exactly(e.eigenvalues[0], Scalar(-1)));
    CHECK(exactly(e.eigenvalues[1], Scalar(0)));
    CHECK(exactly(e.eigenvalues[2], Scalar(1)));
    REQUIRE(e.normalized.size() == 3);
    Scalar r2pi = pi_times(2).sqrt();
    CHECK(same(e.normalized[0], Scalar(1) / r2pi, poly({{0}, {-1}, {1}})));
    CHECK(same(e.normalized[1], Scalar(1) / Scalar::sqrt_pi(), poly({{-1}, {0}, {1}})));
    CHECK(same(e.normalized[2], Scalar(1) / r2pi, poly({{0}, {1}, {1}})));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(exactly(inner_product(f, e.normalized[i], e.normalized[j]), Scalar(i == j ? 1 : 0)));
        // (z - g) * eigenfunction = S_theta
        CHECK(same(e.eigenfunctions[i], Scalar(1), divmod(poly({{0}, {0, -2}, {0}, {0, 2}}), poly({-*e.eigenvalues[i].rational(), {1}})).first));
    }
    // Boundary values F/E0 at the eigenvalues.
    auto ratio = [&](std::size_t k, long g) { return e.normalized[k](ExactComplex(g)) / Scalar(E0()(ExactComplex(g))); };
    CHECK(exactly(ratio(1, 0), Scalar(ExactComplex(0, -1)) / Scalar::sqrt_pi()));
    Scalar expected = Scalar(ExactComplex(0, -1)) * (Scalar(2) / Scalar::pi()).sqrt();
    CHECK(exactly(ratio(2, 1), expected));
    CHECK(exactly(ratio(0, -1), expected));
}

TEST_CASE("eigenbasis: member angle, generic frames, degree one") {
    HermiteBiehlerFrame f = make_frame(E0());
    ExtensionEigenbasis e0 = extension_eigenbasis(f, Angle());
    CHECK(e0.s_theta_member);
    REQUIRE(e0.eigenvalues.size() == 2);
    CHECK(std::abs(e0.eigenvalues[0].real() + std::sqrt(0.5)) < 1e-14);
    REQUIRE(e0.normalized.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(inner_product(f, e0.normalized[i], e0.normalized[j]).value() - (i == j ? 1.0 : 0.0)) < 1e-12);
    }

    std::mt19937 rng(71);
    std::uniform_real_distribution<double> u(0.0, PI);
    for (int trial = 0; trial < 5; ++trial) {
        HermiteBiehlerFrame g = make_frame(unit_rotated_cubic(rng));
        for (Angle t : {Angle(u(rng)), Angle::pi_times(Rational(1, 2)), Angle::pi_times(Rational(1, 3))}) {
            ExtensionEigenbasis b = extension_eigenbasis(g, t);
            REQUIRE(b.normalized.size() == 3);
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(inner_product(g, b.normalized[i], b.normalized[j]).value() - (i == j ? 1.0 : 0.0)) < 1e-10);
                CHECK(std::abs(s_theta(g, t)(b.eigenvalues[i].value())) < 1e-9 * s_theta(g, t).approx.max_abs_coeff());
            }
        }
        // Norm of A/(z - g) against 2/(pi |Theta'(g)|) = |B(g)| / (pi |A'(g)|).
        ExtensionEigenbasis b = extension_eigenbasis(g, Angle::pi_times(Rational(1, 2)));
        for (const Scalar& x : b.eigenvalues) {
            double gx = x.real();
            Complex theta_prime = 2.0 * Complex(0, 1) * derivative(g.A)(Complex(gx)) / g.B(Complex(gx));
            ScaledPolynomial F = divide_linear(ScaledPolynomial(Scalar(1), g.A), x);
            double expected = PI * std::abs(theta_prime) / 2.0;
            CHECK(std::abs(inner_product(g, F, F).real() - expected) < 1e-9 * expected);
        }
    }

    HermiteBiehlerFrame one = make_frame(poly({{0, 1}, {1}}));
    for (Angle t : {Angle::pi_times(Rational(1, 2)), Angle(0.7)}) {
        ExtensionEigenbasis b = extension_eigenbasis(one, t);
        REQUIRE(b.eigenvalues.size() == 1);
        CHECK(degree(b.eigenfunctions[0]) == 0);
        CHECK(degree(b.normalized[0]) == 0);
    }
}

TEST_CASE("domain of M_theta") {
    HermiteBiehlerFrame f = make_frame(E0());
    Angle half = Angle::pi_times(Rational(1, 2));
    // F = 1, theta = pi/2, w0 = i: (-2i)(-2 + i z + z^2).
    ScaledPolynomial d = domain_element(f, half, sp(Polynomial(1)));
    CHECK(same(d, Scalar(1), poly({{0, 4}, {2}, {0, -2}})));
    CHECK(domain_dimension(f, Angle()) == 2);
    CHECK(domain_dimension(f, half) == 3);
    CHECK(domain_dimension(f, Angle::pi_times(Rational(1, 4))) == 3);
    std::mt19937 rng(73);
    for (int trial = 0; trial < 3; ++trial) {
        HermiteBiehlerFrame g = make_frame(unit_rotated_cubic(rng));
        CHECK(g.degree() - domain_dimension(g, member_angle(g)) == 1);
        CHECK(domain_dimension(g, Angle(member_angle(g).radians() + 0.5)) == 3);
    }
}

TEST_CASE("SL2 action") {
    HermiteBiehlerFrame f = make_frame(E0());
    HermiteBiehlerFrame same_frame = sl2_transform(f, identity_matrix2());
    CHECK(same_frame.E == f.E);
    HermiteBiehlerFrame rot = sl2_transform(f, rotation_matrix(Rational(3, 5), Rational(4, 5)));
    CHECK(rot.E == f.E * ExactComplex(Rational(3, 5), Rational(4, 5)));
    CHECK_THROWS_WITH(sl2_transform(f, {{{2, 0}, {0, 1}}}), "matrix not in SL2(R)");
    CHECK_THROWS_AS(rotation_matrix(Rational(1), Rational(1)), std::invalid_argument);

    std::mt19937 rng(79);
    std::uniform_int_distribution<long> n(1, 7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        ExactComplex a(Rational(n(rng), n(rng))), b(Rational(n(rng), n(rng))), c(Rational(-n(rng), n(rng)));
        ExactComplex d = (ExactComplex(1) + b * c) / a;
        HermiteBiehlerFrame g = sl2_transform(f, {{{a, b}, {c, d}}});
        for (int k = 0; k < 20; ++k) {
            Complex z(u(rng), u(rng)), w(u(rng), u(rng));
            CHECK(std::abs(kernel_ab(g, z, w) - kernel_ab(f, z, w)) < 1e-10);
        }
    }
}
