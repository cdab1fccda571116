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

#include "screwline/paleywiener.hpp"
#include "screwline/quadrature.hpp"
#include "screwline/screw.hpp"

using namespace screwline;

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

Complex random_point(std::mt19937_64& rng, double re = 4.0, double im = 2.0) {
    std::uniform_real_distribution<double> a(-re, re), b(-im, im);
    return {a(rng), b(rng)};
}

/// The series sums to a triangle wave of period 4r: -|t| on [-2r, 2r].
double triangle(double r, double t) {
    double u = std::fmod(std::abs(t), 4.0 * r);
    return u <= 2.0 * r ? -u : u - 4.0 * r;
}

}  // namespace

TEST_CASE("frame validation") {
    CHECK_THROWS_AS(PWFrame({0.0, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(PWFrame({1.0, 0}).validate(), std::invalid_argument);
    CHECK_NOTHROW(PWFrame({0.5, 3}).validate());
}

TEST_CASE("sinc kernel") {
    for (double r : {1.0, 2.5}) {
        Complex z(0.3, 0.7);
        CHECK(std::abs(pw_kernel(r, z, std::conj(z)) - r / pi) < 1e-15);
        CHECK(std::abs(pw_kernel(r, z, std::conj(z) + 1e-9) - r / pi) < 1e-12);
    }
    CHECK(std::abs(pw_kernel(1.0, 0.0, pi)) < 1e-16);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        double r = 0.5 + k * 0.1;
        Complex z = random_point(rng), w = random_point(rng);
        // (B(w) conj A(z) - A(w) conj B(z)) / (pi (w - conj z)) with E_r = A - iB
        Complex ab = (std::sin(r * w) * std::conj(std::cos(r * z)) - std::cos(r * w) * std::conj(std::sin(r * z))) /
                     (pi * (w - std::conj(z)));
        CHECK(std::abs(pw_kernel(r, z, w) - ab) < 1e-12);
        CHECK(std::abs(pw_kernel(r, z, w) - std::conj(pw_kernel(r, w, z))) < 1e-12);
    }
    CHECK(std::abs(pw_E(1.0, 2.0) - std::exp(Complex(0.0, -2.0))) < 1e-16);
}

TEST_CASE("lattice measure and basis sampling") {
    DiscreteMeasure m = pw_measure({1.0, 1});
    REQUIRE(m.size() == 2);
    CHECK(m.atoms()[0].point.exactly_equals(-Scalar::pi() / Scalar(2)).value_or(false));
    CHECK(m.atoms()[1].point.exactly_equals(Scalar::pi() / Scalar(2)).value_or(false));
    CHECK(m.atoms()[0].mass.exactly_equals(Scalar::pi()).value_or(false));
    CHECK(m.atoms()[1].mass.exactly_equals(Scalar::pi()).value_or(false));

    DiscreteMeasure m2 = pw_measure({0.5, 3});
    CHECK(m2.size() == 6);
    CHECK(m2.atoms().back().point.exactly_equals(Scalar::pi() * Scalar(5)).value_or(false));
    CHECK(m2.atoms().back().mass.exactly_equals(Scalar::pi() * Scalar(2)).value_or(false));

    for (double r : {1.0, 0.75}) {
        for (long n = -3; n <= 3; ++n) {
            for (long k = -3; k <= 3; ++k) {
                double g = pw_lattice_point(r, k);
                Complex v = pw_basis(r, n, g) / pw_E(r, g);
                CHECK(std::abs(v - (n == k ? std::sqrt(r / pi) : 0.0)) < 1e-12);
            }
            // continuity through the removable singularity
            double g = pw_lattice_point(r, n);
            CHECK(std::abs(pw_basis(r, n, g + 1e-5) - pw_basis(r, n, g)) < 1e-5);
        }
    }
}

TEST_CASE("Gram matrix on the shifted lattice") {
    PWFrame f{1.0, 2000};
    PWGram G = pw_gram(f, 50);
    CHECK(G.gram.size() == 101);
    CHECK(G.max_deviation < 0.02);
    CHECK(G.max_deviation < 1.0 / f.N);
    // Diagonal oracle: (1/pi^2) sum_{|k| <= N} 1/(k - n + 1/2)^2.
    for (long n : {-50L, 0L, 7L, 50L}) {
        double s = 0.0;
        for (long k = -f.N; k <= f.N; ++k) s += 1.0 / std::pow(k - n + 0.5, 2);
        CHECK(std::abs(G.gram[static_cast<std::size_t>(n + 50)][static_cast<std::size_t>(n + 50)].real() - s / (pi * pi)) < 1e-12);
    }
    // The truncated norm of F_0 increases towards 1.
    double prev = 0.0;
    for (int N : {10, 20, 40, 80, 160}) {
        double d = pw_gram({1.0, N}, 0).gram[0][0].real();
        CHECK(d > prev);
        CHECK(d < 1.0);
        CHECK(1.0 - d < 1.0 / N);
        prev = d;
    }
    ConvergenceRate c = gram_convergence({1.0, 400}, 10);
    CHECK(c.ratio >= 1.5);
    CHECK(c.ratio <= 2.5);
    CHECK_THROWS_AS(pw_gram(f, -1), std::invalid_argument);
}

TEST_CASE("fundamental solution") {
    std::mt19937_64 rng(11);
    for (double r : {1.0, 2.0}) {
        ComplexMatrix2 w = pw_fundamental(r, 0.0, Complex(1.3, -0.4));
        CHECK(w[0][0] == Complex(1.0));
        CHECK(w[0][1] == Complex(0.0));
        CHECK(w[1][0] == Complex(0.0));
        CHECK(w[1][1] == Complex(1.0));
        std::uniform_real_distribution<double> t(0.0, r);
        for (int k = 0; k < 20; ++k) {
            double tt = t(rng);
            Complex z = random_point(rng, 3.0, 1.0);
            ComplexMatrix2 m = pw_fundamental(r, tt, z);
            CHECK(std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0] - 1.0) < 1e-12);
            CHECK(pw_fd_residual(r, tt, z) < 1e-6);
        }
        CHECK(pw_fd_residual(r, 0.0, 1.0, 1e-6) < 1e-5);
    }
    CHECK_THROWS_AS(pw_fundamental(1.0, 1.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(pw_fundamental(1.0, -0.1, 0.0), std::invalid_argument);
}

TEST_CASE("g_r series") {
    PWFrame f{1.0, 2000};
    CHECK(g_r_eval(f, 0.0) == 0.0);
    for (double t : {0.3, 1.0, 1.7, 2.5, 3.9, 6.2}) {
        CHECK(g_r_eval(f, t) == doctest::Approx(g_r_eval(f, -t)).epsilon(1e-14));
        CHECK(std::abs(g_r_eval(f, t) - triangle(f.r, t)) <= g_r_tail_bound(f));
    }
    PWFrame f2{2.0, 300};
    for (double t : {0.5, 3.0, 5.5}) CHECK(std::abs(g_r_eval(f2, t) - triangle(f2.r, t)) <= g_r_tail_bound(f2));

    // The same truncation through the generic evaluator with tau = mu/pi.
    ScrewFunctionData g;
    g.tau = pw_measure({1.0, 50}).scaled(Scalar(1) / Scalar::pi());
    for (double t : {-2.2, 0.4, 1.0, 3.3}) CHECK(std::abs(eval_screw(g, t) - g_r_eval({1.0, 50}, t)) < 1e-12);

    CHECK(g_r_laplace_check(f, Complex(0.0, 2.0)) < 1e-4);
    CHECK(g_r_laplace_check({1.0, 200}, Complex(0.5, 1.0)) < 1e-2);
    CHECK_THROWS_AS(g_r_laplace_check(f, 1.0), std::invalid_argument);
}

TEST_CASE("tan partial fractions") {
    for (Complex z : {Complex(0.3, 0.0), Complex(0.2, 1.0), Complex(-1.1, 0.5)}) {
        CHECK(std::abs(tan_partial_fraction({1.0, 4000}, z) - std::tan(z)) < 1e-3);
        ConvergenceRate c = tan_convergence({1.0, 200}, z);
        CHECK(c.error_2N < c.error_N);
        CHECK(c.ratio >= 1.5);
        CHECK(c.ratio <= 2.5);
    }
    CHECK(std::abs(tan_partial_fraction({0.5, 4000}, Complex(0.4, 0.2)) - std::tan(Complex(0.2, 0.1))) < 1e-3);
}

TEST_CASE("Weyl transform is a Fourier transform") {
    PWFrame f{1.0, 1};
    std::vector<Complex> zs = {0.0, 0.7, Complex(2.0, 0.5), Complex(-3.0, -1.0), 9.5, Complex(6.0, 2.0)};
    PWStepVector one{{1.0}, {}};
    for (Complex z : zs) {
        Complex expect = std::abs(z) == 0.0 ? Complex(1.0 / pi) : std::sin(z) / (pi * z);
        CHECK(std::abs(pw_weyl(1.0, one, z) - expect) < 1e-14);
    }
    PWFourierCheck c1 = pw_weyl_is_fourier(f, one, zs);
    CHECK(c1.residual < 1e-13);
    CHECK(std::abs(c1.constant - 1.0 / (2.0 * pi)) < 1e-14);

    PWFourierCheck c0 = pw_weyl_is_fourier(f, PWStepVector{}, zs);
    CHECK(c0.residual == 0.0);
    CHECK(pw_weyl(1.0, PWStepVector{}, 1.0) == Complex(0.0));

    std::mt19937_64 rng(2);
    std::normal_distribution<double> nd;
    for (double r : {1.0, 2.0}) {
        for (int k = 0; k < 10; ++k) {
            PWStepVector F;
            for (int j = 0; j < 4; ++j) {
                F.f.emplace_back(nd(rng), nd(rng));
                F.g.emplace_back(nd(rng), nd(rng));
            }
            PWFourierCheck c = pw_weyl_is_fourier({r, 1}, F, zs);
            CHECK(c.residual < 1e-8);
            CHECK(std::abs(c.constant - 1.0 / (2.0 * pi)) < 1e-12);
            // Direct quadrature of the Weyl integral as an independent oracle.
            for (Complex z : zs) {
                Complex q = quad::composite(
                    [&](double t) {
                        Complex fv = 0.0, gv = 0.0;
                        for (int j = 3; j >= 0; --j) {
                            fv = fv * t + F.f[j];
                            gv = gv * t + F.g[j];
                        }
                        return fv * std::cos(t * z) + gv * std::sin(t * z);
                    },
                    0.0, r, 8);
                CHECK(std::abs(pw_weyl(r, F, z) - q / pi) < 1e-10 * (1.0 + std::abs(q)));
            }
        }
    }
}
