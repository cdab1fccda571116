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

#include "screwline/roots.hpp"
#include "screwline/spectra.hpp"
#include "test_support.hpp"

using namespace screwline;
using namespace screwline::testing;

namespace {

DiscreteMeasure tau0() {
    return DiscreteMeasure({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(Rational(1, 2))}, {Scalar(-1), Scalar(Rational(1, 2))}});
}

}  // namespace

TEST_CASE("discrete measure invariants") {
    CHECK_THROWS_AS(DiscreteMeasure({{Scalar(0), Scalar(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteMeasure({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(2)}}), std::invalid_argument);
    DiscreteMeasure m = tau0();
    CHECK(m.points() == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(m.total_mass().exactly_equals(Scalar(2)).value());
}

TEST_CASE("q_from_measure") {
    CHECK(q_from_measure({Scalar(0), Scalar(0), tau0()}) == Q0());
    RationalFunction five = q_from_measure({Scalar(0), Scalar(5), DiscreteMeasure()});
    CHECK(five == RationalFunction(Polynomial(5)));
    // m/(l - z) - m l/(1+l^2) with l = 2, m = 3
    RationalFunction one = q_from_measure({Scalar(0), Scalar(0), DiscreteMeasure({{Scalar(2), Scalar(3)}})});
    RationalFunction expected = RationalFunction(Polynomial(3), poly({{2}, {-1}})) - RationalFunction(Polynomial(q(6, 5)));
    CHECK(one == expected);
    CHECK_THROWS_AS(q_from_measure({Scalar(0), Scalar(0), DiscreteMeasure({{Scalar(0), Scalar::pi()}})}), std::invalid_argument);
}

TEST_CASE("measure_from_q") {
    NevanlinnaData d = measure_from_q(Q0());
    CHECK(d.measure.exactly_equals(tau0()));
    CHECK(d.a.exactly_equals(Scalar(0)).value());
    CHECK(d.b.exactly_equals(Scalar(0)).value());
    CHECK(Q0()(ExactComplex::i()) == ExactComplex(0, Rational(3, 2)));

    NevanlinnaData lin = measure_from_q(RationalFunction(Polynomial::x()));
    CHECK(lin.a.exactly_equals(Scalar(1)).value());
    CHECK(lin.b.exactly_equals(Scalar(0)).value());
    CHECK(lin.measure.empty());

    // Truncated tangent partial fractions, r = 1: poles (pi/2)(2n-1) rounded
    // to rationals, masses 1/r.
    std::vector<Atom> atoms;
    for (int n = -2; n <= 3; ++n) {
        Rational g = rationalize(std::numbers::pi / 2 * (2 * n - 1), 1000);
        atoms.push_back({Scalar(g), Scalar(1)});
    }
    DiscreteMeasure tan_measure(atoms);
    NevanlinnaData back = measure_from_q(q_from_measure({Scalar(0), Scalar(0), tan_measure}));
    CHECK(back.measure.exactly_equals(tan_measure));

    CHECK_THROWS_WITH(measure_from_q(RationalFunction(Polynomial(1), poly({{1}, {0}, {1}}))), "not real-meromorphic Herglotz");
    CHECK_THROWS_WITH(measure_from_q(RationalFunction(Polynomial(1), Polynomial::x())), "not Herglotz");
}

TEST_CASE("Nevanlinna data maps the upper half-plane into itself") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-5.0, 5.0), v(1e-3, 5.0);
    NevanlinnaData d{Scalar(Rational(1, 3)), Scalar(-2), DiscreteMeasure({{Scalar(-3), Scalar(2)}, {Scalar(Rational(1, 2)), Scalar(1)}, {Scalar(4), Scalar(Rational(1, 7))}})};
    RationalFunction Q = q_from_measure(d);
    for (int k = 0; k < 100; ++k) {
        Complex z(u(rng), v(rng));
        CHECK(Q(z).imag() >= 0.0);
        CHECK(std::abs(Q(z) - d(z)) < 1e-9 * (1.0 + std::abs(Q(z))));
    }
    NevanlinnaData back = measure_from_q(Q);
    CHECK(back.measure.exactly_equals(d.measure));
    CHECK(back.a.exactly_equals(d.a).value());
    CHECK(back.b.exactly_equals(d.b).value());
}

TEST_CASE("cayley transform") {
    RationalFunction theta = cayley_q_to_theta(Q0());
    CHECK(theta == RationalFunction(sharp(E0()), E0()));
    CHECK(cayley_q_to_theta(RationalFunction()) == RationalFunction(Polynomial(1)));
    CHECK(cayley_theta_to_q(theta) == Q0());
    CHECK_THROWS(cayley_q_to_theta(RationalFunction(Polynomial(ExactComplex(0, -1)))));
}

TEST_CASE("theta_to_e") {
    RationalFunction theta = cayley_q_to_theta(Q0());
    CHECK(theta_to_e(theta) == E0());
    CHECK(theta_to_e(RationalFunction(Polynomial(1))) == Polynomial(1));
    std::mt19937 rng(7);
    for (int k = 0; k < 10; ++k) {
        Polynomial E = hb_cubic(rng) * ExactComplex(Rational(3, 5), Rational(4, 5));
        RationalFunction th(sharp(E), E);
        Polynomial F = theta_to_e(th);
        CHECK(RationalFunction(sharp(F), F) == th);
        CHECK(F * E.lead() == E * F.lead());
    }
    CHECK_THROWS_WITH(theta_to_e(RationalFunction(sharp(poly({{0, -1}, {1}})), poly({{0, -1}, {1}}))), "denominator not Hermite-Biehler");
    CHECK_THROWS_WITH(theta_to_e(RationalFunction(Polynomial(2), E0())), "not inner of HB form");
}

TEST_CASE("level_set_masses") {
    DiscreteMeasure mu = level_set_masses(E0());
    DiscreteMeasure expected({{Scalar(-1), Scalar(Rational(1, 2)) * Scalar::pi()},
                              {Scalar(0), Scalar::pi()},
                              {Scalar(1), Scalar(Rational(1, 2)) * Scalar::pi()}});
    CHECK(mu.exactly_equals(expected));
    // E = z + i: A = z, B = -1.
    DiscreteMeasure one = level_set_masses(poly({{0, 1}, {1}}));
    CHECK(one.exactly_equals(DiscreteMeasure({{Scalar(0), Scalar::pi()}})));

    std::mt19937 rng(13);
    for (int k = 0; k < 10; ++k) {
        Polynomial E = hb_cubic(rng);
        RationalFunction th(sharp(E), E);
        DiscreteMeasure m = level_set_masses(E);
        CHECK(m.size() == 3);
        for (const auto& at : m.atoms()) {
            double g = at.point.real();
            CHECK(std::abs(th(Complex(g)) + 1.0) < 1e-9);
            double h = 1e-5;
            Complex d = (th(Complex(g + h)) - th(Complex(g - h))) / (2 * h);
            CHECK(std::abs(at.mass.real() - 2 * std::numbers::pi / std::abs(d)) < 1e-6 * at.mass.real());
        }
        std::uniform_real_distribution<double> u(-4.0, 4.0), v(1e-3, 4.0);
        for (int j = 0; j < 10; ++j) {
            CHECK(std::abs(th(Complex(u(rng), v(rng)))) < 1.0);
            CHECK(std::abs(std::abs(th(Complex(u(rng)))) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("tau_from_mu") {
    CHECK(tau_from_mu(level_set_masses(E0())).exactly_equals(tau0()));
    CHECK(tau_from_mu(DiscreteMeasure()).empty());
    CHECK(tau_from_mu(tau0()).scaled(Scalar::pi()).exactly_equals(tau0()));
}
