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

#pragma once

// Shared fixtures for the unit tests.

#include <random>
#include <vector>

#include "screwline/matrix_polynomial.hpp"
#include "screwline/polynomial.hpp"
#include "screwline/rational_function.hpp"

namespace screwline::testing {

inline Polynomial poly(std::vector<ExactComplex> c) { return Polynomial(std::move(c)); }

inline ExactComplex q(long p, long d = 1) { return ExactComplex(Rational(p, d)); }

/// z^3 + 2i z^2 - z - i
inline Polynomial E0() { return poly({{0, -1}, {-1}, {0, 2}, {1}}); }

/// (1 - 2z^2) / (z(z-1)(z+1))
inline RationalFunction Q0() { return {poly({{1}, {0}, {-2}}), poly({{0}, {-1}, {0}, {1}})}; }

/// [[1-2z^2, 4z], [z^3-z, 1-2z^2]]
inline MatrixPolynomial W0() {
    Polynomial d = poly({{1}, {0}, {-2}});
    return {d, poly({{0}, {4}}), poly({{0}, {-1}, {0}, {1}}), d};
}

inline Polynomial random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<ExactComplex> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    if (c.back().is_zero()) c.back() = ExactComplex(1);
    return Polynomial(std::move(c));
}

/// (z + ic)(z^2 + 2iqz - q^2 - p^2) with small random positive c, q, p:
/// zeros -ic and -iq +- p, so the product is Hermite-Biehler.
inline Polynomial hb_cubic(std::mt19937& rng) {
    std::uniform_int_distribution<long> n(1, 9);
    ExactComplex c(Rational(n(rng), n(rng))), qq(Rational(n(rng), n(rng))), p(Rational(n(rng), n(rng)));
    Polynomial a({c * ExactComplex::i(), ExactComplex(1)});
    Polynomial b({-qq * qq - p * p, ExactComplex(2) * qq * ExactComplex::i(), ExactComplex(1)});
    return a * b;
}

}  // namespace screwline::testing
