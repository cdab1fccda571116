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

// Krein strings with point masses and their Stieltjes continued fractions,
// Levy-Khintchine triplets of screw functions, and the convolution identities
// that make g0 mean periodic.

#include <optional>
#include <vector>

#include "screwline/rational_function.hpp"
#include "screwline/screw.hpp"

namespace screwline {

struct StringMass {
    Rational position;
    Rational mass;
};

/// Point masses at strictly increasing positions on [0, L); L = nullopt
/// stands for an infinite string.
struct KreinString {
    std::vector<StringMass> masses;
    std::optional<Rational> L;
};

/// q(z) = Q(sqrt z)/sqrt z for odd Q.
/// Throws std::domain_error("substitution not rational") if Q is not odd.
RationalFunction q_substitute(const RationalFunction& Q);

/// Expands q = l_0 + 1/(-m_1 z + 1/(l_1 + 1/(-m_2 z + ...))) with exact
/// Euclidean steps: the first mass sits at l_0 = q(-infinity), the next ones
/// l_1, l_2, ... further on. The string is infinite when the expansion ends
/// after a mass, and ends at the last length otherwise.
/// Throws std::domain_error("not a string function") on a non-positive mass
/// or length, or a quotient of the wrong shape.
KreinString stieltjes_string(const RationalFunction& q);

/// phi(x, lambda), psi(x, lambda) and their right derivatives.
template <class T>
struct StringSolution {
    T phi;
    T psi;
    T dphi;
    T dpsi;
};

/// Exact solutions as polynomials in lambda. Each mass m_j at x_j adds the
/// slope jump -lambda m_j y(x_j). Throws std::invalid_argument for x < 0.
StringSolution<Polynomial> string_solve(const KreinString& s, const Rational& x);
StringSolution<Complex> string_solve(const KreinString& s, Complex lambda, double x);

/// lim psi/phi as x -> L: psi'/phi' beyond the last mass when L is infinite,
/// psi(L)/phi(L) otherwise. Throws std::domain_error("L = q(0-) inconsistent")
/// when the limit degenerates (an infinite string whose phi has zero slope).
RationalFunction titchmarsh_weyl(const KreinString& s);

/// a = tau({0}), b = c, nu = tau / g^2 away from 0.
struct LevyTriplet {
    Scalar a;
    Scalar b;
    DiscreteMeasure nu;
};

/// Throws std::invalid_argument unless g(0) = 0.
LevyTriplet levy_triplet(const ScrewFunctionData& g);
/// The inverse: tau = a delta_0 + g^2 nu, c = b, g(0) = 0.
ScrewFunctionData screw_from_triplet(const LevyTriplet& t);
/// -a t^2/2 + i b t + int (e^{itx} - 1 - itx/(1+x^2)) nu(dx)
Complex levy_exponent(const LevyTriplet& t, double x);
/// b_0 = b - int x/(1+x^2) nu(dx), the drift of the form without compensator.
Scalar levy_drift0(const LevyTriplet& t);

/// Density of N(b, a) convolved with Pois(l) on +1 and Pois(l) on -1:
/// e^{-2l} sum_{k,j <= K} l^{k+j}/(k! j!) N(x; b + k - j, a).
/// Needs a > 0 and nu either empty or {-1: l, 1: l}; throws std::invalid_argument otherwise.
double idd_density(const LevyTriplet& t, double x, int K = 40);
/// Upper bound for the mass dropped by the truncation at K, times the peak of N(0, a).
double idd_tail_bound(const LevyTriplet& t, int K);

struct CharfnCheck {
    std::vector<double> t;
    std::vector<double> residual;  ///< |int density e^{itx} dx - exp(g(t))|
    double normalization = 0.0;    ///< int density dx
};

/// Quadrature of the density over [-range, range] against e^{itx}.
CharfnCheck idd_charfn_check(const ScrewFunctionData& g, const std::vector<double>& t_points, int K = 40, double range = 12.0);

/// -4i t (8t^4 - 38t^2 + 27) e^{-t^2}
Complex mp_annihilator(double t);

struct MeanPeriodicReport {
    double convolution = 0.0;  ///< max |(g0 * phi)(t)| on the grid
    double fourier = 0.0;      ///< max |phi-hat(z) - sqrt(pi) e^{-z^2/4} z^3 (z^2 - 1)| at sample z
    double one_sided = 0.0;    ///< max |(g0^+ * phi)(t) + i (8t^2 - 3) e^{-t^2}| and the g0^- analogue
    double carleman = 0.0;     ///< |FC(g0)(2i) + (i/z^2) Q0(z)| at z = 2i
    double tolerance = 1e-8;
    bool pass = false;
};

/// Grid of `points` equally spaced t in [-grid_half_width, grid_half_width];
/// integrals truncated to [-range, range].
MeanPeriodicReport mean_periodic_checks(double grid_half_width = 3.0, int points = 61, double range = 10.0, double tol = 1e-8);

}  // namespace screwline
