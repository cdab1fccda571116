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

// The constant Hamiltonian H = I on [0, r]: E_r(z) = e^{-irz}, the space
// H(E_r) = PW_r with its sinc kernel, the half-integer lattice where
// Theta_r = -1, the screw function g_r, and the Weyl transform as a Fourier
// transform. Every infinite sum is truncated at PWFrame::N.

#include <vector>

#include "screwline/matrix_polynomial.hpp"
#include "screwline/spectra.hpp"

namespace screwline {

struct PWFrame {
    double r = 1.0;
    int N = 1;

    /// Throws std::invalid_argument unless r > 0 and N >= 1.
    void validate() const;
};

/// e^{-irz}
Complex pw_E(double r, Complex z);

/// sin(r(w - conj z)) / (pi (w - conj z)), equal to r/pi at w = conj z.
Complex pw_kernel(double r, Complex z, Complex w);

/// (pi/2r)(2n - 1), n in Z.
double pw_lattice_point(double r, long n);

/// Atoms +-(pi/2r)(2k - 1), k = 1..N, each of mass pi/r. Exact when r is.
DiscreteMeasure pw_measure(const PWFrame& f);

/// F_n(z) = i cos(rz) / (sqrt(pi r)(z - g_n)) with g_n = pw_lattice_point(r, n);
/// F_n(g_m)/E_r(g_m) = sqrt(r/pi) delta_nm.
Complex pw_basis(double r, long n, Complex z);

struct PWGram {
    long n_max = 0;
    /// Rows and columns indexed by n = -n_max..n_max.
    std::vector<std::vector<Complex>> gram;
    double max_deviation = 0.0;  ///< max |gram - I|
};

/// Inner products of F_n, |n| <= n_max, sampled on the shifted lattice
/// pi k / r, |k| <= N, with masses pi/r. (On the lattice of pw_measure the
/// sampling is exactly diagonal and shows no truncation error.)
PWGram pw_gram(const PWFrame& f, long n_max);

/// [[cos tz, sin tz], [-sin tz, cos tz]]; throws std::invalid_argument unless 0 <= t <= r.
ComplexMatrix2 pw_fundamental(double r, double t, Complex z);

/// max entry of |dW/dt + z W J| with dW/dt by central differences of step h.
double pw_fd_residual(double r, double t, Complex z, double h = 1e-4);

/// (2/r) sum_{n=1}^N (cos(g_n t) - 1)/g_n^2
double g_r_eval(const PWFrame& f, double t);
/// Bound on the dropped terms: 8r/(pi^2 (2N - 1)).
double g_r_tail_bound(const PWFrame& f);

/// |int_0^T g_r(t) e^{izt} dt + i tan(rz)/z^2| with the truncated series.
/// The integral stops once e^{-Im z t} drops below 1e-17. Requires Im z > 0.
double g_r_laplace_check(const PWFrame& f, Complex z, double T = 100.0);

/// (1/r) sum over the atoms of pw_measure of 1/(g - z).
Complex tan_partial_fraction(const PWFrame& f, Complex z);

/// Truncation error at N and at 2N; ratio = error(N)/error(2N).
struct ConvergenceRate {
    double error_N = 0.0;
    double error_2N = 0.0;
    double ratio = 0.0;
};

ConvergenceRate tan_convergence(const PWFrame& f, Complex z);
ConvergenceRate gram_convergence(const PWFrame& f, long n_max);

/// Step vector (f, g) on [0, r] with polynomial components, ascending
/// coefficients in t.
struct PWStepVector {
    std::vector<Complex> f;
    std::vector<Complex> g;
};

/// (1/pi) int_0^r (f(t) cos tz + g(t) sin tz) dt from closed-form moments.
Complex pw_weyl(double r, const PWStepVector& F, Complex z);
/// (1/2pi) int_{-r}^r Psi(t) e^{izt} dt by quadrature, with Psi = f - i g
/// extended evenly in f and oddly in g.
Complex pw_fourier(double r, const PWStepVector& F, Complex z);

struct PWFourierCheck {
    double residual = 0.0;    ///< max |pw_weyl - pw_fourier| over the sample points
    double norm_F = 0.0;      ///< (1/pi) int_0^r |f|^2 + |g|^2
    double norm_psi = 0.0;    ///< int_{-r}^r |Psi|^2
    double constant = 0.0;    ///< norm_F / norm_psi, measured
};

PWFourierCheck pw_weyl_is_fourier(const PWFrame& frame, const PWStepVector& F, const std::vector<Complex>& z_points);

}  // namespace screwline
