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

#include "screwline/paleywiener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "screwline/quadrature.hpp"

namespace screwline {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

Complex horner(const std::vector<Complex>& c, double t) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

/// int_0^r t^k e^{izt} dt for k = 0..K.
std::vector<Complex> moments(double r, Complex z, std::size_t K) {
    std::vector<Complex> m(K + 1);
    if (std::abs(z) * r <= 4.0) {
        // sum_j (iz)^j r^{k+j+1} / (j! (k+j+1))
        for (std::size_t k = 0; k <= K; ++k) {
            Complex term = std::pow(r, static_cast<double>(k + 1));
            Complex acc = 0.0;
            for (int j = 0; j < 200; ++j) {
                Complex add = term / static_cast<double>(k + j + 1);
                acc += add;
                if (j > 8 && std::abs(add) < 1e-18 * std::abs(acc)) break;
                term *= I * z * r / static_cast<double>(j + 1);
            }
            m[k] = acc;
        }
        return m;
    }
    Complex e = std::exp(I * z * r);
    m[0] = (e - 1.0) / (I * z);
    for (std::size_t k = 1; k <= K; ++k) m[k] = (std::pow(r, static_cast<double>(k)) * e - static_cast<double>(k) * m[k - 1]) / (I * z);
    return m;
}

Complex sinc_pi(double r, Complex d) {
    Complex x = r * d;
    if (std::abs(x) < 1e-4) return r / pi * (1.0 - x * x / 6.0 + x * x * x * x / 120.0);
    return std::sin(x) / (pi * d);
}

}  // namespace

void PWFrame::validate() const {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("PWFrame: r must be positive");
    if (N < 1) throw std::invalid_argument("PWFrame: N must be at least 1");
}

Complex pw_E(double r, Complex z) { return std::exp(-I * r * z); }

Complex pw_kernel(double r, Complex z, Complex w) { return sinc_pi(r, w - std::conj(z)); }

double pw_lattice_point(double r, long n) { return pi / (2.0 * r) * static_cast<double>(2 * n - 1); }

DiscreteMeasure pw_measure(const PWFrame& f) {
    f.validate();
    std::vector<Atom> atoms;
    atoms.reserve(2 * static_cast<std::size_t>(f.N));
    const Rational r(f.r);
    const Scalar mass = Scalar::pi() / Scalar(r);
    for (long k = 1; k <= f.N; ++k) {
        Scalar g = Scalar::pi() * Scalar(Rational(2 * k - 1) / (2 * r));
        atoms.push_back({g, mass});
        atoms.push_back({-g, mass});
    }
    return DiscreteMeasure(std::move(atoms));
}

Complex pw_basis(double r, long n, Complex z) {
    const double g = pw_lattice_point(r, n);
    const double norm = std::sqrt(pi * r);
    Complex d = z - g;
    if (std::abs(r * d) < 1e-6) {
        // cos(r z) = -r sin(r g) d + r^3 sin(r g) d^3/6 + ... near the zero g.
        double s = std::sin(r * g);
        return I * (-r * s) * (1.0 - r * r * d * d / 6.0) / norm;
    }
    return I * std::cos(r * z) / (norm * d);
}

PWGram pw_gram(const PWFrame& f, long n_max) {
    f.validate();
    if (n_max < 0) throw std::invalid_argument("pw_gram: n_max must be nonnegative");
    const std::size_t dim = static_cast<std::size_t>(2 * n_max + 1);
    PWGram out;
    out.n_max = n_max;
    out.gram.assign(dim, std::vector<Complex>(dim, 0.0));
    const double w = pi / f.r;
    std::vector<Complex> row(dim);
    for (long k = -f.N; k <= f.N; ++k) {
        const double x = pi * static_cast<double>(k) / f.r;
        for (std::size_t a = 0; a < dim; ++a) row[a] = pw_basis(f.r, static_cast<long>(a) - n_max, x);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) out.gram[a][b] += w * row[a] * std::conj(row[b]);
    }
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            out.max_deviation = std::max(out.max_deviation, std::abs(out.gram[a][b] - (a == b ? 1.0 : 0.0)));
    return out;
}

ComplexMatrix2 pw_fundamental(double r, double t, Complex z) {
    if (!(t >= 0.0 && t <= r)) throw std::invalid_argument("pw_fundamental: t outside [0, r]");
    Complex c = std::cos(t * z), s = std::sin(t * z);
    return {{{c, s}, {-s, c}}};
}

double pw_fd_residual(double r, double t, Complex z, double h) {
    // One-sided near the ends of [0, r] so both stencil points stay inside.
    double lo = std::max(0.0, t - h), hi = std::min(r, t + h);
    ComplexMatrix2 a = pw_fundamental(r, lo, z), b = pw_fundamental(r, hi, z), w = pw_fundamental(r, t, z);
    double res = 0.0;
    for (int i = 0; i < 2; ++i) {
        // (W J)_{i0} = W_{i1}, (W J)_{i1} = -W_{i0} with J = [[0,-1],[1,0]]
        Complex wj[2] = {w[i][1], -w[i][0]};
        for (int j = 0; j < 2; ++j) res = std::max(res, std::abs((b[i][j] - a[i][j]) / (hi - lo) + z * wj[j]));
    }
    return res;
}

double g_r_eval(const PWFrame& f, double t) {
    f.validate();
    // cos((2n+1)x) = 2 cos(2x) cos((2n-1)x) - cos((2n-3)x)
    const double x = pi * t / (2.0 * f.r);
    const double c2 = 2.0 * std::cos(2.0 * x);
    double prev = std::cos(x), cur = std::cos(x);  // cos(-x), cos(x)
    double acc = 0.0;
    for (long n = 1; n <= f.N; ++n) {
        if (n > 1) {
            double next = c2 * cur - prev;
            prev = cur;
            cur = next;
        }
        double g = pw_lattice_point(f.r, n);
        acc += (cur - 1.0) / (g * g);
    }
    return 2.0 / f.r * acc;
}

double g_r_tail_bound(const PWFrame& f) {
    f.validate();
    return 8.0 * f.r / (pi * pi * (2.0 * f.N - 1.0));
}

double g_r_laplace_check(const PWFrame& f, Complex z, double T) {
    f.validate();
    if (!(z.imag() > 0.0)) throw std::invalid_argument("g_r_laplace_check: need Im z > 0");
    const double t_end = std::min(T, 39.0 / z.imag());
    const double top = pw_lattice_point(f.r, f.N);
    const double h = std::min(0.05, 40.0 / top);
    const int panels = std::max(1, static_cast<int>(std::ceil(t_end / h)));
    Complex acc = 0.0;
    for (const auto& n : quad::gauss_nodes(0.0, t_end, panels)) acc += n.w * g_r_eval(f, n.x) * std::exp(I * z * n.x);
    return std::abs(acc + I * std::tan(f.r * z) / (z * z));
}

Complex tan_partial_fraction(const PWFrame& f, Complex z) {
    f.validate();
    // Pairs +-g summed together: 1/(g - z) + 1/(-g - z) = 2z/(g^2 - z^2).
    Complex acc = 0.0;
    for (long k = f.N; k >= 1; --k) {
        double g = pw_lattice_point(f.r, k);
        acc += 2.0 * z / (g * g - z * z);
    }
    return acc / f.r;
}

ConvergenceRate tan_convergence(const PWFrame& f, Complex z) {
    PWFrame twice{f.r, 2 * f.N};
    Complex exact = std::tan(f.r * z);
    ConvergenceRate c;
    c.error_N = std::abs(tan_partial_fraction(f, z) - exact);
    c.error_2N = std::abs(tan_partial_fraction(twice, z) - exact);
    c.ratio = c.error_N / c.error_2N;
    return c;
}

ConvergenceRate gram_convergence(const PWFrame& f, long n_max) {
    ConvergenceRate c;
    c.error_N = pw_gram(f, n_max).max_deviation;
    c.error_2N = pw_gram(PWFrame{f.r, 2 * f.N}, n_max).max_deviation;
    c.ratio = c.error_N / c.error_2N;
    return c;
}

Complex pw_weyl(double r, const PWStepVector& F, Complex z) {
    std::size_t K = std::max(F.f.size(), F.g.size());
    if (K == 0) return 0.0;
    auto mp = moments(r, z, K - 1), mm = moments(r, -z, K - 1);
    Complex acc = 0.0;
    for (std::size_t k = 0; k < F.f.size(); ++k) acc += F.f[k] * (mp[k] + mm[k]) / 2.0;
    for (std::size_t k = 0; k < F.g.size(); ++k) acc += F.g[k] * (mp[k] - mm[k]) / (2.0 * I);
    return acc / pi;
}

Complex pw_fourier(double r, const PWStepVector& F, Complex z) {
    const int panels = std::max(4, static_cast<int>(std::ceil(r * (1.0 + std::abs(z)))));
    Complex acc = 0.0;
    for (const auto& n : quad::gauss_nodes(0.0, r, panels)) {
        Complex f = horner(F.f, n.x), g = horner(F.g, n.x);
        // Psi(t) = f(t) - i g(t) for t > 0 and f(-t) + i g(-t) for t < 0
        acc += n.w * ((f - I * g) * std::exp(I * z * n.x) + (f + I * g) * std::exp(-I * z * n.x));
    }
    return acc / (2.0 * pi);
}

PWFourierCheck pw_weyl_is_fourier(const PWFrame& frame, const PWStepVector& F, const std::vector<Complex>& z_points) {
    frame.validate();
    PWFourierCheck out;
    for (Complex z : z_points) out.residual = std::max(out.residual, std::abs(pw_weyl(frame.r, F, z) - pw_fourier(frame.r, F, z)));
    for (const auto& n : quad::gauss_nodes(0.0, frame.r, 4)) {
        Complex f = horner(F.f, n.x), g = horner(F.g, n.x);
        out.norm_F += n.w * (std::norm(f) + std::norm(g)) / pi;
        out.norm_psi += n.w * (std::norm(f - I * g) + std::norm(f + I * g));
    }
    out.constant = out.norm_psi > 0.0 ? out.norm_F / out.norm_psi : 0.0;
    return out;
}

}  // namespace screwline
