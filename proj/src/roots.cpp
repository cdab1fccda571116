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

#include "screwline/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace screwline {

namespace {

double abs_sum(const CPolynomial& p, double r) {
    double acc = 0.0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

}  // namespace

std::vector<Complex> roots(const CPolynomial& p_in, double tol) {
    int n = p_in.degree();
    if (n < 1) throw std::domain_error("no roots");
    std::vector<Complex> c(p_in.coeffs().begin(), p_in.coeffs().begin() + n + 1);
    Complex lead = c[n];
    for (auto& x : c) x /= lead;
    CPolynomial p(c);
    CPolynomial dp = p.derivative();

    // Initial guesses on a circle of Cauchy-bound radius, rotated off the axes.
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[k]), 1.0 / (n - k)));
    radius = std::max(radius, 1e-3);
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = std::polar(radius, a);
    }

    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            Complex pk = p(z[k]);
            if (pk == Complex(0.0)) continue;
            Complex ratio = pk / dp(z[k]);
            Complex sum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            }
            Complex step = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
        }
        if (max_step < 1e-15) break;
    }

    for (auto& r : z) {
        for (int it = 0; it < 8; ++it) {
            Complex d = dp(r);
            if (d == Complex(0.0)) break;
            Complex next = r - p(r) / d;
            if (std::abs(p(next)) >= std::abs(p(r))) break;
            r = next;
        }
        double scale = std::max(abs_sum(p, std::abs(r)), p.max_abs_coeff());
        if (std::abs(p(r)) > tol * scale) throw std::runtime_error("root polishing did not converge");
    }
    std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return z;
}

std::vector<Complex> roots(const Polynomial& p, double tol) { return roots(p.to_complex(), tol); }

std::optional<ExactComplex> exact_root(const Polynomial& p, Complex approx) {
    auto cand = rationalize(approx);
    if (!cand) return std::nullopt;
    if (!p(*cand).is_zero()) return std::nullopt;
    return cand;
}

bool hb_test(const Polynomial& E, double tol) {
    for (Complex r : roots(E)) {
        if (!(r.imag() < -tol)) return false;
    }
    return true;
}

Complex PartialFractions::operator()(Complex z) const {
    Complex acc = polynomial_part(z);
    for (std::size_t k = 0; k < poles.size(); ++k) acc += residues[k] / (z - poles[k]);
    return acc;
}

PartialFractions partial_fractions(const RationalFunction& r, double tol) {
    PartialFractions out;
    auto [q, rem] = divmod(r.num(), r.den());
    out.polynomial_part = q;
    if (r.den().degree() < 1) return out;
    out.poles = roots(r.den(), tol);
    double sep = std::sqrt(tol);
    for (std::size_t i = 0; i < out.poles.size(); ++i) {
        for (std::size_t j = i + 1; j < out.poles.size(); ++j) {
            double scale = std::max(1.0, std::abs(out.poles[i]));
            if (std::abs(out.poles[i] - out.poles[j]) < sep * scale) throw std::domain_error("unsupported multiplicity");
        }
    }
    Polynomial dden = derivative(r.den());
    for (Complex pole : out.poles) {
        auto exact = exact_root(r.den(), pole);
        out.exact_poles.push_back(exact);
        if (exact) {
            ExactComplex res = rem(*exact) / dden(*exact);
            out.exact_residues.push_back(res);
            out.residues.push_back(res.to_complex());
        } else {
            out.exact_residues.push_back(std::nullopt);
            out.residues.push_back(rem(pole) / dden(pole));
        }
    }
    // Snap poles to their exact values where known.
    for (std::size_t k = 0; k < out.poles.size(); ++k) {
        if (out.exact_poles[k]) out.poles[k] = out.exact_poles[k]->to_complex();
    }
    return out;
}

}  // namespace screwline
