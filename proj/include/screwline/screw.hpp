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

// Screw functions built from spectral data, their kernels G_g, and the
// transform Phi_1 of compactly supported test functions.

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "screwline/rational_function.hpp"
#include "screwline/spectra.hpp"

namespace screwline {

/// g(t) = g(0) + i c t + sum_g m [(e^{itg} - 1)/g^2 - i t/(g (1+g^2))],
/// where an atom at g = 0 contributes -m t^2/2.
struct ScrewFunctionData {
    double g0 = 0.0;
    double c = 0.0;
    DiscreteMeasure tau;

    Complex operator()(double t) const;
};

Complex eval_screw(const ScrewFunctionData& g, double t);

/// G_g(t,s) = g(t-s) - g(t) - g(-s) + g(0)
Complex kernel_g(const ScrewFunctionData& g, double t, double s);

/// sqrt(G_g(t,t)); throws std::domain_error if the diagonal is negative.
double chord_length(const ScrewFunctionData& g, double t);

struct PdResult {
    double min_eigenvalue = 0.0;
    bool pass = false;
};

/// Smallest eigenvalue of the Hermitian part of [G(t_i, t_j)].
PdResult pd_check(const ScrewFunctionData& g, const std::vector<double>& grid, double tol = 1e-9);
/// Same for an arbitrary function g (not necessarily a screw function).
PdResult pd_check(const std::function<Complex(double)>& g, const std::vector<double>& grid, double tol = 1e-9);

/// Uniformly sampled function on [lo, hi] vanishing at both ends; integrals
/// use composite Simpson weights.
class TestFunction {
public:
    TestFunction(double lo, double hi, std::vector<Complex> samples);

    template <class F>
    static TestFunction sample(F&& f, double lo, double hi, std::size_t n = 513) {
        std::vector<Complex> v(n);
        double h = (hi - lo) / static_cast<double>(n - 1);
        for (std::size_t k = 0; k < n; ++k) v[k] = (k == 0 || k == n - 1) ? Complex(0.0) : Complex(f(lo + h * static_cast<double>(k)));
        return TestFunction(lo, hi, std::move(v));
    }
    static TestFunction zero(double lo = -1.0, double hi = 1.0, std::size_t n = 513);
    /// exp(-1/(1-u^2)) rescaled to [lo, hi].
    static TestFunction bump(double lo, double hi, std::size_t n = 513);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double step() const { return h_; }
    std::size_t size() const { return v_.size(); }
    double t(std::size_t k) const { return lo_ + h_ * static_cast<double>(k); }
    const std::vector<Complex>& samples() const { return v_; }
    const std::vector<double>& weights() const { return w_; }

    /// sum_k w_k f(t_k) phi(t_k)
    template <class F>
    Complex integrate(F&& f) const {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < v_.size(); ++k) acc += w_[k] * v_[k] * Complex(f(t(k)));
        return acc;
    }
    Complex integral() const;
    /// phi-hat(z) = int phi(t) e^{izt} dt
    Complex fourier(Complex z) const;
    /// phi-hat'(0) = int i t phi(t) dt
    Complex fourier_derivative0() const;
    double l2_norm() const;
    double max_abs() const;

    /// phi - (int phi / int b) b with b the fixed bump of the same grid.
    TestFunction zero_mean() const;

    TestFunction& operator+=(const TestFunction& o);
    TestFunction& operator*=(Complex s);
    friend TestFunction operator+(TestFunction a, const TestFunction& b) { return a += b; }
    friend TestFunction operator*(Complex s, TestFunction a) { return a *= s; }

private:
    double lo_;
    double hi_;
    double h_;
    std::vector<Complex> v_;
    std::vector<double> w_;
};

/// Phi_1(phi, z) = int phi(t) (e^{izt} - 1)/z dt, with the limit i t at z = 0.
Complex phi1(const TestFunction& phi, Complex z);

/// Zero-mean test function sum_k c_k b(t) t^k whose Phi_1 values at the
/// given real points equal the targets (b the fixed bump).
TestFunction fourier_aligned(double lo, double hi, const std::vector<std::pair<double, Complex>>& phi1_targets, std::size_t n = 513);

/// Zero-mean b(t) * (cubic with random complex coefficients), b the fixed bump.
TestFunction random_test_function(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0, std::size_t n = 513);

struct InnerProductHg {
    Complex kernel;   ///< sum_{t,s} G(t,s) phi1(t) conj phi2(s) w_t w_s
    Complex measure;  ///< sum_g Phi_1(phi1,g) conj Phi_1(phi2,g) tau(g)
    double difference = 0.0;
};

/// The H(G_g) inner product computed through the kernel and through the
/// spectral measure. Both functions must share the same grid.
InnerProductHg inner_product_Hg(const ScrewFunctionData& g, const TestFunction& phi1, const TestFunction& phi2);

/// |int_0^T g(t) e^{izt} dt + (i/z^2) Q(z)|; requires Im z > 0.
double laplace_check(const ScrewFunctionData& g, const RationalFunction& Q, Complex z, double T);

/// The screw function with g(0) = 0, c = 0 and tau = {0: 1, +-1: 1/2}.
ScrewFunctionData g0_data();

}  // namespace screwline
