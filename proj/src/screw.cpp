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

#include "screwline/screw.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "screwline/quadrature.hpp"

namespace screwline {

namespace {

const Complex I(0.0, 1.0);

Complex atom_term(double gamma, double t) {
    if (gamma == 0.0) return Complex(-0.5 * t * t);
    return (std::exp(I * (t * gamma)) - 1.0) / (gamma * gamma) - I * t / (gamma * (1.0 + gamma * gamma));
}

PdResult min_eigen(const Eigen::MatrixXcd& G, double tol) {
    Eigen::MatrixXcd H = 0.5 * (G + G.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    PdResult r;
    r.min_eigenvalue = es.eigenvalues().minCoeff();
    r.pass = r.min_eigenvalue >= -tol;
    return r;
}

}  // namespace

Complex ScrewFunctionData::operator()(double t) const {
    Complex v = g0 + I * (c * t);
    for (const auto& a : tau.atoms()) v += a.mass.real() * atom_term(a.point.real(), t);
    return v;
}

Complex eval_screw(const ScrewFunctionData& g, double t) { return g(t); }

Complex kernel_g(const ScrewFunctionData& g, double t, double s) { return g(t - s) - g(t) - g(-s) + g(0.0); }

double chord_length(const ScrewFunctionData& g, double t) {
    double d = kernel_g(g, t, t).real();
    if (d < 0.0) {
        if (d > -1e-12 * (1.0 + t * t)) return 0.0;
        throw std::domain_error("kernel not nonnegative at t");
    }
    return std::sqrt(d);
}

PdResult pd_check(const ScrewFunctionData& g, const std::vector<double>& grid, double tol) {
    return pd_check(std::function<Complex(double)>([&g](double t) { return g(t); }), grid, tol);
}

PdResult pd_check(const std::function<Complex(double)>& g, const std::vector<double>& grid, double tol) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXcd G(n, n);
    Complex g0 = g(0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double t = grid[i], s = grid[j];
            G(i, j) = g(t - s) - g(t) - g(-s) + g0;
        }
    }
    return min_eigen(G, tol);
}

TestFunction::TestFunction(double lo, double hi, std::vector<Complex> samples) : lo_(lo), hi_(hi), v_(std::move(samples)) {
    if (!(hi > lo)) throw std::invalid_argument("test function: empty support");
    h_ = (hi - lo) / static_cast<double>(v_.size() - 1);
    w_ = quad::simpson_weights(v_.size(), h_);
    v_.front() = 0.0;
    v_.back() = 0.0;
}

TestFunction TestFunction::zero(double lo, double hi, std::size_t n) { return TestFunction(lo, hi, std::vector<Complex>(n)); }

TestFunction TestFunction::bump(double lo, double hi, std::size_t n) {
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    return sample(
        [&](double t) {
            double u = (t - mid) / half;
            return u * u < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
        },
        lo, hi, n);
}

Complex TestFunction::integral() const {
    return integrate([](double) { return 1.0; });
}

Complex TestFunction::fourier(Complex z) const {
    return integrate([z](double t) { return std::exp(I * z * t); });
}

Complex TestFunction::fourier_derivative0() const {
    return integrate([](double t) { return I * t; });
}

double TestFunction::l2_norm() const {
    double acc = 0.0;
    for (std::size_t k = 0; k < v_.size(); ++k) acc += w_[k] * std::norm(v_[k]);
    return std::sqrt(acc);
}

double TestFunction::max_abs() const {
    double m = 0.0;
    for (const auto& x : v_) m = std::max(m, std::abs(x));
    return m;
}

TestFunction TestFunction::zero_mean() const {
    TestFunction b = bump(lo_, hi_, v_.size());
    Complex f = integral() / b.integral();
    TestFunction out = *this;
    for (std::size_t k = 0; k < v_.size(); ++k) out.v_[k] -= f * b.v_[k];
    return out;
}

TestFunction& TestFunction::operator+=(const TestFunction& o) {
    if (o.v_.size() != v_.size() || o.lo_ != lo_ || o.hi_ != hi_) throw std::invalid_argument("test functions on different grids");
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
}

TestFunction& TestFunction::operator*=(Complex s) {
    for (auto& x : v_) x *= s;
    return *this;
}

Complex phi1(const TestFunction& phi, Complex z) {
    if (z == Complex(0.0)) return phi.fourier_derivative0();
    return phi.integrate([z](double t) { return (std::exp(I * z * t) - 1.0) / z; });
}

TestFunction fourier_aligned(double lo, double hi, const std::vector<std::pair<double, Complex>>& phi1_targets, std::size_t n) {
    const auto m = static_cast<Eigen::Index>(phi1_targets.size() + 1);
    TestFunction b = TestFunction::bump(lo, hi, n);
    double mid = 0.5 * (lo + hi);
    std::vector<TestFunction> basis;
    for (Eigen::Index k = 0; k < m; ++k) {
        std::vector<Complex> v = b.samples();
        for (std::size_t j = 0; j < n; ++j) v[j] *= std::pow(b.t(j) - mid, static_cast<double>(k));
        basis.emplace_back(lo, hi, std::move(v));
    }
    Eigen::MatrixXcd M(m, m);
    Eigen::VectorXcd rhs(m);
    for (Eigen::Index k = 0; k < m; ++k) M(0, k) = basis[k].integral();
    rhs(0) = 0.0;
    for (Eigen::Index r = 1; r < m; ++r) {
        const auto& [gamma, target] = phi1_targets[r - 1];
        for (Eigen::Index k = 0; k < m; ++k) M(r, k) = phi1(basis[k], gamma);
        rhs(r) = target;
    }
    Eigen::VectorXcd c = M.fullPivLu().solve(rhs);
    TestFunction out = TestFunction::zero(lo, hi, n);
    for (Eigen::Index k = 0; k < m; ++k) out += c(k) * basis[k];
    return out;
}

TestFunction random_test_function(std::mt19937_64& rng, double lo, double hi, std::size_t n) {
    std::normal_distribution<double> nd;
    Complex c[4];
    for (auto& x : c) x = Complex(nd(rng), nd(rng));
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    TestFunction b = TestFunction::bump(lo, hi, n);
    std::vector<Complex> v = b.samples();
    for (std::size_t k = 0; k < n; ++k) {
        double u = (b.t(k) - mid) / half;
        v[k] *= c[0] + u * (c[1] + u * (c[2] + u * c[3]));
    }
    return TestFunction(lo, hi, std::move(v)).zero_mean();
}

InnerProductHg inner_product_Hg(const ScrewFunctionData& g, const TestFunction& phi1_, const TestFunction& phi2_) {
    if (phi1_.size() != phi2_.size() || phi1_.lo() != phi2_.lo() || phi1_.hi() != phi2_.hi())
        throw std::invalid_argument("inner_product_Hg: test functions on different grids");
    const std::size_t n = phi1_.size();
    const double h = phi1_.step();
    // t_i - s_j = (i - j) h, so g is needed only at 2n-1 differences.
    std::vector<Complex> gd(2 * n - 1);
    for (std::size_t k = 0; k < gd.size(); ++k) gd[k] = g(h * (static_cast<double>(k) - static_cast<double>(n - 1)));
    std::vector<Complex> gt(n), gms(n);
    for (std::size_t k = 0; k < n; ++k) {
        gt[k] = g(phi1_.t(k));
        gms[k] = g(-phi1_.t(k));
    }
    Complex g0 = g(0.0);
    const auto& w = phi1_.weights();
    const auto& a = phi1_.samples();
    const auto& b = phi2_.samples();
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == Complex(0.0)) continue;
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            Complex G = gd[i + n - 1 - j] - gt[i] - gms[j] + g0;
            row += w[j] * G * std::conj(b[j]);
        }
        acc += w[i] * a[i] * row;
    }
    InnerProductHg out;
    out.kernel = acc;
    for (const auto& at : g.tau.atoms()) {
        double gamma = at.point.real();
        out.measure += at.mass.real() * phi1(phi1_, gamma) * std::conj(phi1(phi2_, gamma));
    }
    out.difference = std::abs(out.kernel - out.measure);
    return out;
}

double laplace_check(const ScrewFunctionData& g, const RationalFunction& Q, Complex z, double T) {
    if (!(z.imag() > 0.0)) throw std::domain_error("laplace_check: Im z must be positive");
    int panels = std::max(16, static_cast<int>(std::ceil(T * std::max(1.0, std::abs(z)))));
    Complex integral = quad::composite([&](double t) { return g(t) * std::exp(I * z * t); }, 0.0, T, panels);
    return std::abs(integral + I / (z * z) * Q(z));
}

ScrewFunctionData g0_data() {
    ScrewFunctionData g;
    g.tau = DiscreteMeasure({{Scalar(-1), Scalar(Rational(1, 2))}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(Rational(1, 2))}});
    return g;
}

}  // namespace screwline
