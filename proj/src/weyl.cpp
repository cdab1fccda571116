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

#include "screwline/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "screwline/examples.hpp"

namespace screwline {

namespace {

const Complex kI(0.0, 1.0);

TPolynomial add(TPolynomial a, const TPolynomial& b) {
    if (a.size() < b.size()) a.resize(b.size(), Scalar(0));
    for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
    return a;
}

TPolynomial scale(const Scalar& s, TPolynomial p) {
    for (auto& c : p) c = s * c;
    return p;
}

TPolynomial mul(const TPolynomial& a, const TPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    TPolynomial out(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TPolynomial conj(TPolynomial p) {
    for (auto& c : p) c = c.conj();
    return p;
}

/// Multiplication by the variable.
TPolynomial shift(TPolynomial p) {
    p.insert(p.begin(), Scalar(0));
    return p;
}

Complex eval(const TPolynomial& p, double t) {
    Complex acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + it->value();
    return acc;
}

Scalar integrate(const TPolynomial& p, const Rational& a, const Rational& b) {
    Scalar acc(0);
    mpq_class pa = a, pb = b;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) acc += p[k] * Scalar(Rational((pb - pa) / static_cast<long>(k + 1)));
        pa *= a;
        pb *= b;
    }
    return acc;
}

bool negligible(const Scalar& s, double size) {
    if (s.is_exact()) return s.is_zero();
    return s.abs() <= 1e-9 * (1.0 + size);
}

/// Polynomial with Scalar coefficients as a ScaledPolynomial: exact when every
/// nonzero coefficient shares one sqrt(s) pi^(h/2) factor.
ScaledPolynomial to_scaled(TPolynomial p) {
    while (!p.empty() && p.back().is_exact() && p.back().is_zero()) p.pop_back();
    if (p.empty()) return ScaledPolynomial(Scalar(1), Polynomial());
    const Symbolic* ref = nullptr;
    bool exact = true;
    for (const auto& c : p) {
        if (!c.is_exact()) {
            exact = false;
            break;
        }
        if (c.is_zero()) continue;
        if (!ref) ref = &*c.exact();
        else if (!ref->like(*c.exact())) exact = false;
    }
    if (exact && ref) {
        std::vector<ExactComplex> coeffs;
        for (const auto& c : p) coeffs.push_back(c.is_zero() ? ExactComplex(0) : c.exact()->coefficient());
        return ScaledPolynomial(Scalar(Symbolic(ExactComplex(1), ref->radicand(), ref->half_pi_power())), Polynomial(std::move(coeffs)));
    }
    std::vector<Complex> v;
    for (const auto& c : p) v.push_back(c.value());
    return ScaledPolynomial(CPolynomial(std::move(v)));
}

Scalar value_at(const ScaledPolynomial& F, const Scalar& g) {
    if (F.is_exact() && g.rational()) return F(*g.rational());
    return Scalar(F(g.value()));
}

Scalar value_at(const Polynomial& E, const Scalar& g) { return E(g); }

void require_match(const Hamiltonian& H, const StepVector& F) {
    if (F.pieces.size() != H.size()) throw std::invalid_argument("step vector does not match the Hamiltonian");
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

}  // namespace

std::array<Complex, 2> StepVector::operator()(const Hamiltonian& H, double t) const {
    const StepPiece& p = pieces.at(H.segment_at(t));
    return {eval(p.f, t), eval(p.g, t)};
}

StepVector operator+(const StepVector& a, const StepVector& b) {
    if (a.pieces.size() != b.pieces.size()) throw std::invalid_argument("step vectors of different shape");
    StepVector out = a;
    for (std::size_t k = 0; k < b.pieces.size(); ++k) {
        out.pieces[k].f = add(out.pieces[k].f, b.pieces[k].f);
        out.pieces[k].g = add(out.pieces[k].g, b.pieces[k].g);
    }
    return out;
}

StepVector operator*(const Scalar& s, const StepVector& v) {
    StepVector out = v;
    for (auto& p : out.pieces) {
        p.f = scale(s, p.f);
        p.g = scale(s, p.g);
    }
    return out;
}

void check_l_hat(const Hamiltonian& H, const StepVector& F) {
    require_match(H, F);
    for (std::size_t k = 0; k < H.size(); ++k) {
        const auto& d = H.segments()[k].direction;
        const StepPiece& p = F.pieces[k];
        // c (c f + s g) and s (c f + s g); both constant iff c f + s g is.
        TPolynomial u = add(scale(d[0], p.f), scale(d[1], p.g));
        TPolynomial v = add(scale(d[1], p.f), scale(d[2], p.g));
        double size = 0.0;
        for (const auto& c : u) size = std::max(size, c.abs());
        for (const auto& c : v) size = std::max(size, c.abs());
        for (std::size_t j = 1; j < std::max(u.size(), v.size()); ++j) {
            if ((j < u.size() && !negligible(u[j], size)) || (j < v.size() && !negligible(v[j], size)))
                throw std::invalid_argument("not in L-hat");
        }
    }
}

Scalar l2h_inner(const Hamiltonian& H, const StepVector& F, const StepVector& G) {
    check_l_hat(H, F);
    check_l_hat(H, G);
    std::vector<Rational> t = H.breakpoints();
    Scalar acc(0);
    for (std::size_t k = 0; k < H.size(); ++k) {
        const auto& d = H.segments()[k].direction;
        const StepPiece& a = F.pieces[k];
        const StepPiece& b = G.pieces[k];
        TPolynomial cu = conj(b.f), cv = conj(b.g);
        TPolynomial integrand = scale(d[0], mul(a.f, cu));
        integrand = add(integrand, scale(d[1], add(mul(a.f, cv), mul(a.g, cu))));
        integrand = add(integrand, scale(d[2], mul(a.g, cv)));
        acc += integrate(integrand, t[k], t[k + 1]);
    }
    return acc / Scalar::pi();
}

Scalar l2h_norm(const Hamiltonian& H, const StepVector& F) { return l2h_inner(H, F, F); }

ScaledPolynomial weyl_transform(const Hamiltonian& H, const StepVector& F, SolutionRow row) {
    check_l_hat(H, F);
    std::vector<Rational> t = H.breakpoints();
    // The row of W(t_{k-1}, z) as two polynomials in z. On segment k,
    // [X Y](t) H_k = [X Y](t_{k-1}) H_k because H_k J H_k = 0.
    TPolynomial x{Scalar(row == SolutionRow::AB ? 1 : 0)};
    TPolynomial y{Scalar(row == SolutionRow::AB ? 0 : 1)};
    TPolynomial acc;
    for (std::size_t k = 0; k < H.size(); ++k) {
        const auto& s = H.segments()[k];
        const auto& d = s.direction;
        Scalar If = integrate(F.pieces[k].f, t[k], t[k + 1]);
        Scalar Ig = integrate(F.pieces[k].g, t[k], t[k + 1]);
        Scalar w0 = d[0] * If + d[1] * Ig;
        Scalar w1 = d[1] * If + d[2] * Ig;
        acc = add(acc, add(scale(w0, x), scale(w1, y)));
        // [x y] (I - z len H J), H J = [[cs, -c^2], [s^2, -cs]]
        Scalar len(s.length);
        TPolynomial nx = add(x, scale(-len, shift(add(scale(d[1], x), scale(d[2], y)))));
        TPolynomial ny = add(y, scale(len, shift(add(scale(d[0], x), scale(d[1], y)))));
        x = std::move(nx);
        y = std::move(ny);
    }
    return to_scaled(scale(Scalar(1) / Scalar::pi(), acc));
}

StepVector solution_row(const Hamiltonian& H, const Scalar& g, SolutionRow row) {
    std::vector<Rational> t = H.breakpoints();
    Scalar x(row == SolutionRow::AB ? 1 : 0), y(row == SolutionRow::AB ? 0 : 1);
    StepVector out = StepVector::zero(H.size());
    for (std::size_t k = 0; k < H.size(); ++k) {
        const auto& s = H.segments()[k];
        const auto& d = s.direction;
        // [x y](t) = [x y](t_{k-1}) (I - g (t - t_{k-1}) H_k J)
        Scalar px = -g * (d[1] * x + d[2] * y);
        Scalar py = g * (d[0] * x + d[1] * y);
        Scalar a(t[k]);
        out.pieces[k].f = {x - px * a, px};
        out.pieces[k].g = {y - py * a, py};
        Scalar len(s.length);
        x += px * len;
        y += py * len;
    }
    return out;
}

StepVector inverse_weyl(const Hamiltonian& H, const HermiteBiehlerFrame& f, const ScaledPolynomial& F, SolutionRow row) {
    if (degree(F, 1e-12) >= f.degree()) throw std::invalid_argument("not a member of H(E)");
    StepVector out = StepVector::zero(H.size());
    for (const auto& atom : f.mu.atoms()) {
        Scalar Fg = value_at(F, atom.point);
        if (Fg.is_zero()) continue;
        Scalar Eg = value_at(f.E, atom.point);
        out = out + (Fg * atom.mass / (Eg * Eg.conj())) * solution_row(H, atom.point, row);
    }
    return out;
}

ModelSpace make_model_space(const HermiteBiehlerFrame& f, const Angle& theta) {
    ExtensionEigenbasis e = extension_eigenbasis(f, theta);
    if (e.s_theta_member) throw std::domain_error("S_theta lies in H(E): eigenbasis incomplete");
    std::vector<std::size_t> order(e.eigenvalues.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return e.eigenvalues[a].real() < e.eigenvalues[b].real(); });
    ModelSpace m{f, theta, {}, {}, {}, {}};
    for (std::size_t k : order) {
        const Scalar& g = e.eigenvalues[k];
        const ScaledPolynomial& F = e.normalized[k];
        Complex Fg = F(g.value()), Eg = f.E(g.value());
        double mu = std::norm(Eg) / std::norm(Fg);
        m.eigenvalues.push_back(g);
        m.basis.push_back(F);
        m.masses.push_back(mu);
        m.phases.push_back(std::sqrt(mu) * Fg / Eg);
    }
    return m;
}

Complex model_inner(const ModelVector& a, const ModelVector& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("model vectors of different dimension");
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) acc += a.coeffs[k] * std::conj(b.coeffs[k]);
    return acc;
}

namespace {

template <class Phi1>
ModelVector model_coefficients(const ModelSpace& m, Phi1 value) {
    ModelVector v;
    for (std::size_t k = 0; k < m.dimension(); ++k)
        v.coeffs.push_back(-kI * std::conj(m.phases[k]) * std::sqrt(m.masses[k]) * value(m.eigenvalues[k].real()));
    return v;
}

}  // namespace

ModelVector screw_line_S(const ModelSpace& m, double t) {
    return model_coefficients(m, [t](double g) {
        if (g == 0.0) return kI * t;
        return (std::exp(kI * g * t) - 1.0) / g;
    });
}

ModelVector phat(const ModelSpace& m, const TestFunction& phi) {
    return model_coefficients(m, [&phi](double g) { return phi1(phi, g); });
}

ScaledPolynomial E_times(const ModelSpace& m, const ModelVector& v) {
    if (v.coeffs.size() != m.dimension()) throw std::invalid_argument("model vector of wrong dimension");
    CPolynomial acc(std::vector<Complex>(std::max(1, m.frame.degree()), Complex(0.0)));
    for (std::size_t k = 0; k < m.dimension(); ++k) acc += m.basis[k].approx * v.coeffs[k];
    return ScaledPolynomial(std::move(acc));
}

StepVector L0_map(const Hamiltonian& H, const ModelSpace& m, const TestFunction& phi) {
    StepVector out = StepVector::zero(H.size());
    for (std::size_t k = 0; k < m.dimension(); ++k) {
        const Scalar& g = m.eigenvalues[k];
        Complex kappa = -kI * m.masses[k] / std::conj(m.frame.E(g.value()));
        Complex c = kappa * phi1(phi, g.real());
        if (c == Complex(0.0)) continue;
        out = out + Scalar(c) * solution_row(H, g);
    }
    return out;
}

DiagramInputs g0_diagram() {
    ScrewFunctionData g = g0_data();
    DiscreteMeasure tau = g.tau;
    return {std::move(g), std::move(tau), factorize(examples::W0()), make_model_space(examples::E0_frame())};
}

namespace {

struct Sample {
    double kernel_vs_phi1 = 0.0;
    double kernel_vs_phat = 0.0;
    double phat_vs_restriction = 0.0;
    double kernel_vs_l0 = 0.0;
    double weyl_l0_vs_phat = 0.0;
    double restriction_vs_phi1 = 0.0;
};

Sample measure(const DiagramInputs& in, const TestFunction& phi, Complex phase) {
    const double pi = std::numbers::pi;
    Sample s;
    double kernel = inner_product_Hg(in.g, phi, phi).kernel.real();
    double tau_norm = 0.0;
    for (const auto& a : in.tau.atoms()) tau_norm += a.mass.real() * std::norm(phi1(phi, a.point.real()));
    ModelVector P = phat(in.model, phi);
    ScaledPolynomial EP = E_times(in.model, P);
    double model_norm = model_inner(P, P).real() / pi;
    const HermiteBiehlerFrame& f = in.model.frame;
    double restricted = 0.0;
    for (const auto& a : f.mu.atoms()) {
        double g = a.point.real();
        Complex r = EP(Complex(g)) / f.E(Complex(g));
        restricted += a.mass.real() * std::norm(r);
        s.restriction_vs_phi1 = std::max(s.restriction_vs_phi1, std::abs(r - phase * phi1(phi, g)) / std::sqrt(pi));
    }
    restricted /= pi;
    StepVector L = L0_map(in.H, in.model, phi);
    double l0_norm = l2h_norm(in.H, L).real() / pi;
    ScaledPolynomial WL = weyl_transform(in.H, L);
    s.kernel_vs_phi1 = rel(kernel, tau_norm);
    s.kernel_vs_phat = rel(kernel, model_norm);
    s.phat_vs_restriction = rel(model_norm, restricted);
    s.kernel_vs_l0 = rel(kernel, l0_norm);
    s.weyl_l0_vs_phat = distance(WL.approx, EP.approx) / std::max(1.0, EP.approx.max_abs_coeff());
    return s;
}

DiagramReport assemble(const DiagramInputs& in, const std::vector<Sample>& samples, double tol) {
    DiagramReport rep;
    rep.tolerance = tol;
    auto worst = [&](double Sample::*field) {
        double w = 0.0;
        for (const auto& s : samples) w = std::max(w, s.*field);
        return w;
    };
    rep.residuals = {
        {"isometry Phi_1: ||phi||_G^2 vs ||Phi_1 phi||^2 in L^2(tau)", worst(&Sample::kernel_vs_phi1)},
        {"isometry P-hat: ||phi||_G^2 vs ||E P-hat||^2 / pi", worst(&Sample::kernel_vs_phat)},
        {"isometry restriction: ||E P-hat||^2 vs ||E P-hat / E||^2 in L^2(mu)", worst(&Sample::phat_vs_restriction)},
        {"isometry L_0: ||phi||_G^2 vs ||L_0 phi||^2 / pi", worst(&Sample::kernel_vs_l0)},
        {"triangle: W L_0 phi = E P-hat_phi", worst(&Sample::weyl_l0_vs_phat)},
        {"square: (E P-hat / E) on the level set = phase * Phi_1", worst(&Sample::restriction_vs_phi1)},
    };
    for (const auto& r : rep.residuals) rep.pass = rep.pass && r.residual < tol;

    // Preimages phi_k of the basis have Phi_1(phi_k, g) = sqrt(pi) F_k(g)/E(g).
    const ModelSpace& m = in.model;
    const std::size_t n = m.dimension();
    rep.basis_gram.assign(n, std::vector<Complex>(n, 0.0));
    for (const auto& a : in.tau.atoms()) {
        double g = a.point.real();
        Complex Eg = m.frame.E(Complex(g));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Complex pi_ = std::sqrt(std::numbers::pi) * m.basis[i](Complex(g)) / Eg;
                Complex pj = std::sqrt(std::numbers::pi) * m.basis[j](Complex(g)) / Eg;
                rep.basis_gram[i][j] += a.mass.real() * pi_ * std::conj(pj);
            }
        }
    }
    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag += rep.basis_gram[i][i].real();
    rep.gram_constant = n ? diag / static_cast<double>(n) : 0.0;
    return rep;
}

}  // namespace

DiagramReport diagram_check(const DiagramInputs& in, int samples, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::vector<Sample> out;
    DiagramReport probe;
    for (int k = 0; k < samples; ++k) out.push_back(measure(in, random_test_function(rng), probe.phase));
    return assemble(in, out, tol);
}

DiagramReport diagram_check(const DiagramInputs& in, const TestFunction& phi, double tol) {
    DiagramReport probe;
    return assemble(in, {measure(in, phi, probe.phase)}, tol);
}

}  // namespace screwline
