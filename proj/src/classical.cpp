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

#include "screwline/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "screwline/quadrature.hpp"

namespace screwline {

namespace {

const Complex kI(0.0, 1.0);
const char* kNotString = "not a string function";

Rational real_part(const ExactComplex& c, const char* what) {
    if (!c.is_real()) throw std::domain_error(what);
    return c.re();
}

/// Value of a rational function at infinity; nullopt when it has a pole there.
std::optional<ExactComplex> at_infinity(const RationalFunction& r) {
    if (r.is_zero()) return ExactComplex(0);
    int gap = r.degree_gap();
    if (gap > 0) return std::nullopt;
    if (gap < 0) return ExactComplex(0);
    return r.num().lead() / r.den().lead();
}

RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial(ExactComplex(c))); }

}  // namespace

RationalFunction q_substitute(const RationalFunction& Q) {
    if (Q.is_zero()) return Q;
    if (reflect(Q) != -Q) throw std::domain_error("substitution not rational");
    RationalFunction R(Q.num(), Q.den() * Polynomial::x());
    auto even_part = [](const Polynomial& p) {
        std::vector<ExactComplex> c;
        for (int k = 0; k <= p.degree(); ++k) {
            if (k % 2 == 1) {
                if (!p.coeff(k).is_zero()) throw std::domain_error("substitution not rational");
            } else {
                c.push_back(p.coeff(k));
            }
        }
        return Polynomial(std::move(c));
    };
    return {even_part(R.num()), even_part(R.den())};
}

KreinString stieltjes_string(const RationalFunction& q) {
    if (!q.num().is_real() || !q.den().is_real()) throw std::domain_error(kNotString);
    auto b = at_infinity(q);
    if (!b) throw std::domain_error(kNotString);
    Rational x = real_part(*b, kNotString);
    if (sgn(x) < 0) throw std::domain_error(kNotString);
    KreinString s;
    RationalFunction r = q - constant(x);
    const RationalFunction z(Polynomial::x());
    while (!r.is_zero()) {
        // Mass step: 1/r = -m z + (something finite at infinity).
        RationalFunction u = RationalFunction(Polynomial(1)) / r;
        if (u.degree_gap() != 1) throw std::domain_error(kNotString);
        Rational m = -real_part(u.num().lead() / u.den().lead(), kNotString);
        if (sgn(m) <= 0) throw std::domain_error(kNotString);
        s.masses.push_back({x, m});
        RationalFunction rest = u + constant(m) * z;
        if (rest.is_zero()) return s;
        // Length step: 1/rest = l + (something vanishing at infinity).
        RationalFunction t = RationalFunction(Polynomial(1)) / rest;
        if (t.degree_gap() != 0) throw std::domain_error(kNotString);
        Rational l = real_part(*at_infinity(t), kNotString);
        if (sgn(l) <= 0) throw std::domain_error(kNotString);
        x += l;
        r = t - constant(l);
    }
    s.L = x;
    return s;
}

StringSolution<Polynomial> string_solve(const KreinString& s, const Rational& x) {
    if (sgn(x) < 0) throw std::invalid_argument("string_solve: x < 0");
    StringSolution<Polynomial> y{Polynomial(1), Polynomial(), Polynomial(), Polynomial(1)};
    Rational p(0);
    const Polynomial lambda = Polynomial::x();
    for (const auto& a : s.masses) {
        if (a.position > x) break;
        ExactComplex step(Rational(a.position - p));
        y.phi += y.dphi * step;
        y.psi += y.dpsi * step;
        y.dphi -= lambda * y.phi * ExactComplex(a.mass);
        y.dpsi -= lambda * y.psi * ExactComplex(a.mass);
        p = a.position;
    }
    ExactComplex step(Rational(x - p));
    y.phi += y.dphi * step;
    y.psi += y.dpsi * step;
    return y;
}

StringSolution<Complex> string_solve(const KreinString& s, Complex lambda, double x) {
    if (x < 0.0) throw std::invalid_argument("string_solve: x < 0");
    StringSolution<Complex> y{1.0, 0.0, 0.0, 1.0};
    double p = 0.0;
    for (const auto& a : s.masses) {
        double xj = a.position.get_d();
        if (xj > x) break;
        y.phi += y.dphi * (xj - p);
        y.psi += y.dpsi * (xj - p);
        y.dphi -= lambda * a.mass.get_d() * y.phi;
        y.dpsi -= lambda * a.mass.get_d() * y.psi;
        p = xj;
    }
    y.phi += y.dphi * (x - p);
    y.psi += y.dpsi * (x - p);
    return y;
}

RationalFunction titchmarsh_weyl(const KreinString& s) {
    if (s.L) {
        auto y = string_solve(s, *s.L);
        return {y.psi, y.phi};
    }
    Rational last = s.masses.empty() ? Rational(0) : s.masses.back().position;
    auto y = string_solve(s, last);
    if (y.dphi.is_zero()) throw std::domain_error("L = q(0-) inconsistent");
    return {y.dpsi, y.dphi};
}

LevyTriplet levy_triplet(const ScrewFunctionData& g) {
    if (g.g0 != 0.0) throw std::invalid_argument("levy_triplet: g(0) must vanish");
    LevyTriplet t;
    t.a = Scalar(0);
    t.b = Scalar(Rational(g.c));
    std::vector<Atom> nu;
    for (const auto& a : g.tau.atoms()) {
        if (a.point.is_zero()) {
            t.a = a.mass;
            continue;
        }
        nu.push_back({a.point, a.mass / (a.point * a.point)});
    }
    t.nu = DiscreteMeasure(std::move(nu));
    return t;
}

ScrewFunctionData screw_from_triplet(const LevyTriplet& t) {
    ScrewFunctionData g;
    g.c = t.b.real();
    std::vector<Atom> tau;
    if (!t.a.is_zero()) tau.push_back({Scalar(0), t.a});
    for (const auto& a : t.nu.atoms()) tau.push_back({a.point, a.mass * a.point * a.point});
    g.tau = DiscreteMeasure(std::move(tau));
    return g;
}

Complex levy_exponent(const LevyTriplet& t, double x) {
    Complex v = -0.5 * t.a.real() * x * x + kI * t.b.real() * x;
    for (const auto& a : t.nu.atoms()) {
        double l = a.point.real();
        v += a.mass.real() * (std::exp(kI * x * l) - 1.0 - kI * x * l / (1.0 + l * l));
    }
    return v;
}

Scalar levy_drift0(const LevyTriplet& t) {
    Scalar b = t.b;
    for (const auto& a : t.nu.atoms()) b -= a.mass * a.point / (Scalar(1) + a.point * a.point);
    return b;
}

namespace {

/// Poisson intensity l of the symmetric two-atom Levy measure (0 when empty).
double symmetric_intensity(const LevyTriplet& t) {
    if (!(t.a.real() > 0.0)) throw std::invalid_argument("idd_density: needs a Gaussian part (a > 0)");
    const auto& atoms = t.nu.atoms();
    if (atoms.empty()) return 0.0;
    if (atoms.size() == 2 && atoms[0].point.real() == -1.0 && atoms[1].point.real() == 1.0 &&
        atoms[0].mass.real() == atoms[1].mass.real())
        return atoms[0].mass.real();
    throw std::invalid_argument("idd_density: only nu = l (delta_1 + delta_-1) is supported");
}

std::vector<double> poisson_weights(double l, int K) {
    std::vector<double> w(static_cast<std::size_t>(K) + 1);
    w[0] = std::exp(-l);
    for (int k = 1; k <= K; ++k) w[k] = w[k - 1] * l / k;
    return w;
}

}  // namespace

double idd_density(const LevyTriplet& t, double x, int K) {
    double l = symmetric_intensity(t);
    double a = t.a.real(), b = t.b.real();
    std::vector<double> w = poisson_weights(l, l == 0.0 ? 0 : K);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * a);
    double acc = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            double d = x - b - (static_cast<double>(k) - static_cast<double>(j));
            acc += w[k] * w[j] * std::exp(-0.5 * d * d / a);
        }
    }
    return norm * acc;
}

double idd_tail_bound(const LevyTriplet& t, int K) {
    double l = symmetric_intensity(t);
    if (l == 0.0) return 0.0;
    double kept = 0.0;
    for (double w : poisson_weights(l, K)) kept += w;
    return (1.0 - kept * kept) / std::sqrt(2.0 * std::numbers::pi * t.a.real());
}

CharfnCheck idd_charfn_check(const ScrewFunctionData& g, const std::vector<double>& t_points, int K, double range) {
    LevyTriplet tr = levy_triplet(g);
    auto nodes = quad::gauss_nodes(-range, range, static_cast<int>(std::ceil(8.0 * range)));
    std::vector<double> density;
    density.reserve(nodes.size());
    for (const auto& n : nodes) density.push_back(idd_density(tr, n.x, K));
    CharfnCheck out;
    for (std::size_t i = 0; i < nodes.size(); ++i) out.normalization += nodes[i].w * density[i];
    for (double t : t_points) {
        Complex c = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) c += nodes[i].w * density[i] * std::exp(kI * t * nodes[i].x);
        out.t.push_back(t);
        out.residual.push_back(std::abs(c - std::exp(g(t))));
    }
    return out;
}

Complex mp_annihilator(double t) {
    double t2 = t * t;
    return -4.0 * kI * t * (8.0 * t2 * t2 - 38.0 * t2 + 27.0) * std::exp(-t2);
}

MeanPeriodicReport mean_periodic_checks(double grid_half_width, int points, double range, double tol) {
    const ScrewFunctionData g = g0_data();
    const double panel = 0.25;
    auto convolve = [&](double t, double lo, double hi) {
        Complex acc = 0.0;
        if (hi <= lo) return acc;
        int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel)));
        for (const auto& n : quad::gauss_nodes(lo, hi, panels)) acc += n.w * g(t - n.x) * mp_annihilator(n.x);
        return acc;
    };
    auto one_sided = [](double t) { return -kI * (8.0 * t * t - 3.0) * std::exp(-t * t); };

    MeanPeriodicReport rep;
    rep.tolerance = tol;
    for (int k = 0; k < points; ++k) {
        double t = points == 1 ? 0.0 : -grid_half_width + 2.0 * grid_half_width * k / (points - 1);
        rep.convolution = std::max(rep.convolution, std::abs(convolve(t, -range, range)));
        Complex plus = convolve(t, -range, t);
        Complex minus = convolve(t, t, range);
        rep.one_sided = std::max({rep.one_sided, std::abs(plus - one_sided(t)), std::abs(minus + one_sided(t))});
    }

    const auto nodes = quad::gauss_nodes(-range, range, static_cast<int>(std::ceil(2.0 * range / panel)));
    auto fourier = [&](auto&& f, Complex z) {
        Complex acc = 0.0;
        for (const auto& n : nodes) acc += n.w * f(n.x) * std::exp(kI * z * n.x);
        return acc;
    };
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    for (Complex z : {Complex(0.0), Complex(0.3), Complex(1.1), Complex(-2.0), Complex(0.5, 0.5), Complex(1.0, 1.0)}) {
        Complex expected = sqrt_pi * std::exp(-z * z / 4.0) * z * z * z * (z * z - 1.0);
        rep.fourier = std::max(rep.fourier, std::abs(fourier(mp_annihilator, z) - expected));
    }

    // FC(g0)(z) = (g0^+ * phi)^(z) / phi-hat(z), with the convolution itself by quadrature.
    const Complex z(0.0, 2.0);
    Complex num = fourier([&](double t) { return convolve(t, -range, t); }, z);
    Complex den = fourier(mp_annihilator, z);
    Complex Q0 = (1.0 - 2.0 * z * z) / (z * z * z - z);
    rep.carleman = std::abs(num / den + kI / (z * z) * Q0);

    rep.pass = rep.convolution < tol && rep.fourier < tol && rep.one_sided < tol && rep.carleman < tol;
    return rep;
}

}  // namespace screwline
