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

#include "screwline/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "screwline/roots.hpp"

namespace screwline {

namespace {

Rational require_rational(const Scalar& s, const char* what) {
    auto r = s.rational();
    if (!r || !r->is_real()) throw std::invalid_argument(std::string("q_from_measure: ") + what + " is not an exact real rational");
    return r->re();
}

// Real scalar from an exact or floating residue-type value.
Scalar real_scalar(const std::optional<ExactComplex>& exact, Complex approx) {
    if (exact) return Scalar(ExactComplex(exact->re()));
    return Scalar(approx.real());
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) {
        if (std::abs(a.point.imag()) > 0.0) throw std::invalid_argument("measure point is not real");
        if (!(a.mass.real() > 0.0) || std::abs(a.mass.imag()) > 0.0) throw std::invalid_argument("measure mass is not positive");
    }
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return x.point.real() < y.point.real(); });
    for (std::size_t k = 1; k < atoms_.size(); ++k) {
        if (!(atoms_[k - 1].point.real() < atoms_[k].point.real())) throw std::invalid_argument("measure points are not distinct");
    }
}

std::vector<double> DiscreteMeasure::points() const {
    std::vector<double> v;
    for (const auto& a : atoms_) v.push_back(a.point.real());
    return v;
}

std::vector<double> DiscreteMeasure::masses() const {
    std::vector<double> v;
    for (const auto& a : atoms_) v.push_back(a.mass.real());
    return v;
}

Scalar DiscreteMeasure::total_mass() const {
    Scalar s;
    for (const auto& a : atoms_) s += a.mass;
    return s;
}

std::optional<Scalar> DiscreteMeasure::mass_at(double x, double tol) const {
    for (const auto& a : atoms_) {
        if (std::abs(a.point.real() - x) <= tol) return a.mass;
    }
    return std::nullopt;
}

DiscreteMeasure DiscreteMeasure::scaled(const Scalar& f) const {
    std::vector<Atom> v = atoms_;
    for (auto& a : v) a.mass *= f;
    return DiscreteMeasure(std::move(v));
}

bool DiscreteMeasure::exactly_equals(const DiscreteMeasure& o) const {
    if (atoms_.size() != o.atoms_.size()) return false;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
        auto p = atoms_[k].point.exactly_equals(o.atoms_[k].point);
        auto m = atoms_[k].mass.exactly_equals(o.atoms_[k].mass);
        if (!p || !*p || !m || !*m) return false;
    }
    return true;
}

Complex NevanlinnaData::operator()(Complex z) const {
    Complex q = a.value() * z + b.value();
    for (const auto& at : measure.atoms()) {
        double g = at.point.real();
        q += at.mass.value() * (1.0 / (g - z) - g / (1.0 + g * g));
    }
    return q;
}

RationalFunction q_from_measure(const NevanlinnaData& d) {
    Rational a = require_rational(d.a, "a");
    Rational b = require_rational(d.b, "b");
    RationalFunction q(Polynomial(std::vector<ExactComplex>{ExactComplex(b), ExactComplex(a)}));
    for (const auto& at : d.measure.atoms()) {
        Rational g = require_rational(at.point, "point");
        Rational m = require_rational(at.mass, "mass");
        RationalFunction term(Polynomial(ExactComplex(m)), Polynomial(std::vector<ExactComplex>{ExactComplex(g), ExactComplex(-1)}));
        Rational shift = m * g / (1 + g * g);
        q = q + term - RationalFunction(Polynomial(ExactComplex(shift)));
    }
    return q;
}

NevanlinnaData measure_from_q(const RationalFunction& Q) {
    if (!Q.num().is_real() || !Q.den().is_real()) throw std::domain_error("not real-meromorphic Herglotz");
    PartialFractions pf = partial_fractions(Q);
    NevanlinnaData d;
    if (pf.polynomial_part.degree() > 1) throw std::domain_error("not Herglotz");
    Rational a = pf.polynomial_part.coeff(1).re();
    if (sgn(a) < 0) throw std::domain_error("not Herglotz");
    d.a = Scalar(a);

    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < pf.poles.size(); ++k) {
        if (std::abs(pf.poles[k].imag()) > 1e-9) throw std::domain_error("not real-meromorphic Herglotz");
        Scalar point = real_scalar(pf.exact_poles[k], pf.poles[k]);
        std::optional<ExactComplex> neg_res;
        if (pf.exact_residues[k]) neg_res = -*pf.exact_residues[k];
        Scalar mass = real_scalar(neg_res, -pf.residues[k]);
        if (!(mass.real() > 0.0)) throw std::domain_error("not Herglotz");
        atoms.push_back({point, mass});
    }
    d.measure = DiscreteMeasure(std::move(atoms));

    // b = Re Q(i), exact when i is not a pole.
    ExactComplex qi = Q(ExactComplex::i());
    d.b = Scalar(qi.re());

    for (double x : {-3.0, -0.7, 0.2, 1.3, 5.0}) {
        for (double y : {0.05, 0.5, 2.0}) {
            if (Q(Complex(x, y)).imag() < -1e-9) throw std::domain_error("not Herglotz");
        }
    }
    return d;
}

RationalFunction cayley_q_to_theta(const RationalFunction& Q) {
    RationalFunction i(Polynomial(ExactComplex::i()));
    RationalFunction den = i + Q;
    if (den.is_zero()) throw std::domain_error("cayley: i + Q vanishes identically");
    return (i - Q) / den;
}

RationalFunction cayley_theta_to_q(const RationalFunction& theta) {
    RationalFunction one(Polynomial(1));
    RationalFunction den = one + theta;
    if (den.is_zero()) throw std::domain_error("cayley: 1 + Theta vanishes identically");
    return RationalFunction(Polynomial(ExactComplex::i())) * (one - theta) / den;
}

Polynomial theta_to_e(const RationalFunction& theta) {
    const Polynomial& den = theta.den();
    if (den.degree() >= 1 && !hb_test(den)) throw std::domain_error("denominator not Hermite-Biehler");
    if (theta.num().is_zero()) throw std::domain_error("not inner of HB form");
    // den is monic, so num = u den^# forces u = lead(num).
    ExactComplex u = theta.num().lead();
    if (u.norm() != 1 || theta.num() != sharp(den) * u) throw std::domain_error("not inner of HB form");
    // E = c den with conj(c)/c = u.
    ExactComplex c(1);
    if (u == ExactComplex(-1)) {
        c = ExactComplex::i();
    } else if (u != ExactComplex(1)) {
        c += u.conj();
    }
    return den * c;
}

DiscreteMeasure level_set_masses(const Polynomial& E) {
    auto [A, B] = ab_split(E);
    if (A.degree() < 1) return {};
    Polynomial dA = derivative(A);
    std::vector<Complex> zs = roots(A);
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < zs.size(); ++k) {
        if (std::abs(zs[k].imag()) > 1e-9) throw std::domain_error("level set: A has a non-real zero");
        if (k > 0 && std::abs(zs[k].real() - zs[k - 1].real()) < 1e-7) throw std::domain_error("level set: A has a repeated zero");
    }
    for (Complex z : zs) {
        if (auto g = exact_root(A, z)) {
            ExactComplex ratio = B(*g) / dA(*g);
            Rational m = abs(ratio.re());
            atoms.push_back({Scalar(*g), Scalar::pi() * Scalar(m)});
        } else {
            double x = z.real();
            double m = std::abs((B(Complex(x)) / dA(Complex(x))).real());
            atoms.push_back({Scalar(x), Scalar::pi() * Scalar(m)});
        }
    }
    return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure tau_from_mu(const DiscreteMeasure& mu) { return mu.scaled(Scalar(1) / Scalar::pi()); }

}  // namespace screwline
