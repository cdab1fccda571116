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

// Discrete measures, Nevanlinna functions, the Cayley correspondence Q <-> Theta,
// and the level-set masses of a meromorphic inner function E^#/E.

#include <optional>
#include <vector>

#include "screwline/polynomial.hpp"
#include "screwline/rational_function.hpp"
#include "screwline/scalar.hpp"

namespace screwline {

struct Atom {
    Scalar point;
    Scalar mass;
};

/// Finitely many real points, strictly increasing, with positive masses.
class DiscreteMeasure {
public:
    DiscreteMeasure() = default;
    /// Sorts by point; throws std::invalid_argument on non-real points,
    /// non-positive masses or repeated points.
    explicit DiscreteMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    std::vector<double> points() const;
    std::vector<double> masses() const;

    Scalar total_mass() const;
    /// Mass at x (matched within tol), if x is an atom.
    std::optional<Scalar> mass_at(double x, double tol = 1e-9) const;
    /// Every mass multiplied by f (f > 0).
    DiscreteMeasure scaled(const Scalar& f) const;
    /// sum mass * f(point)
    template <class F>
    Complex integrate(F&& f) const {
        Complex acc = 0.0;
        for (const auto& a : atoms_) acc += a.mass.value() * f(a.point.real());
        return acc;
    }

    /// Exact atom-by-atom equality (both sides must be exact).
    bool exactly_equals(const DiscreteMeasure& o) const;

private:
    std::vector<Atom> atoms_;
};

/// Q(z) = a z + b + sum m_k (1/(g_k - z) - g_k/(1+g_k^2)).
struct NevanlinnaData {
    Scalar a;
    Scalar b;
    DiscreteMeasure measure;

    Complex operator()(Complex z) const;
};

/// Exact rational function; needs rational a, b, points and masses.
RationalFunction q_from_measure(const NevanlinnaData& d);

/// Inverse of q_from_measure: masses are minus the residues at the real
/// simple poles, a the linear coefficient, b = Re Q(i).
NevanlinnaData measure_from_q(const RationalFunction& Q);

/// Theta = (i - Q)/(i + Q)
RationalFunction cayley_q_to_theta(const RationalFunction& Q);
/// Q = i (1 - Theta)/(1 + Theta)
RationalFunction cayley_theta_to_q(const RationalFunction& theta);

/// E with Theta = E^#/E exactly; the denominator must be Hermite-Biehler.
Polynomial theta_to_e(const RationalFunction& theta);

/// Masses 2 pi/|Theta'(g)| = pi |B(g)/A'(g)| at the real zeros g of A.
DiscreteMeasure level_set_masses(const Polynomial& E);

/// d tau = d mu / pi
DiscreteMeasure tau_from_mu(const DiscreteMeasure& mu);

}  // namespace screwline
