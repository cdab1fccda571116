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

// The space L-hat^2(H) of step vectors attached to a piecewise constant
// Hamiltonian, the Weyl transform onto H(E), the model space spanned by an
// extension eigenbasis, and the maps phi -> P-hat_phi and L_0 that close the
// diagram H(G_g) -> L-hat^2(H) -> H(E) -> L^2(mu).

#include <cstdint>
#include <string>
#include <vector>

#include "screwline/canonical.hpp"
#include "screwline/debranges.hpp"
#include "screwline/screw.hpp"

namespace screwline {

/// Polynomial in t, ascending coefficients.
using TPolynomial = std::vector<Scalar>;

/// Components (f, g) of a step vector on one segment, as polynomials in the
/// global variable t.
struct StepPiece {
    TPolynomial f;
    TPolynomial g;
};

/// One piece per Hamiltonian segment. On a segment of direction (c, s) the
/// combination c f + s g must be constant; the other combination is free and
/// does not contribute to the norm.
struct StepVector {
    std::vector<StepPiece> pieces;

    static StepVector zero(std::size_t segments) { return {std::vector<StepPiece>(segments)}; }
    /// (f, g) at t (the piece of segment_at(t)).
    std::array<Complex, 2> operator()(const Hamiltonian& H, double t) const;
};

StepVector operator+(const StepVector& a, const StepVector& b);
StepVector operator*(const Scalar& s, const StepVector& v);

/// Throws std::invalid_argument("not in L-hat") when c f + s g is not
/// constant on some segment, or when the piece count does not match.
void check_l_hat(const Hamiltonian& H, const StepVector& F);

/// (1/pi) sum_k int [conj u, conj v] H_k [f, g]^T dt over the segments,
/// for F = (f, g) and G = (u, v).
Scalar l2h_inner(const Hamiltonian& H, const StepVector& F, const StepVector& G);
/// ||F||^2 = l2h_inner(H, F, F).
Scalar l2h_norm(const Hamiltonian& H, const StepVector& F);

/// Which row of W(t, z) the transform integrates against.
enum class SolutionRow { AB, CD };

/// (1/pi) int [X(t,z) Y(t,z)] H(t) F(t) dt with (X, Y) the chosen row.
/// Exact when H and F are.
ScaledPolynomial weyl_transform(const Hamiltonian& H, const StepVector& F, SolutionRow row = SolutionRow::CD);

/// The chosen row of W(t, g) as a step vector in t.
StepVector solution_row(const Hamiltonian& H, const Scalar& g, SolutionRow row = SolutionRow::CD);

/// sum over the level set of F(g) mu(g) / |E(g)|^2 [X(t,g); Y(t,g)].
StepVector inverse_weyl(const Hamiltonian& H, const HermiteBiehlerFrame& f, const ScaledPolynomial& F,
                        SolutionRow row = SolutionRow::CD);

/// Orthonormal eigenbasis of M_theta on H(E), sorted by eigenvalue, with the
/// masses mu(g) = |E(g)|^2/|F_g(g)|^2 and the unimodular boundary phases
/// eps(g) = sqrt(mu(g)) F_g(g)/E(g).
struct ModelSpace {
    HermiteBiehlerFrame frame;
    Angle theta;
    std::vector<Scalar> eigenvalues;
    std::vector<ScaledPolynomial> basis;
    std::vector<double> masses;
    std::vector<Complex> phases;

    std::size_t dimension() const { return basis.size(); }
};

/// Throws std::domain_error when S_theta lies in H(E) (the eigenbasis then
/// misses a direction).
ModelSpace make_model_space(const HermiteBiehlerFrame& f, const Angle& theta = Angle::pi_times(Rational(1, 2)));

/// Coefficients over ModelSpace::basis.
struct ModelVector {
    std::vector<Complex> coeffs;
};

Complex model_inner(const ModelVector& a, const ModelVector& b);

/// Coefficient on F_g is -i conj(eps(g)) sqrt(mu(g)) (e^{igt} - 1)/g, the
/// quotient read as i t at g = 0. For E0 this is
/// sqrt(pi) i t psi_0 + sqrt(pi/2)(e^{it} - 1) psi_1 - sqrt(pi/2)(e^{-it} - 1) psi_{-1}.
ModelVector screw_line_S(const ModelSpace& m, double t);

/// The same coefficients with (e^{igt} - 1)/g replaced by Phi_1(phi, g).
ModelVector phat(const ModelSpace& m, const TestFunction& phi);

/// sum_k coeffs[k] basis[k]
ScaledPolynomial E_times(const ModelSpace& m, const ModelVector& v);

/// (L_0 phi)(t) = sum_g -i mu(g) / conj E(g) Phi_1(phi, g) [C(t,g); D(t,g)].
/// For E0: pi(-phi-hat'(0)[C,D](t,0) + phi-hat(1)/2 [C,D](t,1) - phi-hat(-1)/2 [C,D](t,-1)).
StepVector L0_map(const Hamiltonian& H, const ModelSpace& m, const TestFunction& phi);

/// Everything the diagram needs. `tau` is the measure used on the Phi_1 leg;
/// the kernel norm always comes from g.
struct DiagramInputs {
    ScrewFunctionData g;
    DiscreteMeasure tau;
    Hamiltonian H;
    ModelSpace model;
};

/// The g0 pipeline: g0, tau0, H0 = factorize(W0), model space of E0 at pi/2.
DiagramInputs g0_diagram();

struct DiagramResidual {
    std::string name;
    double residual = 0.0;
};

struct DiagramReport {
    /// Worst residual of each check over all test functions.
    std::vector<DiagramResidual> residuals;
    double tolerance = 1e-6;
    bool pass = true;
    /// <phi_k, phi_l> for the preimages of the basis, computed on the spectral
    /// side; its diagonal is reported as the measured constant.
    std::vector<std::vector<Complex>> basis_gram;
    double gram_constant = 0.0;
    /// E P-hat / E = phase * Phi_1 on the level set.
    Complex phase{0.0, -1.0};
};

/// Isometries ||phi||^2_G = ||Phi_1 phi||^2_tau = (1/pi)||E P-hat||^2 =
/// (1/pi)||(E P-hat/E) restricted to the level set||^2_mu = (1/pi)||L_0 phi||^2,
/// and the commutations W L_0 phi = E P-hat_phi and (E P-hat/E)(g) = -i Phi_1(phi, g),
/// over `samples` seeded random zero-mean test functions.
DiagramReport diagram_check(const DiagramInputs& in, int samples = 20, std::uint64_t seed = 0, double tol = 1e-6);
/// The same checks for a single test function.
DiagramReport diagram_check(const DiagramInputs& in, const TestFunction& phi, double tol = 1e-6);

}  // namespace screwline
