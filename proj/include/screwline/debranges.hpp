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

// de Branges spaces H(E) of polynomials: H(E) is the set of polynomials of
// degree < deg E, normed through the level set {A = 0} of Theta = E^#/E.

#include <optional>
#include <vector>

#include "screwline/matrix_polynomial.hpp"
#include "screwline/polynomial.hpp"
#include "screwline/scalar.hpp"
#include "screwline/spectra.hpp"

namespace screwline {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Fraction-free Gaussian elimination (row pivoting); exact whenever the
/// entries stay exact.
Scalar det_bareiss(ScalarMatrix m);

struct HermiteBiehlerFrame {
    Polynomial E;
    Polynomial A;
    Polynomial B;
    DiscreteMeasure mu;  ///< level_set_masses(E)
    int degree() const { return E.degree(); }
};

/// Throws std::invalid_argument("not Hermite-Biehler") unless hb_test(E) holds,
/// and std::domain_error when deg A < deg E (the level set then misses a point
/// at infinity; rotate E first).
HermiteBiehlerFrame make_frame(const Polynomial& E);

/// sum_g p(g) conj q(g) / |E(g)|^2 mu(g) over the level set.
/// Throws std::invalid_argument("not a member of H(E)") if a degree is >= deg E.
Scalar inner_product(const HermiteBiehlerFrame& f, const ScaledPolynomial& p, const ScaledPolynomial& q);
Scalar inner_product(const HermiteBiehlerFrame& f, const Polynomial& p, const Polynomial& q);
/// sqrt(<p, p>)
Scalar norm(const HermiteBiehlerFrame& f, const ScaledPolynomial& p);

struct MomentTable {
    std::vector<Scalar> moments;  ///< m_0 .. m_{2n-2}
    std::vector<Scalar> hankel;   ///< H_0 .. H_{n-1}, H_k = det(m_{i+j})_{i,j<=k}
};

/// Moments of the weighted level-set measure |E|^{-2} d mu, so that
/// <z^i, z^j> = m_{i+j}.
MomentTable moments(const HermiteBiehlerFrame& f);

/// (conj A(z) B(w) - A(w) conj B(z)) / (pi (w - conj z)), the reproducing
/// kernel at z as a function of w; the derivative limit is used at w = conj z.
Complex kernel_ab(const HermiteBiehlerFrame& f, Complex z, Complex w);
/// The same kernel from the bordered Hankel determinant
/// -det[[M, v(w)], [v(z)^*, 0]] / H_{n-1}, v(w) = (1, w, ..., w^{n-1}).
Complex kernel_moment(const HermiteBiehlerFrame& f, Complex z, Complex w);

/// Orthonormal q_0 .. q_{n-1}: q_k = D_k / sqrt(H_{k-1} H_k) with D_k the
/// Hankel block bordered by the row (1, z, ..., z^k).
/// Throws std::domain_error("singular Hankel matrix").
std::vector<ScaledPolynomial> gram_schmidt_basis(const HermiteBiehlerFrame& f);

/// S_theta = e^{i theta} E - e^{-i theta} E^#
ScaledPolynomial s_theta(const HermiteBiehlerFrame& f, const Angle& theta);
/// deg S_theta < deg E
bool s_theta_in_space(const HermiteBiehlerFrame& f, const Angle& theta, double tol = 1e-12);
/// The single theta in [0, pi) with S_theta in H(E): e^{2 i theta} = conj(l)/l
/// for the leading coefficient l of E.
Angle member_angle(const HermiteBiehlerFrame& f);

struct ExtensionEigenbasis {
    std::vector<Scalar> eigenvalues;
    std::vector<ScaledPolynomial> eigenfunctions;  ///< S_theta / (z - g)
    /// Real multiples of A_{theta+pi/2}/(z - g) with unit norm and positive
    /// leading coefficient; S_theta itself (normalized) is appended last
    /// when it lies in H(E).
    std::vector<ScaledPolynomial> normalized;
    bool s_theta_member = false;
};

/// Eigenvalues and eigenfunctions of the self-adjoint extension M_theta.
/// Throws std::domain_error("S_theta has a non-real zero").
ExtensionEigenbasis extension_eigenbasis(const HermiteBiehlerFrame& f, const Angle& theta);

/// (S_theta(w0) F - S_theta F(w0)) / (z - w0) with w0 = i, or 2i if S_theta(i) = 0.
ScaledPolynomial domain_element(const HermiteBiehlerFrame& f, const Angle& theta, const ScaledPolynomial& F);
/// Dimension of the span of domain_element(F) over the monomial basis of H(E).
int domain_dimension(const HermiteBiehlerFrame& f, const Angle& theta, double tol = 1e-10);

/// (A', B') = M (A, B) for a real M of determinant 1.
/// Throws std::invalid_argument("matrix not in SL2(R)").
HermiteBiehlerFrame sl2_transform(const HermiteBiehlerFrame& f, const ExactMatrix2& M);
/// [[cos t, sin t], [-sin t, cos t]], for which E' = e^{it} E.
ExactMatrix2 rotation_matrix(const Rational& cos_t, const Rational& sin_t);

}  // namespace screwline
