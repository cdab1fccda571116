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

// Transfer matrices W(z) with W(0) = I and det W = 1, their factorization
// into elementary factors I - z M J, and canonical systems with piecewise
// constant Hamiltonians.

#include <cstdint>
#include <string>
#include <vector>

#include "screwline/matrix_polynomial.hpp"
#include "screwline/scalar.hpp"

namespace screwline {

struct TransferReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/// Exact W(0) = I and det W = 1; sampled at random points of the upper
/// half-plane: Re(A conj D - B conj C) >= 1 and both kernel quotients
/// (B conj A - A conj B)/(z - conj z), (D conj C - C conj D)/(z - conj z) >= 0,
/// each up to -tol (relative).
TransferReport validate_transfer(const MatrixPolynomial& W, int samples = 64, std::uint64_t seed = 0, double tol = 1e-10);

/// Minimal extended-Euclid solution of A D - B C = 1 (deg A < deg C,
/// deg B < deg D). Throws std::invalid_argument("C,D not coprime").
std::pair<Polynomial, Polynomial> bezout_solve(const Polynomial& C, const Polynomial& D);
/// bezout_solve followed by validate_transfer on [[A, B], [C, D]].
/// Throws std::domain_error("completion not J-inner") when that fails.
std::pair<Polynomial, Polynomial> bezout_complete(const Polynomial& C, const Polynomial& D);

/// Real symmetric [[alpha, beta], [beta, gamma]] with alpha, gamma >= 0 and
/// alpha gamma = beta^2.
struct ElementaryFactor {
    Rational alpha;
    Rational beta;
    Rational gamma;

    Rational length() const { return alpha + gamma; }
    ExactMatrix2 matrix() const;
    /// Direction angle in [0, pi) with M = length [c; s][c s].
    Angle angle() const;
    /// I - z M J
    MatrixPolynomial factor() const;
};

/// Peels the rightmost factor: W = V (I - z M J) with deg V = deg W - 1.
/// Throws std::domain_error("not factorable: matrix is not of canonical-product form").
std::pair<MatrixPolynomial, ElementaryFactor> peel_factor(const MatrixPolynomial& W);

/// One step of a Hamiltonian: H = [c^2, cs; cs, s^2] on an interval of the
/// given length. `direction` holds (c^2, cs, s^2), exact when possible.
struct Segment {
    Rational length;
    Angle theta;
    std::array<Scalar, 3> direction;

    Segment(Rational length, Angle theta);
    /// Exact direction from a factor (possible even when theta is irrational).
    static Segment from_factor(const ElementaryFactor& m);
    bool exact() const;
};

/// Piecewise constant Hamiltonian on [0, L]. Throws std::invalid_argument on
/// non-positive lengths and std::domain_error("consecutive factors of equal type")
/// when neighbouring segments have the same direction.
class Hamiltonian {
public:
    Hamiltonian() = default;
    explicit Hamiltonian(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t size() const { return segments_.size(); }
    /// t_0 = 0 < t_1 < ... < t_r
    std::vector<Rational> breakpoints() const;
    Rational total_length() const;
    /// Index of the segment containing t (the last one at t = L).
    std::size_t segment_at(double t) const;
    /// int_0^L tr H(t) dt, finite in the limit circle case.
    Scalar trace_integral() const;

private:
    std::vector<Segment> segments_;
};

/// Peels deg W factors and orders them left to right.
Hamiltonian factorize(const MatrixPolynomial& W);

/// W(t, z): W(t_{k-1}) (I - z (t - t_{k-1}) H_k J) on segment k. Exact
/// version needs rational t and exact directions.
/// Throws std::out_of_range("t outside [0, L]").
MatrixPolynomial fundamental_solution(const Hamiltonian& H, const Rational& t);
ComplexMatrix2 fundamental_solution(const Hamiltonian& H, double t, Complex z);

std::vector<Rational> regular_points(const Hamiltonian& H);

struct ChainLink {
    Rational t;
    Polynomial E;  ///< C(t, z) - i D(t, z)
    int dimension = 0;
};

/// E(t, z) at each regular point.
std::vector<ChainLink> subspace_chain(const Hamiltonian& H);

/// K(t, z, z) = (conj C D - C conj D)/(pi (z - conj z)) from the bottom row of W(t, z).
double chain_kernel_diagonal(const Hamiltonian& H, double t, Complex z);

}  // namespace screwline
