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

// Polynomial roots (Aberth iteration with Newton polishing), the
// Hermite-Biehler test, and partial fractions with simple poles.

#include <optional>
#include <vector>

#include "screwline/polynomial.hpp"
#include "screwline/rational_function.hpp"

namespace screwline {

/// All roots with multiplicity. Each root a satisfies
/// |p(a)| < tol * max(max_k |c_k|, sum_k |c_k| |a|^k) after polishing
/// (p normalized to be monic).
/// Throws std::domain_error("no roots") for constants.
std::vector<Complex> roots(const CPolynomial& p, double tol = 1e-12);
std::vector<Complex> roots(const Polynomial& p, double tol = 1e-12);

/// Rationalizes a numerical root and keeps it only if p vanishes there exactly.
std::optional<ExactComplex> exact_root(const Polynomial& p, Complex approx);

/// True iff every root of E lies strictly below -tol in the imaginary part.
bool hb_test(const Polynomial& E, double tol = 1e-12);

struct PartialFractions {
    std::vector<Complex> poles;
    std::vector<Complex> residues;
    Polynomial polynomial_part;
    /// Exact pole/residue when the pole is a complex rational.
    std::vector<std::optional<ExactComplex>> exact_poles;
    std::vector<std::optional<ExactComplex>> exact_residues;

    Complex operator()(Complex z) const;
};

/// r = polynomial_part + sum residue_k / (z - pole_k). Poles closer than
/// sqrt(tol) (relative) are treated as repeated and rejected.
PartialFractions partial_fractions(const RationalFunction& r, double tol = 1e-12);

}  // namespace screwline
