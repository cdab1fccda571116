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

// End-to-end runs that produce verification reports: the g0 chain
// Q0 -> tau0 -> Theta -> E0 -> W0 -> H0 with the diagram checks, the
// Paley-Wiener family, and the string, Levy-Khintchine and mean periodicity
// identities.

#include <cstdint>
#include <optional>

#include "screwline/json_io.hpp"

namespace screwline {

struct PipelineOptions {
    std::uint64_t seed = 0;
    /// Overrides the tolerance of the float identities (quadrature based
    /// checks for g0 and the appendices, the Laplace check for pw).
    std::optional<double> tol;
    /// pd-check grid: `grid` equally spaced points on [range_lo, range_hi].
    int grid = 50;
    double range_lo = -6.0;
    double range_hi = 6.0;
    /// Paley-Wiener parameters.
    double r = 1.0;
    int trunc = 2000;
};

json_io::VerificationReport g0_pipeline(const PipelineOptions& o = {});
json_io::VerificationReport pw_pipeline(const PipelineOptions& o = {});
json_io::VerificationReport appendix_checks(const PipelineOptions& o = {});

/// a priori bound on the g_r Laplace residual at z = iy from the series
/// truncation: 4r / (pi^2 y (2N - 1)).
double g_r_laplace_bound(double r, int N, double y);

}  // namespace screwline
