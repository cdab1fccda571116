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

// The worked example g0 and its companions: Q0, E0, W0 and the structure
// Hamiltonian H0, as exact objects.

#include "screwline/canonical.hpp"
#include "screwline/debranges.hpp"
#include "screwline/rational_function.hpp"
#include "screwline/screw.hpp"

namespace screwline::examples {

/// (1 - 2z^2) / (z^3 - z)
RationalFunction Q0();
/// z^3 + 2i z^2 - z - i
Polynomial E0();
/// [[1 - 2z^2, 4z], [z^3 - z, 1 - 2z^2]]
MatrixPolynomial W0();
/// Segments (1/2, pi/2), (4, 0), (1/2, pi/2).
Hamiltonian H0();
HermiteBiehlerFrame E0_frame();

}  // namespace screwline::examples
