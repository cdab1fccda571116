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

#include "screwline/examples.hpp"

namespace screwline::examples {

RationalFunction Q0() { return {Polynomial({1, 0, -2}), Polynomial({0, -1, 0, 1})}; }

Polynomial E0() { return Polynomial({ExactComplex(0, -1), -1, ExactComplex(0, 2), 1}); }

MatrixPolynomial W0() {
    Polynomial d({1, 0, -2});
    return {d, Polynomial({0, 4}), Polynomial({0, -1, 0, 1}), d};
}

Hamiltonian H0() {
    Angle vertical = Angle::pi_times(Rational(1, 2));
    return Hamiltonian({Segment(Rational(1, 2), vertical), Segment(Rational(4), Angle()), Segment(Rational(1, 2), vertical)});
}

HermiteBiehlerFrame E0_frame() { return make_frame(E0()); }

}  // namespace screwline::examples
