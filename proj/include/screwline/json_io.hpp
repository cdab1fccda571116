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

// JSON encodings of the exact objects, and the verification report emitted by
// the command line tool. Rationals travel as "p/q" strings, complex rationals
// as ["re", "im"], rational multiples of pi as {"pi_multiple": "p/q"}.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "screwline/canonical.hpp"
#include "screwline/classical.hpp"
#include "screwline/debranges.hpp"

namespace screwline::json_io {

using json = nlohmann::json;

/// Input that does not follow the schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const ExactComplex& c);
ExactComplex exact_complex_from_json(const json& j);

/// Exact rationals and rational multiples of pi keep their exact form,
/// other exact values are written as {"coefficient", "radicand",
/// "half_pi_power"}; inexact values become a number or [re, im] numbers.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// {"coeffs": [[re, im], ...]} ascending degree
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"num": polynomial, "den": polynomial}
json to_json(const RationalFunction& q);
RationalFunction rational_function_from_json(const json& j);

/// {"entries": [[p11, p12], [p21, p22]]}
json to_json(const MatrixPolynomial& W);
MatrixPolynomial matrix_polynomial_from_json(const json& j);

/// {"points": [...], "masses": [...]}
json to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const json& j);

/// {"segments": [{"length": "1/2", "theta": "pi/2"}, ...]}
json to_json(const Hamiltonian& H);
Hamiltonian hamiltonian_from_json(const json& j);

/// {"masses": [{"position": "0", "mass": "1/2"}, ...], "L": null or "p/q"}
json to_json(const KreinString& s);
KreinString krein_string_from_json(const json& j);

/// {"g0": number, "c": number, "tau": measure}; g0 and c default to 0.
json to_json(const ScrewFunctionData& g);
ScrewFunctionData screw_from_json(const json& j);

/// {E, A, B, mu, moments}
json to_json(const HermiteBiehlerFrame& f);

struct Check {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    /// The identity the check verifies.
    std::string provenance;
    std::string message;
};

struct VerificationReport {
    std::string name;
    std::vector<Check> checks;
    json details = json::object();

    bool pass() const;
    /// Adds a check that passes when residual <= tolerance.
    void add(std::string name, double residual, double tolerance, std::string provenance);
    /// Adds an exact check (residual 0 or 1, tolerance 0).
    void add_exact(std::string name, bool ok, std::string provenance);
    /// Adds a failed check carrying an error message.
    void add_error(std::string name, const std::string& message, std::string provenance);
};

json to_json(const VerificationReport& r);

/// Parses text, mapping parse errors to SchemaError.
json parse(const std::string& text);
/// Reads and parses a file; SchemaError when it cannot be read or parsed.
json read_file(const std::string& path);

}  // namespace screwline::json_io
