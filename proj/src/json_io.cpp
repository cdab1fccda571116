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

#include "screwline/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace screwline::json_io {

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw SchemaError(what);
}

const json& field(const json& j, const char* key) {
    expect(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    expect(j.is_string(), "rational must be a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const ExactComplex& c) { return json::array({to_json(c.re()), to_json(c.im())}); }

ExactComplex exact_complex_from_json(const json& j) {
    if (j.is_string()) return ExactComplex(rational_from_json(j));
    expect(j.is_array() && j.size() == 2, "complex rational must be [\"re\", \"im\"]");
    return ExactComplex(rational_from_json(j[0]), rational_from_json(j[1]));
}

json to_json(const Scalar& s) {
    if (const auto& e = s.exact()) {
        if (auto r = s.rational()) return r->is_real() ? to_json(r->re()) : to_json(*r);
        if (e->radicand() == 1 && e->half_pi_power() == 2 && e->coefficient().is_real())
            return json{{"pi_multiple", to_string(e->coefficient().re())}};
        return json{{"coefficient", to_json(e->coefficient())},
                    {"radicand", e->radicand().get_str()},
                    {"half_pi_power", e->half_pi_power()}};
    }
    Complex v = s.value();
    if (v.imag() == 0.0) return v.real();
    return json::array({v.real(), v.imag()});
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number()) return Scalar(j.get<double>());
    if (j.is_string()) return Scalar(rational_from_json(j));
    if (j.is_array()) {
        expect(j.size() == 2, "complex value must have two components");
        if (j[0].is_number() && j[1].is_number()) return Scalar(Complex(j[0].get<double>(), j[1].get<double>()));
        return Scalar(exact_complex_from_json(j));
    }
    if (j.is_object() && j.contains("pi_multiple")) return Scalar(rational_from_json(j.at("pi_multiple"))) * Scalar::pi();
    if (j.is_object() && j.contains("coefficient")) {
        const json& s = field(j, "radicand");
        const json& h = field(j, "half_pi_power");
        expect(s.is_string() && h.is_number_integer(), "symbolic value needs radicand string and integer half_pi_power");
        mpz_class rad;
        try {
            rad = mpz_class(s.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw SchemaError("malformed radicand");
        }
        expect(rad > 0, "radicand must be positive");
        return Scalar(Symbolic(exact_complex_from_json(j.at("coefficient")), rad, h.get<int>()));
    }
    throw SchemaError("unrecognized scalar encoding");
}

json to_json(const Polynomial& p) {
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_json(x));
    return json{{"coeffs", c}};
}

Polynomial polynomial_from_json(const json& j) {
    const json& c = field(j, "coeffs");
    expect(c.is_array(), "coeffs must be an array");
    std::vector<ExactComplex> out;
    for (const auto& x : c) out.push_back(exact_complex_from_json(x));
    return Polynomial(std::move(out));
}

json to_json(const RationalFunction& q) { return json{{"num", to_json(q.num())}, {"den", to_json(q.den())}}; }

RationalFunction rational_function_from_json(const json& j) {
    Polynomial den = polynomial_from_json(field(j, "den"));
    expect(!den.is_zero(), "zero denominator");
    return RationalFunction(polynomial_from_json(field(j, "num")), den);
}

json to_json(const MatrixPolynomial& W) {
    return json{{"entries", json::array({json::array({to_json(W(0, 0)), to_json(W(0, 1))}),
                                         json::array({to_json(W(1, 0)), to_json(W(1, 1))})})}};
}

MatrixPolynomial matrix_polynomial_from_json(const json& j) {
    const json& e = field(j, "entries");
    expect(e.is_array() && e.size() == 2 && e[0].is_array() && e[0].size() == 2 && e[1].is_array() && e[1].size() == 2,
           "entries must be a 2x2 array");
    return {polynomial_from_json(e[0][0]), polynomial_from_json(e[0][1]), polynomial_from_json(e[1][0]),
            polynomial_from_json(e[1][1])};
}

json to_json(const DiscreteMeasure& m) {
    json p = json::array(), w = json::array();
    for (const auto& a : m.atoms()) {
        p.push_back(to_json(a.point));
        w.push_back(to_json(a.mass));
    }
    return json{{"points", p}, {"masses", w}};
}

DiscreteMeasure measure_from_json(const json& j) {
    const json& p = field(j, "points");
    const json& w = field(j, "masses");
    expect(p.is_array() && w.is_array() && p.size() == w.size(), "points and masses must be arrays of equal length");
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < p.size(); ++k) atoms.push_back({scalar_from_json(p[k]), scalar_from_json(w[k])});
    try {
        return DiscreteMeasure(std::move(atoms));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const Hamiltonian& H) {
    json s = json::array();
    for (const auto& seg : H.segments()) s.push_back(json{{"length", to_json(seg.length)}, {"theta", seg.theta.str()}});
    return json{{"segments", s}};
}

Hamiltonian hamiltonian_from_json(const json& j) {
    const json& s = field(j, "segments");
    expect(s.is_array() && !s.empty(), "segments must be a non-empty array");
    std::vector<Segment> segs;
    for (const auto& x : s) {
        const json& t = field(x, "theta");
        expect(t.is_string(), "theta must be a string such as \"pi/2\"");
        try {
            segs.emplace_back(rational_from_json(field(x, "length")), Angle::parse(t.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    try {
        return Hamiltonian(std::move(segs));
    } catch (const std::exception& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const KreinString& s) {
    json m = json::array();
    for (const auto& x : s.masses) m.push_back(json{{"position", to_json(x.position)}, {"mass", to_json(x.mass)}});
    return json{{"masses", m}, {"L", s.L ? to_json(*s.L) : json(nullptr)}};
}

KreinString krein_string_from_json(const json& j) {
    KreinString s;
    const json& m = field(j, "masses");
    expect(m.is_array(), "masses must be an array");
    for (const auto& x : m) {
        StringMass sm{rational_from_json(field(x, "position")), rational_from_json(field(x, "mass"))};
        expect(sm.mass > 0, "string masses must be positive");
        expect(sm.position >= 0, "string positions must be nonnegative");
        expect(s.masses.empty() || sm.position > s.masses.back().position, "string positions must increase");
        s.masses.push_back(std::move(sm));
    }
    const json& L = field(j, "L");
    if (!L.is_null()) {
        s.L = rational_from_json(L);
        expect(s.masses.empty() || *s.L > s.masses.back().position, "L must exceed every mass position");
    }
    return s;
}

json to_json(const ScrewFunctionData& g) { return json{{"g0", g.g0}, {"c", g.c}, {"tau", to_json(g.tau)}}; }

ScrewFunctionData screw_from_json(const json& j) {
    ScrewFunctionData g;
    g.tau = measure_from_json(field(j, "tau"));
    for (const char* key : {"g0", "c"}) {
        if (!j.contains(key)) continue;
        expect(j.at(key).is_number(), std::string("'") + key + "' must be a number");
        (key[0] == 'g' ? g.g0 : g.c) = j.at(key).get<double>();
    }
    return g;
}

json to_json(const HermiteBiehlerFrame& f) {
    MomentTable m = moments(f);
    json mom = json::array(), hank = json::array();
    for (const auto& x : m.moments) mom.push_back(to_json(x));
    for (const auto& x : m.hankel) hank.push_back(to_json(x));
    return json{{"E", to_json(f.E)},
                {"A", to_json(f.A)},
                {"B", to_json(f.B)},
                {"mu", to_json(f.mu)},
                {"moments", json{{"moments", mom}, {"hankel", hank}}}};
}

bool VerificationReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void VerificationReport::add(std::string n, double residual, double tolerance, std::string provenance) {
    checks.push_back({std::move(n), residual <= tolerance, residual, tolerance, std::move(provenance), {}});
}

void VerificationReport::add_exact(std::string n, bool ok, std::string provenance) {
    checks.push_back({std::move(n), ok, ok ? 0.0 : 1.0, 0.0, std::move(provenance), {}});
}

void VerificationReport::add_error(std::string n, const std::string& message, std::string provenance) {
    checks.push_back({std::move(n), false, 0.0, 0.0, std::move(provenance), message});
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json x{{"name", c.name},
               {"status", c.pass ? "pass" : "fail"},
               {"residual", c.residual},
               {"tolerance", c.tolerance},
               {"provenance", c.provenance}};
        if (!c.message.empty()) x["message"] = c.message;
        checks.push_back(std::move(x));
    }
    json out{{"name", r.name}, {"status", r.pass() ? "pass" : "fail"}, {"checks", checks}};
    if (!r.details.empty()) out["details"] = r.details;
    return out;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace screwline::json_io
