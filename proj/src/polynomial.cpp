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

#include "screwline/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace screwline {

Polynomial::Polynomial(std::vector<ExactComplex> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const ExactComplex& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const ExactComplex& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<ExactComplex> v(static_cast<std::size_t>(k) + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<ExactComplex>& roots) {
    Polynomial p(1);
    for (const auto& r : roots) p *= Polynomial({-r, 1});
    return p;
}

bool Polynomial::is_real() const {
    return std::all_of(c_.begin(), c_.end(), [](const ExactComplex& c) { return c.is_real(); });
}

ExactComplex Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return ExactComplex();
    return c_[k];
}

const ExactComplex& Polynomial::lead() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

ExactComplex Polynomial::operator()(const ExactComplex& z) const {
    ExactComplex acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

Scalar Polynomial::operator()(const Scalar& z) const {
    if (auto q = z.rational()) return Scalar((*this)(*q));
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + Scalar(*it);
    return acc;
}

CPolynomial Polynomial::to_complex() const {
    std::vector<Complex> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.to_complex());
    return CPolynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<ExactComplex> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const ExactComplex& c) {
    for (auto& x : c_) x *= c;
    trim();
    return *this;
}

Polynomial& Polynomial::operator/=(const ExactComplex& c) {
    if (c.is_zero()) throw std::domain_error("polynomial divided by zero");
    for (auto& x : c_) x /= c;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const ExactComplex& c = p.c_[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = c == ExactComplex(1) && k > 0;
        if (!unit) {
            if (!c.is_real() && sgn(c.re()) != 0) {
                os << '(' << c << ')';
            } else {
                os << c;
            }
        }
        if (k > 0) os << (unit ? "" : "*") << 'z';
        if (k > 1) os << '^' << k;
    }
    return os;
}

Polynomial sharp(const Polynomial& p) {
    std::vector<ExactComplex> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.conj());
    return Polynomial(std::move(v));
}

Polynomial derivative(const Polynomial& p) {
    std::vector<ExactComplex> v;
    for (int k = 1; k <= p.degree(); ++k) v.push_back(p.coeffs()[k] * ExactComplex(k));
    return Polynomial(std::move(v));
}

Polynomial reflect(const Polynomial& p) { return scale_argument(p, ExactComplex(-1)); }

Polynomial scale_argument(const Polynomial& p, const ExactComplex& c) {
    std::vector<ExactComplex> v = p.coeffs();
    ExactComplex f(1);
    for (auto& x : v) {
        x *= f;
        f *= c;
    }
    return Polynomial(std::move(v));
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * q + Polynomial(p.coeffs()[k]);
    return acc;
}

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial out(1);
    for (unsigned i = 0; i < k; ++i) out *= p;
    return out;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p / p.lead();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<ExactComplex> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Polynomial(), a};
    std::vector<ExactComplex> q(static_cast<std::size_t>(da - db) + 1);
    const ExactComplex& lb = b.lead();
    for (int k = da; k >= db; --k) {
        if (r[k].is_zero()) continue;
        ExactComplex f = r[k] / lb;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0(1), s1;
    Polynomial t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    ExactComplex l = r0.lead();
    return {r0 / l, s0 / l, t0 / l};
}

ABSplit ab_split(const Polynomial& E) {
    Polynomial Es = sharp(E);
    Polynomial A = (E + Es) * ExactComplex(Rational(1, 2));
    Polynomial B = (E - Es) * ExactComplex(Rational(0), Rational(1, 2));
    return {A, B};
}

int CPolynomial::degree() const {
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        if (c_[k] != Complex(0.0)) return k;
    }
    return -1;
}

double CPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c));
    return m;
}

Complex CPolynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CPolynomial CPolynomial::derivative() const {
    std::vector<Complex> v;
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * static_cast<double>(k));
    return CPolynomial(std::move(v));
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

CPolynomial& CPolynomial::operator*=(Complex s) {
    for (auto& c : c_) c *= s;
    return *this;
}

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Complex> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return CPolynomial(std::move(out));
}

double distance(const CPolynomial& a, const CPolynomial& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    double d = 0.0;
    for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k))));
    return d;
}

ScaledPolynomial::ScaledPolynomial(Scalar s, Polynomial p) : scale(std::move(s)), poly(std::move(p)) {
    approx = poly.to_complex() * scale.value();
}

std::string ScaledPolynomial::str() const {
    std::ostringstream os;
    if (!is_exact()) {
        os.precision(12);
        os << '[';
        for (std::size_t k = 0; k < approx.coeffs().size(); ++k) {
            if (k) os << ", ";
            os << approx.coeffs()[k];
        }
        os << ']';
        return os.str();
    }
    os << scale << " * (" << poly << ')';
    return os.str();
}

}  // namespace screwline

namespace screwline {

int degree(const ScaledPolynomial& p, double tol) {
    if (p.is_exact()) return p.scale.is_zero() ? -1 : p.poly.degree();
    double cut = tol * p.approx.max_abs_coeff();
    for (int k = p.approx.degree(); k >= 0; --k) {
        if (std::abs(p.approx.coeff(k)) > cut) return k;
    }
    return -1;
}

ScaledPolynomial sharp(const ScaledPolynomial& p) {
    if (p.is_exact()) return ScaledPolynomial(p.scale.conj(), sharp(p.poly));
    std::vector<Complex> c = p.approx.coeffs();
    for (auto& x : c) x = std::conj(x);
    return ScaledPolynomial(CPolynomial(std::move(c)));
}

ScaledPolynomial operator+(const ScaledPolynomial& a, const ScaledPolynomial& b) {
    if (a.is_exact() && b.is_exact()) {
        if (a.poly.is_zero()) return b;
        if (b.poly.is_zero()) return a;
        if (auto ratio = (b.scale / a.scale).rational()) return ScaledPolynomial(a.scale, a.poly + b.poly * *ratio);
    }
    return ScaledPolynomial(a.approx + b.approx);
}

ScaledPolynomial operator-(const ScaledPolynomial& a, const ScaledPolynomial& b) { return a + Scalar(-1) * b; }

ScaledPolynomial operator*(const Scalar& s, const ScaledPolynomial& p) {
    if (s.is_exact() && p.is_exact()) return ScaledPolynomial(s * p.scale, p.poly);
    return ScaledPolynomial(p.approx * s.value());
}

ScaledPolynomial divide_linear(const ScaledPolynomial& p, const Scalar& r) {
    if (p.is_exact()) {
        if (auto root = r.rational()) return ScaledPolynomial(p.scale, divmod(p.poly, Polynomial({-*root, ExactComplex(1)})).first);
    }
    const auto& c = p.approx.coeffs();
    int n = p.approx.degree();
    if (n < 1) return ScaledPolynomial(CPolynomial());
    std::vector<Complex> q(n);
    Complex acc = 0.0;
    for (int k = n; k >= 1; --k) {
        acc = acc * r.value() + c[k];
        q[k - 1] = acc;
    }
    return ScaledPolynomial(CPolynomial(std::move(q)));
}

}  // namespace screwline
