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

#include "screwline/exact.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace screwline {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    std::string n(num.front() == '+' ? num.substr(1) : num);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite value");
    // Convergents h/k of the continued fraction of x.
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int iter = 0; iter < 64; ++iter) {
        double a = std::floor(r);
        if (std::fabs(a) > 1e18) break;
        mpz_class ai(static_cast<long>(a));
        mpz_class h2 = ai * h1 + h0;
        mpz_class k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    if (k1 == 0) return Rational(0);
    Rational q(h1, k1);
    q.canonicalize();
    return q;
}

std::optional<ExactComplex> rationalize(Complex z, long max_den) {
    auto snap = [&](double v) -> Rational {
        if (std::fabs(v) < 1e-13) return Rational(0);
        return rationalize(v, max_den);
    };
    ExactComplex out{snap(z.real()), snap(z.imag())};
    if (std::abs(out.to_complex() - z) > 1e-8 * (1.0 + std::abs(z))) return std::nullopt;
    return out;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("ExactComplex: division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
    if (z.is_real()) return os << z.re_.get_str();
    if (sgn(z.re_) == 0) return os << z.im_.get_str() << "i";
    os << z.re_.get_str() << (sgn(z.im_) < 0 ? "-" : "+");
    Rational a = abs(z.im_);
    return os << a.get_str() << "i";
}

}  // namespace screwline
