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

// Exact rational and complex-rational scalars.

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace screwline {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument
/// on anything else, including decimal points and zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Best rational approximation of x with denominator <= max_den
/// (continued-fraction convergents).
Rational rationalize(double x, long max_den = 1000000);

class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    ExactComplex(long re) : re_(re) {}
    ExactComplex(int re) : re_(re) {}

    static ExactComplex i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    ExactComplex conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

    ExactComplex operator-() const { return {-re_, -im_}; }
    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

private:
    Rational re_{0};
    Rational im_{0};
};

/// Candidate exact complex rational close to z (parts within 1e-8). Callers
/// confirm the candidate exactly before trusting it.
std::optional<ExactComplex> rationalize(Complex z, long max_den = 1000000);

}  // namespace screwline
