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

// Scalars that stay exact through the pi- and square-root-valued constants
// of de Branges spaces (2*pi, pi^3, 1/sqrt(2*pi), sqrt(pi/2), ...), and
// degrade to double precision whenever an operation leaves that set.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "screwline/exact.hpp"

namespace screwline {

/// c * sqrt(s) * pi^(h/2) with c exact complex rational, s a squarefree
/// positive integer and h an integer. Zero is stored as c = 0, s = 1, h = 0.
class Symbolic {
public:
    Symbolic() = default;
    Symbolic(ExactComplex c) : c_(std::move(c)) { normalize(); }
    Symbolic(ExactComplex c, mpz_class s, int half_pi_power);

    static Symbolic pi_power(int half_pi_power) { return Symbolic(ExactComplex(1), 1, half_pi_power); }

    const ExactComplex& coefficient() const { return c_; }
    const mpz_class& radicand() const { return s_; }
    int half_pi_power() const { return h_; }

    bool is_zero() const { return c_.is_zero(); }
    bool is_real() const { return c_.is_real(); }
    /// True when the value is a plain complex rational (no sqrt, no pi).
    bool is_rational() const { return s_ == 1 && h_ == 0; }
    /// Same sqrt(s)*pi^(h/2) factor, so sums stay exact.
    bool like(const Symbolic& o) const { return s_ == o.s_ && h_ == o.h_; }

    Complex value() const;
    Symbolic conj() const { return Symbolic(c_.conj(), s_, h_); }

    Symbolic operator-() const { return Symbolic(-c_, s_, h_); }
    friend Symbolic operator*(const Symbolic& a, const Symbolic& b);
    friend Symbolic operator/(const Symbolic& a, const Symbolic& b);
    friend bool operator==(const Symbolic& a, const Symbolic& b) {
        return a.c_ == b.c_ && a.s_ == b.s_ && a.h_ == b.h_;
    }

    /// Square root when the value is a positive rational times an even power
    /// of sqrt(pi); nullopt otherwise.
    std::optional<Symbolic> sqrt() const;

    /// Human readable, e.g. "1/2*sqrt(2)*pi^(1/2)".
    std::string str() const;

private:
    void normalize();

    ExactComplex c_;
    mpz_class s_{1};
    int h_ = 0;
};

/// A complex number with an optional exact Symbolic form. The double value is
/// always available; exactness is kept whenever both operands are exact and
/// the result is representable.
class Scalar {
public:
    Scalar() : exact_(Symbolic()), approx_(0.0) {}
    Scalar(int v) : Scalar(Symbolic(ExactComplex(v))) {}
    Scalar(long v) : Scalar(Symbolic(ExactComplex(v))) {}
    Scalar(const Rational& v) : Scalar(Symbolic(ExactComplex(v))) {}
    Scalar(const ExactComplex& v) : Scalar(Symbolic(v)) {}
    Scalar(const Symbolic& v) : exact_(v), approx_(v.value()) {}
    Scalar(double v) : approx_(v) {}
    Scalar(Complex v) : approx_(v) {}

    static Scalar pi() { return Symbolic::pi_power(2); }
    static Scalar sqrt_pi() { return Symbolic::pi_power(1); }
    static Scalar i() { return ExactComplex::i(); }

    bool is_exact() const { return exact_.has_value(); }
    const std::optional<Symbolic>& exact() const { return exact_; }
    /// Exact complex rational, when the value is one.
    std::optional<ExactComplex> rational() const;

    Complex value() const { return approx_; }
    double real() const { return approx_.real(); }
    double imag() const { return approx_.imag(); }
    double abs() const { return std::abs(approx_); }
    bool is_zero() const { return exact_ ? exact_->is_zero() : approx_ == Complex(0.0); }

    Scalar conj() const;
    Scalar sqrt() const;
    Scalar inexact() const { return Scalar(approx_); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Exact equality when both sides are exact; otherwise nullopt.
    std::optional<bool> exactly_equals(const Scalar& o) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    std::optional<Symbolic> exact_;
    Complex approx_;
};

/// Real angle, remembered as an exact rational multiple of pi when it is one.
class Angle {
public:
    Angle() = default;
    explicit Angle(double radians) : radians_(radians), pi_multiple_(std::nullopt) {}
    static Angle pi_times(const Rational& q);

    double radians() const { return radians_; }
    const std::optional<Rational>& pi_multiple() const { return pi_multiple_; }

    /// Exact for multiples of pi/4 and pi/6, floating otherwise.
    Scalar cos() const;
    Scalar sin() const;
    /// e^{i angle}
    Scalar unit() const { return cos() + Scalar::i() * sin(); }

    /// "0", "pi/2", "3*pi/4", or a decimal when no exact form is known.
    std::string str() const;
    /// Accepts the forms produced by str(), and plain decimals.
    static Angle parse(std::string_view text);

private:
    double radians_ = 0.0;
    std::optional<Rational> pi_multiple_ = Rational(0);
};

}  // namespace screwline
