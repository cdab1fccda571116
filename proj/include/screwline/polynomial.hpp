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

// Dense univariate polynomials: exact over complex rationals, and a
// double-precision twin used by root finding and quadrature.

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "screwline/exact.hpp"
#include "screwline/scalar.hpp"

namespace screwline {

class CPolynomial;

/// Coefficients in ascending degree; the zero polynomial has no coefficients
/// and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactComplex> coeffs);
    Polynomial(std::initializer_list<ExactComplex> coeffs) : Polynomial(std::vector<ExactComplex>(coeffs)) {}
    Polynomial(const ExactComplex& constant);
    Polynomial(int constant) : Polynomial(ExactComplex(constant)) {}

    static Polynomial x() { return Polynomial({0, 1}); }
    static Polynomial monomial(const ExactComplex& c, int k);
    /// prod (z - r) over the given roots.
    static Polynomial from_roots(const std::vector<ExactComplex>& roots);

    const std::vector<ExactComplex>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_real() const;
    /// Coefficient of z^k, zero outside the stored range.
    ExactComplex coeff(int k) const;
    const ExactComplex& lead() const;

    ExactComplex operator()(const ExactComplex& z) const;
    Complex operator()(Complex z) const;
    /// Exact when z is exact and the sum stays representable.
    Scalar operator()(const Scalar& z) const;

    CPolynomial to_complex() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const ExactComplex& c);
    Polynomial& operator/=(const ExactComplex& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const ExactComplex& c) { return a *= c; }
    friend Polynomial operator*(const ExactComplex& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const ExactComplex& c) { return a /= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<ExactComplex> c_;
};

/// Horner evaluation, exact mode.
inline ExactComplex poly_eval(const Polynomial& p, const ExactComplex& z) { return p(z); }
/// Horner evaluation, float mode.
inline Complex poly_eval(const Polynomial& p, Complex z) { return p(z); }

/// p^#(z) = conj(p(conj z)): conjugate every coefficient.
Polynomial sharp(const Polynomial& p);
Polynomial derivative(const Polynomial& p);
/// p(-z)
Polynomial reflect(const Polynomial& p);
/// p(c z)
Polynomial scale_argument(const Polynomial& p, const ExactComplex& c);
/// p(q(z))
Polynomial compose(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned k);
Polynomial monic(const Polynomial& p);

/// Euclidean division a = q b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
    Polynomial g;  ///< monic gcd
    Polynomial s;  ///< s a + t b = g
    Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

struct ABSplit {
    Polynomial A;
    Polynomial B;
};
/// A = (E + E^#)/2, B = i(E - E^#)/2, so E = A - iB with A, B real.
ABSplit ab_split(const Polynomial& E);

/// Double-precision polynomial, ascending coefficients. Trailing zeros are
/// kept exactly as given.
class CPolynomial {
public:
    CPolynomial() = default;
    explicit CPolynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}
    CPolynomial(std::initializer_list<Complex> coeffs) : c_(coeffs) {}

    const std::vector<Complex>& coeffs() const { return c_; }
    std::vector<Complex>& coeffs() { return c_; }
    int degree() const;
    Complex coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Complex(0.0); }
    double max_abs_coeff() const;

    Complex operator()(Complex z) const;
    CPolynomial derivative() const;

    CPolynomial& operator+=(const CPolynomial& o);
    CPolynomial& operator-=(const CPolynomial& o);
    CPolynomial& operator*=(Complex s);
    friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
    friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
    friend CPolynomial operator*(CPolynomial a, Complex s) { return a *= s; }
    friend CPolynomial operator*(Complex s, CPolynomial a) { return a *= s; }
    friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);

    /// Largest coefficient-wise absolute difference.
    friend double distance(const CPolynomial& a, const CPolynomial& b);

private:
    std::vector<Complex> c_;
};

/// A polynomial times a symbolic scalar: the shape of every orthonormal
/// basis vector in a polynomial de Branges space (e.g. (2z^2-1)/sqrt(2 pi)).
/// The double-precision image is always present.
struct ScaledPolynomial {
    Scalar scale{1};
    Polynomial poly;
    CPolynomial approx;

    ScaledPolynomial() = default;
    ScaledPolynomial(Scalar s, Polynomial p);
    explicit ScaledPolynomial(CPolynomial p) : scale(1.0), approx(std::move(p)) {}

    bool is_exact() const { return scale.is_exact(); }
    Complex operator()(Complex z) const { return approx(z); }
    /// Exact value when scale and z are exact.
    Scalar operator()(const ExactComplex& z) const { return scale * Scalar(poly(z)); }
    std::string str() const;
};

/// Degree of a scaled polynomial (-1 for zero). Floating coefficients of
/// modulus at most tol * max|c| count as zero.
int degree(const ScaledPolynomial& p, double tol = 0.0);
ScaledPolynomial sharp(const ScaledPolynomial& p);
/// Exact when both scales are exact and their ratio is a complex rational.
ScaledPolynomial operator+(const ScaledPolynomial& a, const ScaledPolynomial& b);
ScaledPolynomial operator-(const ScaledPolynomial& a, const ScaledPolynomial& b);
ScaledPolynomial operator*(const Scalar& s, const ScaledPolynomial& p);
/// Quotient of p by (z - r), remainder discarded.
ScaledPolynomial divide_linear(const ScaledPolynomial& p, const Scalar& r);

}  // namespace screwline
