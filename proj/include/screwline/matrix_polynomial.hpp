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

// 2x2 matrices with polynomial entries (transfer matrices W(z)).

#include <array>
#include <ostream>

#include "screwline/polynomial.hpp"

namespace screwline {

using ExactMatrix2 = std::array<std::array<ExactComplex, 2>, 2>;
using ComplexMatrix2 = std::array<std::array<Complex, 2>, 2>;

class MatrixPolynomial {
public:
    MatrixPolynomial() = default;
    MatrixPolynomial(Polynomial a, Polynomial b, Polynomial c, Polynomial d)
        : e_{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}} {}
    /// Constant matrix.
    explicit MatrixPolynomial(const ExactMatrix2& m);

    static MatrixPolynomial identity() { return {Polynomial(1), Polynomial(), Polynomial(), Polynomial(1)}; }
    /// sum_k coeffs[k] z^k
    static MatrixPolynomial from_coefficients(const std::vector<ExactMatrix2>& coeffs);

    const Polynomial& operator()(int i, int j) const { return e_[i][j]; }
    Polynomial& operator()(int i, int j) { return e_[i][j]; }
    const Polynomial& A() const { return e_[0][0]; }
    const Polynomial& B() const { return e_[0][1]; }
    const Polynomial& C() const { return e_[1][0]; }
    const Polynomial& D() const { return e_[1][1]; }

    /// Largest entry degree, -1 for the zero matrix.
    int degree() const;
    /// Matrix coefficient of z^k.
    ExactMatrix2 coefficient(int k) const;

    ExactMatrix2 operator()(const ExactComplex& z) const;
    ComplexMatrix2 operator()(Complex z) const;

    MatrixPolynomial& operator+=(const MatrixPolynomial& o);
    MatrixPolynomial& operator-=(const MatrixPolynomial& o);
    MatrixPolynomial& operator*=(const ExactComplex& c);
    friend MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) { return a += b; }
    friend MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) { return a -= b; }
    friend MatrixPolynomial operator*(MatrixPolynomial a, const ExactComplex& c) { return a *= c; }
    friend MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b);
    friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MatrixPolynomial& a, const MatrixPolynomial& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const MatrixPolynomial& m);

private:
    std::array<std::array<Polynomial, 2>, 2> e_;
};

inline MatrixPolynomial matpoly_mul(const MatrixPolynomial& a, const MatrixPolynomial& b) { return a * b; }
Polynomial matpoly_det(const MatrixPolynomial& m);
inline ExactMatrix2 matpoly_eval(const MatrixPolynomial& m, const ExactComplex& z) { return m(z); }
inline ComplexMatrix2 matpoly_eval(const MatrixPolynomial& m, Complex z) { return m(z); }

ExactMatrix2 operator*(const ExactMatrix2& a, const ExactMatrix2& b);
ExactMatrix2 operator+(const ExactMatrix2& a, const ExactMatrix2& b);
ExactComplex det(const ExactMatrix2& m);
bool is_zero(const ExactMatrix2& m);
/// J = [[0,-1],[1,0]]
ExactMatrix2 j_matrix();
ExactMatrix2 identity_matrix2();

}  // namespace screwline
