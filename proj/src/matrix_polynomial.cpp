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

#include "screwline/matrix_polynomial.hpp"

#include <algorithm>

namespace screwline {

MatrixPolynomial::MatrixPolynomial(const ExactMatrix2& m) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e_[i][j] = Polynomial(m[i][j]);
}

MatrixPolynomial MatrixPolynomial::from_coefficients(const std::vector<ExactMatrix2>& coeffs) {
    MatrixPolynomial out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            std::vector<ExactComplex> v;
            v.reserve(coeffs.size());
            for (const auto& c : coeffs) v.push_back(c[i][j]);
            out.e_[i][j] = Polynomial(std::move(v));
        }
    }
    return out;
}

int MatrixPolynomial::degree() const {
    int d = -1;
    for (const auto& row : e_)
        for (const auto& p : row) d = std::max(d, p.degree());
    return d;
}

ExactMatrix2 MatrixPolynomial::coefficient(int k) const {
    ExactMatrix2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = e_[i][j].coeff(k);
    return m;
}

ExactMatrix2 MatrixPolynomial::operator()(const ExactComplex& z) const {
    ExactMatrix2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = e_[i][j](z);
    return m;
}

ComplexMatrix2 MatrixPolynomial::operator()(Complex z) const {
    ComplexMatrix2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = e_[i][j](z);
    return m;
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& o) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e_[i][j] += o.e_[i][j];
    return *this;
}

MatrixPolynomial& MatrixPolynomial::operator-=(const MatrixPolynomial& o) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e_[i][j] -= o.e_[i][j];
    return *this;
}

MatrixPolynomial& MatrixPolynomial::operator*=(const ExactComplex& c) {
    for (auto& row : e_)
        for (auto& p : row) p *= c;
    return *this;
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    MatrixPolynomial out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.e_[i][j] = a.e_[i][0] * b.e_[0][j] + a.e_[i][1] * b.e_[1][j];
    return out;
}

std::ostream& operator<<(std::ostream& os, const MatrixPolynomial& m) {
    return os << "[[" << m.e_[0][0] << ", " << m.e_[0][1] << "], [" << m.e_[1][0] << ", " << m.e_[1][1] << "]]";
}

Polynomial matpoly_det(const MatrixPolynomial& m) { return m.A() * m.D() - m.B() * m.C(); }

ExactMatrix2 operator*(const ExactMatrix2& a, const ExactMatrix2& b) {
    ExactMatrix2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return m;
}

ExactMatrix2 operator+(const ExactMatrix2& a, const ExactMatrix2& b) {
    ExactMatrix2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = a[i][j] + b[i][j];
    return m;
}

ExactComplex det(const ExactMatrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

bool is_zero(const ExactMatrix2& m) {
    return m[0][0].is_zero() && m[0][1].is_zero() && m[1][0].is_zero() && m[1][1].is_zero();
}

ExactMatrix2 j_matrix() {
    ExactMatrix2 m;
    m[0][1] = ExactComplex(-1);
    m[1][0] = ExactComplex(1);
    return m;
}

ExactMatrix2 identity_matrix2() {
    ExactMatrix2 m;
    m[0][0] = ExactComplex(1);
    m[1][1] = ExactComplex(1);
    return m;
}

}  // namespace screwline
