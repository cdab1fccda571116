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

#include <ostream>

#include "screwline/polynomial.hpp"

namespace screwline {

/// num/den kept reduced: gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// deg num - deg den (meaningless for zero).
    int degree_gap() const { return num_.degree() - den_.degree(); }

    ExactComplex operator()(const ExactComplex& z) const;
    Complex operator()(Complex z) const;

    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

private:
    Polynomial num_;
    Polynomial den_;
};

/// r(-z)
RationalFunction reflect(const RationalFunction& r);

}  // namespace screwline
