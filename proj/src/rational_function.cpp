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

#include "screwline/rational_function.hpp"

#include <stdexcept>

namespace screwline {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = gcd(num, den);
    num_ = divmod(num, g).first;
    den_ = divmod(den, g).first;
    ExactComplex l = den_.lead();
    num_ /= l;
    den_ /= l;
}

ExactComplex RationalFunction::operator()(const ExactComplex& z) const {
    ExactComplex d = den_(z);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_(z) / d;
}

Complex RationalFunction::operator()(Complex z) const { return num_(z) / den_(z); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function divided by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    if (r.is_polynomial()) return os << r.num_;
    return os << '(' << r.num_ << ")/(" << r.den_ << ')';
}

RationalFunction reflect(const RationalFunction& r) { return {reflect(r.num()), reflect(r.den())}; }

}  // namespace screwline
