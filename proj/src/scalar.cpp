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

#include "screwline/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace screwline {

namespace {

// Splits n > 0 as k^2 * m with m squarefree (trial division; the radicands
// that occur here are tiny).
void split_square(const mpz_class& n, mpz_class& k, mpz_class& m) {
    k = 1;
    m = n;
    for (unsigned long d = 2; d <= 1000000; ++d) {
        mpz_class dd = d;
        if (dd * dd > m) break;
        mpz_class d2 = dd * dd;
        while (mpz_divisible_p(m.get_mpz_t(), d2.get_mpz_t())) {
            m /= d2;
            k *= dd;
        }
    }
    if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        k *= r;
        m = 1;
    }
}

}  // namespace

Symbolic::Symbolic(ExactComplex c, mpz_class s, int half_pi_power) : c_(std::move(c)), s_(std::move(s)), h_(half_pi_power) {
    if (s_ <= 0) throw std::invalid_argument("Symbolic: radicand must be positive");
    normalize();
}

void Symbolic::normalize() {
    if (c_.is_zero()) {
        s_ = 1;
        h_ = 0;
        return;
    }
    if (s_ != 1) {
        mpz_class k, m;
        split_square(s_, k, m);
        c_ *= ExactComplex(Rational(k));
        s_ = m;
    }
}

Complex Symbolic::value() const {
    double f = std::sqrt(s_.get_d()) * std::pow(std::numbers::pi, 0.5 * h_);
    return c_.to_complex() * f;
}

Symbolic operator*(const Symbolic& a, const Symbolic& b) {
    if (a.is_zero() || b.is_zero()) return Symbolic();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.s_.get_mpz_t(), b.s_.get_mpz_t());
    Symbolic out;
    out.c_ = a.c_ * b.c_ * ExactComplex(Rational(g));
    out.s_ = (a.s_ / g) * (b.s_ / g);
    out.h_ = a.h_ + b.h_;
    return out;
}

Symbolic operator/(const Symbolic& a, const Symbolic& b) {
    if (b.is_zero()) throw std::domain_error("Symbolic: division by zero");
    // 1/(c sqrt(s) pi^(h/2)) = (1/(c s)) sqrt(s) pi^(-h/2)
    Symbolic inv;
    inv.c_ = ExactComplex(1) / (b.c_ * ExactComplex(Rational(b.s_)));
    inv.s_ = b.s_;
    inv.h_ = -b.h_;
    return a * inv;
}

std::optional<Symbolic> Symbolic::sqrt() const {
    if (is_zero()) return Symbolic();
    if (!c_.is_real() || s_ != 1 || h_ % 2 != 0) return std::nullopt;
    Rational q = c_.re();
    bool negative = sgn(q) < 0;
    if (negative) q = -q;
    // sqrt(p/d) = sqrt(p d) / d
    mpz_class pd = q.get_num() * q.get_den();
    mpz_class k, m;
    split_square(pd, k, m);
    Rational coef(k, q.get_den());
    coef.canonicalize();
    ExactComplex c = negative ? ExactComplex(Rational(0), coef) : ExactComplex(coef);
    return Symbolic(c, m, h_ / 2);
}

std::string Symbolic::str() const {
    std::ostringstream os;
    bool paren = !c_.is_real() && sgn(c_.re()) != 0;
    if (paren) os << '(';
    os << c_;
    if (paren) os << ')';
    if (is_zero()) return os.str();
    if (s_ != 1) os << "*sqrt(" << s_.get_str() << ')';
    if (h_ == 2) {
        os << "*pi";
    } else if (h_ != 0) {
        Rational e(h_, 2);
        e.canonicalize();
        os << "*pi^(" << e.get_str() << ')';
    }
    return os.str();
}

std::optional<ExactComplex> Scalar::rational() const {
    if (exact_ && exact_->is_rational()) return exact_->coefficient();
    return std::nullopt;
}

Scalar Scalar::conj() const {
    if (exact_) return Scalar(exact_->conj());
    return Scalar(std::conj(approx_));
}

Scalar Scalar::sqrt() const {
    if (exact_) {
        if (auto r = exact_->sqrt()) return Scalar(*r);
    }
    return Scalar(std::sqrt(approx_));
}

Scalar Scalar::operator-() const {
    if (exact_) return Scalar(-*exact_);
    return Scalar(-approx_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (exact_ && o.exact_) {
        if (o.exact_->is_zero()) return *this;
        if (exact_->is_zero()) return *this = o;
        if (exact_->like(*o.exact_)) {
            ExactComplex c = exact_->coefficient() + o.exact_->coefficient();
            return *this = Scalar(Symbolic(c, exact_->radicand(), exact_->half_pi_power()));
        }
    }
    approx_ += o.approx_;
    exact_.reset();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (exact_ && o.exact_) return *this = Scalar(*exact_ * *o.exact_);
    if ((exact_ && exact_->is_zero()) || (o.exact_ && o.exact_->is_zero())) return *this = Scalar();
    approx_ *= o.approx_;
    exact_.reset();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (exact_ && o.exact_) return *this = Scalar(*exact_ / *o.exact_);
    if (o.approx_ == Complex(0.0)) throw std::domain_error("Scalar: division by zero");
    if (exact_ && exact_->is_zero()) return *this;
    approx_ /= o.approx_;
    exact_.reset();
    return *this;
}

std::optional<bool> Scalar::exactly_equals(const Scalar& o) const {
    if (!exact_ || !o.exact_) return std::nullopt;
    return *exact_ == *o.exact_;
}

std::string Scalar::str() const {
    if (exact_) return exact_->str();
    std::ostringstream os;
    os.precision(17);
    if (approx_.imag() == 0.0) {
        os << approx_.real();
    } else {
        os << approx_.real() << (approx_.imag() < 0 ? "-" : "+") << std::fabs(approx_.imag()) << 'i';
    }
    return os.str();
}

namespace {

// cos(pi q) for q with denominator 1, 2, 3, 4 or 6.
std::optional<Symbolic> exact_cos_pi(Rational q) {
    mpz_class den = q.get_den();
    if (den != 1 && den != 2 && den != 3 && den != 4 && den != 6) return std::nullopt;
    // Reduce to twelfths of a full turn: k = 12 q mod 24.
    Rational twelve = q * 12;
    long k = twelve.get_num().get_si() % 24;
    if (k < 0) k += 24;
    auto half = [](int num, int s) { return Symbolic(ExactComplex(Rational(num, 2)), s, 0); };
    switch (k) {
        case 0: return Symbolic(ExactComplex(1));
        case 2: return half(1, 3);
        case 3: return half(1, 2);
        case 4: return half(1, 1);
        case 6: return Symbolic();
        case 8: return half(-1, 1);
        case 9: return half(-1, 2);
        case 10: return half(-1, 3);
        case 12: return Symbolic(ExactComplex(-1));
        case 14: return half(-1, 3);
        case 15: return half(-1, 2);
        case 16: return half(-1, 1);
        case 18: return Symbolic();
        case 20: return half(1, 1);
        case 21: return half(1, 2);
        case 22: return half(1, 3);
        default: return std::nullopt;
    }
}

}  // namespace

Angle Angle::pi_times(const Rational& q) {
    Angle a(q.get_d() * std::numbers::pi);
    a.pi_multiple_ = q;
    return a;
}

Scalar Angle::cos() const {
    if (pi_multiple_) {
        if (auto c = exact_cos_pi(*pi_multiple_)) return Scalar(*c);
    }
    return Scalar(std::cos(radians_));
}

Scalar Angle::sin() const {
    if (pi_multiple_) {
        if (auto s = exact_cos_pi(*pi_multiple_ - Rational(1, 2))) return Scalar(*s);
    }
    return Scalar(std::sin(radians_));
}

std::string Angle::str() const {
    if (pi_multiple_) {
        const Rational& q = *pi_multiple_;
        if (sgn(q) == 0) return "0";
        std::string out;
        mpz_class n = q.get_num();
        if (n == -1) {
            out = "-pi";
        } else if (n == 1) {
            out = "pi";
        } else {
            out = n.get_str() + "*pi";
        }
        if (q.get_den() != 1) out += "/" + q.get_den().get_str();
        return out;
    }
    std::ostringstream os;
    os.precision(17);
    os << radians_;
    return os.str();
}

Angle Angle::parse(std::string_view text) {
    std::string t(text);
    auto pos = t.find("pi");
    if (pos == std::string::npos) {
        if (t.find_first_of(".eE") == std::string::npos) {
            Rational q = parse_rational(t);
            if (sgn(q) == 0) return Angle::pi_times(0);
            return Angle(q.get_d());
        }
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("malformed angle: '" + t + "'");
        return Angle(v);
    }
    std::string head = t.substr(0, pos);
    std::string tail = t.substr(pos + 2);
    Rational num = 1;
    if (head == "-") {
        num = -1;
    } else if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("malformed angle: '" + t + "'");
        num = parse_rational(head.substr(0, head.size() - 1));
    }
    Rational den = 1;
    if (!tail.empty()) {
        if (tail.front() != '/') throw std::invalid_argument("malformed angle: '" + t + "'");
        den = parse_rational(tail.substr(1));
        if (sgn(den) <= 0) throw std::invalid_argument("malformed angle: '" + t + "'");
    }
    return Angle::pi_times(num / den);
}

}  // namespace screwline
