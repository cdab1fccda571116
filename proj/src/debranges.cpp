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

#include "screwline/debranges.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "screwline/roots.hpp"

namespace screwline {

namespace {

const Complex I(0.0, 1.0);

Scalar at(const ScaledPolynomial& p, const Scalar& x) {
    if (p.is_exact()) {
        if (auto r = x.rational()) return p(*r);
    }
    return Scalar(p(x.value()));
}

Scalar at(const Polynomial& p, const Scalar& x) {
    if (auto r = x.rational()) return Scalar(p(*r));
    return Scalar(p(x.value()));
}

Scalar power(const Scalar& x, int k) {
    Scalar r(1);
    for (int j = 0; j < k; ++j) r *= x;
    return r;
}

/// e^{i t} E, with the exact part of the unit folded into the polynomial.
ScaledPolynomial rotate(const Polynomial& E, const Angle& t) {
    Scalar u = t.unit();
    if (u.is_exact()) {
        const Symbolic& s = *u.exact();
        return ScaledPolynomial(Scalar(Symbolic(ExactComplex(1), s.radicand(), s.half_pi_power())), E * s.coefficient());
    }
    return ScaledPolynomial(E.to_complex() * u.value());
}

Angle shifted_by_half_pi(const Angle& t) {
    if (t.pi_multiple()) return Angle::pi_times(*t.pi_multiple() + Rational(1, 2));
    return Angle(t.radians() + std::numbers::pi / 2);
}

/// Drops floating coefficients above the numerical degree.
CPolynomial trimmed(const ScaledPolynomial& p, double tol) {
    int d = degree(p, tol);
    std::vector<Complex> c(p.approx.coeffs().begin(), p.approx.coeffs().begin() + (d + 1));
    return CPolynomial(std::move(c));
}

Scalar real_lead_sign(const ScaledPolynomial& p) {
    if (p.is_exact()) return Scalar(sgn(p.poly.lead().re()) * sgn(p.scale.exact()->coefficient().re()));
    int d = degree(p, 1e-12);
    return Scalar(p.approx.coeff(d).real() < 0.0 ? -1 : 1);
}

ScaledPolynomial unit_positive(const HermiteBiehlerFrame& f, const ScaledPolynomial& p) {
    return (real_lead_sign(p) / norm(f, p)) * p;
}

}  // namespace

Scalar det_bareiss(ScalarMatrix m) {
    const std::size_t n = m.size();
    Scalar sign(1), prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m[r][k].abs() > m[p][k].abs()) p = r;
        }
        if (m[p][k].is_zero()) return Scalar(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return n == 0 ? Scalar(1) : sign * m[n - 1][n - 1];
}

HermiteBiehlerFrame make_frame(const Polynomial& E) {
    if (E.degree() < 1) throw std::invalid_argument("H(E) is trivial for constant E");
    if (!hb_test(E)) throw std::invalid_argument("not Hermite-Biehler");
    HermiteBiehlerFrame f;
    f.E = E;
    auto [A, B] = ab_split(E);
    f.A = A;
    f.B = B;
    if (A.degree() < E.degree()) throw std::domain_error("level set incomplete: deg A < deg E");
    f.mu = level_set_masses(E);
    return f;
}

Scalar inner_product(const HermiteBiehlerFrame& f, const ScaledPolynomial& p, const ScaledPolynomial& q) {
    int n = f.degree();
    if (degree(p, 1e-12) >= n || degree(q, 1e-12) >= n) throw std::invalid_argument("not a member of H(E)");
    Scalar acc(0);
    for (const auto& a : f.mu.atoms()) {
        Scalar e = at(f.E, a.point);
        Scalar e2 = e * e.conj();
        acc += at(p, a.point) * at(q, a.point).conj() * a.mass / e2;
    }
    return acc;
}

Scalar inner_product(const HermiteBiehlerFrame& f, const Polynomial& p, const Polynomial& q) {
    return inner_product(f, ScaledPolynomial(Scalar(1), p), ScaledPolynomial(Scalar(1), q));
}

Scalar norm(const HermiteBiehlerFrame& f, const ScaledPolynomial& p) { return inner_product(f, p, p).sqrt(); }

MomentTable moments(const HermiteBiehlerFrame& f) {
    const int n = f.degree();
    MomentTable t;
    std::vector<Scalar> w;
    for (const auto& a : f.mu.atoms()) {
        Scalar e = at(f.E, a.point);
        w.push_back(a.mass / (e * e.conj()));
    }
    for (int k = 0; k <= 2 * n - 2; ++k) {
        Scalar m(0);
        for (std::size_t j = 0; j < w.size(); ++j) m += power(f.mu.atoms()[j].point, k) * w[j];
        t.moments.push_back(m);
    }
    for (int k = 0; k < n; ++k) {
        ScalarMatrix h(k + 1, std::vector<Scalar>(k + 1));
        for (int i = 0; i <= k; ++i) {
            for (int j = 0; j <= k; ++j) h[i][j] = t.moments[i + j];
        }
        t.hankel.push_back(det_bareiss(std::move(h)));
    }
    return t;
}

Complex kernel_ab(const HermiteBiehlerFrame& f, Complex z, Complex w) {
    // N(w) = A(zb) B(w) - A(w) B(zb) vanishes at w = zb, so the quotient
    // N(w)/(w - zb) is a polynomial and needs no limit.
    Complex zb = std::conj(z);
    CPolynomial N = f.A(zb) * f.B.to_complex() - f.B(zb) * f.A.to_complex();
    ScaledPolynomial q = divide_linear(ScaledPolynomial(N), Scalar(zb));
    return q(w) / std::numbers::pi;
}

Complex kernel_moment(const HermiteBiehlerFrame& f, Complex z, Complex w) {
    const int n = f.degree();
    MomentTable t = moments(f);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = t.moments[i + j].value();
        M(i, n) = std::pow(w, i);
        M(n, i) = std::conj(std::pow(z, i));
    }
    return -M.determinant() / t.hankel[n - 1].value();
}

std::vector<ScaledPolynomial> gram_schmidt_basis(const HermiteBiehlerFrame& f) {
    const int n = f.degree();
    MomentTable t = moments(f);
    std::vector<ScaledPolynomial> out;
    for (int k = 0; k < n; ++k) {
        const Scalar& hk = t.hankel[k];
        Scalar hprev = k == 0 ? Scalar(1) : t.hankel[k - 1];
        if (hk.is_zero() || hk.real() <= 1e-14 * std::pow(t.moments[0].abs(), k + 1)) throw std::domain_error("singular Hankel matrix");
        // D_k = sum_j c_j z^j, c_j the signed minors of the k x (k+1) moment block.
        std::vector<Scalar> c(k + 1);
        for (int j = 0; j <= k; ++j) {
            ScalarMatrix minor(k, std::vector<Scalar>());
            for (int i = 0; i < k; ++i) {
                for (int l = 0; l <= k; ++l) {
                    if (l != j) minor[i].push_back(t.moments[i + l]);
                }
            }
            c[j] = det_bareiss(std::move(minor));
            if ((k + j) % 2) c[j] = -c[j];
        }
        Scalar inv = Scalar(1) / (hprev * hk).sqrt();
        // Factor the common sqrt/pi part out of the coefficients when possible.
        std::optional<Scalar> unit;
        std::vector<ExactComplex> rc;
        bool exact = true;
        for (const auto& x : c) {
            if (!x.is_exact()) {
                exact = false;
                break;
            }
            if (!unit && !x.is_zero()) unit = Scalar(Symbolic(ExactComplex(1), x.exact()->radicand(), x.exact()->half_pi_power()));
        }
        if (exact && unit) {
            for (const auto& x : c) {
                auto r = (x / *unit).rational();
                if (!r) {
                    exact = false;
                    break;
                }
                rc.push_back(*r);
            }
        }
        Scalar scale = exact && unit ? *unit * inv : Scalar(0);
        if (exact && unit && scale.is_exact()) {
            out.emplace_back(scale, Polynomial(rc));
        } else {
            std::vector<Complex> v;
            for (const auto& x : c) v.push_back(x.value() * inv.value());
            out.emplace_back(CPolynomial(std::move(v)));
        }
    }
    return out;
}

ScaledPolynomial s_theta(const HermiteBiehlerFrame& f, const Angle& theta) {
    ScaledPolynomial r = rotate(f.E, theta);
    return r - sharp(r);
}

bool s_theta_in_space(const HermiteBiehlerFrame& f, const Angle& theta, double tol) {
    return degree(s_theta(f, theta), tol) < f.degree();
}

Angle member_angle(const HermiteBiehlerFrame& f) {
    ExactComplex l = f.E.lead();
    if (l.is_real()) return Angle();
    if (sgn(l.re()) == 0) return Angle::pi_times(Rational(1, 2));
    if (l.re() == l.im()) return Angle::pi_times(Rational(3, 4));
    if (l.re() == -l.im()) return Angle::pi_times(Rational(1, 4));
    double t = -std::arg(l.to_complex());
    t = std::fmod(t, std::numbers::pi);
    if (t < 0.0) t += std::numbers::pi;
    return Angle(t);
}

ExtensionEigenbasis extension_eigenbasis(const HermiteBiehlerFrame& f, const Angle& theta) {
    ExtensionEigenbasis out;
    ScaledPolynomial S = s_theta(f, theta);
    out.s_theta_member = degree(S, 1e-12) < f.degree();
    // S_theta = -2i A_phi with A_phi the real part of e^{i phi} E, phi = theta + pi/2.
    ScaledPolynomial r = rotate(f.E, shifted_by_half_pi(theta));
    ScaledPolynomial A = Scalar(Rational(1, 2)) * (r + sharp(r));
    std::vector<Complex> zs = A.is_exact() ? roots(A.poly) : roots(trimmed(A, 1e-12));
    for (Complex z : zs) {
        if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z))) throw std::domain_error("S_theta has a non-real zero");
        Scalar g(z.real());
        if (A.is_exact()) {
            if (auto e = exact_root(A.poly, z)) g = Scalar(*e);
        }
        out.eigenvalues.push_back(g);
        out.eigenfunctions.push_back(divide_linear(S, g));
        out.normalized.push_back(unit_positive(f, divide_linear(A, g)));
    }
    if (out.s_theta_member) out.normalized.push_back(unit_positive(f, A));
    return out;
}

ScaledPolynomial domain_element(const HermiteBiehlerFrame& f, const Angle& theta, const ScaledPolynomial& F) {
    ScaledPolynomial S = s_theta(f, theta);
    Scalar w0 = Scalar::i();
    if (at(S, w0).is_zero()) w0 = Scalar(ExactComplex(0, 2));
    ScaledPolynomial num = at(S, w0) * F - at(F, w0) * S;
    return divide_linear(num, w0);
}

int domain_dimension(const HermiteBiehlerFrame& f, const Angle& theta, double tol) {
    const int n = f.degree();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        ScaledPolynomial e = domain_element(f, theta, ScaledPolynomial(Scalar(1), Polynomial::monomial(ExactComplex(1), j)));
        if (degree(e, 1e-12) >= n) throw std::logic_error("domain element outside H(E)");
        for (int k = 0; k < n; ++k) M(k, j) = e.approx.coeff(k);
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    lu.setThreshold(tol);
    return static_cast<int>(lu.rank());
}

HermiteBiehlerFrame sl2_transform(const HermiteBiehlerFrame& f, const ExactMatrix2& M) {
    for (const auto& row : M) {
        for (const auto& x : row) {
            if (!x.is_real()) throw std::invalid_argument("matrix not in SL2(R)");
        }
    }
    if (det(M) != ExactComplex(1)) throw std::invalid_argument("matrix not in SL2(R)");
    Polynomial A = f.A * M[0][0] + f.B * M[0][1];
    Polynomial B = f.A * M[1][0] + f.B * M[1][1];
    return make_frame(A - B * ExactComplex::i());
}

ExactMatrix2 rotation_matrix(const Rational& cos_t, const Rational& sin_t) {
    if (cos_t * cos_t + sin_t * sin_t != 1) throw std::invalid_argument("not a rotation");
    return {{{ExactComplex(cos_t), ExactComplex(sin_t)}, {ExactComplex(-sin_t), ExactComplex(cos_t)}}};
}

}  // namespace screwline
