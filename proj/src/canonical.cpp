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

#include "screwline/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace screwline {

namespace {

const char* const kNotFactorable = "not factorable: matrix is not of canonical-product form";

std::string point_str(Complex z) {
    std::ostringstream os;
    os.precision(6);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

ExactMatrix2 inverse(const ExactMatrix2& m) {
    ExactComplex d = det(m);
    return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

bool is_real(const ExactMatrix2& m) {
    for (const auto& row : m) {
        for (const auto& x : row) {
            if (!x.is_real()) return false;
        }
    }
    return true;
}

/// Solves the stacked system X (MJ) = 0, Y + X' (MJ) = 0 for (alpha, beta,
/// gamma), using MJ = [[beta, -alpha], [gamma, -beta]]. Returns false unless
/// the solution is unique.
bool solve_factor(const ExactMatrix2& Wr, const ExactMatrix2& Wr1, ElementaryFactor& out) {
    std::vector<std::array<ExactComplex, 4>> rows;
    auto add = [&rows](const ExactMatrix2& X, const ExactMatrix2* rhs) {
        for (int i = 0; i < 2; ++i) {
            ExactComplex r0 = rhs ? -(*rhs)[i][0] : ExactComplex(0);
            ExactComplex r1 = rhs ? -(*rhs)[i][1] : ExactComplex(0);
            rows.push_back({ExactComplex(0), X[i][0], X[i][1], r0});
            rows.push_back({-X[i][0], -X[i][1], ExactComplex(0), r1});
        }
    };
    add(Wr, nullptr);
    add(Wr1, &Wr);
    std::size_t rank = 0;
    for (int col = 0; col < 3; ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col].is_zero()) ++p;
        if (p == rows.size()) return false;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            ExactComplex f = rows[r][col] / rows[rank][col];
            for (int c = 0; c < 4; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (!rows[r][3].is_zero()) return false;
    }
    ExactComplex x[3];
    for (int k = 0; k < 3; ++k) x[k] = rows[k][3] / rows[k][k];
    if (!x[0].is_real() || !x[1].is_real() || !x[2].is_real()) return false;
    out = {x[0].re(), x[1].re(), x[2].re()};
    return true;
}

ExactMatrix2 mj(const ElementaryFactor& m) {
    return {{{m.beta, Rational(-m.alpha)}, {m.gamma, Rational(-m.beta)}}};
}

}  // namespace

TransferReport validate_transfer(const MatrixPolynomial& W, int samples, std::uint64_t seed, double tol) {
    TransferReport rep;
    auto fail = [&rep](std::string why) {
        rep.pass = false;
        rep.failures.push_back(std::move(why));
    };
    if (W(ExactComplex(0)) != identity_matrix2()) fail("W(0) != I");
    if (matpoly_det(W) != Polynomial(1)) fail("det W != 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.05, 3.0);
    for (int k = 0; k < samples; ++k) {
        Complex z(ux(rng), uy(rng));
        ComplexMatrix2 w = W(z);
        Complex a = w[0][0], b = w[0][1], c = w[1][0], d = w[1][1];
        double scale = 1.0 + std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c);
        double re = (a * std::conj(d) - b * std::conj(c)).real();
        if (re < 1.0 - tol * scale) fail("Re(A conj D - B conj C) < 1 at z = " + point_str(z));
        Complex dz = z - std::conj(z);
        double k1 = ((b * std::conj(a) - a * std::conj(b)) / dz).real();
        double k2 = ((d * std::conj(c) - c * std::conj(d)) / dz).real();
        if (k1 < -tol * (1.0 + std::abs(a) * std::abs(b) / std::abs(z.imag()))) fail("(B conj A - A conj B)/(z - conj z) < 0 at z = " + point_str(z));
        if (k2 < -tol * (1.0 + std::abs(c) * std::abs(d) / std::abs(z.imag()))) fail("(D conj C - C conj D)/(z - conj z) < 0 at z = " + point_str(z));
    }
    return rep;
}

std::pair<Polynomial, Polynomial> bezout_solve(const Polynomial& C, const Polynomial& D) {
    ExtendedGcd e = extended_gcd(D, C);
    if (e.g.degree() != 0) throw std::invalid_argument("C,D not coprime");
    // s D + t C = 1, so A = s, B = -t; then reduce A modulo C.
    Polynomial A = e.s, B = e.t * ExactComplex(-1);
    if (C.degree() >= 1 && A.degree() >= C.degree()) {
        auto [q, r] = divmod(A, C);
        A = r;
        B = B - q * D;
    }
    return {A, B};
}

std::pair<Polynomial, Polynomial> bezout_complete(const Polynomial& C, const Polynomial& D) {
    auto ab = bezout_solve(C, D);
    if (!validate_transfer(MatrixPolynomial(ab.first, ab.second, C, D)).pass) throw std::domain_error("completion not J-inner");
    return ab;
}

ExactMatrix2 ElementaryFactor::matrix() const { return {{{alpha, beta}, {beta, gamma}}}; }

Angle ElementaryFactor::angle() const {
    if (sgn(alpha) == 0) return Angle::pi_times(Rational(1, 2));
    if (sgn(beta) == 0) return Angle();
    bool up = sgn(beta) > 0;
    if (alpha == gamma) return Angle::pi_times(up ? Rational(1, 4) : Rational(3, 4));
    if (gamma == 3 * alpha) return Angle::pi_times(up ? Rational(1, 3) : Rational(2, 3));
    if (alpha == 3 * gamma) return Angle::pi_times(up ? Rational(1, 6) : Rational(5, 6));
    double t = std::atan2(beta.get_d(), alpha.get_d());
    if (t < 0.0) t += std::numbers::pi;
    return Angle(t);
}

MatrixPolynomial ElementaryFactor::factor() const {
    ExactMatrix2 n = mj(*this);
    Polynomial z = Polynomial::x();
    return {Polynomial(1) - z * n[0][0], z * -n[0][1], z * -n[1][0], Polynomial(1) - z * n[1][1]};
}

std::pair<MatrixPolynomial, ElementaryFactor> peel_factor(const MatrixPolynomial& W) {
    const int r = W.degree();
    if (r < 1) throw std::domain_error(kNotFactorable);
    ExactMatrix2 Wr = W.coefficient(r), Wr1 = W.coefficient(r - 1);
    ElementaryFactor m;
    bool found = false;
    if (!det(Wr1).is_zero()) {
        // MJ = -Wr1^{-1} Wr, and M = -(MJ) J.
        ExactMatrix2 X = inverse(Wr1) * Wr;
        ExactMatrix2 M = X * j_matrix();
        if (is_real(M) && M[0][1] == M[1][0] && is_zero(Wr * mj({M[0][0].re(), M[0][1].re(), M[1][1].re()}))) {
            m = {M[0][0].re(), M[0][1].re(), M[1][1].re()};
            found = true;
        }
    }
    if (!found && !solve_factor(Wr, Wr1, m)) throw std::domain_error(kNotFactorable);
    if (sgn(m.alpha) < 0 || sgn(m.gamma) < 0 || m.alpha * m.gamma != m.beta * m.beta || sgn(m.alpha + m.gamma) == 0) throw std::domain_error(kNotFactorable);
    ExactMatrix2 n = mj(m);
    Polynomial z = Polynomial::x();
    MatrixPolynomial inv(Polynomial(1) + z * n[0][0], z * n[0][1], z * n[1][0], Polynomial(1) + z * n[1][1]);
    MatrixPolynomial V = W * inv;
    if (V.degree() != r - 1) throw std::domain_error(kNotFactorable);
    return {V, m};
}

Segment::Segment(Rational length_, Angle theta_) : length(std::move(length_)), theta(std::move(theta_)) {
    length.canonicalize();
    Scalar c = theta.cos(), s = theta.sin();
    direction = {c * c, c * s, s * s};
}

Segment Segment::from_factor(const ElementaryFactor& m) {
    Segment s(m.length(), m.angle());
    Rational L = m.length();
    s.direction = {Scalar(Rational(m.alpha / L)), Scalar(Rational(m.beta / L)), Scalar(Rational(m.gamma / L))};
    return s;
}

bool Segment::exact() const {
    return std::all_of(direction.begin(), direction.end(), [](const Scalar& x) { return x.rational().has_value(); });
}

Hamiltonian::Hamiltonian(std::vector<Segment> segments) : segments_(std::move(segments)) {
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (sgn(segments_[k].length) <= 0) throw std::invalid_argument("segment length must be positive");
        if (k == 0) continue;
        const auto& a = segments_[k - 1].direction;
        const auto& b = segments_[k].direction;
        Scalar cross = b[0] * a[2] + b[2] * a[0] - Scalar(2) * b[1] * a[1];
        bool positive = cross.rational() ? sgn(cross.rational()->re()) > 0 : cross.real() > 1e-12;
        if (!positive) throw std::domain_error("consecutive factors of equal type");
    }
}

std::vector<Rational> Hamiltonian::breakpoints() const {
    std::vector<Rational> t{Rational(0)};
    for (const auto& s : segments_) t.push_back(t.back() + s.length);
    return t;
}

Rational Hamiltonian::total_length() const { return breakpoints().back(); }

std::size_t Hamiltonian::segment_at(double t) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        acc += segments_[k].length.get_d();
        if (t < acc) return k;
    }
    return segments_.empty() ? 0 : segments_.size() - 1;
}

Scalar Hamiltonian::trace_integral() const {
    Scalar acc(0);
    for (const auto& s : segments_) acc += Scalar(s.length) * (s.direction[0] + s.direction[2]);
    return acc;
}

Hamiltonian factorize(const MatrixPolynomial& W) {
    TransferReport rep = validate_transfer(W);
    if (!rep.pass) throw std::invalid_argument("not a valid transfer matrix: " + rep.failures.front());
    std::vector<ElementaryFactor> factors;
    MatrixPolynomial V = W;
    while (V.degree() > 0) {
        auto [next, m] = peel_factor(V);
        factors.push_back(m);
        V = next;
    }
    std::reverse(factors.begin(), factors.end());
    std::vector<Segment> segs;
    for (const auto& m : factors) segs.push_back(Segment::from_factor(m));
    return Hamiltonian(std::move(segs));
}

MatrixPolynomial fundamental_solution(const Hamiltonian& H, const Rational& t) {
    if (sgn(t) < 0 || t > H.total_length()) throw std::out_of_range("t outside [0, L]");
    MatrixPolynomial W = MatrixPolynomial::identity();
    Rational start(0);
    Polynomial z = Polynomial::x();
    for (const auto& s : H.segments()) {
        if (t <= start) break;
        if (!s.exact()) throw std::domain_error("inexact Hamiltonian direction");
        Rational len = std::min<Rational>(s.length, t - start);
        ExactComplex c2 = *s.direction[0].rational(), cs = *s.direction[1].rational(), s2 = *s.direction[2].rational();
        ExactComplex l(len);
        // I - z len H J with H J = [[cs, -c^2], [s^2, -cs]]
        W = W * MatrixPolynomial(Polynomial(1) - z * (l * cs), z * (l * c2), z * (-l * s2), Polynomial(1) + z * (l * cs));
        start += s.length;
    }
    return W;
}

ComplexMatrix2 fundamental_solution(const Hamiltonian& H, double t, Complex z) {
    double L = H.total_length().get_d();
    if (t < 0.0 || t > L * (1.0 + 1e-15)) throw std::out_of_range("t outside [0, L]");
    ComplexMatrix2 W{{{1.0, 0.0}, {0.0, 1.0}}};
    double start = 0.0;
    for (const auto& s : H.segments()) {
        if (t <= start) break;
        double len = std::min(s.length.get_d(), t - start);
        Complex c2 = s.direction[0].value(), cs = s.direction[1].value(), s2 = s.direction[2].value();
        ComplexMatrix2 f{{{1.0 - z * len * cs, z * len * c2}, {-z * len * s2, 1.0 + z * len * cs}}};
        ComplexMatrix2 n{};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) n[i][j] = W[i][0] * f[0][j] + W[i][1] * f[1][j];
        }
        W = n;
        start += s.length.get_d();
    }
    return W;
}

std::vector<Rational> regular_points(const Hamiltonian& H) { return H.breakpoints(); }

std::vector<ChainLink> subspace_chain(const Hamiltonian& H) {
    std::vector<ChainLink> out;
    for (const Rational& t : H.breakpoints()) {
        MatrixPolynomial W = fundamental_solution(H, t);
        Polynomial E = W.C() - W.D() * ExactComplex::i();
        out.push_back({t, E, std::max(0, E.degree())});
    }
    return out;
}

double chain_kernel_diagonal(const Hamiltonian& H, double t, Complex z) {
    if (z.imag() == 0.0) throw std::invalid_argument("chain_kernel_diagonal: z must be non-real");
    ComplexMatrix2 W = fundamental_solution(H, t, z);
    Complex c = W[1][0], d = W[1][1];
    return ((std::conj(c) * d - c * std::conj(d)) / (std::numbers::pi * (z - std::conj(z)))).real();
}

}  // namespace screwline
