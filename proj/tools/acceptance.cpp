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

// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "screwline/classical.hpp"
#include "screwline/examples.hpp"
#include "screwline/paleywiener.hpp"
#include "screwline/weyl.hpp"

using namespace screwline;

namespace {

constexpr double pi = std::numbers::pi;

bool exactly(const Scalar& a, const Scalar& b) { return a.exactly_equals(b).value_or(false); }

Scalar pi_times(const Rational& q) { return Scalar(q) * Scalar::pi(); }

ExactComplex r(long p, long q = 1) { return ExactComplex(Rational(p, q)); }

Polynomial poly(std::initializer_list<ExactComplex> c) { return Polynomial(std::vector<ExactComplex>(c)); }

bool same(const ScaledPolynomial& a, const Scalar& s, const Polynomial& p) {
    if (!a.is_exact()) return false;
    int n = std::max(a.poly.degree(), p.degree());
    for (int k = 0; k <= n; ++k)
        if (!exactly(a.scale * Scalar(a.poly.coeff(k)), s * Scalar(p.coeff(k)))) return false;
    return true;
}

bool same(const TPolynomial& a, const TPolynomial& b) {
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        Scalar x = k < a.size() ? a[k] : Scalar(0), y = k < b.size() ? b[k] : Scalar(0);
        if (!exactly(x, y)) return false;
    }
    return true;
}

bool same(const StepVector& a, const StepVector& b) {
    if (a.pieces.size() != b.pieces.size()) return false;
    for (std::size_t k = 0; k < a.pieces.size(); ++k)
        if (!same(a.pieces[k].f, b.pieces[k].f) || !same(a.pieces[k].g, b.pieces[k].g)) return false;
    return true;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3g", x);
    return b;
}

int failures = 0;

void criterion(int n, const char* title, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s [%.0f ms]\n", o.pass ? "PASS" : "FAIL", n, title, o.detail.c_str(), ms);
    failures += !o.pass;
}

DiscreteMeasure tau0() {
    return DiscreteMeasure({{Scalar(-1), Scalar(Rational(1, 2))}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(Rational(1, 2))}});
}

}  // namespace

int main() {
    const HermiteBiehlerFrame f = examples::E0_frame();
    const Hamiltonian H = examples::H0();
    const ScrewFunctionData g = g0_data();

    criterion(1, "spectral measure of Q0", [] {
        NevanlinnaData d = measure_from_q(examples::Q0());
        bool ok = d.measure.exactly_equals(tau0()) && exactly(d.a, Scalar(0)) && exactly(d.b, Scalar(0));
        return Outcome{ok, "tau = {0: 1, +-1: 1/2}, a = b = 0 exact"};
    });

    criterion(2, "level-set masses of E0", [] {
        DiscreteMeasure mu = level_set_masses(examples::E0());
        DiscreteMeasure expect({{Scalar(-1), pi_times(Rational(1, 2))}, {Scalar(0), Scalar::pi()}, {Scalar(1), pi_times(Rational(1, 2))}});
        return Outcome{mu.exactly_equals(expect), "{0: pi, +-1: pi/2} exact"};
    });

    criterion(3, "inner products, Gram-Schmidt, moments", [&] {
        std::vector<Polynomial> p{Polynomial(1), Polynomial::x(), Polynomial::x() * Polynomial::x()};
        const long table[3][3] = {{2, 0, 1}, {0, 1, 0}, {1, 0, 1}};
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) ok = ok && exactly(inner_product(f, p[i], p[j]), pi_times(Rational(table[i][j])));
        auto b = gram_schmidt_basis(f);
        Scalar r2pi = pi_times(Rational(2)).sqrt();
        bool gs = b.size() == 3 && same(b[0], Scalar(1) / r2pi, p[0]) && same(b[1], Scalar(1) / Scalar::sqrt_pi(), p[1]) &&
                  same(b[2], Scalar(1) / r2pi, poly({r(-1), r(0), r(2)}));
        MomentTable m = moments(f);
        bool mom = exactly(m.moments[0], pi_times(Rational(2))) && exactly(m.hankel[2], Scalar::pi() * Scalar::pi() * Scalar::pi());
        return Outcome{ok && gs && mom, std::string("table ") + (ok ? "exact" : "wrong") + ", basis " + (gs ? "exact" : "wrong") + ", m0 = 2pi & H2 = pi^3 " +
                                            (mom ? "exact" : "wrong")};
    });

    criterion(4, "kernel formulas agree", [&] {
        std::mt19937_64 rng(0);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            Complex z(u(rng), u(rng)), w(u(rng), u(rng));
            worst = std::max(worst, std::abs(kernel_ab(f, z, w) - kernel_moment(f, z, w)));
        }
        return Outcome{worst < 1e-10, "max |bordered - (A,B)| = " + fmt(worst) + " over 20 points (tol 1e-10)"};
    });

    criterion(5, "S_theta membership and eigenbasis", [&] {
        int hits = 0;
        bool zero = false;
        for (int k = 0; k < 64; ++k) {
            bool in = s_theta_in_space(f, Angle::pi_times(Rational(k, 64)));
            hits += in;
            zero = zero || (in && k == 0);
        }
        ExtensionEigenbasis e = extension_eigenbasis(f, Angle::pi_times(Rational(1, 2)));
        bool unit = e.normalized.size() == 3;
        for (std::size_t i = 0; unit && i < 3; ++i) unit = exactly(inner_product(f, e.normalized[i], e.normalized[i]), Scalar(1));
        auto ratio = [&](std::size_t k, long x) { return e.normalized[k](ExactComplex(x)) / Scalar(examples::E0()(ExactComplex(x))); };
        Scalar mi = Scalar(ExactComplex(0, -1));
        bool bv = unit && exactly(ratio(1, 0), mi / Scalar::sqrt_pi()) && exactly(ratio(2, 1), mi * (Scalar(2) / Scalar::pi()).sqrt()) &&
                  exactly(ratio(0, -1), mi * (Scalar(2) / Scalar::pi()).sqrt());
        return Outcome{hits == 1 && zero && bv, std::to_string(hits) + " member angle(s) in 64 (theta = 0: " + (zero ? "yes" : "no") +
                                                    "), unit norms and boundary values " + (bv ? "exact" : "wrong")};
    });

    criterion(6, "factorization of W0", [] {
        Hamiltonian h = factorize(examples::W0());
        const Hamiltonian& ref = examples::H0();
        bool segs = h.size() == 3;
        for (std::size_t k = 0; segs && k < 3; ++k)
            segs = h.segments()[k].length == ref.segments()[k].length && h.segments()[k].theta.pi_multiple() == ref.segments()[k].theta.pi_multiple();
        bool end = fundamental_solution(h, Rational(5)) == examples::W0();
        bool rows = fundamental_solution(h, Rational(1, 4)) == MatrixPolynomial(Polynomial(1), Polynomial(), poly({r(0), r(-1, 4)}), Polynomial(1)) &&
                    fundamental_solution(h, Rational(2)) == MatrixPolynomial(Polynomial(1), poly({r(0), r(3, 2)}), poly({r(0), r(-1, 2)}), poly({r(1), r(0), r(-3, 4)})) &&
                    fundamental_solution(h, Rational(19, 4)) ==
                        MatrixPolynomial(poly({r(1), r(0), r(-1)}), poly({r(0), r(4)}), poly({r(0), r(-3, 4), r(0), r(1, 2)}), poly({r(1), r(0), r(-2)}));
        std::string seg;
        for (const auto& s : h.segments()) seg += "(" + to_string(s.length) + "," + s.theta.str() + ")";
        return Outcome{segs && end && rows, seg + (end ? ", W(5) = W0" : ", W(5) != W0") + (rows ? ", rows at 1/4, 2, 19/4 exact" : ", rows wrong")};
    });

    criterion(7, "Weyl images and inverse images", [&] {
        auto unit = [&](std::size_t seg, bool second) {
            StepVector v = StepVector::zero(3);
            (second ? v.pieces[seg].g : v.pieces[seg].f) = {Scalar(1)};
            return v;
        };
        Scalar inv_pi = Scalar(1) / Scalar::pi();
        bool images = same(weyl_transform(H, unit(0, true)), inv_pi, poly({r(1, 2)})) && same(weyl_transform(H, unit(1, false)), inv_pi, poly({r(0), r(-2)})) &&
                      same(weyl_transform(H, unit(2, true)), inv_pi, poly({r(1, 2), r(0), r(-1)}));
        ModelSpace m = make_model_space(f);
        Scalar s2 = (Scalar::pi() / Scalar(2)).sqrt();
        std::vector<StepVector> G{inverse_weyl(H, f, m.basis[0]), inverse_weyl(H, f, m.basis[1]), inverse_weyl(H, f, m.basis[2])};
        bool inv = same(G[1], Scalar(-1) * Scalar::sqrt_pi() * solution_row(H, Scalar(0))) && same(G[2], s2 * solution_row(H, Scalar(1))) &&
                   same(G[0], s2 * solution_row(H, Scalar(-1)));
        bool ortho = true;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) ortho = ortho && exactly(l2h_inner(H, G[i], G[j]), Scalar(i == j ? 1 : 0));
        return Outcome{images && inv && ortho, std::string("images ") + (images ? "exact" : "wrong") + ", inverse images " + (inv ? "exact" : "wrong") +
                                                   ", orthonormal " + (ortho ? "exact" : "no")};
    });

    criterion(8, "screw-line Gram identity", [&] {
        ModelSpace m = make_model_space(f);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            double t = -6.0 + 12.0 * i / 19.0;
            ModelVector St = screw_line_S(m, t);
            for (int j = 0; j < 20; ++j) {
                double s = -6.0 + 12.0 * j / 19.0;
                worst = std::max(worst, std::abs(model_inner(St, screw_line_S(m, s)) - pi * kernel_g(g, t, s)));
            }
        }
        return Outcome{worst < 1e-12, "max |<S_t,S_s> - pi G(t,s)| = " + fmt(worst) + " on 20x20 grid (tol 1e-12)"};
    });

    criterion(9, "positive definiteness of G_g0", [&] {
        std::vector<double> grid;
        for (int k = 0; k < 50; ++k) grid.push_back(-6.0 + 12.0 * k / 49.0);
        PdResult pd = pd_check(g, grid, 1e-9);
        return Outcome{pd.min_eigenvalue >= -1e-9, "min eigenvalue = " + fmt(pd.min_eigenvalue) + " (>= -1e-9)"};
    });

    criterion(10, "Laplace identity", [&] {
        double worst = 0.0;
        for (Complex z : {Complex(0, 2), Complex(1, 1), Complex(-1, 2)}) worst = std::max(worst, laplace_check(g, examples::Q0(), z, 80.0));
        return Outcome{worst < 1e-8, "max residual = " + fmt(worst) + " at 2i, 1+i, -1+2i, T = 80 (tol 1e-8)"};
    });

    criterion(11, "diagram closure", [] {
        DiagramReport d = diagram_check(g0_diagram(), 20, 0, 1e-6);
        double worst = 0.0;
        for (const auto& x : d.residuals) worst = std::max(worst, x.residual);
        return Outcome{d.pass && worst < 1e-6, "worst of " + std::to_string(d.residuals.size()) + " residuals = " + fmt(worst) +
                                                   " over 20 functions (tol 1e-6); Gram constant " + fmt(d.gram_constant)};
    });

    criterion(12, "Krein string of q0", [] {
        RationalFunction q0 = q_substitute(examples::Q0());
        KreinString s = stieltjes_string(q0);
        bool str = s.masses.size() == 2 && s.masses[0].position == 0 && s.masses[0].mass == Rational(1, 2) && s.masses[1].position == 4 &&
                   s.masses[1].mass == Rational(1, 2) && !s.L;
        auto y = string_solve(s, Rational(4));
        bool sol = y.phi == poly({r(1), r(-2)}) && y.psi == Polynomial(r(4));
        bool tw = titchmarsh_weyl(s) == q0;
        return Outcome{str && sol && tw, std::string("{1/2@0, 1/2@4}, L = inf ") + (str ? "exact" : "wrong") + ", phi/psi at 4 " + (sol ? "exact" : "wrong") +
                                             ", round trip " + (tw ? "exact" : "wrong")};
    });

    criterion(13, "Levy-Khintchine", [&] {
        LevyTriplet t = levy_triplet(g);
        bool trip = exactly(t.a, Scalar(1)) && exactly(t.b, Scalar(0)) && t.nu.size() == 2 && exactly(t.nu.atoms()[0].point, Scalar(-1)) &&
                    exactly(t.nu.atoms()[0].mass, Scalar(Rational(1, 2))) && exactly(t.nu.atoms()[1].point, Scalar(1)) &&
                    exactly(t.nu.atoms()[1].mass, Scalar(Rational(1, 2)));
        CharfnCheck c = idd_charfn_check(g, {0.0, 1.0, 2.0});
        double norm = std::abs(c.normalization - 1.0);
        double cf = *std::max_element(c.residual.begin(), c.residual.end());
        return Outcome{trip && norm < 1e-8 && cf < 1e-6, std::string("triplet ") + (trip ? "exact" : "wrong") + ", |int - 1| = " + fmt(norm) +
                                                             " (1e-8), charfn residual = " + fmt(cf) + " (1e-6)"};
    });

    criterion(14, "mean periodicity", [] {
        MeanPeriodicReport m = mean_periodic_checks(3.0, 61, 10.0, 1e-8);
        double worst = std::max({m.convolution, m.one_sided, m.carleman});
        return Outcome{m.convolution < 1e-8 && m.one_sided < 1e-8 && m.carleman < 1e-8,
                       "convolution " + fmt(m.convolution) + ", one-sided " + fmt(m.one_sided) + ", Fourier-Carleman " + fmt(m.carleman) + " (tol 1e-8; worst " +
                           fmt(worst) + ")"};
    });

    criterion(15, "Paley-Wiener", [] {
        PWFrame fr{1.0, 2000};
        PWGram G = pw_gram(fr, 50);
        std::mt19937_64 rng(0);
        std::normal_distribution<double> nd;
        std::vector<Complex> zs = {0.0, 0.7, Complex(2.0, 0.5), Complex(-3.0, -1.0), 9.5, Complex(6.0, 2.0)};
        double fourier = 0.0;
        for (int k = 0; k < 20; ++k) {
            PWStepVector F;
            for (int j = 0; j < 4; ++j) {
                F.f.emplace_back(nd(rng), nd(rng));
                F.g.emplace_back(nd(rng), nd(rng));
            }
            fourier = std::max(fourier, pw_weyl_is_fourier(fr, F, zs).residual);
        }
        std::uniform_real_distribution<double> t(0.0, 1.0), x(-3.0, 3.0);
        double fd = 0.0;
        for (int k = 0; k < 20; ++k) fd = std::max(fd, pw_fd_residual(1.0, t(rng), Complex(x(rng), x(rng) / 3.0)));
        ConvergenceRate gc = gram_convergence({1.0, 400}, 10);
        double tan_lo = 10.0, tan_hi = 0.0;
        for (Complex z : {Complex(0.3, 0.0), Complex(0.2, 1.0), Complex(-1.1, 0.5)}) {
            double q = tan_convergence({1.0, 200}, z).ratio;
            tan_lo = std::min(tan_lo, q);
            tan_hi = std::max(tan_hi, q);
        }
        auto in_band = [](double q) { return q >= 1.5 && q <= 2.5; };
        bool ok = G.max_deviation < 0.02 && fourier < 1e-8 && fd < 1e-6 && in_band(gc.ratio) && in_band(tan_lo) && in_band(tan_hi);
        return Outcome{ok, "Gram |n|<=50 dev " + fmt(G.max_deviation) + " (0.02), Fourier " + fmt(fourier) + " (1e-8), FD " + fmt(fd) +
                               " (1e-6), N->2N ratios Gram " + fmt(gc.ratio) + ", tan [" + fmt(tan_lo) + ", " + fmt(tan_hi) + "]"};
    });

    std::printf("%s: %d of 15 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
