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

#include "screwline/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "screwline/classical.hpp"
#include "screwline/examples.hpp"
#include "screwline/paleywiener.hpp"
#include "screwline/weyl.hpp"

namespace screwline {

using json_io::json;
using json_io::to_json;
using json_io::VerificationReport;

namespace {

constexpr double pi = std::numbers::pi;

bool exactly(const Scalar& a, const Scalar& b) { return a.exactly_equals(b).value_or(false); }

Scalar pi_times(const Rational& q) { return Scalar(q) * Scalar::pi(); }

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

Polynomial poly(std::initializer_list<ExactComplex> c) { return Polynomial(std::vector<ExactComplex>(c)); }

ExactComplex r(long p, long q = 1) { return ExactComplex(Rational(p, q)); }

/// Runs one stage; an exception becomes a failed check named after the stage.
void stage(VerificationReport& rep, const std::string& name, const std::string& provenance, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        rep.add_error(name, e.what(), provenance);
    }
}

}  // namespace

double g_r_laplace_bound(double r_, int N, double y) { return 4.0 * r_ / (pi * pi * y * (2.0 * N - 1.0)); }

VerificationReport g0_pipeline(const PipelineOptions& o) {
    VerificationReport rep;
    rep.name = "g0";
    const double tol = o.tol.value_or(1e-6);
    const RationalFunction Q = examples::Q0();

    NevanlinnaData nd;
    Polynomial E;
    HermiteBiehlerFrame frame;
    Hamiltonian H;
    std::optional<ModelSpace> model;

    stage(rep, "spectral measure of Q0", "Herglotz representation of Q0", [&] {
        nd = measure_from_q(Q);
        DiscreteMeasure tau0({{Scalar(-1), Scalar(Rational(1, 2))}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(Rational(1, 2))}});
        rep.add_exact("tau(Q0) = {0: 1, +-1: 1/2}, a = b = 0", nd.measure.exactly_equals(tau0) && exactly(nd.a, Scalar(0)) && exactly(nd.b, Scalar(0)),
                      "partial fractions of Q0 against the Herglotz representation");
        rep.add_exact("q_from_measure(tau) = Q0", q_from_measure(nd) == Q, "Herglotz representation, inverse direction");
        rep.details["tau"] = to_json(nd.measure);
    });

    stage(rep, "Hermite-Biehler function", "Cayley transform Theta = (i - Q)/(i + Q) = E#/E", [&] {
        RationalFunction theta = cayley_q_to_theta(Q);
        E = theta_to_e(theta);
        rep.add_exact("E from Theta = z^3 + 2i z^2 - z - i", E == examples::E0(), "Cayley transform Theta = (i - Q)/(i + Q) = E#/E");
        frame = make_frame(E);
        DiscreteMeasure mu({{Scalar(-1), pi_times(Rational(1, 2))}, {Scalar(0), Scalar::pi()}, {Scalar(1), pi_times(Rational(1, 2))}});
        rep.add_exact("level-set masses {0: pi, +-1: pi/2}", frame.mu.exactly_equals(mu), "masses 2 pi/|Theta'| on Theta = -1");
        rep.add_exact("tau = mu / pi", tau_from_mu(frame.mu).exactly_equals(nd.measure), "spectral measure versus level-set measure");
        rep.details["frame"] = to_json(frame);
    });

    stage(rep, "de Branges space", "level-set inner products on H(E0)", [&] {
        Polynomial one(1), z = Polynomial::x(), z2 = z * z;
        std::vector<Polynomial> p{one, z, z2};
        const long table[3][3] = {{2, 0, 1}, {0, 1, 0}, {1, 0, 1}};
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) ok = ok && exactly(inner_product(frame, p[i], p[j]), pi_times(Rational(table[i][j])));
        rep.add_exact("<z^i, z^j> = pi [[2,0,1],[0,1,0],[1,0,1]]", ok, "inner products through the level-set measure");
        auto b = gram_schmidt_basis(frame);
        Scalar r2pi = pi_times(Rational(2)).sqrt();
        rep.add_exact("Gram-Schmidt basis {1/sqrt(2pi), z/sqrt(pi), (2z^2-1)/sqrt(2pi)}",
                      b.size() == 3 && same(b[0], Scalar(1) / r2pi, one) && same(b[1], Scalar(1) / Scalar::sqrt_pi(), z) &&
                          same(b[2], Scalar(1) / r2pi, poly({r(-1), r(0), r(2)})),
                      "Gram-Schmidt on monomials");
        MomentTable m = moments(frame);
        rep.add_exact("m_0 = 2 pi, H_2 = pi^3",
                      exactly(m.moments[0], pi_times(Rational(2))) && exactly(m.hankel[2], Scalar::pi() * Scalar::pi() * Scalar::pi()),
                      "moments of the level-set measure and Hankel determinants");

        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            Complex zz(u(rng), u(rng)), w(u(rng), u(rng));
            Complex a = kernel_ab(frame, zz, w), mm = kernel_moment(frame, zz, w);
            worst = std::max(worst, std::abs(a - mm) / (1.0 + std::abs(a)));
        }
        rep.add("reproducing kernel: bordered determinant = (A, B) form", worst, 1e-10, "two formulas for K(w, z)");

        int hits = 0;
        bool zero_hit = false;
        for (int k = 0; k < 64; ++k) {
            bool in = s_theta_in_space(frame, Angle::pi_times(Rational(k, 64)));
            hits += in;
            zero_hit = zero_hit || (in && k == 0);
        }
        rep.add_exact("S_theta in H(E0) only for theta = 0", hits == 1 && zero_hit, "membership of S_theta = (e^{i theta} E - e^{-i theta} E#)/2i");

        ExtensionEigenbasis e = extension_eigenbasis(frame, Angle::pi_times(Rational(1, 2)));
        auto ratio = [&](std::size_t k, long g) { return e.normalized[k](ExactComplex(g)) / Scalar(E(ExactComplex(g))); };
        Scalar mi = Scalar(ExactComplex(0, -1));
        bool unit = true;
        for (std::size_t i = 0; i < e.normalized.size(); ++i) unit = unit && exactly(inner_product(frame, e.normalized[i], e.normalized[i]), Scalar(1));
        rep.add_exact("eigenbasis at pi/2: unit norms, F/E = -i/sqrt(pi), -i sqrt(2/pi)",
                      e.normalized.size() == 3 && unit && exactly(ratio(1, 0), mi / Scalar::sqrt_pi()) &&
                          exactly(ratio(2, 1), mi * (Scalar(2) / Scalar::pi()).sqrt()) && exactly(ratio(0, -1), mi * (Scalar(2) / Scalar::pi()).sqrt()),
                      "orthogonal basis of H(E0) from the self-adjoint extension at pi/2");
    });

    stage(rep, "structure Hamiltonian", "factorization of the transfer matrix into elementary factors", [&] {
        ABSplit cd = ab_split(E);
        auto [A, B] = bezout_complete(cd.A, cd.B);
        MatrixPolynomial W(A, B, cd.A, cd.B);
        rep.add_exact("Bezout completion of (C, D) = W0", W == examples::W0(), "A D - B C = 1 with minimal degrees");
        rep.add_exact("W0 is a transfer matrix", validate_transfer(W, 64, o.seed).pass, "W(0) = I, det W = 1, J-contractive");
        H = factorize(W);
        const Hamiltonian& ref = examples::H0();
        bool segs = H.size() == ref.size();
        for (std::size_t k = 0; segs && k < H.size(); ++k)
            segs = H.segments()[k].length == ref.segments()[k].length && H.segments()[k].theta.pi_multiple() == ref.segments()[k].theta.pi_multiple();
        rep.add_exact("factorize(W0) = (1/2, pi/2), (4, 0), (1/2, pi/2)", segs, "W0 = product of I - z l_k H_k J");
        rep.add_exact("W(5, z) = W0", fundamental_solution(H, Rational(5)) == W, "fundamental solution at the right end");
        Polynomial z = Polynomial::x();
        bool rows = fundamental_solution(H, Rational(1, 4)) == MatrixPolynomial(Polynomial(1), Polynomial(), poly({r(0), r(-1, 4)}), Polynomial(1)) &&
                    fundamental_solution(H, Rational(2)) == MatrixPolynomial(Polynomial(1), poly({r(0), r(3, 2)}), poly({r(0), r(-1, 2)}), poly({r(1), r(0), r(-3, 4)})) &&
                    fundamental_solution(H, Rational(19, 4)) ==
                        MatrixPolynomial(poly({r(1), r(0), r(-1)}), poly({r(0), r(4)}), poly({r(0), r(-3, 4), r(0), r(1, 2)}), poly({r(1), r(0), r(-2)}));
        rep.add_exact("W(t, z) at t = 1/4, 2, 19/4", rows, "piecewise solution of the canonical system");
        rep.details["H"] = to_json(H);
    });

    stage(rep, "Weyl transform", "Weyl transform L-hat^2(H0) -> H(E0)", [&] {
        auto unit = [&](std::size_t seg, bool second) {
            StepVector v = StepVector::zero(H.size());
            (second ? v.pieces[seg].g : v.pieces[seg].f) = {Scalar(1)};
            return v;
        };
        Scalar inv_pi = Scalar(1) / Scalar::pi();
        rep.add_exact("Weyl images 1/(2pi), -2z/pi, (1-2z^2)/(2pi)",
                      same(weyl_transform(H, unit(0, true)), inv_pi, poly({r(1, 2)})) && same(weyl_transform(H, unit(1, false)), inv_pi, poly({r(0), r(-2)})) &&
                          same(weyl_transform(H, unit(2, true)), inv_pi, poly({r(1, 2), r(0), r(-1)})),
                      "(1/pi) int [C D] H F dt on the constant step vectors");
        model = make_model_space(frame);
        const auto& b = model->basis;
        Scalar s2 = (Scalar::pi() / Scalar(2)).sqrt();
        std::vector<StepVector> G{inverse_weyl(H, frame, b[0]), inverse_weyl(H, frame, b[1]), inverse_weyl(H, frame, b[2])};
        bool inv = same(G[1], Scalar(-1) * Scalar::sqrt_pi() * solution_row(H, Scalar(0))) && same(G[2], s2 * solution_row(H, Scalar(1))) &&
                   same(G[0], s2 * solution_row(H, Scalar(-1)));
        bool ortho = true, back = true;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) ortho = ortho && exactly(l2h_inner(H, G[i], G[j]), Scalar(i == j ? 1 : 0));
            ScaledPolynomial w = weyl_transform(H, G[i]);
            back = back && same(w, b[i].scale, b[i].poly);
        }
        rep.add_exact("inverse images are multiples of [C; D](t, g)", inv, "inverse Weyl transform on the level set");
        rep.add_exact("inverse images orthonormal in L-hat^2(H0)", ortho, "unitarity of the Weyl transform");
        rep.add_exact("W W^{-1} = id on the eigenbasis", back, "unitarity of the Weyl transform");
    });

    ScrewFunctionData g;
    g.tau = nd.measure;

    stage(rep, "screw line", "screw line in the model space", [&] {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            double t = -6.0 + 12.0 * i / 19.0;
            ModelVector St = screw_line_S(*model, t);
            for (int j = 0; j < 20; ++j) {
                double s = -6.0 + 12.0 * j / 19.0;
                worst = std::max(worst, std::abs(model_inner(St, screw_line_S(*model, s)) - pi * kernel_g(g, t, s)));
            }
        }
        rep.add("<S_t, S_s> = pi G_g0(t, s) on a 20x20 grid", worst, 1e-12, "screw line Gram identity");
    });

    stage(rep, "positive definiteness", "G_g nonnegative definite", [&] {
        if (o.grid < 1) throw std::invalid_argument("grid must be positive");
        std::vector<double> grid;
        for (int k = 0; k < o.grid; ++k) grid.push_back(o.grid == 1 ? o.range_lo : o.range_lo + (o.range_hi - o.range_lo) * k / (o.grid - 1));
        PdResult pd = pd_check(g, grid, 1e-9);
        rep.add("min eigenvalue of [G(t_i, t_j)] >= -1e-9", std::max(0.0, -pd.min_eigenvalue), 1e-9, "G_g nonnegative definite");
        rep.details["min_eigenvalue"] = pd.min_eigenvalue;
    });

    stage(rep, "Laplace transform", "int_0^inf g e^{izt} dt = -i Q(z)/z^2", [&] {
        double worst = 0.0;
        for (Complex z : {Complex(0, 2), Complex(1, 1), Complex(-1, 2)}) worst = std::max(worst, laplace_check(g, Q, z, 80.0));
        rep.add("|int_0^80 g0 e^{izt} dt + i Q0(z)/z^2| at 2i, 1+i, -1+2i", worst, 1e-8, "Laplace transform of a screw function");
    });

    stage(rep, "diagram", "isometries and commutations of the diagram", [&] {
        DiagramInputs in{g, nd.measure, H, *model};
        DiagramReport d = diagram_check(in, 20, o.seed, tol);
        for (const auto& x : d.residuals) rep.add(x.name, x.residual, tol, "diagram H(G_g) -> L-hat^2(H) -> H(E) -> L^2(mu)");
        json gram = json::array();
        for (const auto& row : d.basis_gram) {
            json jr = json::array();
            for (Complex c : row) jr.push_back(json::array({c.real(), c.imag()}));
            gram.push_back(jr);
        }
        rep.details["diagram"] = json{{"basis_gram", gram}, {"gram_constant", d.gram_constant}, {"phase", json::array({d.phase.real(), d.phase.imag()})}};
    });

    return rep;
}

VerificationReport pw_pipeline(const PipelineOptions& o) {
    VerificationReport rep;
    rep.name = "pw";
    PWFrame f{o.r, o.trunc};
    stage(rep, "frame", "constant Hamiltonian on [0, r]", [&] { f.validate(); });
    if (!rep.pass()) return rep;
    const double laplace_tol = o.tol.value_or(std::max(1e-4, 2.0 * g_r_laplace_bound(f.r, f.N, 2.0)));
    rep.details["r"] = f.r;
    rep.details["trunc"] = f.N;

    stage(rep, "lattice", "sampling on Theta_r = -1", [&] {
        DiscreteMeasure m = pw_measure(f);
        rep.add_exact("pw_measure has 2N atoms of mass pi/r", m.size() == 2 * static_cast<std::size_t>(f.N), "lattice (pi/2r)(2n-1)");
        double worst = 0.0;
        for (long n = -5; n <= 5; ++n)
            for (long k = -5; k <= 5; ++k) {
                double g = pw_lattice_point(f.r, k);
                worst = std::max(worst, std::abs(pw_basis(f.r, n, g) / pw_E(f.r, g) - (n == k ? std::sqrt(f.r / pi) : 0.0)));
            }
        rep.add("F_n(g_m)/E_r(g_m) = sqrt(r/pi) delta_nm", worst, 1e-12, "basis of PW_r from the lattice");
    });

    stage(rep, "Gram matrix", "truncated sampling norm on the shifted lattice", [&] {
        long n_max = std::min<long>(50, std::max<long>(1, f.N / 4));
        PWGram G = pw_gram(f, n_max);
        rep.add("max |Gram(F_n) - I|, |n| <= " + std::to_string(n_max), G.max_deviation, 0.02, "orthonormality of F_n in PW_r");
        rep.add("max |Gram(F_n) - I| <= 1/N", G.max_deviation, 1.0 / f.N, "quantified truncation error");
        ConvergenceRate c = gram_convergence(f, std::min<long>(n_max, 10));
        rep.add("Gram error ratio N vs 2N in [1.5, 2.5]", std::abs(c.ratio - 2.0), 0.5, "O(1/N) truncation");
        rep.details["gram_ratio"] = c.ratio;
    });

    stage(rep, "partial fractions", "tan(rz) = (1/r) sum 1/(g_n - z)", [&] {
        double worst = 0.0;
        json ratios = json::array();
        for (Complex z : {Complex(0.3, 0.0), Complex(0.2, 1.0), Complex(-1.1, 0.5)}) {
            ConvergenceRate c = tan_convergence(f, z / f.r);
            worst = std::max(worst, std::abs(c.ratio - 2.0));
            ratios.push_back(c.ratio);
        }
        rep.add("tan partial fraction error ratio N vs 2N in [1.5, 2.5]", worst, 0.5, "O(1/N) truncation");
        rep.details["tan_ratios"] = ratios;
    });

    stage(rep, "fundamental solution", "dW/dt = -z W H J with H = I", [&] {
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> t(0.0, f.r), x(-3.0, 3.0), y(-1.0, 1.0);
        double worst = 0.0, det = 0.0;
        for (int k = 0; k < 20; ++k) {
            double tt = t(rng);
            Complex z(x(rng), y(rng));
            worst = std::max(worst, pw_fd_residual(f.r, tt, z));
            ComplexMatrix2 m = pw_fundamental(f.r, tt, z);
            det = std::max(det, std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0] - 1.0));
        }
        rep.add("finite-difference residual of the canonical system", worst, 1e-6, "W_r(t, z) = rotation by tz");
        rep.add("det W_r = 1", det, 1e-12, "W_r(t, z) = rotation by tz");
    });

    stage(rep, "screw function g_r", "g_r with tau_r = mu/pi", [&] {
        double worst = 0.0;
        for (double t : {0.2, 0.9, 1.6, 2.7, 3.5}) {
            double tt = t * f.r;
            double u = std::fmod(tt, 4.0 * f.r);
            double tri = u <= 2.0 * f.r ? -u : u - 4.0 * f.r;
            worst = std::max(worst, std::abs(g_r_eval(f, tt) - tri));
        }
        rep.add("|g_r - triangle wave| within the tail bound", worst, g_r_tail_bound(f), "series for g_r");
        PWFrame small{f.r, std::min(f.N, 200)};
        ScrewFunctionData g;
        g.tau = pw_measure(small).scaled(Scalar(1) / Scalar::pi());
        double gap = 0.0;
        for (double t : {-2.2, 0.4, 1.0, 3.3}) gap = std::max(gap, std::abs(eval_screw(g, t * f.r) - g_r_eval(small, t * f.r)));
        rep.add("g_r series = screw function of tau_r = mu/pi", gap, 1e-12, "spectral representation of g_r");
        double lap = g_r_laplace_check(f, Complex(0.0, 2.0));
        rep.add("|int g_r e^{izt} dt + i tan(rz)/z^2| at z = 2i", lap, laplace_tol, "Laplace transform of g_r");
        rep.details["laplace_bound"] = g_r_laplace_bound(f.r, f.N, 2.0);
    });

    stage(rep, "Weyl = Fourier", "Weyl transform on PW_r is a Fourier transform", [&] {
        std::mt19937_64 rng(o.seed);
        std::normal_distribution<double> nd;
        std::vector<Complex> zs = {0.0, 0.7, Complex(2.0, 0.5), Complex(-3.0, -1.0), 9.5, Complex(6.0, 2.0)};
        double worst = 0.0, constant = 0.0;
        for (int k = 0; k < 10; ++k) {
            PWStepVector F;
            for (int j = 0; j < 4; ++j) {
                F.f.emplace_back(nd(rng), nd(rng));
                F.g.emplace_back(nd(rng), nd(rng));
            }
            PWFourierCheck c = pw_weyl_is_fourier(f, F, zs);
            worst = std::max(worst, c.residual);
            constant = c.constant;
        }
        rep.add("Weyl integral = (1/2pi) Fourier transform of Psi", worst, 1e-8, "Weyl transform with H = I");
        rep.details["norm_constant"] = constant;
    });
    return rep;
}

VerificationReport appendix_checks(const PipelineOptions& o) {
    VerificationReport rep;
    rep.name = "appendix";
    const double tol = o.tol.value_or(1e-8);

    stage(rep, "Krein string", "Stieltjes continued fraction of q0", [&] {
        RationalFunction q0 = q_substitute(examples::Q0());
        KreinString s = stieltjes_string(q0);
        rep.add_exact("string of q0 = {1/2 at 0, 1/2 at 4}, L = infinity",
                      s.masses.size() == 2 && s.masses[0].position == 0 && s.masses[0].mass == Rational(1, 2) && s.masses[1].position == 4 &&
                          s.masses[1].mass == Rational(1, 2) && !s.L,
                      "Stieltjes continued fraction");
        auto y = string_solve(s, Rational(4));
        rep.add_exact("phi(4, l) = 1 - 2l, psi(4, l) = 4", y.phi == poly({r(1), r(-2)}) && y.psi == Polynomial(r(4)), "string equation with point masses");
        rep.add_exact("Titchmarsh-Weyl function of the string = q0", titchmarsh_weyl(s) == q0, "inverse spectral problem for strings");
        rep.details["string"] = to_json(s);
    });

    stage(rep, "Levy-Khintchine", "Levy-Khintchine triplet of g0", [&] {
        ScrewFunctionData g = g0_data();
        LevyTriplet t = levy_triplet(g);
        bool ok = exactly(t.a, Scalar(1)) && exactly(t.b, Scalar(0)) && t.nu.size() == 2 && exactly(t.nu.atoms()[0].point, Scalar(-1)) &&
                  exactly(t.nu.atoms()[0].mass, Scalar(Rational(1, 2))) && exactly(t.nu.atoms()[1].point, Scalar(1)) &&
                  exactly(t.nu.atoms()[1].mass, Scalar(Rational(1, 2)));
        rep.add_exact("triplet(g0) = (1, 0, delta_1/2 + delta_-1/2)", ok, "Levy-Khintchine representation");
        CharfnCheck c = idd_charfn_check(g, {0.0, 1.0, 2.0});
        rep.add("int density dx = 1", std::abs(c.normalization - 1.0), 1e-8, "Gaussian-Poisson density");
        rep.add("|c-hat(t) - exp(g0(t))|, t = 0, 1, 2", *std::max_element(c.residual.begin(), c.residual.end()), 1e-6,
                "characteristic function of the infinitely divisible law");
    });

    stage(rep, "mean periodicity", "g0 is mean periodic", [&] {
        MeanPeriodicReport m = mean_periodic_checks(3.0, 61, 10.0, tol);
        rep.add("max |(g0 * phi)(t)| on [-3, 3]", m.convolution, tol, "convolution with the annihilator");
        rep.add("phi-hat = sqrt(pi) e^{-z^2/4} z^3 (z^2 - 1)", m.fourier, tol, "Fourier transform of the annihilator");
        rep.add("(g0+ * phi)(t) = -i (8t^2 - 3) e^{-t^2}", m.one_sided, tol, "one-sided convolutions");
        rep.add("FC(g0)(2i) = -(i/z^2) Q0(z)", m.carleman, tol, "Fourier-Carleman transform");
    });
    return rep;
}

}  // namespace screwline
