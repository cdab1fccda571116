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

// Thin wrappers over Boost.Math quadrature, plus Simpson weights for
// uniformly sampled data.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace screwline::quad {

/// Adaptive Gauss-Kronrod (61 points) on [a, b]; f may be complex valued.
template <class F>
auto adaptive(F f, double a, double b, double tol = 1e-13, unsigned max_depth = 25) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, max_depth, tol);
}

/// Composite 30-point Gauss-Legendre over `panels` equal panels.
template <class F>
auto composite(F f, double a, double b, int panels) {
    using G = boost::math::quadrature::gauss<double, 30>;
    double h = (b - a) / panels;
    auto acc = G::integrate(f, a, a + h);
    for (int k = 1; k < panels; ++k) acc += G::integrate(f, a + k * h, a + (k + 1) * h);
    return acc;
}

struct Node {
    double x;
    double w;
};

/// Nodes and weights of the composite 30-point Gauss-Legendre rule, for
/// reusing one set of function values across several integrals.
inline std::vector<Node> gauss_nodes(double a, double b, int panels) {
    using G = boost::math::quadrature::gauss<double, 30>;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(panels) * 2 * x.size());
    double h = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
        double mid = a + (k + 0.5) * h, half = 0.5 * h;
        for (std::size_t i = 0; i < x.size(); ++i) {
            out.push_back({mid - half * x[i], half * w[i]});
            if (x[i] != 0.0) out.push_back({mid + half * x[i], half * w[i]});
        }
    }
    return out;
}

/// Composite Simpson weights for n (odd) equally spaced samples with step h.
inline std::vector<double> simpson_weights(std::size_t n, double h) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson: need an odd number of samples >= 3");
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = (k == 0 || k == n - 1) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    for (auto& x : w) x *= h / 3.0;
    return w;
}

}  // namespace screwline::quad
