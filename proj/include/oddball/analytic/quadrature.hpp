/*
   Copyright 2026 The oddball authors

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

#ifndef ODDBALL_ANALYTIC_QUADRATURE_HPP
#define ODDBALL_ANALYTIC_QUADRATURE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "oddball/errors.hpp"
#include "oddball/real.hpp"

namespace oddball {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    unsigned digits = 0;
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

namespace detail {

/// Nodes by Newton iteration on P_n from the Tricomi initial guesses. Only
/// the nonnegative half is solved; the rule is symmetric.
inline GaussLegendreRule compute_gauss_legendre(unsigned n, unsigned digits) {
    ScopedPrecision guard(digits + 10);
    GaussLegendreRule rule;
    rule.digits = digits;
    rule.nodes.assign(n, Real(0));
    rule.weights.assign(n, Real(0));
    const Real tol = pow(Real(10), -static_cast<int>(digits) - 5);
    const Real pi_r = pi();
    for (unsigned k = 0; k < (n + 1) / 2; ++k) {
        Real x = cos(pi_r * (Real(k) + Real("0.75")) / (Real(n) + Real("0.5")));
        Real dp = 0;
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = x;
            for (unsigned m = 2; m <= n; ++m) {
                Real p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            const Real step = p1 / dp;
            x -= step;
            if (abs(step) < tol) break;
        }
        // Recompute the derivative at the converged node.
        {
            Real p0 = 1, p1 = x;
            for (unsigned m = 2; m <= n; ++m) {
                Real p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
        }
        const Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[k] = x;
        rule.weights[k] = w;
        rule.nodes[n - 1 - k] = -x;
        rule.weights[n - 1 - k] = w;
    }
    return rule;
}

} // namespace detail

/// Cached rule for `n` points at `digits` working digits.
inline std::shared_ptr<const GaussLegendreRule> gauss_legendre(unsigned n, unsigned digits) {
    if (n < 1) throw InvalidArgument("Gauss-Legendre needs at least one node");
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const GaussLegendreRule>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({n, digits});
        if (it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const GaussLegendreRule>(detail::compute_gauss_legendre(n, digits));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(n, digits), rule).first->second;
}

/// Integral of f over [a, b] with an n-point rule.
template <class F>
Real integrate(F&& f, const Real& a, const Real& b, unsigned n, unsigned digits) {
    const auto rule = gauss_legendre(n, digits);
    const Real half = (b - a) / 2, mid = (a + b) / 2;
    Real sum = 0;
    for (unsigned k = 0; k < n; ++k) sum += rule->weights[k] * f(mid + half * rule->nodes[k]);
    return sum * half;
}

} // namespace oddball

#endif // ODDBALL_ANALYTIC_QUADRATURE_HPP
