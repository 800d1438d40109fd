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

#ifndef ODDBALL_ANALYTIC_CLOUD_HPP
#define ODDBALL_ANALYTIC_CLOUD_HPP

/*
 * Magnitude of finite subsets of R^n: solve Z w = 1 with Z_ab = e^{-|x_a - x_b|}
 * and sum the weights.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

#include "oddball/errors.hpp"
#include "oddball/exactalg.hpp"

namespace oddball {

enum class CloudGenerator { grid, lowdiscrepancy, custom };

inline std::string to_string(CloudGenerator g) {
    switch (g) {
        case CloudGenerator::grid: return "grid";
        case CloudGenerator::lowdiscrepancy: return "lowdiscrepancy";
        case CloudGenerator::custom: return "custom";
    }
    return "custom";
}

struct PointCloud {
    unsigned dim = 1;
    double radius = 1;
    std::vector<std::vector<double>> points;
    CloudGenerator generator = CloudGenerator::custom;
    std::string id;

    std::size_t size() const { return points.size(); }
};

struct CloudMagnitude {
    std::string cloud_id;
    std::size_t points = 0;
    double value = 0;
    double residual = 0;  // max_s |sum_x w(x) e^{-d(x,s)} - 1|
    bool ill_conditioned = false;
    unsigned refinement_steps = 0;
};

inline constexpr std::size_t kMaxCloudPoints = 5000;
inline constexpr double kCloudTolerance = 1e-10;

/// Points of the lattice (radius/divisions) Z^dim inside the closed ball.
/// Clouds for divisions m and k*m are nested.
inline PointCloud grid_cloud(unsigned dim, double radius, unsigned divisions) {
    if (dim < 1) throw InvalidArgument("dimension must be positive");
    if (radius <= 0) throw NonPositiveArgument("radius must be positive");
    PointCloud c;
    c.dim = dim;
    c.radius = radius;
    c.generator = CloudGenerator::grid;
    c.id = "grid(n=" + std::to_string(dim) + ",m=" + std::to_string(divisions) + ")";
    if (divisions == 0) {
        c.points.push_back(std::vector<double>(dim, 0.0));
        return c;
    }
    const long m = divisions;
    const double h = radius / static_cast<double>(m);
    std::vector<long> idx(dim, -m);
    for (;;) {
        long norm2 = 0;
        for (long v : idx) norm2 += v * v;
        if (norm2 <= m * m) {  // integer test keeps boundary points exact
            std::vector<double> x(dim);
            for (unsigned d = 0; d < dim; ++d) x[d] = h * static_cast<double>(idx[d]);
            c.points.push_back(std::move(x));
            if (c.points.size() > kMaxCloudPoints)
                throw TooLarge("grid cloud exceeds " + std::to_string(kMaxCloudPoints) + " points");
        }
        unsigned d = 0;
        while (d < dim && idx[d] == m) idx[d++] = -m;
        if (d == dim) break;
        ++idx[d];
    }
    return c;
}

/// Radical inverse of i in the given prime base.
inline double radical_inverse(unsigned long i, unsigned base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

/// First `count` Halton points (after skipping `seed` indices) of the cube
/// that land in the ball. Prefixes are nested.
inline PointCloud halton_cloud(unsigned dim, double radius, std::size_t count, unsigned long seed = 0) {
    static constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    if (dim < 1 || dim > std::size(primes)) throw InvalidArgument("Halton clouds support 1 <= dim <= 15");
    if (count > kMaxCloudPoints) throw TooLarge("cloud exceeds " + std::to_string(kMaxCloudPoints) + " points");
    PointCloud c;
    c.dim = dim;
    c.radius = radius;
    c.generator = CloudGenerator::lowdiscrepancy;
    c.id = "halton(n=" + std::to_string(dim) + ",N=" + std::to_string(count) + ",seed=" + std::to_string(seed) + ")";
    for (unsigned long i = seed + 1; c.points.size() < count; ++i) {
        std::vector<double> x(dim);
        double norm2 = 0;
        for (unsigned d = 0; d < dim; ++d) {
            x[d] = radius * (2 * radical_inverse(i, primes[d]) - 1);
            norm2 += x[d] * x[d];
        }
        if (norm2 <= radius * radius) c.points.push_back(std::move(x));
    }
    return c;
}

namespace detail {

inline double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

} // namespace detail

/// Dense solve of the weight equation: Cholesky in double, then iterative
/// refinement with long-double residuals while the residual exceeds the
/// tolerance. An indefinite factorisation is reported, never regularised.
inline CloudMagnitude cloud_magnitude(const PointCloud& cloud) {
    const std::size_t N = cloud.size();
    if (N == 0) throw InvalidArgument("empty point cloud");
    if (N > kMaxCloudPoints) throw TooLarge("cloud exceeds " + std::to_string(kMaxCloudPoints) + " points");

    Eigen::MatrixXd Z(N, N);
    for (std::size_t a = 0; a < N; ++a) {
        Z(a, a) = 1.0;
        for (std::size_t b = a + 1; b < N; ++b) Z(a, b) = Z(b, a) = std::exp(-detail::distance(cloud.points[a], cloud.points[b]));
    }

    CloudMagnitude out;
    out.cloud_id = cloud.id;
    out.points = N;

    Eigen::LLT<Eigen::MatrixXd> llt(Z);
    if (llt.info() != Eigen::Success) {
        out.ill_conditioned = true;
        out.value = std::nan("");
        out.residual = std::numeric_limits<double>::infinity();
        return out;
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(N));
    Eigen::VectorXd w = llt.solve(ones);

    auto residual = [&](Eigen::VectorXd& r) {
        double worst = 0;
        for (std::size_t a = 0; a < N; ++a) {
            long double acc = 0;
            for (std::size_t b = 0; b < N; ++b)
                acc += static_cast<long double>(Z(a, b)) * static_cast<long double>(w(b));
            r(a) = static_cast<double>(1.0L - acc);
            worst = std::max(worst, std::fabs(r(a)));
        }
        return worst;
    };
    Eigen::VectorXd r(N);
    out.residual = residual(r);
    while (out.residual > kCloudTolerance && out.refinement_steps < 5) {
        w += llt.solve(r);
        ++out.refinement_steps;
        out.residual = residual(r);
    }
    out.ill_conditioned = out.residual > kCloudTolerance;
    long double total = 0;
    for (std::size_t a = 0; a < N; ++a) total += w(a);
    out.value = static_cast<double>(total);
    return out;
}

struct ConvergenceReport {
    unsigned dim = 1;
    Rational radius = 1;
    double exact = 0;  // |B^dim_radius| for odd dim, else NaN
    std::vector<CloudMagnitude> values;
    std::vector<double> gaps;  // exact - value
    bool nondecreasing = true;
    bool bounded = true;
    bool nested = true;
};

/// Magnitudes of a nested sequence of clouds, with monotonicity and the upper
/// bound |B^n_R| checked. `exact_bound` is evaluated by the caller (the
/// clouds themselves carry no exact data).
inline ConvergenceReport cloud_convergence_study(unsigned dim, const Rational& radius,
                                                 const std::vector<PointCloud>& clouds, double exact_bound,
                                                 double slack = 1e-9) {
    ConvergenceReport rep;
    rep.dim = dim;
    rep.radius = radius;
    rep.exact = exact_bound;
    for (std::size_t k = 0; k < clouds.size(); ++k) {
        if (k > 0) {
            // Every point of the previous cloud must reappear.
            for (const auto& x : clouds[k - 1].points) {
                bool found = false;
                for (const auto& y : clouds[k].points)
                    if (detail::distance(x, y) < 1e-12) {
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.nested = false;
                    break;
                }
            }
        }
        rep.values.push_back(cloud_magnitude(clouds[k]));
        const double v = rep.values.back().value;
        rep.gaps.push_back(exact_bound - v);
        if (!(v <= exact_bound + slack)) rep.bounded = false;
        if (k > 0 && !(v >= rep.values[k - 1].value - slack)) rep.nondecreasing = false;
    }
    return rep;
}

} // namespace oddball

#endif // ODDBALL_ANALYTIC_CLOUD_HPP
