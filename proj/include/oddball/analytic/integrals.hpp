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

#ifndef ODDBALL_ANALYTIC_INTEGRALS_HPP
#define ODDBALL_ANALYTIC_INTEGRALS_HPP

/*
 * Quadrature checks of the closed forms for integrals of e^{-|x-s|} (and of
 * psi_j(|x-s|)) over the sphere S_R and ball B_R in R^n, n = 2p+1.  The left
 * sides are computed numerically, the right sides from exact chi_i(R) and
 * tau_i(s).  By rotational symmetry only s = |s| matters, and on the sphere
 *
 *   int_{S_R} g(|x-s|) dx = sigma R^{2p} int_0^pi g(w) sin^{2p-1}(t) dt,
 *   w^2 = R^2 + s^2 - 2 R s cos t,   sigma = |S^{2p-1}| = 2 pi^p / (p-1)!.
 */

#include <cmath>
#include <string>
#include <vector>

#include "oddball/analytic/quadrature.hpp"
#include "oddball/bessel.hpp"
#include "oddball/real.hpp"

namespace oddball {

inline constexpr unsigned kDefaultQuadratureNodes = 200;

struct QuadratureSpec {
    unsigned nodes = kDefaultQuadratureNodes;
    unsigned precision = kDefaultPrecisionDigits;
    unsigned p = 1;
    Rational R = 1;
    Rational s = 0;
    double tolerance = 1e-10;  // relative node-doubling agreement

    void validate() const {
        if (nodes < 2) throw InvalidArgument("quadrature needs at least 2 nodes");
        if (R <= 0) throw NonPositiveArgument("radius must be positive");
        if (s < 0 || s >= R) throw InvalidArgument("need 0 <= s < R (s strictly inside the ball)");
    }
};

struct QuadratureValue {
    Real value;
    Real error_estimate;  // |I(nodes) - I(2 nodes)|
    unsigned nodes = 0;
};

struct IdentityCheck {
    Real lhs;
    Real rhs;
    Real rel_error;
    Real quadrature_error;
    unsigned nodes = 0;

    double relative_error() const { return rel_error.convert_to<double>(); }
};

/// |S^{2p-1}| = 2 pi^p / (p-1)!
inline Real sphere_area_low(unsigned p) {
    if (p == 0) throw InvalidArgument("sphere S^{-1} has no area");
    return 2 * pow(pi(), static_cast<int>(p)) / to_real(factorial(p - 1));
}

/// Volume of the unit ball in R^{2p+1}: 2 p! (4 pi)^p / (2p+1)!.
inline Real unit_ball_volume(unsigned p) {
    return 2 * to_real(factorial(p)) * pow(4 * pi(), static_cast<int>(p)) / to_real(factorial(2 * p + 1));
}

/// n! omega_n, the normalisation making the ball integral tend to 1.
inline Real ball_normaliser(unsigned p) { return to_real(factorial(2 * p + 1)) * unit_ball_volume(p); }

namespace detail {

inline Real psi_at(unsigned j, const Real& w) {
    return exp(-w) * evaluate(chi(j), w) / pow(w, 2 * static_cast<int>(j));
}

inline void require_precision(const QuadratureValue& q, double tolerance, const std::string& what) {
    const Real scale = abs(q.value);
    if (q.error_estimate > tolerance * (scale > 0 ? scale : Real(1)))
        throw PrecisionNotReached(what + ": node doubling changed the value by " +
                                  q.error_estimate.str(6, std::ios_base::scientific));
}

/// Sphere integral of psi_j(|x - s|) at real radius r with `nodes` points.
inline Real sphere_integral_raw(unsigned p, unsigned j, const Real& r, const Real& s, unsigned nodes,
                                unsigned digits) {
    if (p == 0) return psi_at(j, abs(r - s)) + psi_at(j, r + s);
    const Real r2p = pow(r, 2 * static_cast<int>(p));
    if (s == 0) return (2 * p + 1) * unit_ball_volume(p) * r2p * psi_at(j, r);  // |S^{2p}| = n omega_n
    const Real r2s2 = r * r + s * s, two_rs = 2 * r * s;
    auto integrand = [&](const Real& t) {
        const Real w = sqrt(r2s2 - two_rs * cos(t));
        return psi_at(j, w) * pow(sin(t), 2 * static_cast<int>(p) - 1);
    };
    return sphere_area_low(p) * r2p * integrate(integrand, Real(0), pi(), nodes, digits);
}

} // namespace detail

/// sigma R^{2p} int_0^pi psi_j(w) sin^{2p-1} dt, with a node-doubling
/// error estimate. Raises PrecisionNotReached when the estimate exceeds the
/// requested tolerance.
inline QuadratureValue sphere_integral_quadrature(const QuadratureSpec& spec, unsigned j) {
    spec.validate();
    if (j > spec.p) throw InvalidArgument("need 0 <= j <= p");
    ScopedPrecision guard(spec.precision + 10);
    const Real R = to_real(spec.R), s = to_real(spec.s);
    QuadratureValue q;
    q.nodes = spec.nodes;
    q.value = detail::sphere_integral_raw(spec.p, j, R, s, spec.nodes, spec.precision);
    const Real fine = detail::sphere_integral_raw(spec.p, j, R, s, 2 * spec.nodes, spec.precision);
    q.error_estimate = abs(fine - q.value);
    detail::require_precision(q, spec.tolerance, "sphere integral");
    return q;
}

namespace detail {

inline IdentityCheck compare(const Real& lhs, const Real& rhs, const Real& qerr, unsigned nodes) {
    IdentityCheck c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.rel_error = abs(lhs - rhs) / abs(rhs);
    c.quadrature_error = qerr;
    c.nodes = nodes;
    return c;
}

/// sum_i C(m, i) f(i) tau_{i+offset}(s)
template <class F>
Real tau_sum(unsigned m, unsigned offset, const Real& s, unsigned digits, F&& f) {
    Real sum = 0;
    for (unsigned i = 0; i <= m; ++i) sum += to_real(binomial(m, i)) * f(i) * tau_eval(i + offset, s, digits);
    return sum;
}

/// (-1)^p e^{-R} / (2^p p!)
inline Real key_prefactor(unsigned p, const Real& R) {
    const Real sign = p % 2 == 0 ? 1 : -1;
    return sign * exp(-R) / (pow(Real(2), static_cast<int>(p)) * to_real(factorial(p)));
}

} // namespace detail

/// Right side of the key integral at exact R and s.
inline Real key_integral_rhs(unsigned p, const Rational& R, const Rational& s, unsigned digits) {
    ScopedPrecision guard(digits + 10);
    const Real sr = to_real(s);
    return detail::key_prefactor(p, to_real(R)) *
           detail::tau_sum(p, 0, sr, digits + 5, [&](unsigned i) { return to_real(chi(p + i).evaluate(R)); });
}

/// (1 / n! omega_n) int_{S_R} e^{-|x-s|} dx against the closed form.
inline IdentityCheck key_integral_check(const QuadratureSpec& spec) {
    const QuadratureValue q = sphere_integral_quadrature(spec, 0);
    ScopedPrecision guard(spec.precision + 10);
    const Real norm = ball_normaliser(spec.p);
    return detail::compare(q.value / norm, key_integral_rhs(spec.p, spec.R, spec.s, spec.precision),
                           q.error_estimate / norm, q.nodes);
}

/// Right side of the general key integral for psi_j:
/// (-2 pi)^p 2 e^{-R} sum_{i=0}^{p-j} C(p-j, i) chi_{i+p}(R) tau_{i+j}(s).
inline Real general_key_integral_rhs(unsigned p, unsigned j, const Rational& R, const Rational& s, unsigned digits) {
    if (j > p) throw InvalidArgument("need 0 <= j <= p");
    ScopedPrecision guard(digits + 10);
    const Real pre = pow(-2 * pi(), static_cast<int>(p)) * 2 * exp(-to_real(R));
    return pre * detail::tau_sum(p - j, j, to_real(s), digits + 5,
                                 [&](unsigned i) { return to_real(chi(i + p).evaluate(R)); });
}

inline IdentityCheck general_key_integral_check(const QuadratureSpec& spec, unsigned j) {
    const QuadratureValue q = sphere_integral_quadrature(spec, j);
    ScopedPrecision guard(spec.precision + 10);
    return detail::compare(q.value, general_key_integral_rhs(spec.p, j, spec.R, spec.s, spec.precision),
                           q.error_estimate, q.nodes);
}

// ---------------------------------------------------------------------------
// Ball integral

namespace detail {

inline constexpr unsigned kInnerNodes = 64;

/// Sphere integral of e^{-|x-s|} at radius r after substituting w = |x - s|:
///   sigma r^{2p} int_{|r-s|}^{r+s} e^{-w} (1 - c^2)^{p-1} w / (r s) dw,
///   c = (r^2 + s^2 - w^2) / (2 r s).
/// The integrand is polynomial times exponential, so few nodes suffice.
inline Real sphere_integral_radial(unsigned p, const Real& r, const Real& s, unsigned inner, unsigned digits) {
    if (p == 0) return exp(-abs(r - s)) + exp(-(r + s));
    const Real r2p = pow(r, 2 * static_cast<int>(p));
    if (s == 0) return (2 * p + 1) * unit_ball_volume(p) * r2p * exp(-r);
    const Real rs = r * s, r2s2 = r * r + s * s;
    auto integrand = [&](const Real& w) {
        const Real c = (r2s2 - w * w) / (2 * rs);
        return exp(-w) * pow(1 - c * c, static_cast<int>(p) - 1) * w / rs;
    };
    return sphere_area_low(p) * r2p * integrate(integrand, abs(r - s), r + s, inner, digits);
}

/// int_0^R of the radial sphere integral, split at r = s where it has a kink.
inline Real ball_integral_raw(unsigned p, const Real& R, const Real& s, unsigned outer, unsigned inner,
                              unsigned digits) {
    auto f = [&](const Real& r) { return sphere_integral_radial(p, r, s, inner, digits); };
    if (s == 0) return integrate(f, Real(0), R, outer, digits);
    return integrate(f, Real(0), s, outer, digits) + integrate(f, s, R, outer, digits);
}

} // namespace detail

inline Real ball_integral_rhs(unsigned p, const Rational& R, const Rational& s, unsigned digits) {
    ScopedPrecision guard(digits + 10);
    const Real sum = detail::tau_sum(p, 0, to_real(s), digits + 5, [&](unsigned i) {
        return to_real(chi(p + i + 1).evaluate(R) / R);
    });
    return 1 - detail::key_prefactor(p, to_real(R)) * sum;
}

/// (1 / n! omega_n) int_{B_R} e^{-|x-s|} dx against its closed form.
inline IdentityCheck ball_integral_check(const QuadratureSpec& spec) {
    spec.validate();
    ScopedPrecision guard(spec.precision + 10);
    const Real R = to_real(spec.R), s = to_real(spec.s);
    const Real norm = ball_normaliser(spec.p);
    const Real coarse = detail::ball_integral_raw(spec.p, R, s, spec.nodes, detail::kInnerNodes, spec.precision);
    const Real fine =
        detail::ball_integral_raw(spec.p, R, s, 2 * spec.nodes, 2 * detail::kInnerNodes, spec.precision);
    QuadratureValue q{coarse / norm, abs(fine - coarse) / norm, spec.nodes};
    detail::require_precision(q, spec.tolerance, "ball integral");
    return detail::compare(q.value, ball_integral_rhs(spec.p, spec.R, spec.s, spec.precision), q.error_estimate,
                           q.nodes);
}

// ---------------------------------------------------------------------------
// Normal derivatives

inline constexpr unsigned kMaxNormalDerivative = 2;

inline Real normal_derivative_rhs(unsigned p, unsigned j, const Rational& R, const Rational& s, unsigned digits) {
    ScopedPrecision guard(digits + 10);
    const Real sum = detail::tau_sum(p, 0, to_real(s), digits + 5, [&](unsigned i) {
        return to_real(delta_apply(LaurentPoly(chi(p + i)), p, j).evaluate(R));
    });
    return detail::key_prefactor(p, to_real(R)) * sum;
}

/// LHS = R^{2p} d^j/dR^j (R^{-2p} sphere integral / n! omega_n), the j-th
/// outward normal derivative integrated over S_R, by five-point central
/// differences of quadrature values.
inline IdentityCheck normal_derivative_check(const QuadratureSpec& spec, unsigned j, double step = 1e-3) {
    spec.validate();
    if (j > kMaxNormalDerivative) throw InvalidArgument("normal derivatives are checked for j <= 2 only");
    ScopedPrecision guard(spec.precision + 10);
    const Real R = to_real(spec.R), s = to_real(spec.s), h = Real(step);
    if (R - 2 * h <= s) throw InvalidArgument("finite-difference stencil leaves the region s < R");
    const Real norm = ball_normaliser(spec.p);
    const int two_p = 2 * static_cast<int>(spec.p);

    Real worst = 0;
    auto G = [&](const Real& r) {
        const Real coarse = detail::sphere_integral_raw(spec.p, 0, r, s, spec.nodes, spec.precision);
        const Real fine = detail::sphere_integral_raw(spec.p, 0, r, s, 2 * spec.nodes, spec.precision);
        const Real err = abs(fine - coarse) / abs(coarse);
        if (err > worst) worst = err;
        return coarse / (norm * pow(r, two_p));
    };
    Real d;
    if (j == 0) {
        d = G(R);
    } else {
        const Real fm2 = G(R - 2 * h), fm1 = G(R - h), fp1 = G(R + h), fp2 = G(R + 2 * h);
        if (j == 1) d = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
        else d = (-fp2 + 16 * fp1 - 30 * G(R) + 16 * fm1 - fm2) / (12 * h * h);
    }
    if (worst > spec.tolerance)
        throw PrecisionNotReached("sphere integral node doubling disagreement " + worst.str(6, std::ios_base::scientific));
    const Real lhs = pow(R, two_p) * d;
    return detail::compare(lhs, normal_derivative_rhs(spec.p, j, spec.R, spec.s, spec.precision), worst * abs(lhs),
                           spec.nodes);
}

} // namespace oddball

#endif // ODDBALL_ANALYTIC_INTEGRALS_HPP
