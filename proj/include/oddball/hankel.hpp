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

#ifndef ODDBALL_HANKEL_HPP
#define ODDBALL_HANKEL_HPP

/*
 * Magnitude of the odd ball B^n_R, n = 2p+1, from Hankel determinants of
 * reverse Bessel polynomials:
 *
 *   |B^n_R| = det[chi_{i+j+2}] / (n! R det[chi_{i+j}]),  0 <= i,j <= p
 *           = N_p / (n! D_p)
 *
 * where det[chi_{i+j+2}] = sf(p) R^{p+1} N_p and det[chi_{i+j}] = sf(p) R^p D_p.
 */

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddball/bessel.hpp"
#include "oddball/exactalg.hpp"
#include "oddball/real.hpp"

namespace oddball {

enum class Method { hankel, cramer, schroeder };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::hankel: return "hankel";
        case Method::cramer: return "cramer";
        case Method::schroeder: return "schroeder";
    }
    return "unknown";
}

inline Method parse_method(const std::string& s) {
    if (s == "hankel") return Method::hankel;
    if (s == "cramer") return Method::cramer;
    if (s == "schroeder") return Method::schroeder;
    throw InvalidArgument("unknown method '" + s + "'");
}

struct MagnitudeResult {
    unsigned n = 1;
    unsigned p = 0;
    IntPoly numerator;
    IntPoly denominator;
    RationalFn magnitude;
    Method method = Method::hankel;
    std::map<std::string, bool> checks;
    std::vector<RationalFn> betas;  // filled by the weight-system route only
};

inline unsigned dimension_of(unsigned p) { return 2 * p + 1; }

inline unsigned half_dimension(unsigned n) {
    if (n % 2 == 0) throw InvalidArgument("dimension must be odd, got " + std::to_string(n));
    return (n - 1) / 2;
}

/// Degree (p+1)(p+2)/2 of N_p.
inline long numerator_degree(unsigned p) { return static_cast<long>(p + 1) * (p + 2) / 2; }

/// Degree p(p-1)/2 of D_p.
inline long denominator_degree(unsigned p) { return static_cast<long>(p) * (p > 0 ? p - 1 : 0) / 2; }

/// Assembles a result from N_p and D_p.
inline MagnitudeResult make_result(unsigned p, IntPoly num, IntPoly den, Method method) {
    MagnitudeResult r;
    r.p = p;
    r.n = dimension_of(p);
    r.magnitude = RationalFn(num, den * factorial(r.n));
    r.numerator = std::move(num);
    r.denominator = std::move(den);
    r.method = method;
    return r;
}

/// Square matrix with entry (i,j) = chi_{i+j+start}.
inline PolyMatrix hankel_matrix(unsigned start, std::size_t size) {
    PolyMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m(i, j) = chi(i + j + start);
    return m;
}

/// det[chi_{i+j+start}]_{0..p} as an ordinary polynomial.
inline IntPoly hankel_det(unsigned start, unsigned p) {
    std::vector<IntPoly> m;
    m.reserve(static_cast<std::size_t>(p + 1) * (p + 1));
    for (unsigned i = 0; i <= p; ++i)
        for (unsigned j = 0; j <= p; ++j) m.push_back(chi(i + j + start));
    return bareiss_det(std::move(m), p + 1);
}

/// Strips sf(p) R^shift from a determinant; NotDivisible if the factor is absent.
inline IntPoly strip_common_factor(const IntPoly& det, unsigned p, unsigned shift) {
    return divexact(det.shifted_down(shift), superfactorial(p));
}

inline MagnitudeResult magnitude_hankel(unsigned p) {
    IntPoly num = strip_common_factor(hankel_det(2, p), p, p + 1);
    IntPoly den = strip_common_factor(hankel_det(0, p), p, p);
    return make_result(p, std::move(num), std::move(den), Method::hankel);
}

/// Expected top three coefficients of N_p (index 0 is the leading one).
inline std::vector<BigInt> numerator_leading_terms(unsigned p) {
    const BigInt q = p;
    return {BigInt(1), (q + 1) * (q + 1) * (q + 2) / 2, q * (q + 1) * (q + 1) * (q + 1) * (q + 2) * (q + 3) / 8};
}

/// Expected top three coefficients of D_p, aligned to the exponent kappa-2p-1.
inline std::vector<BigInt> denominator_leading_terms(unsigned p) {
    const BigInt q = p;
    return {BigInt(1), (q - 1) * q * (q + 1) / 2, (q - 2) * (q - 1) * q * (q + 1) * (q + 1) * (q + 1) / 8};
}

namespace detail {

inline bool all_positive(const IntPoly& f) {
    if (f.is_zero()) return false;
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const BigInt& c) { return c > 0; });
}

/// Compares coefficients at top, top-1, top-2 with `expected`. A negative
/// exponent has no coefficient, so the expected value there must vanish.
inline bool leading_terms_match(const IntPoly& f, long top, const std::vector<BigInt>& expected) {
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const long e = top - static_cast<long>(k);
        const BigInt actual = e < 0 ? BigInt(0) : f.coeff(static_cast<std::size_t>(e));
        if (actual != expected[k]) return false;
    }
    return true;
}

} // namespace detail

inline std::map<std::string, bool> structural_checks(const MagnitudeResult& r) {
    const unsigned p = r.p;
    const long kappa = numerator_degree(p);
    const IntPoly& N = r.numerator;
    const IntPoly& D = r.denominator;
    std::map<std::string, bool> c;
    c["numerator_degree"] = N.degree() == Degree(kappa);
    c["denominator_degree"] = D.degree() == Degree(denominator_degree(p));
    c["numerator_monic"] = N.is_monic();
    c["denominator_monic"] = D.is_monic();
    c["numerator_positive"] = detail::all_positive(N);
    c["denominator_positive"] = detail::all_positive(D);
    c["constant_terms"] = N.coeff(0) == factorial(r.n) * D.coeff(0);
    c["numerator_leading_terms"] = detail::leading_terms_match(N, kappa, numerator_leading_terms(p));
    c["denominator_leading_terms"] =
        detail::leading_terms_match(D, kappa - 2 * static_cast<long>(p) - 1, denominator_leading_terms(p));
    return c;
}

inline bool all_passed(const std::map<std::string, bool>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

/// Quotient of a by a monic b (over Z since b is monic).
inline IntPoly monic_quotient(const IntPoly& a, const IntPoly& b) {
    if (!b.is_monic()) throw InvalidArgument("monic_quotient requires a monic divisor");
    if (a.size() < b.size()) return {};
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigInt> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = r[k + db];
        if (q[k] == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * bc[i];
    }
    return IntPoly(std::move(q));
}

/// Leading `terms` coefficients of the large-R expansion of N_p/(n! D_p),
/// ordered from R^n downwards.
inline std::vector<Rational> asymptotic_expansion(const MagnitudeResult& r, unsigned terms) {
    const long available = (r.numerator.degree().value() - r.denominator.degree().value()) + 1;
    if (terms < 1 || static_cast<long>(terms) > available)
        throw TooManyTerms("asymptotic expansion has " + std::to_string(available) + " polynomial terms");
    const IntPoly q = monic_quotient(r.numerator, r.denominator);
    const BigInt nf = factorial(r.n);
    std::vector<Rational> out;
    for (unsigned k = 0; k < terms; ++k) {
        Rational c(q.coeff(q.size() - 1 - k), nf);
        c.canonicalize();
        out.push_back(c);
    }
    return out;
}

/// a_i^2 >= a_{i-1} a_{i+1} at every interior index.
inline bool log_concavity_check(const IntPoly& f) {
    if (!detail::all_positive(f)) throw NonPositiveCoefficient("log-concavity needs positive coefficients");
    const auto& a = f.coeffs();
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich root finding

/// Minimal complex arithmetic over Real (no MPC in this toolchain).
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }

    Real abs() const { return hypot(re, im); }
};

enum class PolyId { numerator, denominator, other };

inline std::string to_string(PolyId id) {
    switch (id) {
        case PolyId::numerator: return "numerator";
        case PolyId::denominator: return "denominator";
        case PolyId::other: return "other";
    }
    return "other";
}

struct RootReport {
    PolyId poly_id = PolyId::other;
    unsigned p = 0;
    std::vector<Complex> roots;
    std::vector<Real> residuals;  // |f(z)| / sum |a_k| |z|^k per root
    Real max_residual = 0;
    std::vector<bool> in_sector;  // 3pi/4 < arg z < 5pi/4
    bool converged = false;
    unsigned iterations = 0;
};

inline constexpr unsigned kDefaultRootBits = 256;

/// Roots of f by simultaneous Aberth-Ehrlich iteration at `bits` of working
/// precision. Never throws on non-convergence; see roots_aberth.
inline RootReport roots_aberth_report(const IntPoly& f, unsigned bits = kDefaultRootBits,
                                      unsigned max_iterations = 5000) {
    if (f.is_zero() || f.degree().value() < 1) throw InvalidArgument("root finding needs degree >= 1");
    const unsigned digits = static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1;
    ScopedPrecision guard(digits);

    const std::size_t n = static_cast<std::size_t>(f.degree().value());
    std::vector<Real> a(n + 1), absa(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        a[k] = to_real(f.coeffs()[k]);
        absa[k] = abs(a[k]);
    }

    // Roots at zero are split off; the rest start on a circle whose radius is
    // the geometric mean of the remaining root moduli.
    const std::size_t zeros = f.valuation();
    const Real radius = pow(absa[zeros] / absa[n], Real(1) / Real(static_cast<long>(n - zeros)));
    const Real two_pi = 2 * pi();
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < zeros; ++k) z[k] = Complex();
    const std::size_t m = n - zeros;
    for (std::size_t k = 0; k < m; ++k) {
        const Real angle = two_pi * Real(static_cast<long>(k)) / Real(static_cast<long>(m)) + Real("0.4");
        z[zeros + k] = Complex(radius * cos(angle), radius * sin(angle));
    }

    auto horner = [&](const Complex& x, Complex& value, Complex& deriv) {
        value = Complex(a[n], Real(0));
        deriv = Complex();
        for (std::size_t k = n; k-- > 0;) {
            deriv = deriv * x + value;
            value = value * x + Complex(a[k], Real(0));
        }
    };

    // Stop at about 60% of the working bits; convergence is cubic from there.
    const Real tol = pow(Real(2), -static_cast<long>(bits * 3 / 5));
    RootReport rep;
    std::vector<bool> done(n, false);
    for (std::size_t k = 0; k < zeros; ++k) done[k] = true;
    for (unsigned it = 0; it < max_iterations; ++it) {
        bool all_done = true;
        for (std::size_t k = zeros; k < n; ++k) {
            if (done[k]) continue;
            Complex v, d;
            horner(z[k], v, d);
            if (v.re == 0 && v.im == 0) {
                done[k] = true;
                continue;
            }
            const Complex ratio = v / d;
            Complex sum;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum = sum + Complex(Real(1), Real(0)) / (z[k] - z[j]);
            const Complex w = ratio / (Complex(Real(1), Real(0)) - ratio * sum);
            z[k] = z[k] - w;
            if (w.abs() <= tol * z[k].abs()) done[k] = true;
            else all_done = false;
        }
        rep.iterations = it + 1;
        if (all_done) {
            rep.converged = true;
            break;
        }
    }

    rep.roots = z;
    rep.max_residual = 0;
    for (const Complex& x : z) {
        Complex v, d;
        horner(x, v, d);
        const Real r = x.abs();
        Real scale = 0, rk = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            scale += absa[k] * rk;
            rk *= r;
        }
        const Real res = v.abs() / scale;
        rep.residuals.push_back(res);
        if (res > rep.max_residual) rep.max_residual = res;
        rep.in_sector.push_back(x.re < 0 && abs(x.im) < -x.re);
    }
    return rep;
}

/// As roots_aberth_report, raising NoConvergence when the iteration stalls.
inline RootReport roots_aberth(const IntPoly& f, unsigned bits = kDefaultRootBits) {
    RootReport rep = roots_aberth_report(f, bits);
    if (!rep.converged)
        throw NoConvergence("Aberth iteration did not converge after " + std::to_string(rep.iterations) +
                            " sweeps");
    return rep;
}

} // namespace oddball

#endif // ODDBALL_HANKEL_HPP
