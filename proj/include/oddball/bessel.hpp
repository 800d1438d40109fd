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

#ifndef ODDBALL_BESSEL_HPP
#define ODDBALL_BESSEL_HPP

/*
 * Reverse Bessel polynomials chi_i(R) and the two function families attached
 * to them:
 *
 *   chi_0 = 1, chi_1 = R, chi_{i+2} = R^2 chi_i + (2i+1) chi_{i+1}
 *   psi_0(r) = e^{-r},  tau_0(s) = cosh(s),  xi_{i+1} = -xi_i' / r
 *   chi_i(r) = e^r r^{2i} psi_i(r)
 *
 * plus the conjugated derivative used for normal derivatives on the sphere,
 *
 *   delta f = e^R R^{2p} d/dR (e^{-R} R^{-2p} f) = f' - f - 2p f / R.
 */

#include <cmath>
#include <cstddef>
#include <deque>
#include <mutex>
#include <vector>

#include "oddball/exactalg.hpp"
#include "oddball/real.hpp"

namespace oddball {

inline BigInt factorial(unsigned long k) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// sf(k) = 0! 1! ... k!
inline BigInt superfactorial(unsigned long k) {
    BigInt r = 1, f = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        f *= i;
        r *= f;
    }
    return r;
}

/// Memoized reverse Bessel polynomials. Entries are appended under a lock and
/// never modified afterwards; deque storage keeps references stable.
class ReverseBesselTable {
public:
    const IntPoly& chi(std::size_t i) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (polys_.empty()) {
            polys_.push_back(IntPoly{1});
            polys_.push_back(IntPoly::r());
        }
        const IntPoly r2 = IntPoly::monomial(1, 2);
        while (polys_.size() <= i) {
            const std::size_t k = polys_.size() - 2;  // building chi_{k+2}
            polys_.push_back(r2 * polys_[k] + polys_[k + 1] * BigInt(2 * k + 1));
        }
        return polys_[i];
    }

    std::size_t max_index() {
        std::lock_guard<std::mutex> lock(mutex_);
        return polys_.empty() ? 0 : polys_.size() - 1;
    }

private:
    std::mutex mutex_;
    std::deque<IntPoly> polys_;
};

inline ReverseBesselTable& chi_table() {
    static ReverseBesselTable table;
    return table;
}

/// The i-th reverse Bessel polynomial.
inline const IntPoly& chi(std::size_t i) { return chi_table().chi(i); }

/// Applies delta (for dimension parameter p) j times.
inline LaurentPoly delta_apply(const LaurentPoly& f, unsigned p, unsigned j) {
    LaurentPoly g = f;
    const BigInt two_p = 2 * static_cast<unsigned long>(p);
    for (unsigned step = 0; step < j; ++step) g = g.derivative() - g - g.shifted(-1) * two_p;
    return g;
}

/// Even-power Taylor coefficients of tau_i: coeffs[k] multiplies s^{2k}.
struct TauSeries {
    unsigned index = 0;
    std::vector<Rational> coeffs;

    std::size_t order() const { return coeffs.size(); }
};

/// Coefficient of s^{2k} in tau_i:  (-1)^i / ((2k)! (2k+1)(2k+3)...(2k+2i-1)).
inline Rational tau_coefficient(unsigned i, unsigned k) {
    BigInt den = factorial(2UL * k);
    for (unsigned m = 0; m < i; ++m) den *= 2UL * k + 2UL * m + 1;
    Rational c(BigInt(i % 2 == 0 ? 1 : -1), den);
    c.canonicalize();
    return c;
}

inline TauSeries tau_taylor(unsigned i, unsigned order) {
    if (order < 1) throw InvalidArgument("tau_taylor order must be at least 1");
    TauSeries t{i, {}};
    t.coeffs.reserve(order);
    for (unsigned k = 0; k < order; ++k) t.coeffs.push_back(tau_coefficient(i, k));
    return t;
}

/// Largest |s| accepted by tau_eval unless the caller raises it.
inline constexpr double kTauMaxArgument = 50.0;

/// tau_i(s) to absolute error 10^-digits by Taylor summation. All terms share
/// the sign (-1)^i, and the term ratio s^2/((2k+2)(2k+2i+1)) decreases in k,
/// so the tail after term k is bounded by t_{k+1} / (1 - r_{k+1}).
inline Real tau_eval(unsigned i, const Real& s, unsigned digits, double s_max = kTauMaxArgument) {
    using std::abs;
    if (abs(s) > s_max) throw ArgumentTooLarge("|s| exceeds the tau evaluation bound " + std::to_string(s_max));
    const double s_approx = std::fabs(s.convert_to<double>());
    ScopedPrecision guard(digits + 12 + static_cast<unsigned>(std::ceil(s_approx * 0.4343)));

    const Real s2 = s * s;
    Real term = to_real(tau_coefficient(i, 0));
    Real sum = term;
    const Real tol = pow(Real(10), -static_cast<int>(digits) - 2);
    for (unsigned long k = 0;; ++k) {
        const Real ratio = s2 / (Real(2 * k + 2) * Real(2 * k + 2 * i + 1));
        term *= ratio;
        const Real next_ratio = s2 / (Real(2 * k + 4) * Real(2 * k + 2 * i + 3));
        sum += term;
        if (next_ratio < 1 && abs(term) * next_ratio / (1 - next_ratio) < tol) break;
        if (term == 0) break;
    }
    return sum;
}

/// psi_i(r) = e^{-r} r^{-2i} chi_i(r).
inline Real psi_eval(unsigned i, const Real& r, unsigned digits) {
    if (r <= 0) throw NonPositiveArgument("psi_i requires r > 0");
    ScopedPrecision guard(digits + 10);
    return exp(-r) * evaluate(chi(i), r) / pow(r, 2 * static_cast<int>(i));
}

/// Exact form of  d/dr(-e^{-r} chi_{i+1}(r) / r) = e^{-r} chi_i(r):
///   r^2 chi_i = r chi_{i+1} - r chi_{i+1}' + chi_{i+1}.
inline bool antiderivative_identity_check(unsigned i) {
    const IntPoly& next = chi(i + 1);
    const IntPoly lhs = chi(i).shifted_up(2);
    const IntPoly rhs = next.shifted_up(1) - next.derivative().shifted_up(1) + next;
    return lhs == rhs;
}

/// s^2 tau_{i+1} = tau_{i-1} + (2i-1) tau_i through `order` coefficients, and
/// chi_{i+1} = R^2 chi_{i-1} + (2i-1) chi_i exactly.
inline bool three_term_check(unsigned i, unsigned order) {
    if (i < 1) throw InvalidArgument("three_term_check requires i >= 1");
    const TauSeries lower = tau_taylor(i - 1, order);
    const TauSeries mid = tau_taylor(i, order);
    const TauSeries upper = tau_taylor(i + 1, order);
    const Rational odd(2 * static_cast<long>(i) - 1);
    for (unsigned k = 0; k < order; ++k) {
        const Rational lhs = k == 0 ? Rational(0) : upper.coeffs[k - 1];
        if (lhs != lower.coeffs[k] + odd * mid.coeffs[k]) return false;
    }
    const IntPoly rhs = chi(i - 1).shifted_up(2) + chi(i) * BigInt(2 * static_cast<long>(i) - 1);
    return chi(i + 1) == rhs;
}

} // namespace oddball

#endif // ODDBALL_BESSEL_HPP
