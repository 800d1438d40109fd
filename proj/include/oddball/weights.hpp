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

#ifndef ODDBALL_WEIGHTS_HPP
#define ODDBALL_WEIGHTS_HPP

/*
 * The weighting of B^n_R is determined by p+1 boundary functions beta_j(R).
 * They satisfy
 *
 *   sum_j delta^j chi_{p+i}(R) beta_j(R) = chi_{p+i+1}(R) / R,   0 <= i <= p
 *
 * and the magnitude is (R^n + n beta_0 R^{n-1}) / n!.  Appending that last
 * relation as an extra row gives a (p+2)x(p+2) system whose Cramer quotient is
 * the magnitude itself.
 */

#include <string>
#include <vector>

#include "oddball/bessel.hpp"
#include "oddball/exactalg.hpp"
#include "oddball/hankel.hpp"

namespace oddball {

struct WeightSystem {
    unsigned p = 1;
    PolyMatrix matrix;
    std::vector<LaurentPoly> rhs;
};

struct WeightSolution {
    unsigned p = 1;
    std::vector<RationalFn> betas;
    RationalFn magnitude;
    bool residual_zero = false;
};

inline WeightSystem build_system(unsigned p) {
    if (p < 1) throw InvalidArgument("the weight system needs p >= 1");
    WeightSystem sys;
    sys.p = p;
    sys.matrix = PolyMatrix(p + 1, p + 1);
    for (unsigned i = 0; i <= p; ++i) {
        LaurentPoly f = chi(p + i);
        for (unsigned j = 0; j <= p; ++j) {
            sys.matrix(i, j) = f;
            f = delta_apply(f, p, 1);
        }
        sys.rhs.push_back(LaurentPoly(chi(p + i + 1)).shifted(-1));
    }
    return sys;
}

/// (R^n + n beta_0 R^{n-1}) / n!
inline RationalFn magnitude_from_beta0(unsigned p, const RationalFn& beta0) {
    const unsigned n = dimension_of(p);
    const RationalFn lead(IntPoly::monomial(1, n));
    const RationalFn sub(IntPoly::monomial(BigInt(n), n - 1));
    return (lead + sub * beta0) / RationalFn(IntPoly::constant(factorial(n)));
}

/// Cramer solve. The residual matrix*beta - rhs is checked in cross-multiplied
/// form, sum_j M_ij det(M_j) - rhs_i det(M) = 0, which is exact in Z[R, 1/R].
inline WeightSolution solve_weights(const WeightSystem& sys) {
    const std::size_t m = sys.matrix.rows();
    const LaurentPoly det = bareiss_det(sys.matrix);
    if (det.is_zero()) throw SingularSystem("weight system determinant vanishes for p = " + std::to_string(sys.p));

    std::vector<LaurentPoly> minors;
    minors.reserve(m);
    for (std::size_t j = 0; j < m; ++j) minors.push_back(bareiss_det(sys.matrix.with_column(j, sys.rhs)));

    WeightSolution sol;
    sol.p = sys.p;
    sol.residual_zero = true;
    for (std::size_t i = 0; i < m; ++i) {
        LaurentPoly acc = -(sys.rhs[i] * det);
        for (std::size_t j = 0; j < m; ++j) acc += sys.matrix(i, j) * minors[j];
        if (!acc.is_zero()) sol.residual_zero = false;
    }
    if (!sol.residual_zero) throw SingularSystem("Cramer solution leaves a nonzero residual");

    for (const LaurentPoly& mj : minors) sol.betas.push_back(RationalFn::ratio(mj, det));
    sol.magnitude = magnitude_from_beta0(sys.p, sol.betas[0]);
    return sol;
}

/// Splits a normalized magnitude num/den into monic N, D with
/// magnitude = N / (n! D). Raises NotDivisible if that shape is impossible.
inline std::pair<IntPoly, IntPoly> split_magnitude(unsigned p, const RationalFn& mag) {
    const BigInt nf = factorial(dimension_of(p));
    const BigInt lead = mag.den().leading();
    IntPoly den = divexact(mag.den(), lead);
    BigInt scale = nf / lead;
    if (scale * lead != nf) throw NotDivisible("denominator leading coefficient does not divide n!");
    IntPoly num = mag.num() * scale;
    if (!num.is_monic() || !den.is_monic()) throw NotDivisible("magnitude does not split into monic N/(n! D)");
    return {std::move(num), std::move(den)};
}

/// Magnitude via the extended (p+2)x(p+2) system
///
///   N = det [ M   rhs ]     D = det [ M        0  ]
///           [ b   R^n ]             [ b        n! ]
///
/// with b = (-n R^{n-1}, 0, ..., 0). For p = 0 the system is empty and the
/// Hankel route is used.
inline MagnitudeResult magnitude_cramer(unsigned p, bool with_betas = false) {
    if (p == 0) {
        MagnitudeResult r = magnitude_hankel(0);
        r.method = Method::cramer;
        r.checks["delegated_to_hankel"] = true;
        return r;
    }
    const unsigned n = dimension_of(p);
    const WeightSystem sys = build_system(p);
    const std::size_t m = p + 2;

    PolyMatrix top(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) top(i, j) = sys.matrix(i, j);
        top(i, m - 1) = sys.rhs[i];
    }
    top(m - 1, 0) = LaurentPoly::monomial(-BigInt(n), n - 1);
    top(m - 1, m - 1) = LaurentPoly::monomial(1, n);

    std::vector<LaurentPoly> last(m);
    last[m - 1] = LaurentPoly::monomial(factorial(n), 0);
    const PolyMatrix bottom = top.with_column(m - 1, last);

    const LaurentPoly num = bareiss_det(top);
    const LaurentPoly den = bareiss_det(bottom);
    if (den.is_zero()) throw SingularSystem("extended system determinant vanishes for p = " + std::to_string(p));

    const RationalFn mag = RationalFn::ratio(num, den);
    auto [N, D] = split_magnitude(p, mag);
    MagnitudeResult r = make_result(p, std::move(N), std::move(D), Method::cramer);
    if (with_betas) {
        const WeightSolution sol = solve_weights(sys);
        r.betas = sol.betas;
        r.checks["weight_residual_zero"] = sol.residual_zero;
        r.checks["beta0_consistent"] = sol.magnitude == r.magnitude;
    }
    return r;
}

} // namespace oddball

#endif // ODDBALL_WEIGHTS_HPP
