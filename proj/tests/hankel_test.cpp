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

#include <gtest/gtest.h>

#include <vector>

#include "oddball/hankel.hpp"

using namespace oddball;

namespace {

// Determinant over Q by Gaussian elimination with row swaps, as an oracle
// for the polynomial route evaluated at a point.
Rational rational_det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

Rational hankel_value(unsigned start, unsigned p, const Rational& x) {
    std::vector<std::vector<Rational>> a(p + 1, std::vector<Rational>(p + 1));
    for (unsigned i = 0; i <= p; ++i)
        for (unsigned j = 0; j <= p; ++j) a[i][j] = chi(i + j + start).evaluate(x);
    return rational_det(a);
}

Rational power(const Rational& x, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace

TEST(Hankel, ClosedFormsThroughSeven) {
    const auto b1 = magnitude_hankel(0);
    EXPECT_EQ(b1.numerator, IntPoly({1, 1}));
    EXPECT_EQ(b1.denominator, IntPoly({1}));
    EXPECT_EQ(b1.magnitude, RationalFn(IntPoly({1, 1})));

    const auto b3 = magnitude_hankel(1);
    EXPECT_EQ(b3.numerator, IntPoly({6, 12, 6, 1}));
    EXPECT_EQ(b3.denominator, IntPoly({1}));

    const auto b5 = magnitude_hankel(2);
    EXPECT_EQ(b5.numerator, IntPoly({360, 1080, 1080, 525, 135, 18, 1}));
    EXPECT_EQ(b5.denominator, IntPoly({3, 1}));
    EXPECT_EQ(b5.magnitude, RationalFn(IntPoly({360, 1080, 1080, 525, 135, 18, 1}), IntPoly({360, 120})));

    const auto b7 = magnitude_hankel(3);
    EXPECT_EQ(b7.denominator, IntPoly({60, 48, 12, 1}));
    const auto& N = b7.numerator;
    ASSERT_EQ(N.degree().value(), 10);
    EXPECT_EQ(N.coeff(10), 1);
    EXPECT_EQ(N.coeff(9), 40);
    EXPECT_EQ(N.coeff(8), 720);
    EXPECT_EQ(N.coeff(2), 1814400);
    EXPECT_EQ(N.coeff(1), 1209600);
    EXPECT_EQ(N.coeff(0), 302400);
}

TEST(Hankel, KnownValues) {
    EXPECT_EQ(magnitude_hankel(1).magnitude.evaluate(Rational(1)), Rational(25, 6));
    EXPECT_EQ(magnitude_hankel(0).magnitude.evaluate(Rational(7, 2)), Rational(9, 2));
}

TEST(Hankel, MatchesRationalEliminationAtPoints) {
    for (unsigned p = 0; p <= 6; ++p)
        for (const Rational& x : {Rational(1), Rational(3, 2), Rational(7), Rational(2, 9)}) {
            const auto r = magnitude_hankel(p);
            const Rational sf(superfactorial(p));
            EXPECT_EQ(r.numerator.evaluate(x) * sf * power(x, p + 1), hankel_value(2, p, x)) << "p=" << p;
            EXPECT_EQ(r.denominator.evaluate(x) * sf * power(x, p), hankel_value(0, p, x)) << "p=" << p;
        }
}

TEST(Hankel, MatrixEntries) {
    const PolyMatrix m = hankel_matrix(2, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), LaurentPoly(chi(i + j + 2)));
    EXPECT_EQ(bareiss_det(m).to_int_poly(), hankel_det(2, 2));
}

TEST(Hankel, StructuralChecksThroughTwelve) {
    for (unsigned p = 0; p <= 12; ++p) {
        const auto checks = structural_checks(magnitude_hankel(p));
        for (const auto& [name, ok] : checks) EXPECT_TRUE(ok) << name << " p=" << p;
    }
}

TEST(Hankel, StructuralChecksCatchCorruption) {
    auto r = magnitude_hankel(3);
    r.numerator += IntPoly::monomial(1, 9);
    const auto checks = structural_checks(r);
    EXPECT_FALSE(checks.at("numerator_leading_terms"));
    EXPECT_FALSE(all_passed(checks));
}

TEST(Hankel, LeadingTermFormulas) {
    EXPECT_EQ(numerator_leading_terms(3), (std::vector<BigInt>{1, 40, 720}));
    EXPECT_EQ(denominator_leading_terms(3), (std::vector<BigInt>{1, 12, 48}));
    EXPECT_EQ(denominator_leading_terms(1)[1], 0);
}

TEST(Hankel, Degrees) {
    for (unsigned p = 0; p <= 8; ++p) {
        const auto r = magnitude_hankel(p);
        EXPECT_EQ(r.numerator.degree().value(), numerator_degree(p));
        EXPECT_EQ(r.denominator.degree().value(), denominator_degree(p));
        EXPECT_EQ(r.n, 2 * p + 1);
    }
}

TEST(Hankel, DimensionHelpers) {
    EXPECT_EQ(half_dimension(7), 3u);
    EXPECT_THROW(half_dimension(6), InvalidArgument);
}

TEST(Asymptotics, LeadingCoefficients) {
    const auto a = asymptotic_expansion(magnitude_hankel(2), 3);
    EXPECT_EQ(a, (std::vector<Rational>{Rational(1, 120), Rational(1, 8), Rational(3, 4)}));
    // Top coefficient 1/n!, next (p+1)/(2p)!.
    for (unsigned p = 0; p <= 8; ++p) {
        const auto r = magnitude_hankel(p);
        const auto c = asymptotic_expansion(r, 2 > r.n + 1 ? r.n + 1 : 2);
        EXPECT_EQ(c[0], Rational(1, factorial(r.n)));
        Rational second(BigInt(p + 1), factorial(2 * p));
        second.canonicalize();
        EXPECT_EQ(c[1], second) << "p=" << p;
    }
}

TEST(Asymptotics, TooManyTerms) {
    EXPECT_THROW(asymptotic_expansion(magnitude_hankel(1), 5), TooManyTerms);
    EXPECT_NO_THROW(asymptotic_expansion(magnitude_hankel(1), 4));
}

TEST(Asymptotics, MonicQuotient) {
    const IntPoly a = IntPoly({1, 2, 1}) * IntPoly({3, 1}) + IntPoly({5});
    EXPECT_EQ(monic_quotient(a, IntPoly({3, 1})), IntPoly({1, 2, 1}));
    EXPECT_THROW(monic_quotient(a, IntPoly({3, 2})), InvalidArgument);
}

TEST(LogConcavity, HoldsThroughTwelve) {
    for (unsigned p = 0; p <= 12; ++p) {
        const auto r = magnitude_hankel(p);
        EXPECT_TRUE(log_concavity_check(r.numerator)) << p;
        EXPECT_TRUE(log_concavity_check(r.denominator)) << p;
    }
    EXPECT_FALSE(log_concavity_check(IntPoly({1, 1, 5})));
    EXPECT_THROW(log_concavity_check(IntPoly({1, -1, 1})), NonPositiveCoefficient);
}

TEST(Roots, VietaAndSector) {
    for (unsigned p = 1; p <= 5; ++p) {
        const IntPoly& N = magnitude_hankel(p).numerator;
        const RootReport rep = roots_aberth(N);
        ASSERT_TRUE(rep.converged);
        ASSERT_EQ(rep.roots.size(), static_cast<std::size_t>(N.degree().value()));
        ScopedPrecision guard(80);
        Complex sum;
        for (const auto& z : rep.roots) sum = sum + z;
        // sum of roots = -a_{d-1} for monic f
        const Real expected = -to_real(N.coeff(N.size() - 2));
        EXPECT_LT(abs(sum.re - expected), Real("1e-50") * abs(expected));
        EXPECT_LT(abs(sum.im), Real("1e-50") * abs(expected));
        EXPECT_LT(rep.max_residual, Real("1e-20"));
        for (bool s : rep.in_sector) EXPECT_TRUE(s);
    }
}

TEST(Roots, KnownQuadratic) {
    // (R+1)(R+2)
    const RootReport rep = roots_aberth(IntPoly({2, 3, 1}), 128);
    std::vector<double> re;
    for (const auto& z : rep.roots) re.push_back(z.re.convert_to<double>());
    std::sort(re.begin(), re.end());
    EXPECT_NEAR(re[0], -2.0, 1e-30);
    EXPECT_NEAR(re[1], -1.0, 1e-30);
}

TEST(Roots, ZeroRootsSplitOff) {
    const RootReport rep = roots_aberth(IntPoly({0, 0, 1, 1}));
    int zeros = 0;
    for (const auto& z : rep.roots)
        if (z.re == 0 && z.im == 0) ++zeros;
    EXPECT_EQ(zeros, 2);
    EXPECT_THROW(roots_aberth(IntPoly({5})), InvalidArgument);
}
