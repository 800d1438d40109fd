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

#include <random>
#include <thread>
#include <vector>

#include "oddball/bessel.hpp"

using namespace oddball;

namespace {

// Closed form of the classical reverse Bessel polynomial
//   theta_m(x) = sum_k (m+k)! / ((m-k)! k! 2^k) x^{m-k};
// the sequence here is chi_0 = 1 and chi_i = R theta_{i-1}(R).
IntPoly chi_oracle(unsigned i) {
    if (i == 0) return IntPoly{1};
    const unsigned m = i - 1;
    std::vector<BigInt> c(m + 2);
    for (unsigned k = 0; k <= m; ++k) {
        BigInt num = factorial(m + k), den = factorial(m - k) * factorial(k);
        den <<= k;
        c[m - k + 1] = num / den;
    }
    return IntPoly(std::move(c));
}

} // namespace

TEST(Combinatorics, SmallValues) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(superfactorial(0), 1);
    EXPECT_EQ(superfactorial(3), 12);
    EXPECT_EQ(superfactorial(4), 288);
}

TEST(ReverseBessel, FirstFew) {
    EXPECT_EQ(chi(0), IntPoly({1}));
    EXPECT_EQ(chi(1), IntPoly({0, 1}));
    EXPECT_EQ(chi(2), IntPoly({0, 1, 1}));
    EXPECT_EQ(chi(3), IntPoly({0, 3, 3, 1}));
    EXPECT_EQ(chi(4), IntPoly({0, 15, 15, 6, 1}));
}

TEST(ReverseBessel, MatchesClosedForm) {
    for (unsigned i = 0; i <= 40; ++i) EXPECT_EQ(chi(i), chi_oracle(i)) << "i=" << i;
}

TEST(ReverseBessel, MonicPositiveDegreeI) {
    for (unsigned i = 0; i <= 30; ++i) {
        EXPECT_EQ(chi(i).degree().value(), static_cast<long>(i));
        EXPECT_TRUE(chi(i).is_monic());
        for (std::size_t k = i == 0 ? 0 : 1; k <= i; ++k) EXPECT_GT(chi(i).coeff(k), 0);
    }
}

// psi_{i+1} = -psi_i' / r with psi_i = e^{-r} r^{-2i} chi_i gives
// chi_{i+1} = R chi_i + 2i chi_i - R chi_i'.
TEST(ReverseBessel, DerivativeRecurrence) {
    for (unsigned i = 0; i <= 25; ++i) {
        const IntPoly& c = chi(i);
        const IntPoly rhs = c.shifted_up(1) + c * BigInt(2 * i) - c.derivative().shifted_up(1);
        EXPECT_EQ(chi(i + 1), rhs) << "i=" << i;
    }
}

TEST(ReverseBessel, ConcurrentAccessAgrees) {
    std::vector<IntPoly> seen(8);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < 8; ++t) threads.emplace_back([t, &seen] { seen[t] = chi(60 + t % 2); });
    for (auto& th : threads) th.join();
    for (unsigned t = 0; t < 8; ++t) EXPECT_EQ(seen[t], chi_oracle(60 + t % 2));
}

TEST(AntiderivativeIdentity, HoldsThrough20) {
    for (unsigned i = 0; i <= 20; ++i) EXPECT_TRUE(antiderivative_identity_check(i)) << "i=" << i;
}

TEST(ThreeTerm, ExactThrough10) {
    for (unsigned i = 1; i <= 10; ++i) EXPECT_TRUE(three_term_check(i, 20)) << "i=" << i;
    EXPECT_THROW(three_term_check(0, 5), InvalidArgument);
}

TEST(ThreeTerm, NumericTo1e30) {
    const unsigned digits = 45;
    ScopedPrecision guard(digits + 10);
    for (unsigned i = 1; i <= 10; ++i)
        for (const char* sv : {"0", "0.3", "1.5", "4", "9.25"}) {
            const Real s(sv);
            const Real lhs = s * s * tau_eval(i + 1, s, digits);
            const Real rhs = tau_eval(i - 1, s, digits) + (2 * i - 1) * tau_eval(i, s, digits);
            EXPECT_LT(abs(lhs - rhs), Real("1e-30")) << "i=" << i << " s=" << sv;
        }
}

TEST(Tau, ElementaryClosedForms) {
    ScopedPrecision guard(50);
    for (const char* sv : {"0.5", "1", "3.75", "12"}) {
        const Real s(sv);
        const Real c = cosh(s), sh = sinh(s);
        EXPECT_LT(abs(tau_eval(0, s, 40) - c), Real("1e-38") * c);
        EXPECT_LT(abs(tau_eval(1, s, 40) + sh / s), Real("1e-38") * c);
        EXPECT_LT(abs(tau_eval(2, s, 40) - (s * c - sh) / (s * s * s)), Real("1e-38") * c);
    }
}

TEST(Tau, CoefficientsAreTaylorOfCosh) {
    for (unsigned k = 0; k < 10; ++k) EXPECT_EQ(tau_coefficient(0, k), Rational(1, factorial(2 * k)));
    // tau_1 = -sinh(s)/s
    for (unsigned k = 0; k < 10; ++k) EXPECT_EQ(tau_coefficient(1, k), Rational(-1, factorial(2 * k + 1)));
}

TEST(Tau, RejectsHugeArguments) {
    EXPECT_THROW(tau_eval(1, Real(60), 30), ArgumentTooLarge);
    EXPECT_NO_THROW(tau_eval(1, Real(60), 30, 100.0));
}

TEST(Psi, MatchesDefinition) {
    ScopedPrecision guard(50);
    const Real r(2);
    EXPECT_LT(abs(psi_eval(0, r, 40) - exp(-r)), Real("1e-40"));
    // psi_1 = e^{-r}(1 + r)/r^2 ... chi_1 = R, so psi_1 = e^{-r}/r
    EXPECT_LT(abs(psi_eval(1, r, 40) - exp(-r) / r), Real("1e-40"));
    EXPECT_THROW(psi_eval(1, Real(0), 30), NonPositiveArgument);
}

TEST(Delta, ActsOnMonomials) {
    // delta f = f' - f - 2p f / R
    for (unsigned p = 0; p <= 4; ++p)
        for (long k = -3; k <= 5; ++k) {
            const LaurentPoly m = LaurentPoly::monomial(1, k);
            const LaurentPoly expected =
                LaurentPoly::monomial(k, k - 1) - m - LaurentPoly::monomial(2 * static_cast<long>(p), k - 1);
            EXPECT_EQ(delta_apply(m, p, 1), expected);
        }
}

TEST(Delta, LinearAndIterated) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a(coef(rng) % 4, IntPoly({coef(rng), coef(rng), coef(rng)}));
        const LaurentPoly b(coef(rng) % 4, IntPoly({coef(rng), coef(rng)}));
        const unsigned p = static_cast<unsigned>(trial % 4);
        EXPECT_EQ(delta_apply(a + b, p, 2), delta_apply(a, p, 2) + delta_apply(b, p, 2));
        EXPECT_EQ(delta_apply(delta_apply(a, p, 1), p, 2), delta_apply(a, p, 3));
        EXPECT_EQ(delta_apply(a, p, 0), a);
    }
}

// delta is e^R R^{2p} d/dR (e^{-R} R^{-2p} .); checked numerically by a
// central difference at a rational point.
TEST(Delta, ConjugatedDerivativeNumerically) {
    ScopedPrecision guard(60);
    const unsigned p = 2;
    const LaurentPoly f = LaurentPoly(0, chi(4));
    const Real x("1.75"), h("1e-12");
    auto g = [&](const Real& t) { return exp(-t) * pow(t, -2 * static_cast<int>(p)) * evaluate(chi(4), t); };
    const Real numeric = exp(x) * pow(x, 2 * static_cast<int>(p)) * (g(x + h) - g(x - h)) / (2 * h);
    const Rational xq(7, 4);
    const Real exact = to_real(delta_apply(f, p, 1).evaluate(xq));
    EXPECT_LT(abs(numeric - exact), Real("1e-15"));
}
