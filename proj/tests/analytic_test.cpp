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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "oddball/analytic.hpp"

using namespace oddball;

namespace {

QuadratureSpec make_spec(unsigned p, Rational R, Rational s) {
    QuadratureSpec spec;
    spec.p = p;
    spec.R = R;
    spec.s = s;
    spec.R.canonicalize();
    spec.s.canonicalize();
    return spec;
}

// int_{S^2_R} e^{-|x-s|} dx = (2 pi R / s) int_{|R-s|}^{R+s} t e^{-t} dt
double sphere3(double R, double s) {
    if (s == 0) return 4 * M_PI * R * R * std::exp(-R);
    const double a = std::fabs(R - s), b = R + s;
    return 2 * M_PI * R / s * ((a + 1) * std::exp(-a) - (b + 1) * std::exp(-b));
}

} // namespace

TEST(GaussLegendre, ExactForPolynomials) {
    ScopedPrecision guard(50);
    for (unsigned n : {1u, 2u, 5u, 12u}) {
        for (unsigned d = 0; d < 2 * n; ++d) {
            const Real v = integrate([&](const Real& x) { return pow(x, static_cast<int>(d)); }, Real(0), Real(1), n, 40);
            EXPECT_LT(abs(v - Real(1) / Real(d + 1)), Real("1e-38")) << "n=" << n << " d=" << d;
        }
    }
}

TEST(GaussLegendre, WeightsSumToTwoAndSymmetric) {
    ScopedPrecision guard(50);
    const auto rule = gauss_legendre(33, 40);
    Real total = 0;
    for (unsigned k = 0; k < 33; ++k) {
        total += rule->weights[k];
        EXPECT_EQ(rule->nodes[k], -rule->nodes[32 - k]);
    }
    EXPECT_LT(abs(total - 2), Real("1e-38"));
    EXPECT_EQ(gauss_legendre(33, 40).get(), rule.get());  // cached
    EXPECT_THROW(gauss_legendre(0, 40), InvalidArgument);
}

TEST(Geometry, BallAndSphereMeasures) {
    ScopedPrecision guard(40);
    for (unsigned p = 0; p <= 6; ++p) {
        const double n = 2.0 * p + 1;
        const double vol = std::pow(M_PI, n / 2) / std::tgamma(n / 2 + 1);
        EXPECT_NEAR(unit_ball_volume(p).convert_to<double>(), vol, 1e-13 * vol);
        if (p >= 1) {
            const double area = 2 * std::pow(M_PI, p) / std::tgamma(p);
            EXPECT_NEAR(sphere_area_low(p).convert_to<double>(), area, 1e-13 * area);
        }
    }
    EXPECT_THROW(sphere_area_low(0), InvalidArgument);
}

TEST(SphereIntegral, ThreeDimensionalClosedForm) {
    for (long R : {1, 2, 5})
        for (long q = 0; q < 4; ++q) {
            const auto spec = make_spec(1, Rational(R), Rational(R * q, 4));
            const double v = sphere_integral_quadrature(spec, 0).value.convert_to<double>();
            const double expected = sphere3(static_cast<double>(R), R * q / 4.0);
            EXPECT_NEAR(v, expected, 1e-13 * expected) << "R=" << R << " q=" << q;
        }
}

TEST(SphereIntegral, NodeDoublingAgrees) {
    for (unsigned p = 1; p <= 3; ++p) {
        const auto q = sphere_integral_quadrature(make_spec(p, 2, Rational(3, 2)), 0);
        EXPECT_LE(q.error_estimate, Real("1e-10") * abs(q.value));
    }
}

TEST(SphereIntegral, TooFewNodesDetected) {
    auto spec = make_spec(2, 5, Rational(15, 4));
    spec.nodes = 3;
    EXPECT_THROW(sphere_integral_quadrature(spec, 0), PrecisionNotReached);
}

TEST(KeyIntegral, SmallGrid) {
    for (unsigned p = 1; p <= 3; ++p)
        for (long R : {1, 5}) {
            const auto c = key_integral_check(make_spec(p, Rational(R), Rational(R, 2)));
            EXPECT_LE(c.relative_error(), 1e-8) << "p=" << p << " R=" << R;
        }
}

TEST(KeyIntegral, SinglePointValue) {
    const auto c = key_integral_check(make_spec(1, 2, 1));
    EXPECT_NEAR(c.rhs.convert_to<double>(), 0.268305, 1e-6);
    EXPECT_LE(c.relative_error(), 1e-30);
}

TEST(GeneralKeyIntegral, AllJ) {
    for (unsigned p = 1; p <= 3; ++p)
        for (unsigned j = 0; j <= p; ++j) {
            const auto c = general_key_integral_check(make_spec(p, 2, Rational(1, 3)), j);
            EXPECT_LE(c.relative_error(), 1e-8) << "p=" << p << " j=" << j;
        }
}

// At s = 0 and j = p only one term survives:
//   n omega_n e^{-R} chi_p(R) = (2 pi)^p 2 e^{-R} chi_p(R) / (2p-1)!!.
TEST(GeneralKeyIntegral, CentreClosedForm) {
    ScopedPrecision guard(50);
    for (unsigned p = 1; p <= 4; ++p) {
        const Rational R(3);
        Real dfact = 1;
        for (unsigned k = 1; k < 2 * p; k += 2) dfact *= k;
        const Real expected = pow(2 * pi(), static_cast<int>(p)) * 2 * exp(-to_real(R)) * to_real(chi(p).evaluate(R)) / dfact;
        const Real rhs = general_key_integral_rhs(p, p, R, 0, 40);
        EXPECT_LT(abs(rhs - expected), Real("1e-35") * abs(expected));
    }
}

TEST(BallIntegral, OneDimensionalClosedForm) {
    for (const auto& [R, s] : {std::pair<Rational, Rational>{1, 0}, {2, Rational(1, 2)}, {5, 4}}) {
        const auto c = ball_integral_check(make_spec(0, R, s));
        const double Rd = R.get_d(), sd = s.get_d();
        const double expected = 1 - (std::exp(-(Rd - sd)) + std::exp(-(Rd + sd))) / 2;
        EXPECT_NEAR(c.lhs.convert_to<double>(), expected, 1e-14);
        EXPECT_LE(c.relative_error(), 1e-30);
    }
}

TEST(BallIntegral, ThreeDimensionalAgainstIndependentQuadrature) {
    using boost::math::quadrature::gauss_kronrod;
    const double R = 2, s = 0.75;
    auto f = [&](double r) { return sphere3(r, s); };
    const double raw = gauss_kronrod<double, 61>::integrate(f, 0.0, s, 10, 1e-14) +
                       gauss_kronrod<double, 61>::integrate(f, s, R, 10, 1e-14);
    const double normalised = raw / (6 * 4 * M_PI / 3);
    const auto c = ball_integral_check(make_spec(1, 2, Rational(3, 4)));
    EXPECT_NEAR(c.lhs.convert_to<double>(), normalised, 1e-12);
    EXPECT_LE(c.relative_error(), 1e-6);
}

TEST(BallIntegral, HigherDimensions) {
    for (unsigned p = 2; p <= 3; ++p) {
        const auto c = ball_integral_check(make_spec(p, 3, 1));
        EXPECT_LE(c.relative_error(), 1e-6) << p;
    }
}

TEST(NormalDerivative, MatchesDeltaForm) {
    for (unsigned p = 1; p <= 2; ++p)
        for (unsigned j = 0; j <= 2; ++j) {
            const auto c = normal_derivative_check(make_spec(p, 2, 1), j);
            EXPECT_LE(c.relative_error(), 1e-4) << "p=" << p << " j=" << j;
        }
}

TEST(NormalDerivative, FirstDerivativeValue) {
    const auto c = normal_derivative_check(make_spec(1, 2, 1), 1);
    EXPECT_NEAR(c.rhs.convert_to<double>(), -0.243412, 1e-6);
}

TEST(Analytic, ArgumentValidation) {
    EXPECT_THROW(key_integral_check(make_spec(1, 2, 2)), InvalidArgument);
    EXPECT_THROW(key_integral_check(make_spec(1, 0, 0)), NonPositiveArgument);
    EXPECT_THROW(general_key_integral_check(make_spec(1, 2, 1), 2), InvalidArgument);
    EXPECT_THROW(normal_derivative_check(make_spec(1, 2, 1), 3), InvalidArgument);
    EXPECT_THROW(normal_derivative_check(make_spec(1, 2, Rational(1999, 1000)), 1), InvalidArgument);
}
