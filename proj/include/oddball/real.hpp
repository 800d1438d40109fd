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

#ifndef ODDBALL_REAL_HPP
#define ODDBALL_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>
#include <string>

#include "oddball/exactalg/int_poly.hpp"

namespace oddball {

/// Variable-precision binary float (MPFR). Precision is given in decimal digits.
/// Expression templates are off so `auto` and lambda returns never capture
/// references to temporaries.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Significant decimal digits used for numeric evaluation unless overridden.
inline constexpr unsigned kDefaultPrecisionDigits = 40;

/// Default precision, honouring the ODDBALL_PRECISION environment variable.
inline unsigned default_precision_digits() {
    if (const char* env = std::getenv("ODDBALL_PRECISION")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 10 && v <= 100000) return static_cast<unsigned>(v);
    }
    return kDefaultPrecisionDigits;
}

/// Sets the thread's default Real precision for the lifetime of the guard.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits) : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const BigInt& v) {
    Real r;
    mpfr_set_z(r.backend().data(), v.get_mpz_t(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

/// Horner evaluation of an integer polynomial at a real point.
inline Real evaluate(const IntPoly& p, const Real& x) {
    Real acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_real(*it);
    return acc;
}

inline Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

} // namespace oddball

#endif // ODDBALL_REAL_HPP
