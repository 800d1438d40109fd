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

#ifndef ODDBALL_EXACTALG_RATIONAL_FN_HPP
#define ODDBALL_EXACTALG_RATIONAL_FN_HPP

#include <string>
#include <utility>

#include "oddball/exactalg/int_poly.hpp"
#include "oddball/exactalg/laurent_poly.hpp"

namespace oddball {

/// Quotient num/den of integer polynomials in canonical form:
///  - gcd(num, den) is constant over Q,
///  - den has a positive leading coefficient,
///  - the integer contents of num and den are coprime.
/// With this form, equal rational functions have identical representations.
class RationalFn {
public:
    RationalFn() : den_(IntPoly{1}) {}

    RationalFn(const IntPoly& p) : num_(p), den_(IntPoly{1}) {}  // NOLINT

    RationalFn(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// a / b for Laurent polynomials; powers of R are moved across.
    static RationalFn ratio(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw InvalidArgument("rational function with zero denominator");
        if (a.is_zero()) return {};
        const long shift = a.min_exponent() - b.min_exponent();
        IntPoly n = a.body(), d = b.body();
        if (shift >= 0)
            n = n.shifted_up(static_cast<std::size_t>(shift));
        else
            d = d.shifted_up(static_cast<std::size_t>(-shift));
        return RationalFn(std::move(n), std::move(d));
    }

    static RationalFn from_laurent(const LaurentPoly& a) { return ratio(a, LaurentPoly(IntPoly{1})); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    Rational evaluate(const Rational& x) const {
        const Rational d = den_.evaluate(x);
        if (d == 0) throw InvalidArgument("rational function has a pole at " + x.get_str());
        return num_.evaluate(x) / d;
    }

    /// Cross-multiplication test, independent of normalization.
    static bool equivalent(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw InvalidArgument("division by the zero rational function");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (den_ == IntPoly{1}) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.to_string(); }

private:
    void normalize() {
        if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = IntPoly{1};
            return;
        }
        IntPoly g = primitive_part(gcd(num_, den_));
        if (g.size() > 1) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        BigInt c;
        {
            BigInt cn = num_.content(), cd = den_.content();
            mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        }
        if (den_.leading() < 0) c = -c;
        if (c != 1) {
            num_ = divexact(num_, c);
            den_ = divexact(den_, c);
        }
    }

    IntPoly num_;
    IntPoly den_;
};

} // namespace oddball

#endif // ODDBALL_EXACTALG_RATIONAL_FN_HPP
