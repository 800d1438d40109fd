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

#ifndef ODDBALL_EXACTALG_LAURENT_POLY_HPP
#define ODDBALL_EXACTALG_LAURENT_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "oddball/exactalg/int_poly.hpp"

namespace oddball {

/// Integer Laurent polynomial  R^offset * body(R), where body has a nonzero
/// constant term (or the value is zero, in which case offset is 0).
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(const IntPoly& p) : LaurentPoly(0, p) {}  // NOLINT: implicit widening is intended

    LaurentPoly(long offset, IntPoly body) : offset_(offset), body_(std::move(body)) { normalize(); }

    /// coeff * R^power for any integer power.
    static LaurentPoly monomial(const BigInt& coeff, long power) {
        return LaurentPoly(power, IntPoly::constant(coeff));
    }

    bool is_zero() const { return body_.is_zero(); }

    /// Lowest exponent present (0 for the zero value).
    long min_exponent() const { return offset_; }

    /// Highest exponent present; minus infinity for zero.
    Degree max_exponent() const {
        return is_zero() ? Degree::minus_infinity() : Degree(offset_ + static_cast<long>(body_.size()) - 1);
    }

    /// Coefficient list ascending from R^min_exponent.
    const IntPoly& body() const { return body_; }

    BigInt coeff(long power) const {
        if (power < offset_) return 0;
        return body_.coeff(static_cast<std::size_t>(power - offset_));
    }

    bool is_polynomial() const { return offset_ >= 0; }

    /// Convert to IntPoly; throws NotDivisible when negative powers remain.
    IntPoly to_int_poly() const {
        if (offset_ < 0) throw NotDivisible("Laurent polynomial has negative powers of R");
        return body_.shifted_up(static_cast<std::size_t>(offset_));
    }

    LaurentPoly shifted(long k) const {
        if (is_zero()) return {};
        return LaurentPoly(offset_ + k, body_);
    }

    LaurentPoly derivative() const {
        if (is_zero()) return {};
        std::vector<BigInt> d(body_.size());
        for (std::size_t i = 0; i < body_.size(); ++i)
            d[i] = body_.coeffs()[i] * (offset_ + static_cast<long>(i));
        return LaurentPoly(offset_ - 1, IntPoly(std::move(d)));
    }

    Rational evaluate(const Rational& x) const {
        if (x == 0 && offset_ < 0) throw InvalidArgument("negative powers of R at R = 0");
        Rational v = body_.evaluate(x);
        Rational p = 1;
        Rational base = offset_ >= 0 ? x : Rational(1) / x;
        for (long k = 0; k < (offset_ >= 0 ? offset_ : -offset_); ++k) p *= base;
        return v * p;
    }

    LaurentPoly operator-() const { return LaurentPoly(offset_, -body_); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long lo = std::min(a.offset_, b.offset_);
        return LaurentPoly(lo, a.body_.shifted_up(static_cast<std::size_t>(a.offset_ - lo)) +
                                   b.body_.shifted_up(static_cast<std::size_t>(b.offset_ - lo)));
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return LaurentPoly(a.offset_ + b.offset_, a.body_ * b.body_);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const BigInt& s) { return LaurentPoly(a.offset_, a.body_ * s); }
    friend LaurentPoly operator*(const BigInt& s, const LaurentPoly& a) { return a * s; }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.offset_ == b.offset_ && a.body_ == b.body_;
    }

    std::string to_string(const std::string& var = "R") const {
        if (is_zero()) return "0";
        std::string out;
        for (long e = offset_ + static_cast<long>(body_.size()) - 1; e >= offset_; --e) {
            BigInt v = coeff(e);
            if (v == 0) continue;
            BigInt mag = abs(v);
            if (out.empty()) {
                if (v < 0) out += "-";
            } else {
                out += v < 0 ? " - " : " + ";
            }
            if (e == 0 || mag != 1) out += mag.get_str();
            if (e != 0) {
                if (mag != 1) out += "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    void normalize() {
        if (body_.is_zero()) {
            offset_ = 0;
            return;
        }
        const std::size_t v = body_.valuation();
        if (v > 0) {
            body_ = body_.shifted_down(v);
            offset_ += static_cast<long>(v);
        }
    }

    long offset_ = 0;
    IntPoly body_;
};

} // namespace oddball

#endif // ODDBALL_EXACTALG_LAURENT_POLY_HPP
