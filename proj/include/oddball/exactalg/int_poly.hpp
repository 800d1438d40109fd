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

#ifndef ODDBALL_EXACTALG_INT_POLY_HPP
#define ODDBALL_EXACTALG_INT_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oddball/errors.hpp"

namespace oddball {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every finite degree and absorbs addition.
class Degree {
public:
    constexpr Degree() = default;
    constexpr explicit Degree(long value) : value_(value), finite_(true) {}

    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_minus_infinity() const { return !finite_; }

    /// Finite value; throws for minus infinity.
    long value() const {
        if (!finite_) throw InvalidArgument("degree of the zero polynomial is -infinity");
        return value_;
    }

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(Degree a, Degree b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator>(Degree a, Degree b) { return b < a; }
    friend constexpr bool operator<=(Degree a, Degree b) { return !(b < a); }
    friend constexpr bool operator>=(Degree a, Degree b) { return !(a < b); }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return minus_infinity();
        return Degree(a.value_ + b.value_);
    }

    friend std::ostream& operator<<(std::ostream& os, Degree d) {
        if (!d.finite_) return os << "-inf";
        return os << d.value_;
    }

private:
    long value_ = 0;
    bool finite_ = false;
};

/// Dense univariate polynomial in R over the integers. Coefficients are
/// stored ascending; the last stored coefficient is never zero.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }

    static IntPoly monomial(const BigInt& coeff, std::size_t power) {
        if (coeff == 0) return {};
        std::vector<BigInt> c(power + 1);
        c[power] = coeff;
        return IntPoly(std::move(c));
    }

    /// The indeterminate R.
    static IntPoly r() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }

    Degree degree() const {
        return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<long>(c_.size()) - 1);
    }

    /// Number of stored coefficients (degree + 1, or 0).
    std::size_t size() const { return c_.size(); }

    const std::vector<BigInt>& coeffs() const { return c_; }

    /// Coefficient of R^k; zero beyond the degree.
    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    const BigInt& leading() const {
        if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return k;
        return 0;
    }

    /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Multiply by R^k.
    IntPoly shifted_up(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<BigInt> c(k + c_.size());
        std::copy(c_.begin(), c_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
        return IntPoly(std::move(c));
    }

    /// Divide by R^k; throws NotDivisible when a low coefficient is nonzero.
    IntPoly shifted_down(std::size_t k) const {
        if (k == 0 || is_zero()) return *this;
        if (valuation() < k) throw NotDivisible("polynomial has no factor R^" + std::to_string(k));
        return IntPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
        return IntPoly(std::move(d));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation in any ring that can be built from a decimal string
    /// or an integer (used with the high-precision reals).
    template <class Real>
    Real evaluate_as(const Real& x) const {
        Real acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real(it->get_str());
        return acc;
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    IntPoly& operator*=(const BigInt& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const mpz_srcptr ai = a.c_[i].get_mpz_t();
            if (mpz_sgn(ai) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
        }
        return IntPoly(std::move(out));
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// a*b - c*d in one pass (the Bareiss update kernel).
    static IntPoly mul_sub(const IntPoly& a, const IntPoly& b, const IntPoly& c, const IntPoly& d) {
        std::size_t n = 0;
        if (!a.is_zero() && !b.is_zero()) n = a.c_.size() + b.c_.size() - 1;
        if (!c.is_zero() && !d.is_zero()) n = std::max(n, c.c_.size() + d.c_.size() - 1);
        std::vector<BigInt> out(n);
        if (!a.is_zero() && !b.is_zero())
            for (std::size_t i = 0; i < a.c_.size(); ++i)
                for (std::size_t j = 0; j < b.c_.size(); ++j)
                    mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        if (!c.is_zero() && !d.is_zero())
            for (std::size_t i = 0; i < c.c_.size(); ++i)
                for (std::size_t j = 0; j < d.c_.size(); ++j)
                    mpz_submul(out[i + j].get_mpz_t(), c.c_[i].get_mpz_t(), d.c_[j].get_mpz_t());
        return IntPoly(std::move(out));
    }

    std::string to_string(const std::string& var = "R") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const BigInt& v = c_[k];
            if (v == 0) continue;
            BigInt mag = abs(v);
            if (first) {
                if (v < 0) os << "-";
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            first = false;
            if (k == 0 || mag != 1) os << mag.get_str();
            if (k >= 1) {
                if (mag != 1) os << "*";
                os << var;
                if (k >= 2) os << "^" << k;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Divide every coefficient by `s`; throws NotDivisible when any is not a multiple.
inline IntPoly divexact(const IntPoly& a, const BigInt& s) {
    if (s == 0) throw InvalidArgument("division by zero scalar");
    std::vector<BigInt> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const BigInt& v = a.coeffs()[k];
        if (mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t()) == 0)
            throw NotDivisible("coefficient of R^" + std::to_string(k) + " is not divisible by " + s.get_str());
        mpz_divexact(out[k].get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    }
    return IntPoly(std::move(out));
}

/// Exact quotient q with a = q*b over the integers.
/// Throws NotDivisible when b does not divide a in Z[R].
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InvalidArgument("exact_div by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.size() < b.size()) throw NotDivisible("divisor degree exceeds dividend degree");
    if (b.size() == 1) return divexact(a, b.coeffs()[0]);

    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const mpz_srcptr lead = bc.back().get_mpz_t();
    std::vector<BigInt> q(r.size() - db);
    BigInt t;
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_ptr top = r[k + db].get_mpz_t();
        if (mpz_sgn(top) == 0) continue;
        if (mpz_divisible_p(top, lead) == 0)
            throw NotDivisible("leading coefficient does not divide at R^" + std::to_string(k));
        mpz_divexact(q[k].get_mpz_t(), top, lead);
        const mpz_srcptr qk = q[k].get_mpz_t();
        for (std::size_t j = 0; j < db; ++j) mpz_submul(r[k + j].get_mpz_t(), qk, bc[j].get_mpz_t());
        mpz_set_ui(top, 0);
    }
    for (std::size_t k = 0; k < db; ++k)
        if (r[k] != 0) throw NotDivisible("nonzero remainder in exact division");
    return IntPoly(std::move(q));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InvalidArgument("pseudo_remainder by zero");
    if (a.size() < b.size()) return a;
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const BigInt& lead = bc.back();
    // One multiplication by lc(b) per eliminated degree: da - db + 1 in total.
    for (std::size_t k = r.size(); k-- > db;) {
        BigInt top = r[k];
        for (std::size_t i = 0; i <= k; ++i) r[i] *= lead;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= top * bc[j];
    }
    r.resize(db);
    return IntPoly(std::move(r));
}

/// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return {};
    BigInt c = a.content();
    if (a.leading() < 0) c = -c;
    return divexact(a, c);
}

namespace detail {

/// Reduce a polynomial modulo a 62-bit prime.
inline std::vector<std::uint64_t> reduce_mod(const IntPoly& a, std::uint64_t p) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = mpz_fdiv_ui(a.coeffs()[k].get_mpz_t(), static_cast<unsigned long>(p));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

/// Degree of gcd(a, b) over F_p (inputs nonzero).
inline std::size_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    while (!b.empty()) {
        const std::uint64_t inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const std::uint64_t f = mulmod(a.back(), inv, p);
            const std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                const std::uint64_t s = mulmod(f, b[j], p);
                a[off + j] = a[off + j] >= s ? a[off + j] - s : a[off + j] + p - s;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.size() - 1;
}

} // namespace detail

/// Greatest common divisor in Z[R], normalized to a positive leading
/// coefficient. A coprimality certificate modulo a large prime short-cuts the
/// common case; otherwise a primitive pseudo-remainder sequence is used.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b) * b.content();
    if (b.is_zero()) return primitive_part(a) * a.content();

    const std::size_t v = std::min(a.valuation(), b.valuation());
    BigInt c;
    {
        BigInt ca = a.content(), cb = b.content();
        mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
    IntPoly x = primitive_part(a.shifted_down(a.valuation()));
    IntPoly y = primitive_part(b.shifted_down(b.valuation()));
    const IntPoly scale = IntPoly::monomial(c, v);
    if (x.size() == 1 || y.size() == 1) return scale;

    // A prime not dividing either leading coefficient whose modular gcd is
    // constant proves the integer gcd is constant.
    static constexpr std::uint64_t primes[] = {4611686018427387847ULL, 4611686018427387817ULL,
                                               4611686018427387787ULL};
    for (std::uint64_t p : primes) {
        if (mpz_fdiv_ui(x.leading().get_mpz_t(), p) == 0 || mpz_fdiv_ui(y.leading().get_mpz_t(), p) == 0)
            continue;
        if (detail::gcd_degree_mod(detail::reduce_mod(x, p), detail::reduce_mod(y, p), p) == 0) return scale;
        break;
    }

    if (x.size() < y.size()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x) * scale;
}

} // namespace oddball

#endif // ODDBALL_EXACTALG_INT_POLY_HPP
