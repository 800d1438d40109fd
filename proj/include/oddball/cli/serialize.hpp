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

#ifndef ODDBALL_CLI_SERIALIZE_HPP
#define ODDBALL_CLI_SERIALIZE_HPP

/*
 * JSON, CSV and two-column .dat encodings. Integer coefficients are always
 * decimal strings in ascending order next to an explicit degree, since they
 * outgrow every native JSON number type. See docs/formats.md.
 */

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "oddball/analytic.hpp"
#include "oddball/exactalg.hpp"
#include "oddball/hankel.hpp"
#include "oddball/schroeder.hpp"

namespace oddball {

using Json = nlohmann::ordered_json;

inline constexpr const char* kMagnitudeSchema = "oddball.magnitude/1";

// ---------------------------------------------------------------------------
// Scalars

/// Parses "7/2", "-3", "0.25" or "1e-3" style input as an exact rational.
inline Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty rational");
    auto digits_only = [](const std::string& s, std::size_t from) {
        if (from >= s.size()) return false;
        for (std::size_t i = from; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto signed_int = [&](const std::string& s) {
        return digits_only(s, (s[0] == '-' || s[0] == '+') ? 1 : 0);
    };

    if (const auto slash = t.find('/'); slash != std::string::npos) {
        const std::string a = t.substr(0, slash), b = t.substr(slash + 1);
        if (a.empty() || b.empty() || !signed_int(a) || !digits_only(b, 0)) throw ParseError("malformed rational '" + text + "'");
        const BigInt den(b);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational q(BigInt(a[0] == '+' ? a.substr(1) : a), den);
        q.canonicalize();
        return q;
    }

    long exponent = 0;
    std::string mant = t;
    if (const auto e = t.find_first_of("eE"); e != std::string::npos) {
        const std::string ex = t.substr(e + 1);
        if (ex.empty() || !signed_int(ex)) throw ParseError("malformed exponent in '" + text + "'");
        exponent = std::stol(ex);
        mant = t.substr(0, e);
    }
    bool negative = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        negative = mant[0] == '-';
        mant = mant.substr(1);
    }
    std::string whole = mant, frac;
    if (const auto dot = mant.find('.'); dot != std::string::npos) {
        whole = mant.substr(0, dot);
        frac = mant.substr(dot + 1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !digits_only(whole, 0)) ||
        (!frac.empty() && !digits_only(frac, 0)))
        throw ParseError("malformed number '" + text + "'");
    BigInt num(whole.empty() ? std::string("0") : whole);
    for (char c : frac) num = num * 10 + (c - '0');
    exponent -= static_cast<long>(frac.size());
    BigInt scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

/// Decimal rendering with `digits` significant digits.
inline std::string decimal_string(const Rational& q, unsigned digits) {
    ScopedPrecision guard(digits + 5);
    return to_real(q).str(static_cast<std::streamsize>(digits));
}

inline std::string decimal_string(const Real& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

// ---------------------------------------------------------------------------
// Polynomials and results

inline Json to_json(const IntPoly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"degree", f.is_zero() ? Json(nullptr) : Json(f.degree().value())}, {"coeffs", coeffs}};
}

inline IntPoly int_poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw ParseError("polynomial object needs a 'coeffs' array");
    std::vector<BigInt> c;
    for (const auto& s : j.at("coeffs")) {
        if (!s.is_string()) throw ParseError("coefficients must be decimal strings");
        BigInt v;
        if (v.set_str(s.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + s.get<std::string>() + "'");
        c.push_back(v);
    }
    IntPoly f(std::move(c));
    const Json& d = j.contains("degree") ? j.at("degree") : Json(nullptr);
    const bool ok = f.is_zero() ? d.is_null() : (d.is_number_integer() && d.get<long>() == f.degree().value());
    if (!ok || f.size() != j.at("coeffs").size()) throw ParseError("degree field disagrees with coefficients");
    return f;
}

inline Json to_json(const RationalFn& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline RationalFn rational_fn_from_json(const Json& j) {
    RationalFn f(int_poly_from_json(j.at("num")), int_poly_from_json(j.at("den")));
    return f;
}

inline Json to_json(const MagnitudeResult& r) {
    Json checks = Json::object();
    for (const auto& [k, v] : r.checks) checks[k] = v;
    Json j{{"schema", kMagnitudeSchema},
           {"n", r.n},
           {"p", r.p},
           {"method", to_string(r.method)},
           {"numerator", to_json(r.numerator)},
           {"denominator", to_json(r.denominator)},
           {"magnitude", to_json(r.magnitude)},
           {"checks", checks}};
    if (!r.betas.empty()) {
        Json betas = Json::array();
        for (const auto& b : r.betas) betas.push_back(to_json(b));
        j["betas"] = betas;
    }
    return j;
}

inline MagnitudeResult magnitude_result_from_json(const Json& j) {
    try {
        if (j.value("schema", std::string()) != kMagnitudeSchema) throw ParseError("unknown or missing schema tag");
        MagnitudeResult r;
        r.n = j.at("n").get<unsigned>();
        r.p = j.at("p").get<unsigned>();
        if (r.n != dimension_of(r.p)) throw ParseError("n and p disagree");
        r.method = parse_method(j.at("method").get<std::string>());
        r.numerator = int_poly_from_json(j.at("numerator"));
        r.denominator = int_poly_from_json(j.at("denominator"));
        r.magnitude = rational_fn_from_json(j.at("magnitude"));
        for (const auto& [k, v] : j.at("checks").items()) r.checks[k] = v.get<bool>();
        if (j.contains("betas"))
            for (const auto& b : j.at("betas")) r.betas.push_back(rational_fn_from_json(b));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed magnitude JSON: ") + e.what());
    }
}

inline bool operator==(const MagnitudeResult& a, const MagnitudeResult& b) {
    return a.n == b.n && a.p == b.p && a.method == b.method && a.numerator == b.numerator &&
           a.denominator == b.denominator && a.magnitude == b.magnitude && a.checks == b.checks &&
           a.betas == b.betas;
}

// ---------------------------------------------------------------------------
// Tables and plot data

/// Header plus one N row and one D row per result:
/// p,n,side,degree,c0,c1,...  (ascending, padded with empty cells).
inline void write_csv(std::ostream& os, const std::vector<MagnitudeResult>& results) {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max({width, r.numerator.size(), r.denominator.size()});
    os << "p,n,side,degree";
    for (std::size_t k = 0; k < width; ++k) os << ",c" << k;
    os << '\n';
    for (const auto& r : results) {
        for (const auto& [side, poly] : {std::pair<const char*, const IntPoly*>{"N", &r.numerator},
                                         std::pair<const char*, const IntPoly*>{"D", &r.denominator}}) {
            os << r.p << ',' << r.n << ',' << side << ',' << poly->degree().value();
            for (std::size_t k = 0; k < width; ++k) {
                os << ',';
                if (k < poly->size()) os << poly->coeffs()[k].get_str();
            }
            os << '\n';
        }
    }
}

/// log10 of a positive integer, accurate beyond double range.
inline double log10_big(const BigInt& v) {
    if (v <= 0) throw NonPositiveCoefficient("log10 of a non-positive coefficient");
    long e = 0;
    const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log10(m) + static_cast<double>(e) * std::log10(2.0);
}

inline std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

/// Two columns: coefficient index, log10(coefficient).
inline void write_coefficient_dat(std::ostream& os, const IntPoly& f) {
    for (std::size_t k = 0; k < f.size(); ++k) os << k << ' ' << fixed(log10_big(f.coeffs()[k]), 10) << '\n';
}

/// Two columns: real part, imaginary part.
inline void write_roots_dat(std::ostream& os, const RootReport& rep) {
    for (const auto& z : rep.roots)
        os << z.re.str(20, std::ios_base::scientific) << ' ' << z.im.str(20, std::ios_base::scientific) << '\n';
}

inline Json to_json(const RootReport& rep) {
    Json roots = Json::array();
    for (std::size_t k = 0; k < rep.roots.size(); ++k)
        roots.push_back(Json{{"re", rep.roots[k].re.str(25, std::ios_base::scientific)},
                             {"im", rep.roots[k].im.str(25, std::ios_base::scientific)},
                             {"residual", rep.residuals[k].str(6, std::ios_base::scientific)},
                             {"in_sector", static_cast<bool>(rep.in_sector[k])}});
    return Json{{"poly_id", to_string(rep.poly_id)},
                {"p", rep.p},
                {"converged", rep.converged},
                {"iterations", rep.iterations},
                {"max_residual", rep.max_residual.str(6, std::ios_base::scientific)},
                {"roots", roots}};
}

inline Json to_json(const SchroederCollection& c) {
    Json paths = Json::array();
    for (const auto& path : c.paths) paths.push_back(path.word);
    return Json{{"k", c.k}, {"paths", paths}};
}

/// One JSON object per line, paths as U/D/F words.
inline void dump_collections_jsonl(std::ostream& os, int k, int k_max = kDefaultMaxCollectionSize) {
    enumerate_collections(k, [&](const SchroederCollection& c) { os << to_json(c).dump() << '\n'; }, k_max);
}

inline Json to_json(const IdentityCheck& c, unsigned digits) {
    return Json{{"lhs", decimal_string(c.lhs, digits)},
                {"rhs", decimal_string(c.rhs, digits)},
                {"rel_error", decimal_string(c.rel_error, 6)},
                {"quadrature_error", decimal_string(c.quadrature_error, 6)},
                {"nodes", c.nodes}};
}

inline Json to_json(const CloudMagnitude& m) {
    return Json{{"cloud", m.cloud_id},
                {"points", m.points},
                {"value", m.value},
                {"residual", m.residual},
                {"ill_conditioned", m.ill_conditioned},
                {"refinement_steps", m.refinement_steps}};
}

} // namespace oddball

#endif // ODDBALL_CLI_SERIALIZE_HPP
