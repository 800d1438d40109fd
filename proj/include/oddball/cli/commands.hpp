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

#ifndef ODDBALL_CLI_COMMANDS_HPP
#define ODDBALL_CLI_COMMANDS_HPP

/*
 * The four subcommands as plain functions over a RunConfig. Each writes its
 * report to `out` and returns an exit code; module errors propagate as
 * exceptions and are mapped by run_command.
 */

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oddball/analytic.hpp"
#include "oddball/bessel.hpp"
#include "oddball/cli/serialize.hpp"
#include "oddball/hankel.hpp"
#include "oddball/schroeder.hpp"
#include "oddball/weights.hpp"

namespace oddball {

enum class ExitCode : int { ok = 0, check_failed = 1, usage = 2, invariant = 3 };

enum class OutputFormat { json, csv, dat };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "dat") return OutputFormat::dat;
    throw InvalidArgument("unknown format '" + s + "' (expected json, csv or dat)");
}

struct RunConfig {
    std::string command;
    std::optional<unsigned> p;
    std::optional<unsigned> n;
    std::optional<std::string> radius;
    std::vector<Method> methods{Method::hankel};
    int k_max = kDefaultMaxCollectionSize;
    unsigned precision = default_precision_digits();
    std::optional<OutputFormat> format;
    std::string output;  // file for magnitude, directory for export
    unsigned jobs = 1;
    unsigned long seed = 0;

    // crosscheck / export
    std::optional<unsigned> max_p;
    std::set<std::string> skip;
    std::string dump_collections;  // JSON-lines file of every enumerated collection
    bool plotdata = false;
    bool roots = false;
    unsigned root_bits = kDefaultRootBits;

    // verify-analytic
    std::optional<std::string> analytic_R;
    std::optional<std::string> analytic_s;
    std::optional<unsigned> analytic_j;
    unsigned nodes = kDefaultQuadratureNodes;
    std::vector<std::string> clouds;

    /// Resolves p from exactly one of p / n.
    unsigned half_dim() const {
        if (p.has_value() == n.has_value()) throw InvalidArgument("give exactly one of --p and --dim");
        return p ? *p : half_dimension(*n);
    }

    void validate() const {
        if (n && *n % 2 == 0) throw InvalidArgument("dimension must be odd, got " + std::to_string(*n));
        if (p && n && dimension_of(*p) != *n) throw InvalidArgument("--p and --dim disagree");
        if (jobs < 1) throw InvalidArgument("--jobs must be at least 1");
        if (precision < 10) throw InvalidArgument("--precision must be at least 10 digits");
        if (k_max < 0) throw InvalidArgument("--k-max must be nonnegative");
        if (format == OutputFormat::dat && output.empty())
            throw InvalidArgument("dat output needs an --output path prefix");
    }
};

// ---------------------------------------------------------------------------
// Shared helpers

inline std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    return f;
}

inline void close_output(std::ofstream& f, const std::filesystem::path& path) {
    f.close();
    if (!f) throw IoError("failed writing " + path.string());
}

inline MagnitudeResult compute_magnitude(unsigned p, Method method, int k_max) {
    switch (method) {
        case Method::hankel: return magnitude_hankel(p);
        case Method::cramer: return magnitude_cramer(p, true);
        case Method::schroeder: return magnitude_schroeder(p, k_max);
    }
    throw InvalidArgument("unknown method");
}

/// Runs tasks on `jobs` threads; results keep task order. The first stored
/// exception (in task order) is rethrown after every thread has joined.
template <class T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& tasks, unsigned jobs) {
    std::vector<T> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < count; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

// ---------------------------------------------------------------------------
// magnitude

inline int cmd_magnitude(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    const unsigned p = cfg.half_dim();
    if (cfg.methods.empty()) throw InvalidArgument("no method selected");

    std::vector<MagnitudeResult> results;
    for (Method m : cfg.methods) results.push_back(compute_magnitude(p, m, cfg.k_max));
    MagnitudeResult r = results.front();
    for (const auto& [k, v] : structural_checks(r)) r.checks[k] = v;
    for (std::size_t i = 1; i < results.size(); ++i)
        r.checks["agrees_with_" + to_string(results[i].method)] = results[i].magnitude == r.magnitude;

    Json payload = to_json(r);
    if (cfg.radius) {
        const Rational R = parse_rational(*cfg.radius);
        if (R <= 0) throw NonPositiveArgument("radius must be positive");
        const Rational v = r.magnitude.evaluate(R);
        payload["evaluation"] = Json{{"radius", R.get_str()},
                                     {"value", v.get_str()},
                                     {"decimal", decimal_string(v, cfg.precision)}};
    }

    const OutputFormat fmt = cfg.format.value_or(OutputFormat::json);
    if (fmt == OutputFormat::dat) {
        for (const auto& [side, poly] : {std::pair<std::string, const IntPoly*>{"N", &r.numerator},
                                         std::pair<std::string, const IntPoly*>{"D", &r.denominator}}) {
            const std::filesystem::path path = cfg.output + "_" + side + ".dat";
            auto f = open_output(path);
            write_coefficient_dat(f, *poly);
            close_output(f, path);
        }
    } else {
        std::ostringstream body;
        if (fmt == OutputFormat::csv)
            write_csv(body, {r});
        else
            body << payload.dump(2) << '\n';
        if (cfg.output.empty()) {
            out << body.str();
        } else {
            auto f = open_output(cfg.output);
            f << body.str();
            close_output(f, cfg.output);
        }
    }
    return all_passed(r.checks) ? 0 : static_cast<int>(ExitCode::check_failed);
}

// ---------------------------------------------------------------------------
// crosscheck

struct CheckOutcome {
    std::string name;
    std::optional<unsigned> p;
    std::optional<int> k;
    bool passed = false;
    std::string detail;
};

inline Json to_json(const CheckOutcome& c) {
    Json j{{"name", c.name}};
    if (c.p) j["p"] = *c.p;
    if (c.k) j["k"] = *c.k;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

inline const std::set<std::string>& crosscheck_groups() {
    static const std::set<std::string> groups{"cramer", "schroeder", "structural", "cf", "lgv"};
    return groups;
}

inline int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    for (const auto& s : cfg.skip)
        if (!crosscheck_groups().count(s)) throw InvalidArgument("unknown check group '" + s + "'");
    const unsigned max_p = cfg.max_p.value_or(4);
    auto enabled = [&](const char* g) { return !cfg.skip.count(g); };

    std::vector<std::function<MagnitudeResult()>> base;
    for (unsigned p = 0; p <= max_p; ++p) base.push_back([p] { return magnitude_hankel(p); });
    const auto hankel = run_parallel(base, cfg.jobs);

    std::vector<std::function<CheckOutcome()>> tasks;
    for (unsigned p = 0; p <= max_p; ++p) {
        if (enabled("structural"))
            tasks.push_back([&, p] {
                const auto checks = structural_checks(hankel[p]);
                std::string failed;
                for (const auto& [k, v] : checks)
                    if (!v) failed += (failed.empty() ? "" : ",") + k;
                return CheckOutcome{"structural", p, {}, failed.empty(), failed};
            });
        if (enabled("cramer") && p >= 1)
            tasks.push_back([&, p] {
                return CheckOutcome{"cramer_equals_hankel", p, {}, magnitude_cramer(p).magnitude == hankel[p].magnitude, ""};
            });
        if (enabled("schroeder") && static_cast<int>(p) + 1 <= cfg.k_max)
            tasks.push_back([&, p] {
                const bool num = combinatorial_N(p, cfg.k_max) == hankel[p].numerator;
                const bool den = combinatorial_D(p, cfg.k_max) == hankel[p].denominator;
                std::string detail = num ? "" : "numerator";
                if (!den) detail += detail.empty() ? "denominator" : ",denominator";
                return CheckOutcome{"schroeder_equals_hankel", p, {}, num && den, detail};
            });
    }
    if (enabled("cf")) {
        tasks.push_back([] {
            const unsigned terms = 13;
            const auto series = cf_series(terms + 1, terms);
            bool ok = true;
            for (unsigned i = 0; i < terms; ++i) ok = ok && series[i] == chi(i);
            return CheckOutcome{"continued_fraction_series", {}, {}, ok, "chi_0..chi_12"};
        });
        tasks.push_back([] {
            bool ok = true;
            for (unsigned i = 0; i <= 8; ++i) ok = ok && path_count_T(i, kWrB) == chi(i);
            return CheckOutcome{"path_count_T", {}, {}, ok, "i <= 8"};
        });
    }
    if (enabled("lgv"))
        for (int k = 0; k <= std::min(kMaxLgvSize, cfg.k_max); ++k)
            for (int shift = 0; shift <= 1; ++shift)
                tasks.push_back([k, shift] {
                    return CheckOutcome{"lgv", {}, k, lgv_check(k, shift), "shift=" + std::to_string(shift)};
                });

    const auto outcomes = run_parallel(tasks, cfg.jobs);
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : outcomes) {
        checks.push_back(to_json(c));
        all = all && c.passed;
    }
    Json skipped = Json::array();
    for (const auto& s : cfg.skip) skipped.push_back(s);
    Json report{{"command", "crosscheck"}, {"max_p", max_p}, {"k_max", cfg.k_max}, {"skip", skipped}, {"checks", checks}};
    if (!cfg.dump_collections.empty()) {
        // X_0 .. X_{max_p+1}, the sets behind N_p and D_p for every p checked.
        const int top = std::min(static_cast<int>(max_p) + 1, cfg.k_max);
        auto f = open_output(cfg.dump_collections);
        for (int k = 0; k <= top; ++k) dump_collections_jsonl(f, k, cfg.k_max);
        close_output(f, cfg.dump_collections);
        report["collections_file"] = cfg.dump_collections;
    }
    report["passed"] = all;
    out << report.dump(2) << '\n';
    return all ? 0 : static_cast<int>(ExitCode::check_failed);
}

// ---------------------------------------------------------------------------
// verify-analytic

inline constexpr double kKeyTolerance = 1e-8;
inline constexpr double kBallTolerance = 1e-6;
inline constexpr double kNormalDerivativeTolerance = 1e-4;
inline constexpr double kCloudSlack = 1e-9;

struct AnalyticCase {
    std::string kind;  // key, general, ball, normal_derivative
    unsigned p = 1;
    Rational R = 1;
    Rational s = 0;
    unsigned j = 0;
};

inline double tolerance_for(const std::string& kind) {
    if (kind == "ball") return kBallTolerance;
    if (kind == "normal_derivative") return kNormalDerivativeTolerance;
    return kKeyTolerance;
}

inline IdentityCheck run_case(const AnalyticCase& c, unsigned nodes, unsigned precision) {
    QuadratureSpec spec;
    spec.nodes = nodes;
    spec.precision = precision;
    spec.p = c.p;
    spec.R = c.R;
    spec.s = c.s;
    if (c.kind == "key") return key_integral_check(spec);
    if (c.kind == "general") return general_key_integral_check(spec, c.j);
    if (c.kind == "ball") return ball_integral_check(spec);
    if (c.kind == "normal_derivative") return normal_derivative_check(spec, c.j);
    throw InvalidArgument("unknown analytic check '" + c.kind + "'");
}

/// The key-integral grid p in {1,2,3}, R in {1,2,5}, s in {0, R/4, R/2, 3R/4},
/// the general identity at j = p on the same grid, and a few ball and
/// normal-derivative configurations.
inline std::vector<AnalyticCase> default_analytic_cases() {
    std::vector<AnalyticCase> cases;
    for (const char* kind : {"key", "general"})
        for (unsigned p = 1; p <= 3; ++p)
            for (long R : {1, 2, 5})
                for (long q = 0; q < 4; ++q) {
                    Rational s(R * q, 4);
                    s.canonicalize();
                    cases.push_back({kind, p, Rational(R), s, std::string(kind) == "general" ? p : 0u});
                }
    cases.push_back({"ball", 1, 2, Rational(1, 2), 0});
    cases.push_back({"ball", 2, 1, 0, 0});
    cases.push_back({"ball", 2, 3, 1, 0});
    cases.push_back({"normal_derivative", 1, 2, 1, 1});
    cases.push_back({"normal_derivative", 1, 1, Rational(1, 2), 2});
    cases.push_back({"normal_derivative", 2, 3, 1, 1});
    return cases;
}

struct CloudStudySpec {
    unsigned dim = 1;
    Rational radius = 1;
    std::vector<std::size_t> sizes;
    CloudGenerator generator = CloudGenerator::grid;
    unsigned long seed = 0;
};

/// Chain m_0 | m_1 | ... | m_last of grid divisions, each step the smallest
/// proper multiple that still divides the last. Grids along the chain nest.
inline std::vector<unsigned> nested_divisions(unsigned first, unsigned last) {
    if (first == 0 || last % first != 0)
        throw InvalidArgument("grid sizes must nest: " + std::to_string(first) + " does not divide " + std::to_string(last));
    std::vector<unsigned> chain{first};
    while (chain.back() < last) {
        unsigned next = chain.back() * 2;
        while (last % next != 0) next += chain.back();
        chain.push_back(next);
    }
    return chain;
}

/// "n=1,R=1,sizes=11..101" or "n=3,R=1,sizes=3:5:9:17,gen=grid". Grid sizes
/// count points along a diameter (2m+1); Halton sizes count points.
inline CloudStudySpec parse_cloud_spec(const std::string& text) {
    CloudStudySpec spec;
    std::string sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("cloud spec item '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        try {
            if (key == "n")
                spec.dim = static_cast<unsigned>(std::stoul(value));
            else if (key == "R")
                spec.radius = parse_rational(value);
            else if (key == "sizes")
                sizes = value;
            else if (key == "gen")
                spec.generator = value == "grid" ? CloudGenerator::grid
                                 : value == "halton" ? CloudGenerator::lowdiscrepancy
                                                     : throw ParseError("unknown generator '" + value + "'");
            else if (key == "seed")
                spec.seed = std::stoul(value);
            else
                throw ParseError("unknown cloud spec key '" + key + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad value in cloud spec item '" + item + "'");
        }
    }
    if (spec.dim < 1) throw InvalidArgument("cloud dimension must be positive");
    if (spec.radius <= 0) throw NonPositiveArgument("cloud radius must be positive");
    if (sizes.empty()) throw ParseError("cloud spec needs sizes=");

    auto to_size = [&](const std::string& v) {
        try {
            return static_cast<std::size_t>(std::stoul(v));
        } catch (const std::logic_error&) {
            throw ParseError("bad cloud size '" + v + "'");
        }
    };
    std::vector<std::size_t> given;
    const bool range = sizes.find("..") != std::string::npos;
    if (range) {
        const auto dots = sizes.find("..");
        given = {to_size(sizes.substr(0, dots)), to_size(sizes.substr(dots + 2))};
        if (given[0] > given[1]) throw InvalidArgument("empty cloud size range");
    } else {
        std::stringstream ls(sizes);
        while (std::getline(ls, item, ':')) given.push_back(to_size(item));
    }

    if (spec.generator == CloudGenerator::grid) {
        std::vector<unsigned> divisions;
        for (auto s : given) {
            if (s % 2 == 0) throw InvalidArgument("grid sizes count points on a diameter and must be odd");
            divisions.push_back(static_cast<unsigned>((s - 1) / 2));
        }
        if (range) {
            const unsigned first = divisions[0], last = divisions[1];
            divisions.clear();
            if (first == 0) divisions.push_back(0);  // the centre lies in every grid
            if (last > 0) {
                const auto chain = nested_divisions(std::max(1u, first), last);
                divisions.insert(divisions.end(), chain.begin(), chain.end());
            }
        }
        for (unsigned m : divisions) spec.sizes.push_back(2 * static_cast<std::size_t>(m) + 1);
    } else if (range) {
        for (std::size_t s = std::max<std::size_t>(1, given[0]); s < given[1]; s *= 2) spec.sizes.push_back(s);
        spec.sizes.push_back(given[1]);
    } else {
        spec.sizes = given;
    }
    return spec;
}

/// |B^dim_R| for odd dim; +infinity otherwise (no bound is known to us).
inline double exact_ball_magnitude(unsigned dim, const Rational& R) {
    if (dim % 2 == 0) return std::numeric_limits<double>::infinity();
    return magnitude_hankel(half_dimension(dim)).magnitude.evaluate(R).get_d();
}

inline ConvergenceReport run_cloud_study(const CloudStudySpec& spec) {
    std::vector<PointCloud> clouds;
    const double R = spec.radius.get_d();
    for (std::size_t s : spec.sizes) {
        if (spec.generator == CloudGenerator::grid)
            clouds.push_back(grid_cloud(spec.dim, R, static_cast<unsigned>((s - 1) / 2)));
        else
            clouds.push_back(halton_cloud(spec.dim, R, s, spec.seed));
    }
    return cloud_convergence_study(spec.dim, spec.radius, clouds, exact_ball_magnitude(spec.dim, spec.radius), kCloudSlack);
}

inline Json to_json(const ConvergenceReport& rep) {
    Json values = Json::array();
    for (std::size_t k = 0; k < rep.values.size(); ++k) {
        Json v = to_json(rep.values[k]);
        if (std::isfinite(rep.exact)) v["gap"] = rep.gaps[k];
        values.push_back(v);
    }
    Json j{{"dim", rep.dim}, {"radius", rep.radius.get_str()}};
    j["exact"] = std::isfinite(rep.exact) ? Json(rep.exact) : Json(nullptr);
    j["values"] = values;
    j["nondecreasing"] = rep.nondecreasing;
    j["bounded"] = rep.bounded;
    j["nested"] = rep.nested;
    return j;
}

inline std::vector<std::string> default_cloud_specs() {
    return {"n=1,R=1,sizes=11..101", "n=3,R=1,sizes=3:5:9:17"};
}

inline int cmd_verify_analytic(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    std::vector<AnalyticCase> cases;
    std::vector<std::string> cloud_specs = cfg.clouds;
    const bool single = cfg.p || cfg.analytic_R || cfg.analytic_s;
    if (single) {
        if (!cfg.p || !cfg.analytic_R) throw InvalidArgument("a single configuration needs --p and --R");
        const Rational R = parse_rational(*cfg.analytic_R);
        const Rational s = cfg.analytic_s ? parse_rational(*cfg.analytic_s) : Rational(0);
        const unsigned p = *cfg.p;
        if (cfg.analytic_j) {
            cases.push_back({"general", p, R, s, *cfg.analytic_j});
        } else {
            cases.push_back({"key", p, R, s, 0});
            for (unsigned j = 1; j <= p; ++j) cases.push_back({"general", p, R, s, j});
            cases.push_back({"ball", p, R, s, 0});
            for (unsigned j = 1; j <= kMaxNormalDerivative; ++j) cases.push_back({"normal_derivative", p, R, s, j});
        }
    } else if (cloud_specs.empty()) {
        cases = default_analytic_cases();
        cloud_specs = default_cloud_specs();
    }

    bool all = true;
    Json checks = Json::array();
    for (const auto& c : cases) {
        const IdentityCheck r = run_case(c, cfg.nodes, cfg.precision);
        const double tol = tolerance_for(c.kind);
        const bool ok = r.relative_error() <= tol;
        all = all && ok;
        Json j{{"kind", c.kind}, {"p", c.p}, {"R", c.R.get_str()}, {"s", c.s.get_str()}};
        if (c.kind == "general" || c.kind == "normal_derivative") j["j"] = c.j;
        j.update(to_json(r, std::min(cfg.precision, 25u)));
        j["tolerance"] = tol;
        j["passed"] = ok;
        checks.push_back(j);
    }

    Json clouds = Json::array();
    for (const auto& text : cloud_specs) {
        const auto rep = run_cloud_study(parse_cloud_spec(text));
        bool ok = rep.nondecreasing && rep.bounded && rep.nested;
        for (const auto& v : rep.values) ok = ok && !v.ill_conditioned;
        all = all && ok;
        Json j = to_json(rep);
        j["spec"] = text;
        j["passed"] = ok;
        clouds.push_back(j);
    }

    out << Json{{"command", "verify-analytic"}, {"checks", checks}, {"clouds", clouds}, {"passed", all}}.dump(2) << '\n';
    return all ? 0 : static_cast<int>(ExitCode::check_failed);
}

// ---------------------------------------------------------------------------
// export

inline int cmd_export(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    if (cfg.p.has_value() == cfg.max_p.has_value()) throw InvalidArgument("give exactly one of --p and --max-p");
    if (cfg.format == OutputFormat::dat) throw InvalidArgument("export writes .dat files through --plotdata and --roots");
    std::vector<unsigned> ps;
    if (cfg.p)
        ps.push_back(*cfg.p);
    else
        for (unsigned p = 0; p <= *cfg.max_p; ++p) ps.push_back(p);
    const bool table = cfg.format.has_value() || (!cfg.plotdata && !cfg.roots);
    const OutputFormat fmt = cfg.format.value_or(OutputFormat::csv);
    const std::filesystem::path dir = cfg.output.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.output);

    std::vector<std::function<MagnitudeResult()>> work;
    for (unsigned p : ps)
        work.push_back([p, &cfg] {
            MagnitudeResult r = magnitude_hankel(p);
            for (const auto& [k, v] : structural_checks(r)) r.checks[k] = v;
            return r;
        });
    const auto results = run_parallel(work, cfg.jobs);

    // Roots are the slow part; they run in parallel and are written in order.
    std::vector<std::function<RootReport()>> root_work;
    if (cfg.roots)
        for (const auto& r : results)
            for (const IntPoly* f : {&r.numerator, &r.denominator})
                root_work.push_back([f, &r, &cfg] {
                    if (f->degree().value() < 1) return RootReport{};
                    RootReport rep = roots_aberth_report(*f, cfg.root_bits);
                    rep.poly_id = f == &r.numerator ? PolyId::numerator : PolyId::denominator;
                    rep.p = r.p;
                    return rep;
                });
    const auto root_reports = run_parallel(root_work, cfg.jobs);

    Json files = Json::array();
    auto emit = [&](const std::string& name, const std::function<void(std::ostream&)>& body) {
        const auto path = dir / name;
        auto f = open_output(path);
        body(f);
        close_output(f, path);
        files.push_back(path.string());
    };

    bool all = true;
    for (const auto& r : results) all = all && all_passed(r.checks);
    if (table) {
        if (fmt == OutputFormat::csv) {
            const std::string name = ps.size() == 1 ? "magnitude_p" + std::to_string(ps[0]) + ".csv"
                                                    : "magnitude_p0-" + std::to_string(ps.back()) + ".csv";
            emit(name, [&](std::ostream& os) { write_csv(os, results); });
        } else {
            for (const auto& r : results)
                emit("magnitude_p" + std::to_string(r.p) + ".json",
                     [&](std::ostream& os) { os << to_json(r).dump(2) << '\n'; });
        }
    }
    if (cfg.plotdata)
        for (const auto& r : results) {
            emit("coeffs_N_p" + std::to_string(r.p) + ".dat", [&](std::ostream& os) { write_coefficient_dat(os, r.numerator); });
            emit("coeffs_D_p" + std::to_string(r.p) + ".dat", [&](std::ostream& os) { write_coefficient_dat(os, r.denominator); });
        }
    bool roots_ok = true;
    for (std::size_t i = 0; i < root_reports.size(); ++i) {
        const auto& rep = root_reports[i];
        const unsigned p = results[i / 2].p;
        const std::string side = i % 2 == 0 ? "N" : "D";
        emit("roots_" + side + "_p" + std::to_string(p) + ".dat", [&](std::ostream& os) { write_roots_dat(os, rep); });
        if (!rep.roots.empty()) roots_ok = roots_ok && rep.converged;
    }
    all = all && roots_ok;

    out << Json{{"command", "export"}, {"files", files}, {"passed", all}}.dump(2) << '\n';
    return all ? 0 : static_cast<int>(ExitCode::check_failed);
}

// ---------------------------------------------------------------------------
// Dispatch

inline int exit_code_for(const Error& e) {
    if (e.is_invariant_violation()) return static_cast<int>(ExitCode::invariant);
    static const std::set<std::string> usage{"InvalidArgument", "ParseError",  "NonPositiveArgument",
                                             "ArgumentTooLarge", "TooManyTerms", "TooLarge",
                                             "InsufficientDepth", "NonSquare"};
    return usage.count(e.kind()) ? static_cast<int>(ExitCode::usage) : static_cast<int>(ExitCode::check_failed);
}

inline Json error_json(const std::string& kind, const std::string& message, int code) {
    return Json{{"error", Json{{"kind", kind}, {"message", message}, {"exit_code", code}}}};
}

/// Runs the configured command; module errors become error JSON on `err`.
inline int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "magnitude") return cmd_magnitude(cfg, out);
        if (cfg.command == "crosscheck") return cmd_crosscheck(cfg, out);
        if (cfg.command == "verify-analytic") return cmd_verify_analytic(cfg, out);
        if (cfg.command == "export") return cmd_export(cfg, out);
        throw InvalidArgument("unknown command '" + cfg.command + "'");
    } catch (const Error& e) {
        const int code = exit_code_for(e);
        err << error_json(e.kind(), e.what(), code).dump() << '\n';
        return code;
    } catch (const std::exception& e) {
        const int code = static_cast<int>(ExitCode::invariant);
        err << error_json("InternalError", e.what(), code).dump() << '\n';
        return code;
    }
}

} // namespace oddball

#endif // ODDBALL_CLI_COMMANDS_HPP
