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

// oddball: exact magnitude of odd-dimensional balls.
//
//   oddball magnitude --dim 5 --radius 7/2
//   oddball crosscheck --max-p 12 --skip schroeder --jobs 4
//   oddball verify-analytic --cloud n=1,R=1,sizes=11..101
//   oddball export --p 22 --plotdata --output-dir out

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddball/cli/commands.hpp"

namespace {

using oddball::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--precision", cfg.precision, "significant decimal digits for numeric work (env ODDBALL_PRECISION)");
    cmd->add_option("--jobs", cfg.jobs, "worker threads");
}

void add_dimension(CLI::App* cmd, RunConfig& cfg) {
    auto* p = cmd->add_option_function<unsigned>("--p", [&cfg](unsigned v) { cfg.p = v; }, "half dimension, n = 2p+1");
    auto* n = cmd->add_option_function<unsigned>("--dim,-n", [&cfg](unsigned v) { cfg.n = v; }, "odd dimension n");
    p->excludes(n);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact magnitude of odd-dimensional Euclidean balls"};
    app.require_subcommand(1);

    std::string methods = "hankel", format;

    auto* magnitude = app.add_subcommand("magnitude", "N_p, D_p and |B^n_R| as an exact rational function");
    add_dimension(magnitude, cfg);
    add_common(magnitude, cfg);
    magnitude->add_option_function<std::string>("--radius,-R", [&](const std::string& v) { cfg.radius = v; },
                                                "evaluate exactly at this radius (7/2, 0.25, ...)");
    magnitude->add_option("--method", methods, "comma list of hankel, cramer, schroeder; all must agree");
    magnitude->add_option("--k-max", cfg.k_max, "largest path collection enumerated");
    magnitude->add_option("--format", format, "json, csv or dat")->check(CLI::IsMember({"json", "csv", "dat"}));
    magnitude->add_option("--output,-o", cfg.output, "output file (dat: path prefix)");

    auto* crosscheck = app.add_subcommand("crosscheck", "compare the three routes and run structural checks");
    add_common(crosscheck, cfg);
    crosscheck->add_option_function<unsigned>("--max-p", [&](unsigned v) { cfg.max_p = v; }, "largest p checked (default 4)");
    std::string skip;
    crosscheck->add_option("--skip", skip, "comma list of cramer, schroeder, structural, cf, lgv");
    crosscheck->add_option("--k-max", cfg.k_max, "largest path collection enumerated");
    crosscheck->add_option("--dump-collections", cfg.dump_collections, "write every enumerated path collection as JSON lines");

    auto* analytic = app.add_subcommand("verify-analytic", "quadrature identities and point-cloud studies");
    add_common(analytic, cfg);
    analytic->add_option_function<unsigned>("--p", [&](unsigned v) { cfg.p = v; }, "half dimension of a single configuration");
    analytic->add_option_function<std::string>("--R", [&](const std::string& v) { cfg.analytic_R = v; }, "radius");
    analytic->add_option_function<std::string>("--s", [&](const std::string& v) { cfg.analytic_s = v; }, "interior point |s| < R");
    analytic->add_option_function<unsigned>("--j", [&](unsigned v) { cfg.analytic_j = v; }, "only the general identity at this j");
    analytic->add_option("--nodes", cfg.nodes, "Gauss-Legendre nodes");
    analytic->add_option("--cloud", cfg.clouds, "cloud study, e.g. n=1,R=1,sizes=11..101 (repeatable)");
    analytic->add_option("--seed", cfg.seed, "Halton skip for gen=halton clouds");

    auto* exporter = app.add_subcommand("export", "write coefficient tables and plot data");
    add_common(exporter, cfg);
    exporter->add_option_function<unsigned>("--p", [&](unsigned v) { cfg.p = v; }, "single p");
    exporter->add_option_function<unsigned>("--max-p", [&](unsigned v) { cfg.max_p = v; }, "p = 0..max");
    exporter->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    exporter->add_flag("--plotdata", cfg.plotdata, "index vs log10(coefficient) .dat files");
    exporter->add_flag("--roots", cfg.roots, "root .dat files (slow for large p)");
    exporter->add_option("--root-bits", cfg.root_bits, "root-finding precision in bits");
    exporter->add_option("--output-dir,-o", cfg.output, "directory for the written files");

    try {
        app.parse(argc, argv);
        for (auto* sub : {magnitude, crosscheck, analytic, exporter})
            if (sub->parsed()) cfg.command = sub->get_name();
        cfg.methods.clear();
        for (const auto& m : split(methods, ',')) cfg.methods.push_back(oddball::parse_method(m));
        for (const auto& s : split(skip, ',')) cfg.skip.insert(s);
        if (!format.empty()) cfg.format = oddball::parse_format(format);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << oddball::error_json("UsageError", e.what(), 2).dump() << '\n';
        return static_cast<int>(oddball::ExitCode::usage);
    } catch (const oddball::Error& e) {
        const int code = oddball::exit_code_for(e);
        std::cerr << oddball::error_json(e.kind(), e.what(), code).dump() << '\n';
        return code;
    }
    return oddball::run_command(cfg, std::cout, std::cerr);
}
