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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oddball/cli/commands.hpp"

using namespace oddball;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("oddball_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST(ParseRational, Forms) {
    EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-1.5e2"), Rational(-150));
    EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational(" 2 "), Rational(2));
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "1/-2"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Json, RoundTripAllRoutes) {
    std::vector<MagnitudeResult> results;
    for (unsigned p = 0; p <= 8; ++p) results.push_back(magnitude_hankel(p));
    results.push_back(magnitude_cramer(3, true));
    results.push_back(magnitude_schroeder(2));
    auto r = magnitude_hankel(4);
    r.checks = structural_checks(r);
    results.push_back(r);
    for (const auto& res : results) {
        const std::string text = to_json(res).dump();
        const MagnitudeResult back = magnitude_result_from_json(Json::parse(text));
        EXPECT_TRUE(back == res) << "p=" << res.p;
        EXPECT_EQ(to_json(back).dump(), text);
    }
}

TEST(Json, CoefficientsAreStrings) {
    const Json j = to_json(magnitude_hankel(12));
    for (const auto& c : j["numerator"]["coeffs"]) EXPECT_TRUE(c.is_string());
    EXPECT_EQ(j["numerator"]["degree"], numerator_degree(12));
    EXPECT_EQ(j["schema"], kMagnitudeSchema);
}

TEST(Json, RejectsMalformed) {
    Json j = to_json(magnitude_hankel(1));
    Json bad = j;
    bad["numerator"]["coeffs"][0] = 6;
    EXPECT_THROW(magnitude_result_from_json(bad), ParseError);
    bad = j;
    bad["numerator"]["degree"] = 4;
    EXPECT_THROW(magnitude_result_from_json(bad), ParseError);
    bad = j;
    bad["schema"] = "other/1";
    EXPECT_THROW(magnitude_result_from_json(bad), ParseError);
    bad = j;
    bad.erase("checks");
    EXPECT_THROW(magnitude_result_from_json(bad), ParseError);
    bad = j;
    bad["n"] = 5;
    EXPECT_THROW(magnitude_result_from_json(bad), ParseError);
    bad = j;
    bad["numerator"]["coeffs"][1] = "12x";
    EXPECT_THROW(magnitude_result_from_json(bad), ParseError);
}

TEST(Json, GoldenThreeDimensional) {
    const std::string golden = slurp(std::filesystem::path(ODDBALL_GOLDEN_DIR) / "magnitude_p1.json");
    MagnitudeResult r = magnitude_hankel(1);
    for (const auto& [k, v] : structural_checks(r)) r.checks[k] = v;
    EXPECT_EQ(to_json(r).dump(2) + "\n", golden);
    const MagnitudeResult parsed = magnitude_result_from_json(Json::parse(golden));
    EXPECT_EQ(parsed.numerator, IntPoly({6, 12, 6, 1}));
    EXPECT_EQ(parsed.magnitude.evaluate(Rational(1)), Rational(25, 6));
}

TEST(Csv, LayoutAndPadding) {
    std::ostringstream os;
    write_csv(os, {magnitude_hankel(0), magnitude_hankel(2)});
    EXPECT_EQ(os.str(),
              "p,n,side,degree,c0,c1,c2,c3,c4,c5,c6\n"
              "0,1,N,1,1,1,,,,,\n"
              "0,1,D,0,1,,,,,,\n"
              "2,5,N,6,360,1080,1080,525,135,18,1\n"
              "2,5,D,1,3,1,,,,,\n");
}

TEST(Dat, CoefficientFile) {
    std::ostringstream os;
    write_coefficient_dat(os, IntPoly({100, 1, 1000}));
    EXPECT_EQ(os.str(), "0 2.0000000000\n1 0.0000000000\n2 3.0000000000\n");
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
    EXPECT_NEAR(log10_big(huge), 400.0, 1e-9);
    EXPECT_THROW(log10_big(BigInt(0)), NonPositiveCoefficient);
}

TEST(Dat, RootFileTwoColumns) {
    const RootReport rep = roots_aberth(IntPoly({2, 2, 1}), 128);  // -1 +- i
    std::ostringstream os;
    write_roots_dat(os, rep);
    std::istringstream in(os.str());
    double re = 0, im = 0;
    int rows = 0;
    while (in >> re >> im) {
        EXPECT_NEAR(re, -1, 1e-15);
        EXPECT_NEAR(std::fabs(im), 1, 1e-15);
        ++rows;
    }
    EXPECT_EQ(rows, 2);
}

TEST(Jsonl, CollectionsDump) {
    std::ostringstream os;
    dump_collections_jsonl(os, 1);
    std::istringstream in(os.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        const Json j = Json::parse(line);
        EXPECT_EQ(j["k"], 1);
        EXPECT_EQ(j["paths"].size(), 2u);
        ++rows;
    }
    EXPECT_EQ(rows, 2);
}

TEST(CloudSpec, RangesAndLists) {
    const auto a = parse_cloud_spec("n=1,R=1,sizes=11..101");
    EXPECT_EQ(a.dim, 1u);
    EXPECT_EQ(a.sizes, (std::vector<std::size_t>{11, 21, 101}));
    const auto b = parse_cloud_spec("n=3,R=3/2,sizes=3:5:9");
    EXPECT_EQ(b.radius, Rational(3, 2));
    EXPECT_EQ(b.sizes, (std::vector<std::size_t>{3, 5, 9}));
    const auto c = parse_cloud_spec("n=2,R=1,sizes=1..9");
    EXPECT_EQ(c.sizes, (std::vector<std::size_t>{1, 3, 5, 9}));
    const auto h = parse_cloud_spec("n=2,R=1,sizes=10..50,gen=halton");
    EXPECT_EQ(h.sizes, (std::vector<std::size_t>{10, 20, 40, 50}));
    EXPECT_EQ(nested_divisions(5, 50), (std::vector<unsigned>{5, 10, 50}));
    EXPECT_THROW(parse_cloud_spec("n=1,R=1,sizes=10..100"), InvalidArgument);
    EXPECT_THROW(parse_cloud_spec("n=1,R=1"), ParseError);
    EXPECT_THROW(parse_cloud_spec("n=1,R=1,sizes=3,bogus=2"), ParseError);
    EXPECT_THROW(parse_cloud_spec("n=1,R=-1,sizes=3"), NonPositiveArgument);
    EXPECT_THROW(parse_cloud_spec("n=1,R=1,sizes=7..45"), InvalidArgument);  // 3 does not divide 22
}

TEST(Commands, ExitCodeMapping) {
    EXPECT_EQ(exit_code_for(NotDivisible("x")), 3);
    EXPECT_EQ(exit_code_for(SingularSystem("x")), 3);
    EXPECT_EQ(exit_code_for(InvalidArgument("x")), 2);
    EXPECT_EQ(exit_code_for(ParseError("x")), 2);
    EXPECT_EQ(exit_code_for(TooLarge("x")), 2);
    EXPECT_EQ(exit_code_for(PrecisionNotReached("x")), 1);
    EXPECT_EQ(exit_code_for(IoError("x")), 1);
}

TEST(Commands, RunConfigValidation) {
    RunConfig cfg;
    cfg.command = "magnitude";
    std::ostringstream out, err;
    EXPECT_EQ(run_command(cfg, out, err), 2);  // neither p nor n
    EXPECT_NE(err.str().find("\"kind\":\"InvalidArgument\""), std::string::npos);
    cfg.n = 4;
    EXPECT_EQ(run_command(cfg, out, err), 2);
    cfg.n = 5;
    cfg.p = 1;
    EXPECT_EQ(run_command(cfg, out, err), 2);  // disagree
    cfg.p.reset();
    cfg.format = OutputFormat::dat;
    EXPECT_EQ(run_command(cfg, out, err), 2);  // dat needs a path
}

TEST(Commands, MagnitudeEvaluation) {
    RunConfig cfg;
    cfg.command = "magnitude";
    cfg.n = 3;
    cfg.radius = "1";
    std::ostringstream out, err;
    ASSERT_EQ(run_command(cfg, out, err), 0) << err.str();
    const Json j = Json::parse(out.str());
    EXPECT_EQ(j["evaluation"]["value"], "25/6");
    EXPECT_EQ(magnitude_result_from_json(j).numerator, IntPoly({6, 12, 6, 1}));

    cfg.n = 1;
    cfg.radius = "7/2";
    std::ostringstream out2;
    ASSERT_EQ(run_command(cfg, out2, err), 0);
    EXPECT_EQ(Json::parse(out2.str())["evaluation"]["value"], "9/2");

    cfg.radius = "-1";
    EXPECT_EQ(run_command(cfg, out2, err), 2);
}

TEST(Commands, MethodsAgree) {
    RunConfig cfg;
    cfg.command = "magnitude";
    cfg.p = 3;
    cfg.methods = {Method::hankel, Method::cramer, Method::schroeder};
    std::ostringstream out, err;
    ASSERT_EQ(run_command(cfg, out, err), 0) << err.str();
    const Json j = Json::parse(out.str());
    EXPECT_TRUE(j["checks"]["agrees_with_cramer"].get<bool>());
    EXPECT_TRUE(j["checks"]["agrees_with_schroeder"].get<bool>());
}

TEST(Commands, CrosscheckTrivialAndParallel) {
    RunConfig cfg;
    cfg.command = "crosscheck";
    cfg.max_p = 0;
    std::ostringstream out, err;
    EXPECT_EQ(run_command(cfg, out, err), 0);
    cfg.max_p = 6;
    cfg.jobs = 4;
    cfg.skip = {"schroeder"};
    std::ostringstream a;
    EXPECT_EQ(run_command(cfg, a, err), 0);
    cfg.jobs = 1;
    std::ostringstream b;
    EXPECT_EQ(run_command(cfg, b, err), 0);
    EXPECT_EQ(a.str(), b.str());
}

TEST(Commands, ExportCsvAndDeterminism) {
    const auto d1 = scratch_dir("csv1"), d2 = scratch_dir("csv2");
    RunConfig cfg;
    cfg.command = "export";
    cfg.max_p = 7;
    cfg.format = OutputFormat::csv;
    cfg.output = d1.string();
    std::ostringstream out, err;
    ASSERT_EQ(run_command(cfg, out, err), 0) << err.str();
    cfg.output = d2.string();
    cfg.jobs = 3;
    ASSERT_EQ(run_command(cfg, out, err), 0);
    const std::string a = slurp(d1 / "magnitude_p0-7.csv"), b = slurp(d2 / "magnitude_p0-7.csv");
    EXPECT_EQ(a, b);
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 17);  // header + N and D rows for 8 values of p
}

TEST(Commands, ExportPlotData) {
    const auto dir = scratch_dir("plot");
    RunConfig cfg;
    cfg.command = "export";
    cfg.p = 6;
    cfg.plotdata = true;
    cfg.roots = true;
    cfg.output = dir.string();
    std::ostringstream out, err;
    ASSERT_EQ(run_command(cfg, out, err), 0) << err.str();
    const std::string coeffs = slurp(dir / "coeffs_N_p6.dat");
    EXPECT_EQ(std::count(coeffs.begin(), coeffs.end(), '\n'), numerator_degree(6) + 1);
    const std::string roots = slurp(dir / "roots_N_p6.dat");
    EXPECT_EQ(std::count(roots.begin(), roots.end(), '\n'), numerator_degree(6));
    const std::string droots = slurp(dir / "roots_D_p6.dat");
    EXPECT_EQ(std::count(droots.begin(), droots.end(), '\n'), denominator_degree(6));
}
