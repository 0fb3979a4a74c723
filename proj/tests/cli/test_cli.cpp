#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "exvoa/cli/app.hpp"
#include "exvoa/io/codec.hpp"

using namespace exvoa;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args, cli::Environment env = {}) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err, env);
    return {code, out.str(), err.str()};
}

nlohmann::json body(const Outcome& o) { return nlohmann::json::parse(o.out).at("body"); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path temp_dir(const std::string& name) {
    auto d = fs::temp_directory_path() / ("exvoa_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST(Cli, VersionAndEnvelope) {
    auto v = call({"--version"});
    EXPECT_EQ(v.code, cli::ok);
    EXPECT_EQ(v.out, std::string(cli::tool_version) + "\n");
    auto o = call({"enumerate", "lie"});
    ASSERT_EQ(o.code, cli::ok) << o.err;
    auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j.at("tool"), cli::tool_name);
    EXPECT_EQ(j.at("version"), cli::tool_version);
    EXPECT_EQ(j.at("command"), (nlohmann::json{"enumerate", "lie"}));
    EXPECT_FALSE(j.contains("failures"));
}

TEST(Cli, UsageErrorsExitTwo) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"enumerate", "lie", "--bogus"},
             {"solve-mde", "--family", "lie", "--C", "abc"},
             {"solve-mde", "--family", "lie", "--C", "1/0"},
             {"solve-mde", "--family", "monster", "--C", "8"},
             {"kac"},
             {"--format", "xml", "enumerate", "lie"},
         }) {
        auto o = call(args);
        EXPECT_EQ(o.code, cli::usage_error) << testing::PrintToString(args);
        EXPECT_EQ(o.err.rfind("error[", 0), 0u) << o.err;
        EXPECT_TRUE(o.out.empty());
    }
}

TEST(Cli, DomainErrorsExitOne) {
    auto o = call({"chars", "--algebra", "E8", "--C", "8"});
    EXPECT_EQ(o.code, cli::verification_failed);
    EXPECT_NE(o.err.find("RankUnsupported"), std::string::npos) << o.err;
    auto s = call({"casimir", "--weight", "1", "--n", "4", "--C", "-22/5"});
    EXPECT_EQ(s.code, cli::verification_failed);
    EXPECT_NE(s.err.find("SingularAtC"), std::string::npos) << s.err;
}

TEST(Cli, FaultInjectionExitsThree) {
    cli::Environment env;
    env.fault_residual = true;
    auto o = call({"solve-mde", "--family", "lie", "--C", "8", "--order", "4"}, env);
    EXPECT_EQ(o.code, cli::internal_error);
    EXPECT_NE(o.err.find("error[InternalInconsistency]"), std::string::npos) << o.err;
    EXPECT_EQ(call({"solve-mde", "--family", "lie", "--C", "8", "--order", "4"}).code, cli::ok);
}

TEST(Cli, SolveOutputDecodesToTheLibrarySolution) {
    auto o = call({"solve-mde", "--family", "griess", "--C", "47/2", "--order", "6"});
    ASSERT_EQ(o.code, cli::ok) << o.err;
    auto got = io::mde_solution_from_json<Rational>(body(o));
    auto want = solve_family<Rational>(Family::griess, Rational(47, 2), 6);
    EXPECT_EQ(got.series, want.series);
    EXPECT_EQ(got.indicial_roots, want.indicial_roots);
    EXPECT_TRUE(got.residual_verified);

    auto sym = call({"solve-mde", "--family", "lie", "--symbolic", "--order", "3"});
    ASSERT_EQ(sym.code, cli::ok) << sym.err;
    auto s = io::mde_solution_from_json<RatFunc>(body(sym));
    EXPECT_EQ(s.series, solve_family<RatFunc>(Family::lie, RatFunc::C(), 3).series);
}

TEST(Cli, ScanAgainstAnExpectedFile) {
    auto dir = temp_dir("scan");
    auto good = call({"scan", "--family", "griess"});
    ASSERT_EQ(good.code, cli::ok) << good.err;
    EXPECT_TRUE(body(good).at("agrees").get<bool>());

    nlohmann::json tampered = nlohmann::json::array();
    for (const auto& s : reference::griess_survivors())
        if (s.C != Rational(24)) tampered.push_back(s.C.to_string());
    std::ofstream(dir / "expected.json") << tampered.dump();
    auto bad = call({"scan", "--family", "griess", "--expected", (dir / "expected.json").string()});
    EXPECT_EQ(bad.code, cli::verification_failed);
    EXPECT_NE(bad.err.find("error[verification]"), std::string::npos);
    EXPECT_FALSE(body(bad).at("agrees").get<bool>());

    std::ofstream(dir / "broken.json") << "[\"24\", 7";
    EXPECT_EQ(call({"scan", "--family", "griess", "--expected", (dir / "broken.json").string()}).code, cli::usage_error);
    fs::remove_all(dir);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
    cli::Environment one, many;
    many.threads = 4;
    auto a = call({"scan", "--family", "lie", "--order", "30"}, one);
    auto b = call({"scan", "--family", "lie", "--order", "30"}, many);
    auto c = call({"scan", "--family", "lie", "--order", "30", "--threads", "3"}, one);
    ASSERT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(body(a), body(c));
}

TEST(Cli, TabularFormats) {
    auto csv = call({"--format", "csv", "kac", "--level", "6"});
    ASSERT_EQ(csv.code, cli::ok) << csv.err;
    EXPECT_NE(csv.out.find("\r\n"), std::string::npos);
    EXPECT_NE(csv.out.find("-68/7"), std::string::npos);
    auto md = call({"--format", "markdown", "enumerate", "griess"});
    ASSERT_EQ(md.code, cli::ok) << md.err;
    EXPECT_EQ(md.out.rfind("### ", 0), 0u);
    EXPECT_NE(md.out.find("| 1496 |"), std::string::npos);
}

TEST(Cli, OutFlagWritesTheDocument) {
    auto dir = temp_dir("out");
    auto path = (dir / "lie.json").string();
    auto o = call({"--out", path, "enumerate", "lie"});
    ASSERT_EQ(o.code, cli::ok) << o.err;
    EXPECT_TRUE(o.out.empty());
    EXPECT_EQ(nlohmann::json::parse(slurp(path)).at("body"), body(call({"enumerate", "lie"})));
    fs::remove_all(dir);
}

TEST(Cli, HigherWeightTableReportsTheOffByOne) {
    auto o = call({"dims", "--suite", "higher"});
    EXPECT_EQ(o.code, cli::verification_failed);
    EXPECT_NE(o.out.find("42987519"), std::string::npos);
    EXPECT_NE(o.err.find("error[verification]"), std::string::npos);
}

TEST(Cli, ReportAllIsByteIdenticalAcrossRuns) {
    auto d1 = temp_dir("report1"), d2 = temp_dir("report2");
    auto a = call({"report", "all", "--out", d1.string()});
    cli::Environment env;
    env.out_dir = d2.string();
    env.threads = 3;
    auto b = call({"report", "all"}, env);
    ASSERT_EQ(a.code, cli::ok) << a.err;
    ASSERT_EQ(b.code, cli::ok) << b.err;
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(d1)) names.push_back(e.path().filename().string());
    EXPECT_EQ(names.size(), cli::detail::report_artifacts().size() * 3);
    for (const auto& n : names) {
        ASSERT_TRUE(fs::exists(d2 / n)) << n;
        EXPECT_EQ(slurp(d1 / n), slurp(d2 / n)) << n;
    }
    auto lie = nlohmann::json::parse(slurp(d1 / "lie_values.json"));
    EXPECT_EQ(lie.at("body").at("count"), 21);
    fs::remove_all(d1);
    fs::remove_all(d2);
}
