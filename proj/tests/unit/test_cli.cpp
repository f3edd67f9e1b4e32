#include "artifact/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace artifact;

namespace {

std::string temp_path(const std::string& name) {
    return testing::TempDir() + "cli_" + std::to_string(getpid()) + "_" + name;
}

std::string write_file(const std::string& name, const std::string& text) {
    auto p = temp_path(name);
    std::ofstream(p) << text;
    return p;
}

struct Run {
    int status;
    std::string out;
};

Run verify(const std::string& suite, RunConfig cfg = {}) {
    std::ostringstream os;
    int st = cmd_verify(suite, cfg, os);
    return {st, os.str()};
}

Run shell(const std::string& args) {
    std::string cmd = std::string(ARTIFACT_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

int count(const std::string& s, const std::string& pat) {
    int n = 0;
    for (auto at = s.find(pat); at != std::string::npos; at = s.find(pat, at + 1)) ++n;
    return n;
}

}  // namespace

TEST(Config, DegreeDefaults) {
    RunConfig c;
    EXPECT_EQ(c.degree_for(2), 4);
    EXPECT_EQ(c.degree_for(4), 4);
    EXPECT_EQ(c.degree_for(5), 3);
    c.degree = 2;
    EXPECT_EQ(c.degree_for(5), 2);
    EXPECT_EQ(c.chord().chord_degree, 2);
    EXPECT_EQ(c.chord().width_bound, 5);
}

TEST(Config, CacheDirFlagBeatsEnvironment) {
    setenv("ARTIFACT_CACHE_DIR", "/from/env", 1);
    EXPECT_EQ(resolve_cache_dir(std::string("/from/flag")), "/from/flag");
    EXPECT_EQ(resolve_cache_dir(std::nullopt), "/from/env");
    setenv("ARTIFACT_CACHE_DIR", "", 1);
    EXPECT_EQ(resolve_cache_dir(std::nullopt), std::nullopt);
}

TEST(Verify, RelationsPassWithDefaults) {
    auto r = verify("relations");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("# suite relations PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("| FAIL |"), std::string::npos);
}

TEST(Verify, PropsPassWithSolverElement) {
    auto r = verify("props");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_GT(count(r.out, "| conditional | PASS |"), 0);
}

TEST(Verify, EveryRecordCarriesAnAnchor) {
    auto r = verify("operad");
    std::istringstream is(r.out);
    std::string line;
    int records = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++records;
        // id | anchor | kind | status | degree | support | first
        EXPECT_EQ(count(line, " | "), 6) << line;
        auto a = line.find(" | ") + 3;
        EXPECT_NE(line.substr(a, line.find(" | ", a) - a), "") << line;
    }
    EXPECT_GT(records, 0);
}

TEST(Verify, NonGrouplikePhiFailsWithWitness) {
    auto p = write_file("px.txt", "series\nalgebra free(x,y)\ntruncation 3\nterm 1 1\nterm 1 1 x\nend\n");
    RunConfig c;
    c.phi_file = p;
    auto r = verify("grt", c);
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.out.find("not group-like"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("[x] (x) [x]"), std::string::npos) << r.out;
}

TEST(Verify, GrouplikeNonSolutionFailsARecord) {
    // exp(x y - y x) is group-like but not in GRT1
    auto p = write_file("pb.txt",
                        "series\nalgebra free(x,y)\ntruncation 2\nterm 1 1\nterm 1 1 x y\nterm -1 1 y x\nend\n");
    RunConfig c;
    c.phi_file = p;
    auto r = verify("grt", c);
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.out.find("| FAIL |"), std::string::npos) << r.out;
}

TEST(Verify, MalformedFileIsAnError) {
    RunConfig c;
    c.phi_file = write_file("bad.txt", "nonsense\n");
    auto r = verify("associator", c);
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.out.find("error"), std::string::npos);
}

TEST(Verify, StructuredRecordsAreOnePerLine) {
    RunConfig c;
    c.format = ReportFormat::Structured;
    auto r = verify("cyclic", c);
    EXPECT_EQ(r.status, 0);
    std::istringstream is(r.out);
    std::string line;
    int records = 0;
    while (std::getline(is, line)) {
        ASSERT_EQ(line.front(), '{') << line;
        ASSERT_EQ(line.back(), '}') << line;
        if (line.find("\"type\":\"record\"") != std::string::npos) {
            ++records;
            EXPECT_NE(line.find("\"anchor\":"), std::string::npos);
            EXPECT_NE(line.find("\"status\":\"PASS\""), std::string::npos);
        }
    }
    auto text = verify("cyclic");
    EXPECT_EQ(records, count(text.out, "| PASS |"));
}

TEST(Verify, OverridesAreEchoed) {
    RunConfig c;
    c.degree = 2;
    c.seed = 7;
    auto r = verify("operad", c);
    EXPECT_NE(r.out.find("degree=2"), std::string::npos);
    EXPECT_NE(r.out.find("seed=7"), std::string::npos);
}

TEST(Verify, ReportsAreDeterministic) {
    RunConfig par, ser;
    ser.parallel = false;
    auto a = verify("props", par), b = verify("props", par), c = verify("props", ser);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(Solve, AssociatorFileAndBracketCoefficient) {
    SolveCommand s;
    s.degree = 4;
    s.out_file = temp_path("assoc.txt");
    std::ostringstream os;
    ASSERT_EQ(cmd_solve(s, {}, os), 0) << os.str();
    EXPECT_NE(os.str().find("# [x,y] coefficient -1/24"), std::string::npos);
    auto e = load_phi(s.out_file);
    EXPECT_EQ(e.lambda, Rat(1));
    EXPECT_EQ(e.certified, 4);
    EXPECT_EQ(bracket_coefficient(e.phi), Rat(-1, 24));
    EXPECT_TRUE(verify_associator(e.lambda, e.phi, 4).ok());
    // the file feeds the associator suite
    RunConfig c;
    c.phi_file = s.out_file;
    EXPECT_EQ(verify("associator", c).status, 0);
}

TEST(Solve, KernelTable) {
    SolveCommand s;
    s.target = SolveTarget::GRT1;
    s.degree = 2;
    std::ostringstream os;
    ASSERT_EQ(cmd_solve(s, {}, os), 0);
    EXPECT_NE(os.str().find("1 | 2 | 4 | 2 | 0 | yes\n2 | 1 | 2 | 1 | 0 | yes\n"), std::string::npos) << os.str();
    s.degree = 3;
    s.out_file = temp_path("grt.txt");
    os.str("");
    ASSERT_EQ(cmd_solve(s, {}, os), 0);
    std::istringstream is(os.str());
    std::string line;
    int k3 = -1;
    while (std::getline(is, line))
        if (line.rfind("3 | ", 0) == 0) k3 = std::stoi(line.substr(line.rfind(" | ", line.size() - 7) + 3));
    EXPECT_GE(k3, 1) << os.str();
    // degree 2 solution is the unit
    auto e = load_phi(s.out_file);
    EXPECT_TRUE(e.phi.truncate(2) == Series::one(free_xy(), 2));
}

TEST(Solve, KernelChoiceGivesAnotherElement) {
    SolveCommand s;
    s.target = SolveTarget::GRT1;
    s.degree = 3;
    s.kernel_choice[3] = {1};
    s.out_file = temp_path("grt_k.txt");
    std::ostringstream os;
    ASSERT_EQ(cmd_solve(s, {}, os), 0) << os.str();
    auto e = load_phi(s.out_file);
    EXPECT_FALSE(e.phi.degree_part(3).is_zero());
    EXPECT_TRUE(verify_grt1(e.phi, 3).ok());
}

TEST(Binary, ExitCodes) {
    auto ok = shell("verify --suite operad --degree 2");
    EXPECT_EQ(ok.status, 0) << ok.out;
    auto px = write_file("px_bin.txt", "series\nalgebra free(x,y)\ntruncation 3\nterm 1 1\nterm 1 1 x\nend\n");
    auto bad = shell("verify --suite grt --phi " + px);
    EXPECT_NE(bad.status, 0);
    EXPECT_NE(bad.out.find("not group-like"), std::string::npos);
    EXPECT_NE(shell("verify --suite nosuch").status, 0);
    auto sol = shell("solve assoc --degree 2 --lambda 2");
    EXPECT_EQ(sol.status, 0) << sol.out;
    EXPECT_NE(sol.out.find("# [x,y] coefficient -1/6"), std::string::npos) << sol.out;
}

TEST(Binary, FormatFlag) {
    auto r = shell("verify --suite cyclic --degree 2 --format structured");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.front(), '{');
    EXPECT_NE(r.out.find("\"type\":\"record\""), std::string::npos);
}
