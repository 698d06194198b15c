// End-to-end checks of the command-line tool: exit-code contract, JSON
// round-trips, determinism under worker counts, quiet mode.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NONSEP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
    EXPECT_EQ(run_cli("check --group 6,6 --h \"0,2;2,2;2,4;2,0\"").exit_code, 0);
    EXPECT_EQ(run_cli("check --group 2,4 --h \"0,1;1,1;1,0;0,2\"").exit_code, 1);
    EXPECT_EQ(run_cli("check --group 0,4 --h \"0,1;1,1;1,0;0,2\"").exit_code, 2);
    EXPECT_EQ(run_cli("check --group 2,4 --h \"0,1;1,1\"").exit_code, 2);
    EXPECT_EQ(run_cli("check --group 2,4 --h \"0,1;0,1;1,0;0,2\"").exit_code, 2);  // dup class
    EXPECT_EQ(run_cli("nonsense").exit_code, 2);
}

TEST(Cli, GroupNormalizationRevalidatesClasses) {
    // (6,5) normalizes to (1,30); first coordinates must then be 0
    EXPECT_EQ(run_cli("check --group 6,5 --h \"3,2;1,0;2,1;0,4\"").exit_code, 2);
    EXPECT_EQ(run_cli("check --group 6,5 --h \"0,2;0,1;0,3;0,4\"").exit_code, 1);
    const RunResult echoed = run_cli("--json check --group 6,5 --h \"0,2;0,1;0,3;0,4\"");
    const auto doc = nlohmann::json::parse(echoed.output);
    EXPECT_EQ(doc["group"], nlohmann::json({1, 30}));
}

TEST(Cli, CheckReportsWitness) {
    const RunResult r = run_cli("check --group 2,4 --h \"0,1;1,1;1,0;0,2\"");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("witness: B = <(0,1)>"), std::string::npos);
    EXPECT_NE(r.output.find("(0,0,1,1)"), std::string::npos);
}

TEST(Cli, JsonRoundTripReproducesVerdict) {
    const RunResult first = run_cli("--json check --group 6,6 --h \"0,2;2,2;2,4;2,0\"");
    ASSERT_EQ(first.exit_code, 0);
    const auto doc = nlohmann::json::parse(first.output);
    EXPECT_TRUE(doc["nonseparating"].get<bool>());
    // feed the emitted group and hset back through the CLI
    std::string h;
    for (const auto& rep : doc["hset"]) {
        if (!h.empty()) h += ";";
        h += std::to_string(rep[0].get<long long>()) + "," +
             std::to_string(rep[1].get<long long>());
    }
    const std::string group = std::to_string(doc["group"][0].get<long long>()) + "," +
                              std::to_string(doc["group"][1].get<long long>());
    const RunResult second = run_cli("--json check --group " + group + " --h \"" + h + "\"");
    EXPECT_EQ(second.exit_code, first.exit_code);
    EXPECT_EQ(second.output, first.output);
}

TEST(Cli, SearchAndClassifyReports) {
    const RunResult r = run_cli("--json --no-timing search --group 3,3");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.output);
    EXPECT_EQ(doc["group"], nlohmann::json({3, 3}));
    EXPECT_EQ(doc["hsets_scanned"].get<long long>(), 5);
    ASSERT_EQ(doc["orbits"].size(), 1u);
    EXPECT_EQ(doc["orbits"][0]["size"].get<long long>(), 1);
    EXPECT_FALSE(doc.contains("elapsed_ms"));

    const RunResult cls = run_cli("--json --no-timing classify --group 4,4");
    const auto cdoc = nlohmann::json::parse(cls.output);
    EXPECT_EQ(cdoc["orbits"].size(), 3u);

    const RunResult empty = run_cli("--json --no-timing search --group 2,26");
    const auto edoc = nlohmann::json::parse(empty.output);
    EXPECT_EQ(edoc["orbits"].size(), 0u);
    EXPECT_EQ(edoc["hsets_scanned"].get<long long>(), 20475);
}

TEST(Cli, ReportsIdenticalAcrossWorkerCounts) {
    const RunResult one = run_cli("--json --no-timing --jobs 1 search --group 6,6");
    const RunResult four = run_cli("--json --no-timing --jobs 4 search --group 6,6");
    ASSERT_EQ(one.exit_code, 0);
    EXPECT_EQ(one.output, four.output);
}

TEST(Cli, DegreeCommand) {
    const RunResult nine = run_cli("--no-timing degree 9");
    EXPECT_EQ(nine.exit_code, 0);
    EXPECT_NE(nine.output.find("constant pullback possible: yes"), std::string::npos);
    EXPECT_NE(nine.output.find("Z/6+Z/6"), std::string::npos);

    const RunResult thirteen = run_cli("--no-timing degree 13");
    EXPECT_EQ(thirteen.exit_code, 1);
    EXPECT_NE(thirteen.output.find("constant pullback possible: no"), std::string::npos);

    EXPECT_EQ(run_cli("degree 1").exit_code, 2);
}

TEST(Cli, LatticeCommand) {
    const RunResult r = run_cli("--json lattice 3,0,0,3");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.output);
    EXPECT_EQ(doc["degree"].get<long long>(), 9);
    EXPECT_EQ(doc["group"], nlohmann::json({6, 6}));

    const RunResult two = run_cli("--json lattice 1,0,0,2");
    EXPECT_EQ(nlohmann::json::parse(two.output)["group"], nlohmann::json({2, 4}));

    EXPECT_EQ(run_cli("lattice 1,0,0,1").exit_code, 2);  // covolume 1
    EXPECT_EQ(run_cli("lattice 2,4,1,2").exit_code, 2);  // singular

    const RunResult points =
        run_cli("--json lattice 3,0,0,3 --points \"0,2;2,2;2,4;2,0\"");
    EXPECT_EQ(points.exit_code, 0);
    EXPECT_TRUE(nlohmann::json::parse(points.output)["constant_pullback"].get<bool>());

    const RunResult separating =
        run_cli("--json lattice 1,0,0,2 --points \"0,1;1,1;1,0;0,2\"");
    EXPECT_EQ(separating.exit_code, 1);
}

TEST(Cli, QuietSuppressesOutputKeepsExitCodes) {
    const RunResult ok = run_cli("--quiet check --group 6,6 --h \"0,2;2,2;2,4;2,0\"");
    EXPECT_EQ(ok.exit_code, 0);
    EXPECT_TRUE(ok.output.empty());
    const RunResult no = run_cli("--quiet check --group 2,4 --h \"0,1;1,1;1,0;0,2\"");
    EXPECT_EQ(no.exit_code, 1);
    EXPECT_TRUE(no.output.empty());
    const RunResult bad = run_cli("--quiet check --group 6,5 --h \"3,2;1,0;2,1;0,4\"");
    EXPECT_EQ(bad.exit_code, 2);
    EXPECT_TRUE(bad.output.empty());
}

TEST(Cli, SizeBoundFlagAndEnvironment) {
    EXPECT_EQ(run_cli("--size-bound 10 search --group 6,6").exit_code, 2);
    EXPECT_EQ(run_cli("--size-bound 100 search --group 6,6").exit_code, 0);
    const std::string env_cmd = "NONSEP_SIZE_BOUND=10 " + std::string(NONSEP_CLI_PATH) +
                                " search --group 6,6 >/dev/null 2>&1; echo $?";
    FILE* pipe = popen(env_cmd.c_str(), "r");
    char buf[16] = {};
    ASSERT_TRUE(fgets(buf, sizeof buf, pipe));
    pclose(pipe);
    EXPECT_EQ(std::string(buf), "2\n");
}

TEST(Cli, VerifyExamplesSuite) {
    const RunResult r =
        run_cli(std::string("verify examples --fixture ") + NONSEP_FIXTURE_PATH);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output.find("[FAIL]"), std::string::npos);
    EXPECT_NE(r.output.find("[ok]"), std::string::npos);

    EXPECT_EQ(run_cli("verify no-such-suite").exit_code, 2);
}
